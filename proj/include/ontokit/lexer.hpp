#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ontokit {

enum class TokenKind {
    Ident,
    Sub,
    And,
    Or,
    Some,
    Only,
    Min,
    Exact,
    Dot,
    LParen,
    RParen,
    Nat,
    Newline,
};

const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string lexeme;
    int line = 1;  // 1-based
    int col = 1;   // 1-based, counted in code points
    std::uint32_t value = 0;  // Nat only
};

struct ParseError {
    int line = 1;
    int col = 1;
    std::string message;
    std::vector<TokenKind> expected;
};

std::string format_error(const ParseError& err);

struct LexResult {
    std::vector<Token> tokens;
    std::vector<ParseError> errors;
    bool ok() const { return errors.empty(); }
};

// Splits source into tokens. ASCII keywords are canonical; the usual DL
// symbols are accepted as aliases. '#' starts a comment running to end of
// line; blank lines produce no tokens; a Newline token separates statements.
// Illegal characters are recorded as errors and skipped so later lines still
// lex.
LexResult tokenize(std::string_view source);

}  // namespace ontokit
