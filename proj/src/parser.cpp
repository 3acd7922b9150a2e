#include "ontokit/parser.hpp"

#include <cstddef>

namespace ontokit {

namespace {

// Thrown internally to unwind to the statement boundary; converted to a
// ParseError value at the API edge.
struct ParseFailure {
    ParseError error;
};

class Parser {
public:
    explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

    Axiom parse_axiom_line() {
        const Token& lhs = expect(TokenKind::Ident, "axiom must start with a class name");
        expect(TokenKind::Sub, "axiom needs 'sub' after the class name");
        ExprPtr rhs = parse_expr();
        expect_end();
        return Axiom{lhs.lexeme, std::move(rhs), lhs.line};
    }

private:
    std::span<const Token> tokens_;
    std::size_t pos_ = 0;

    bool at_end() const {
        return pos_ >= tokens_.size() || tokens_[pos_].kind == TokenKind::Newline;
    }

    const Token* peek() const { return at_end() ? nullptr : &tokens_[pos_]; }

    bool match(TokenKind kind) {
        if (!at_end() && tokens_[pos_].kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    // Position of the point just past the last consumed token; used when an
    // error is "something missing here" rather than "bad token here".
    ParseError here(std::string message, std::vector<TokenKind> expected) const {
        int line = 1, col = 1;
        if (!at_end()) {
            line = tokens_[pos_].line;
            col = tokens_[pos_].col;
        } else if (pos_ < tokens_.size()) {
            line = tokens_[pos_].line;
            col = tokens_[pos_].col;
        } else if (!tokens_.empty()) {
            const Token& last = tokens_.back();
            line = last.line;
            col = last.col + static_cast<int>(last.lexeme.size());
        }
        return ParseError{line, col, std::move(message), std::move(expected)};
    }

    [[noreturn]] void fail(std::string message, std::vector<TokenKind> expected) const {
        throw ParseFailure{here(std::move(message), std::move(expected))};
    }

    const Token& expect(TokenKind kind, const char* message) {
        if (!at_end() && tokens_[pos_].kind == kind) return tokens_[pos_++];
        fail(message, {kind});
    }

    void expect_end() {
        if (!at_end()) {
            fail("unexpected input after axiom: '" + tokens_[pos_].lexeme + "'", {TokenKind::Newline});
        }
    }

    ExprPtr parse_expr() {
        std::vector<ExprPtr> terms;
        terms.push_back(parse_term());
        while (match(TokenKind::Or)) terms.push_back(parse_term());
        if (terms.size() == 1) return std::move(terms.front());
        return disj(std::move(terms));
    }

    ExprPtr parse_term() {
        std::vector<ExprPtr> factors;
        factors.push_back(parse_factor());
        while (match(TokenKind::And)) factors.push_back(parse_factor());
        if (factors.size() == 1) return std::move(factors.front());
        return conj(std::move(factors));
    }

    ExprPtr parse_factor() {
        const Token* tok = peek();
        if (!tok) {
            fail("expected a concept expression",
                 {TokenKind::Ident, TokenKind::LParen, TokenKind::Some, TokenKind::Only, TokenKind::Min,
                  TokenKind::Exact});
        }
        switch (tok->kind) {
            case TokenKind::Ident:
                ++pos_;
                return atom(tok->lexeme);
            case TokenKind::LParen: {
                ++pos_;
                ExprPtr inner = parse_expr();
                expect(TokenKind::RParen, "unbalanced parenthesis");
                return inner;
            }
            case TokenKind::Some:
            case TokenKind::Only: {
                bool is_some = tok->kind == TokenKind::Some;
                ++pos_;
                const Token& role = expect(TokenKind::Ident, "quantifier needs a role name");
                expect(TokenKind::Dot, "quantifier needs '.' between role and filler");
                ExprPtr filler = parse_factor();
                return is_some ? exists(role.lexeme, std::move(filler))
                               : forall(role.lexeme, std::move(filler));
            }
            case TokenKind::Min:
            case TokenKind::Exact: {
                bool is_min = tok->kind == TokenKind::Min;
                ++pos_;
                const Token& nat = expect(TokenKind::Nat, "cardinality needs a number");
                const Token& role = expect(TokenKind::Ident, "cardinality needs a role name");
                ExprPtr filler;
                if (match(TokenKind::Dot)) filler = parse_factor();
                return is_min ? min_card(nat.value, role.lexeme, std::move(filler))
                              : exact_card(nat.value, role.lexeme, std::move(filler));
            }
            default:
                fail("unexpected token '" + tok->lexeme + "'",
                     {TokenKind::Ident, TokenKind::LParen, TokenKind::Some, TokenKind::Only, TokenKind::Min,
                      TokenKind::Exact});
        }
    }
};

}  // namespace

std::variant<Axiom, ParseError> parse_axiom(std::span<const Token> tokens) {
    try {
        return Parser(tokens).parse_axiom_line();
    } catch (const ParseFailure& f) {
        return f.error;
    }
}

ParseOntologyResult parse_ontology(std::string_view source, std::string name) {
    ParseOntologyResult result;
    result.doc.name = std::move(name);

    LexResult lexed = tokenize(source);
    result.errors = lexed.errors;

    std::span<const Token> tokens(lexed.tokens);
    std::size_t start = 0;
    while (start < tokens.size()) {
        std::size_t end = start;
        while (end < tokens.size() && tokens[end].kind != TokenKind::Newline) ++end;
        std::span<const Token> line = tokens.subspan(start, end - start);
        start = end + 1;
        if (line.empty()) continue;

        if (line.size() == 1 && line[0].kind == TokenKind::Ident) {
            result.doc.declarations.push_back(Declaration{line[0].lexeme, line[0].line});
            continue;
        }
        auto parsed = parse_axiom(line);
        if (auto* axiom = std::get_if<Axiom>(&parsed)) {
            result.doc.axioms.push_back(std::move(*axiom));
        } else {
            result.errors.push_back(std::get<ParseError>(parsed));
        }
    }

    if (!result.errors.empty()) {
        result.doc.axioms.clear();
        result.doc.declarations.clear();
    }
    return result;
}

}  // namespace ontokit
