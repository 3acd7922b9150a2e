#include "ontokit/lexer.hpp"

#include <cctype>
#include <cstdint>
#include <map>

namespace ontokit {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Ident: return "identifier";
        case TokenKind::Sub: return "'sub'";
        case TokenKind::And: return "'and'";
        case TokenKind::Or: return "'or'";
        case TokenKind::Some: return "'some'";
        case TokenKind::Only: return "'only'";
        case TokenKind::Min: return "'min'";
        case TokenKind::Exact: return "'exact'";
        case TokenKind::Dot: return "'.'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Nat: return "number";
        case TokenKind::Newline: return "end of axiom";
    }
    return "?";
}

std::string format_error(const ParseError& err) {
    std::string out = std::to_string(err.line) + ":" + std::to_string(err.col) + ": " + err.message;
    if (!err.expected.empty()) {
        out += " (expected ";
        for (std::size_t i = 0; i < err.expected.size(); ++i) {
            if (i) out += i + 1 == err.expected.size() ? " or " : ", ";
            out += token_kind_name(err.expected[i]);
        }
        out += ")";
    }
    return out;
}

namespace {

const std::map<std::string_view, TokenKind> kKeywords = {
    {"sub", TokenKind::Sub},   {"and", TokenKind::And}, {"or", TokenKind::Or},
    {"some", TokenKind::Some}, {"only", TokenKind::Only}, {"min", TokenKind::Min},
    {"exact", TokenKind::Exact},
};

// Unicode aliases for the keyword tokens, keyed by code point.
const std::map<std::uint32_t, TokenKind> kAliases = {
    {0x2291, TokenKind::Sub},    // subset-or-equal
    {0x2293, TokenKind::And},    // square cap
    {0x03A0, TokenKind::And},    // capital pi
    {0x2294, TokenKind::Or},     // square cup
    {0x2228, TokenKind::Or},     // logical or
    {0x2203, TokenKind::Some},   // exists
    {0x2200, TokenKind::Only},   // for all
    {0x2265, TokenKind::Min},    // greater-or-equal
};

struct Cursor {
    std::string_view src;
    std::size_t byte = 0;
    int line = 1;
    int col = 1;

    bool done() const { return byte >= src.size(); }

    // Decodes the code point at the cursor. Malformed UTF-8 yields the raw
    // byte value, which cannot collide with any alias.
    std::uint32_t peek(std::size_t& len) const {
        unsigned char c = src[byte];
        if (c < 0x80) {
            len = 1;
            return c;
        }
        std::size_t want = (c >= 0xF0) ? 4 : (c >= 0xE0) ? 3 : (c >= 0xC0) ? 2 : 1;
        if (want == 1 || byte + want > src.size()) {
            len = 1;
            return c;
        }
        std::uint32_t cp = c & (0x7F >> want);
        for (std::size_t i = 1; i < want; ++i) {
            unsigned char cc = src[byte + i];
            if ((cc & 0xC0) != 0x80) {
                len = 1;
                return c;
            }
            cp = (cp << 6) | (cc & 0x3F);
        }
        len = want;
        return cp;
    }

    void advance(std::size_t len) {
        byte += len;
        ++col;
    }
};

}  // namespace

LexResult tokenize(std::string_view source) {
    LexResult result;
    Cursor cur{source};
    bool line_has_tokens = false;

    auto push = [&](TokenKind kind, std::string lexeme, int line, int col, std::uint32_t value = 0) {
        result.tokens.push_back(Token{kind, std::move(lexeme), line, col, value});
        line_has_tokens = true;
    };

    while (!cur.done()) {
        std::size_t len = 0;
        std::uint32_t cp = cur.peek(len);
        int line = cur.line;
        int col = cur.col;

        if (cp == '\n') {
            if (line_has_tokens) {
                result.tokens.push_back(Token{TokenKind::Newline, "\n", line, col});
                line_has_tokens = false;
            }
            cur.byte += 1;
            ++cur.line;
            cur.col = 1;
            continue;
        }
        if (cp == '\r' || cp == ' ' || cp == '\t') {
            cur.advance(len);
            continue;
        }
        if (cp == '#') {
            while (!cur.done() && source[cur.byte] != '\n') cur.advance(1);
            continue;
        }
        if (cp < 0x80 && std::isalpha(static_cast<int>(cp))) {
            std::size_t start = cur.byte;
            while (!cur.done()) {
                char c = source[cur.byte];
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
                cur.advance(1);
            }
            std::string word(source.substr(start, cur.byte - start));
            auto kw = kKeywords.find(word);
            if (kw != kKeywords.end()) {
                push(kw->second, std::move(word), line, col);
            } else {
                push(TokenKind::Ident, std::move(word), line, col);
            }
            continue;
        }
        if (cp < 0x80 && std::isdigit(static_cast<int>(cp))) {
            std::size_t start = cur.byte;
            std::uint64_t value = 0;
            bool overflow = false;
            while (!cur.done() && std::isdigit(static_cast<unsigned char>(source[cur.byte]))) {
                value = value * 10 + static_cast<std::uint64_t>(source[cur.byte] - '0');
                if (value > 0xFFFFFFFFull) overflow = true;
                cur.advance(1);
            }
            std::string digits(source.substr(start, cur.byte - start));
            if (overflow) {
                result.errors.push_back(ParseError{line, col, "number out of range: " + digits, {}});
            } else {
                push(TokenKind::Nat, std::move(digits), line, col, static_cast<std::uint32_t>(value));
            }
            continue;
        }
        switch (cp) {
            case '.': push(TokenKind::Dot, ".", line, col); cur.advance(len); continue;
            case '(': push(TokenKind::LParen, "(", line, col); cur.advance(len); continue;
            case ')': push(TokenKind::RParen, ")", line, col); cur.advance(len); continue;
            case '=': push(TokenKind::Exact, "=", line, col); cur.advance(len); continue;
            default: break;
        }
        auto alias = kAliases.find(cp);
        if (alias != kAliases.end()) {
            push(alias->second, std::string(source.substr(cur.byte, len)), line, col);
            cur.advance(len);
            continue;
        }
        result.errors.push_back(
            ParseError{line, col, "illegal character '" + std::string(source.substr(cur.byte, len)) + "'", {}});
        cur.advance(len);
    }
    if (line_has_tokens) {
        result.tokens.push_back(Token{TokenKind::Newline, "", cur.line, cur.col});
    }
    return result;
}

}  // namespace ontokit
