#include "ontokit/model.hpp"

#include <cctype>

#include "ontokit/errors.hpp"

namespace ontokit {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s.substr(1)) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

namespace {

void require_identifier(std::string_view s, const char* what) {
    if (!is_identifier(s)) {
        throw InputError(std::string(what) + " is not a valid identifier: '" + std::string(s) + "'");
    }
}

void require_filler(const ExprPtr& filler, const char* what) {
    if (!filler) throw InputError(std::string(what) + " requires a filler expression");
}

ExprPtr make(ConceptExpr e) { return std::make_shared<const ConceptExpr>(std::move(e)); }

}  // namespace

ExprPtr atom(std::string name) {
    require_identifier(name, "atom name");
    return make(ConceptExpr{Atom{std::move(name)}});
}

ExprPtr conj(std::vector<ExprPtr> children) {
    if (children.size() < 2) throw InputError("'and' needs at least 2 operands");
    for (const auto& c : children) require_filler(c, "'and' operand");
    return make(ConceptExpr{And{std::move(children)}});
}

ExprPtr disj(std::vector<ExprPtr> children) {
    if (children.size() < 2) throw InputError("'or' needs at least 2 operands");
    for (const auto& c : children) require_filler(c, "'or' operand");
    return make(ConceptExpr{Or{std::move(children)}});
}

ExprPtr exists(std::string role, ExprPtr filler) {
    require_identifier(role, "role name");
    require_filler(filler, "'some'");
    return make(ConceptExpr{Exists{std::move(role), std::move(filler)}});
}

ExprPtr forall(std::string role, ExprPtr filler) {
    require_identifier(role, "role name");
    require_filler(filler, "'only'");
    return make(ConceptExpr{ForAll{std::move(role), std::move(filler)}});
}

ExprPtr min_card(std::uint32_t n, std::string role, ExprPtr filler) {
    require_identifier(role, "role name");
    return make(ConceptExpr{MinCard{n, std::move(role), std::move(filler)}});
}

ExprPtr exact_card(std::uint32_t n, std::string role, ExprPtr filler) {
    require_identifier(role, "role name");
    return make(ConceptExpr{ExactCard{n, std::move(role), std::move(filler)}});
}

namespace {

bool list_equal(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!struct_equal(a[i], b[i])) return false;
    }
    return true;
}

}  // namespace

bool struct_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return struct_equal(*a, *b);
}

bool struct_equal(const ConceptExpr& a, const ConceptExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&b](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Atom>) {
                return x.name == y.name;
            } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
                return list_equal(x.children, y.children);
            } else if constexpr (std::is_same_v<T, Exists> || std::is_same_v<T, ForAll>) {
                return x.role == y.role && struct_equal(x.filler, y.filler);
            } else {
                return x.n == y.n && x.role == y.role && struct_equal(x.filler, y.filler);
            }
        },
        a.node);
}

bool struct_equal(const Axiom& a, const Axiom& b) {
    return a.lhs == b.lhs && struct_equal(a.rhs, b.rhs);
}

namespace {

// Two printing levels are enough: 'or' always prints parenthesized, 'and'
// prints bare unless it sits where the grammar wants a single factor
// (quantifier fillers, operands of another 'and').
enum class Level { Expr, Factor };

void print(const ConceptExpr& e, Level level, std::string& out);

void print_list(const std::vector<ExprPtr>& children, const char* sep, Level level, std::string& out) {
    bool first = true;
    for (const auto& c : children) {
        if (!first) out += sep;
        first = false;
        print(*c, level, out);
    }
}

void print(const ConceptExpr& e, Level level, std::string& out) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Atom>) {
                out += x.name;
            } else if constexpr (std::is_same_v<T, Or>) {
                out += '(';
                print_list(x.children, " or ", Level::Expr, out);
                out += ')';
            } else if constexpr (std::is_same_v<T, And>) {
                if (level == Level::Factor) out += '(';
                print_list(x.children, " and ", Level::Factor, out);
                if (level == Level::Factor) out += ')';
            } else if constexpr (std::is_same_v<T, Exists>) {
                out += "some " + x.role + " . ";
                print(*x.filler, Level::Factor, out);
            } else if constexpr (std::is_same_v<T, ForAll>) {
                out += "only " + x.role + " . ";
                print(*x.filler, Level::Factor, out);
            } else {
                out += std::is_same_v<T, MinCard> ? "min " : "exact ";
                out += std::to_string(x.n) + " " + x.role;
                if (x.filler) {
                    out += " . ";
                    print(*x.filler, Level::Factor, out);
                }
            }
        },
        e.node);
}

}  // namespace

std::string pretty_print(const ConceptExpr& expr) {
    std::string out;
    print(expr, Level::Expr, out);
    return out;
}

std::string pretty_print(const ExprPtr& expr) {
    if (!expr) throw InputError("cannot print a null expression");
    return pretty_print(*expr);
}

std::string pretty_print(const Axiom& axiom) {
    return axiom.lhs + " sub " + pretty_print(axiom.rhs);
}

}  // namespace ontokit
