#pragma once

// Core value types: concept expressions, axioms and ontology documents.
//
// A ConceptExpr is an immutable tree shared through shared_ptr<const>.
// Axioms always have an atomic left-hand side; the right-hand side is an
// arbitrary expression. An OntologyDoc is the parsed form of one .dlx file:
// axioms in source order plus bare class declarations.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ontokit {

struct ConceptExpr;
using ExprPtr = std::shared_ptr<const ConceptExpr>;

struct Atom {
    std::string name;
};

struct And {
    std::vector<ExprPtr> children;  // >= 2
};

struct Or {
    std::vector<ExprPtr> children;  // >= 2
};

struct Exists {
    std::string role;
    ExprPtr filler;
};

struct ForAll {
    std::string role;
    ExprPtr filler;
};

struct MinCard {
    std::uint32_t n = 0;
    std::string role;
    ExprPtr filler;  // may be null (unqualified cardinality)
};

struct ExactCard {
    std::uint32_t n = 0;
    std::string role;
    ExprPtr filler;  // may be null
};

struct ConceptExpr {
    std::variant<Atom, And, Or, Exists, ForAll, MinCard, ExactCard> node;
};

// True for [A-Za-z][A-Za-z0-9_]*.
bool is_identifier(std::string_view s);

// Factories validate their arguments (identifier shape, child counts) and
// throw InputError on violation.
ExprPtr atom(std::string name);
ExprPtr conj(std::vector<ExprPtr> children);
ExprPtr disj(std::vector<ExprPtr> children);
ExprPtr exists(std::string role, ExprPtr filler);
ExprPtr forall(std::string role, ExprPtr filler);
ExprPtr min_card(std::uint32_t n, std::string role, ExprPtr filler = nullptr);
ExprPtr exact_card(std::uint32_t n, std::string role, ExprPtr filler = nullptr);

bool struct_equal(const ConceptExpr& a, const ConceptExpr& b);
bool struct_equal(const ExprPtr& a, const ExprPtr& b);

struct Axiom {
    std::string lhs;  // atomic class name
    ExprPtr rhs;
    int source_line = 0;
};

// Structural equality; source position is ignored.
bool struct_equal(const Axiom& a, const Axiom& b);

// A bare identifier statement: declares a class with no axioms attached.
struct Declaration {
    std::string name;
    int source_line = 0;
};

struct OntologyDoc {
    std::string name;
    std::vector<Axiom> axioms;              // source order
    std::vector<Declaration> declarations;  // source order
};

// Canonical ASCII surface syntax. parse(pretty_print(x)) is structurally
// equal to x for every valid expression or axiom.
std::string pretty_print(const ConceptExpr& expr);
std::string pretty_print(const ExprPtr& expr);
std::string pretty_print(const Axiom& axiom);

}  // namespace ontokit
