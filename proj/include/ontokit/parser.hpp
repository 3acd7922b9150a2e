#pragma once

// Recursive-descent parser for the axiom DSL (.dlx files).
//
//   ontology    := { statement NEWLINE } ;
//   statement   := declaration | axiom ;
//   declaration := IDENT ;
//   axiom       := IDENT "sub" expr ;
//   expr        := term { "or" term } ;
//   term        := factor { "and" factor } ;
//   factor      := IDENT | "(" expr ")"
//                | "some" IDENT "." factor
//                | "only" IDENT "." factor
//                | ("min" | "exact") NAT IDENT [ "." factor ] ;
//
// "or" binds looser than "and"; quantifiers bind tighter than both, so a
// disjunctive filler must be parenthesized.

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontokit/lexer.hpp"
#include "ontokit/model.hpp"

namespace ontokit {

// Parses a single axiom from the tokens of one line (the trailing Newline
// token is optional). The left-hand side must be a bare identifier.
std::variant<Axiom, ParseError> parse_axiom(std::span<const Token> tokens);

struct ParseOntologyResult {
    OntologyDoc doc;
    std::vector<ParseError> errors;
    bool ok() const { return errors.empty(); }
};

// Parses a whole document, statement by statement, collecting every error
// instead of stopping at the first. When errors is nonempty the doc must not
// be used.
ParseOntologyResult parse_ontology(std::string_view source, std::string name);

}  // namespace ontokit
