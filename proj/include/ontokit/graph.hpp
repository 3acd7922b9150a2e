#pragma once

// Normalization: turns a parsed ontology document into a concept graph of
// class nodes, individual nodes and subclass / individual-of / composition
// edges, driven by three reserved role vocabularies.

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ontokit/model.hpp"

namespace ontokit {

struct NormalizationConfig {
    std::set<std::string> subclass_roles = {"isA"};
    std::set<std::string> individual_roles = {"IsIndividualOf"};
    std::set<std::string> composition_roles = {"hasDivision"};

    bool is_reserved(const std::string& role) const {
        return subclass_roles.count(role) || individual_roles.count(role) ||
               composition_roles.count(role);
    }
};

struct RoleDecl {
    std::string domain;           // LHS of the first axiom mentioning the role
    std::set<std::string> ranges; // union of atomic fillers across axioms
    std::set<int> source_lines;
};

using SubclassEdge = std::pair<std::string, std::string>;            // (child, parent)
using IndividualEdge = std::pair<std::string, std::string>;          // (individual, class)
using CompositionEdge = std::tuple<std::string, std::string, std::string>;  // (parent, child, role)

struct ConceptGraph {
    std::set<std::string> classes;
    std::set<std::string> individuals;
    std::set<SubclassEdge> subclass_edges;
    std::set<IndividualEdge> individual_edges;
    std::set<CompositionEdge> composition_edges;
    std::map<std::string, RoleDecl> roles;
    std::vector<Axiom> residual_axioms;  // source order

    // Referenced names that declared nothing (non-reserved role fillers,
    // atoms inside residual axioms). Feeds the isolated-name warning.
    std::map<std::string, std::set<int>> references;

    // Source lines per declared name and per subclass edge, for diagnostics.
    std::map<std::string, std::set<int>> name_lines;
    std::map<SubclassEdge, std::set<int>> subclass_edge_lines;

    NormalizationConfig config;

    bool contains(const std::string& name) const {
        return classes.count(name) || individuals.count(name);
    }
};

// Builds the graph. Classes are declared by axiom left-hand sides, by fillers
// of reserved roles under 'some', and by bare declarations; individuals by
// fillers of individual roles. Fillers of ordinary roles and atoms inside
// residual axioms are recorded as references only. Axioms whose right-hand
// side mixes conjunctions or cardinalities land in residual_axioms verbatim,
// with reserved-role conjuncts still contributing their edges.
//
// Throws ReservedRoleMisuseError when a reserved role occurs under 'only' or
// under a cardinality.
ConceptGraph normalize(const OntologyDoc& doc, const NormalizationConfig& cfg = {});

// Union of direct subclasses, individuals and composition children of c,
// lexicographically sorted. Only composition edges whose role is listed in
// cfg count. Throws UnknownConceptError when c is not in the graph.
std::vector<std::string> children(const ConceptGraph& graph, const NormalizationConfig& cfg,
                                  const std::string& c);

}  // namespace ontokit
