#pragma once

// Deterministic OWL/RDF-XML serialization of a concept graph, plus a
// re-parser for the emitted vocabulary so output can be verified by round
// trip. Elements used: owl:ObjectProperty (one per role, rdfs:domain +
// rdfs:range children), owl:Class (rdfs:subClassOf children, residual axioms
// as rdfs:comment), owl:Thing (rdf:type children).

#include <cstddef>
#include <string>

#include "ontokit/graph.hpp"

namespace ontokit {

struct OwlDocument {
    std::string xml_text;
    std::size_t class_count = 0;
    std::size_t property_count = 0;
    std::size_t individual_count = 0;
};

inline constexpr const char* kDefaultBaseIri = "http://example.org/ontodpm";

// Byte-deterministic: two-space indentation, LF line endings, UTF-8,
// lexicographic element order within each section. Throws UncleanGraphError
// when the graph has consistency errors, unless enforce_clean is false.
OwlDocument emit(const ConceptGraph& graph, const std::string& base_iri = kDefaultBaseIri,
                 bool enforce_clean = true);

// Rebuilds classes, individuals, subclass edges and role declarations from a
// document produced by emit; composition edges are reconstructed for roles
// listed in cfg. Throws UnsupportedElementError on foreign XML.
ConceptGraph reparse(const OwlDocument& doc, const NormalizationConfig& cfg = {});

// Equality on the round-trippable core: classes, individuals, subclass
// edges, and role domains/ranges.
bool graph_core_equal(const ConceptGraph& a, const ConceptGraph& b);

}  // namespace ontokit
