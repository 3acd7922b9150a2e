#pragma once

// Upper-ontology alignment checks. The embedded taxonomy is the DOLCE
// category tree rooted at Entity; alignments map domain concepts onto its
// categories and are validated for subclass compatibility.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontokit/graph.hpp"

namespace ontokit {

struct DolceTaxonomy {
    std::set<std::string> categories;
    std::map<std::string, std::string> parent;  // absent for the root
    std::string root;

    bool contains(const std::string& category) const { return categories.count(category) > 0; }
};

// True when ancestor equals descendant or lies on its parent chain.
bool is_same_or_ancestor(const DolceTaxonomy& tax, const std::string& ancestor,
                         const std::string& descendant);

using AlignmentMap = std::map<std::string, std::string>;  // domain concept -> category

struct Incompatibility {
    std::string child;
    std::string parent;
    std::string dolce_child;
    std::string dolce_parent;
};

struct UnknownCategoryEntry {
    std::string concept_name;
    std::string category;
};

struct AlignmentReport {
    double coverage = 0.0;                // mapped fraction of graph classes
    std::vector<std::string> unmapped;    // sorted
    std::vector<Incompatibility> incompatibilities;  // warnings
    std::vector<UnknownCategoryEntry> unknown_categories;  // errors
    bool valid = true;  // no unknown categories
};

// The Entity-rooted category tree used when no taxonomy file is given.
DolceTaxonomy default_dolce_taxonomy();

// Loads {category, parent?} records and validates the tree: exactly one
// root, no cycles, no dangling parents. Throws MalformedTaxonomyError.
DolceTaxonomy load_dolce(const std::optional<std::filesystem::path>& path = std::nullopt);

// Loads {concept, dolce} records.
AlignmentMap load_alignment(const std::filesystem::path& path);

// Coverage counts classes only (individuals may be mapped but are not part
// of the denominator). An incompatibility is recorded for each subclass edge
// (A, B) with both ends mapped where dolce(A) is neither equal to nor a
// descendant of dolce(B).
AlignmentReport validate_alignment(const ConceptGraph& graph, const AlignmentMap& map,
                                   const DolceTaxonomy& tax);

}  // namespace ontokit
