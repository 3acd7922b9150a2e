#pragma once

// Competency-question coverage scoring.
//
// card(c) weighs a concept by its instance closure: 1 for a leaf (or an
// individual), otherwise 1 plus the card sum over its direct children, where
// children are direct subclasses, individuals and composition-edge targets.
// A concept absent from the graph scores 0. The semantic relatedness score
// of a question is the card sum over the concepts it maps to.

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "ontokit/graph.hpp"

namespace ontokit {

struct QuestionMapping {
    std::string id;                     // e.g. Q1
    std::string text;
    std::vector<std::string> concepts;  // mapping order is preserved
};

struct PerConceptScore {
    std::string concept_name;
    std::uint64_t card = 0;
    bool present = false;  // card == 0 exactly when absent
};

struct SrsEntry {
    std::string question;
    std::vector<PerConceptScore> per_concept;
    std::uint64_t srs = 0;
};

struct SrsReport {
    std::vector<SrsEntry> entries;  // input order
    std::uint64_t min_srs = 0;
    std::uint64_t max_srs = 0;
    std::set<std::string> unmapped_concepts;  // mapped by a question, absent from the graph
};

// Eq.-style recursive weight with per-call memoization. Children reached
// through several parents count once per path. Throws CycleDetectedError if
// a cycle is reachable from c (an unclean graph slipped past the gate).
std::uint64_t card(const ConceptGraph& graph, const NormalizationConfig& cfg, const std::string& c);

SrsEntry srs(const ConceptGraph& graph, const NormalizationConfig& cfg, const QuestionMapping& q);

// Throws DuplicateQuestionIdError on repeated ids.
SrsReport srs_report(const ConceptGraph& graph, const NormalizationConfig& cfg,
                     const std::vector<QuestionMapping>& questions);

// Question file: JSON list of {id, text, concepts[]}. Throws InputError on
// malformed content.
std::vector<QuestionMapping> load_questions(const std::filesystem::path& path);

// Expectation file for the bundled corpus: JSON list of {id, expected_srs,
// paper_discrepancy, paper_value?}.
struct SrsExpectation {
    std::string id;
    std::uint64_t expected_srs = 0;
    bool paper_discrepancy = false;
    std::uint64_t paper_value = 0;  // meaningful only when paper_discrepancy
};

std::vector<SrsExpectation> load_srs_expectations(const std::filesystem::path& path);

}  // namespace ontokit
