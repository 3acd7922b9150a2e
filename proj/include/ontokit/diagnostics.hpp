#pragma once

// Semantic-consistency pass over a normalized graph. Detects structural
// errors (subclass cycles, class/individual confusions, reserved-role
// misuse) and a few hygiene warnings before any downstream analysis runs.

#include <string>
#include <vector>

#include "ontokit/graph.hpp"
#include "ontokit/model.hpp"

namespace ontokit {

enum class Severity { Error, Warning };

enum class DiagnosticCode {
    SubclassCycle,
    CategoryConflict,
    ReservedRoleMisuse,
    DuplicateAxiom,
    IsolatedName,
    RangeIsIndividual,
};

const char* severity_name(Severity severity);
const char* diagnostic_code_name(DiagnosticCode code);

struct Diagnostic {
    Severity severity = Severity::Error;
    DiagnosticCode code = DiagnosticCode::SubclassCycle;
    std::vector<std::string> subjects;  // nonempty, sorted
    std::string message;
    std::vector<int> source_lines;  // sorted
};

struct DiagnosticReport {
    std::vector<Diagnostic> diagnostics;  // sorted by (severity, code, first subject)
    int error_count = 0;
    int warning_count = 0;
    bool clean = true;  // no errors
};

// One Error per strongly connected component of size >= 2 (or self-loop) in
// the subclass edges; subjects are the sorted members of the component.
std::vector<Diagnostic> detect_subclass_cycles(const ConceptGraph& graph);

// CategoryConflict for names that are both an individual and a class;
// RangeIsIndividual for ordinary role ranges naming a declared individual.
std::vector<Diagnostic> detect_category_conflicts(const ConceptGraph& graph);

// Reserved roles appearing under 'only' or a cardinality. Works on the raw
// document so it can run even when normalize would refuse.
std::vector<Diagnostic> detect_reserved_role_misuse(const OntologyDoc& doc,
                                                    const NormalizationConfig& cfg);

// Warning per group of structurally identical axioms.
std::vector<Diagnostic> detect_duplicate_axioms(const OntologyDoc& doc);

// Warning per name that is referenced somewhere but never declared as a
// class or individual.
std::vector<Diagnostic> detect_isolated_names(const ConceptGraph& graph);

// Runs all detectors. graph must be normalize(doc, graph.config).
DiagnosticReport check(const OntologyDoc& doc, const ConceptGraph& graph);

// The graph-only error detectors (cycles, category conflicts); used as the
// gate for downstream consumers that have no document at hand.
std::vector<Diagnostic> graph_errors(const ConceptGraph& graph);

}  // namespace ontokit
