#include "ontokit/diagnostics.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ontokit {

const char* severity_name(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

const char* diagnostic_code_name(DiagnosticCode code) {
    switch (code) {
        case DiagnosticCode::SubclassCycle: return "SubclassCycle";
        case DiagnosticCode::CategoryConflict: return "CategoryConflict";
        case DiagnosticCode::ReservedRoleMisuse: return "ReservedRoleMisuse";
        case DiagnosticCode::DuplicateAxiom: return "DuplicateAxiom";
        case DiagnosticCode::IsolatedName: return "IsolatedName";
        case DiagnosticCode::RangeIsIndividual: return "RangeIsIndividual";
    }
    return "?";
}

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::vector<int> sorted_lines(const std::set<int>& lines) {
    return {lines.begin(), lines.end()};
}

}  // namespace

std::vector<Diagnostic> detect_subclass_cycles(const ConceptGraph& graph) {
    // Iterative Tarjan over the child -> parent edges.
    std::map<std::string, std::vector<std::string>> adjacency;
    std::set<std::string> self_loops;
    for (const auto& [child, parent] : graph.subclass_edges) {
        if (child == parent) self_loops.insert(child);
        adjacency[child].push_back(parent);
        adjacency.try_emplace(parent);
    }

    std::map<std::string, int> index, lowlink;
    std::set<std::string> on_stack;
    std::vector<std::string> stack;
    std::vector<std::vector<std::string>> components;
    int next_index = 0;

    struct Frame {
        std::string node;
        std::size_t edge = 0;
    };

    for (const auto& [start, unused] : adjacency) {
        if (index.count(start)) continue;
        std::vector<Frame> frames{{start}};
        index[start] = lowlink[start] = next_index++;
        stack.push_back(start);
        on_stack.insert(start);

        while (!frames.empty()) {
            Frame& frame = frames.back();
            const auto& out_edges = adjacency[frame.node];
            if (frame.edge < out_edges.size()) {
                const std::string& next = out_edges[frame.edge++];
                if (!index.count(next)) {
                    index[next] = lowlink[next] = next_index++;
                    stack.push_back(next);
                    on_stack.insert(next);
                    frames.push_back(Frame{next});
                } else if (on_stack.count(next)) {
                    lowlink[frame.node] = std::min(lowlink[frame.node], index[next]);
                }
            } else {
                if (lowlink[frame.node] == index[frame.node]) {
                    std::vector<std::string> component;
                    while (true) {
                        std::string top = stack.back();
                        stack.pop_back();
                        on_stack.erase(top);
                        component.push_back(top);
                        if (top == frame.node) break;
                    }
                    if (component.size() >= 2 || self_loops.count(component.front())) {
                        std::sort(component.begin(), component.end());
                        components.push_back(std::move(component));
                    }
                }
                std::string done = frame.node;
                frames.pop_back();
                if (!frames.empty()) {
                    lowlink[frames.back().node] = std::min(lowlink[frames.back().node], lowlink[done]);
                }
            }
        }
    }

    std::sort(components.begin(), components.end());
    std::vector<Diagnostic> out;
    for (auto& members : components) {
        std::set<int> lines;
        for (const auto& [edge, edge_lines] : graph.subclass_edge_lines) {
            bool child_in = std::binary_search(members.begin(), members.end(), edge.first);
            bool parent_in = std::binary_search(members.begin(), members.end(), edge.second);
            if (child_in && parent_in) lines.insert(edge_lines.begin(), edge_lines.end());
        }
        Diagnostic d;
        d.severity = Severity::Error;
        d.code = DiagnosticCode::SubclassCycle;
        d.message = "subclass cycle through {" + join(members, ", ") + "}";
        d.subjects = std::move(members);
        d.source_lines = sorted_lines(lines);
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Diagnostic> detect_category_conflicts(const ConceptGraph& graph) {
    std::vector<Diagnostic> out;
    for (const auto& name : graph.individuals) {
        if (!graph.classes.count(name)) continue;
        Diagnostic d;
        d.severity = Severity::Error;
        d.code = DiagnosticCode::CategoryConflict;
        d.subjects = {name};
        d.message = "'" + name + "' is used both as an individual and as a class";
        auto it = graph.name_lines.find(name);
        if (it != graph.name_lines.end()) d.source_lines = sorted_lines(it->second);
        out.push_back(std::move(d));
    }
    for (const auto& [role, decl] : graph.roles) {
        if (graph.config.composition_roles.count(role)) continue;
        for (const auto& range : decl.ranges) {
            if (!graph.individuals.count(range)) continue;
            Diagnostic d;
            d.severity = Severity::Error;
            d.code = DiagnosticCode::RangeIsIndividual;
            d.subjects = {role, range};
            d.message = "range of role '" + role + "' names the individual '" + range + "'";
            d.source_lines = sorted_lines(decl.source_lines);
            out.push_back(std::move(d));
        }
    }
    return out;
}

namespace {

void collect_misuse(const ConceptExpr& expr, const NormalizationConfig& cfg, int line,
                    std::map<std::string, std::set<int>>& hits) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
                for (const auto& child : node.children) collect_misuse(*child, cfg, line, hits);
            } else if constexpr (std::is_same_v<T, Exists>) {
                collect_misuse(*node.filler, cfg, line, hits);
            } else if constexpr (std::is_same_v<T, ForAll>) {
                if (cfg.is_reserved(node.role)) hits[node.role].insert(line);
                collect_misuse(*node.filler, cfg, line, hits);
            } else if constexpr (std::is_same_v<T, MinCard> || std::is_same_v<T, ExactCard>) {
                if (cfg.is_reserved(node.role)) hits[node.role].insert(line);
                if (node.filler) collect_misuse(*node.filler, cfg, line, hits);
            }
        },
        expr.node);
}

}  // namespace

std::vector<Diagnostic> detect_reserved_role_misuse(const OntologyDoc& doc,
                                                    const NormalizationConfig& cfg) {
    std::map<std::string, std::set<int>> hits;
    for (const auto& axiom : doc.axioms) {
        collect_misuse(*axiom.rhs, cfg, axiom.source_line, hits);
    }
    std::vector<Diagnostic> out;
    for (const auto& [role, lines] : hits) {
        Diagnostic d;
        d.severity = Severity::Error;
        d.code = DiagnosticCode::ReservedRoleMisuse;
        d.subjects = {role};
        d.message = "reserved role '" + role + "' used under 'only' or a cardinality";
        d.source_lines = sorted_lines(lines);
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Diagnostic> detect_duplicate_axioms(const OntologyDoc& doc) {
    // Group by canonical text, which coincides with structural equality.
    std::map<std::string, std::vector<int>> groups;
    std::vector<std::string> order;
    for (const auto& axiom : doc.axioms) {
        std::string key = pretty_print(axiom);
        auto [it, inserted] = groups.try_emplace(std::move(key));
        if (inserted) order.push_back(it->first);
        it->second.push_back(axiom.source_line);
    }
    std::vector<Diagnostic> out;
    for (const auto& key : order) {
        const auto& lines = groups[key];
        if (lines.size() < 2) continue;
        Diagnostic d;
        d.severity = Severity::Warning;
        d.code = DiagnosticCode::DuplicateAxiom;
        d.subjects = {key.substr(0, key.find(' '))};  // the LHS
        d.message = "axiom repeated " + std::to_string(lines.size()) + " times: " + key;
        d.source_lines = lines;
        std::sort(d.source_lines.begin(), d.source_lines.end());
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Diagnostic> detect_isolated_names(const ConceptGraph& graph) {
    std::vector<Diagnostic> out;
    for (const auto& [name, lines] : graph.references) {
        if (graph.contains(name)) continue;
        Diagnostic d;
        d.severity = Severity::Warning;
        d.code = DiagnosticCode::IsolatedName;
        d.subjects = {name};
        d.message = "'" + name + "' is referenced " + std::to_string(lines.size()) +
                    (lines.size() == 1 ? " time" : " times") +
                    " but never declared as a class or individual";
        d.source_lines = sorted_lines(lines);
        out.push_back(std::move(d));
    }
    return out;
}

namespace {

DiagnosticReport assemble(std::vector<Diagnostic> diagnostics) {
    auto rank = [](const Diagnostic& d) {
        return std::tuple<int, int, const std::vector<std::string>&>(
            static_cast<int>(d.severity), static_cast<int>(d.code), d.subjects);
    };
    std::stable_sort(diagnostics.begin(), diagnostics.end(),
                     [&](const Diagnostic& a, const Diagnostic& b) { return rank(a) < rank(b); });
    DiagnosticReport report;
    report.diagnostics = std::move(diagnostics);
    for (const auto& d : report.diagnostics) {
        if (d.severity == Severity::Error) ++report.error_count;
        else ++report.warning_count;
    }
    report.clean = report.error_count == 0;
    return report;
}

}  // namespace

std::vector<Diagnostic> graph_errors(const ConceptGraph& graph) {
    std::vector<Diagnostic> all = detect_subclass_cycles(graph);
    auto conflicts = detect_category_conflicts(graph);
    all.insert(all.end(), conflicts.begin(), conflicts.end());
    return all;
}

DiagnosticReport check(const OntologyDoc& doc, const ConceptGraph& graph) {
    std::vector<Diagnostic> all = graph_errors(graph);
    for (auto&& d : detect_reserved_role_misuse(doc, graph.config)) all.push_back(std::move(d));
    for (auto&& d : detect_duplicate_axioms(doc)) all.push_back(std::move(d));
    for (auto&& d : detect_isolated_names(graph)) all.push_back(std::move(d));
    return assemble(std::move(all));
}

}  // namespace ontokit
