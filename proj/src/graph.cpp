#include "ontokit/graph.hpp"

#include <optional>

#include "ontokit/errors.hpp"

namespace ontokit {

namespace {

// An expression that is an atom or a disjunction of atoms; the shape reserved
// roles and role declarations require for their fillers.
std::optional<std::vector<std::string>> atom_list(const ExprPtr& expr) {
    if (!expr) return std::nullopt;
    if (const auto* a = std::get_if<Atom>(&expr->node)) {
        return std::vector<std::string>{a->name};
    }
    if (const auto* o = std::get_if<Or>(&expr->node)) {
        std::vector<std::string> names;
        for (const auto& child : o->children) {
            const auto* ca = std::get_if<Atom>(&child->node);
            if (!ca) return std::nullopt;
            names.push_back(ca->name);
        }
        return names;
    }
    return std::nullopt;
}

class Normalizer {
public:
    Normalizer(const OntologyDoc& doc, const NormalizationConfig& cfg) : doc_(doc), cfg_(cfg) {
        graph_.config = cfg;
    }

    ConceptGraph run() {
        for (const auto& decl : doc_.declarations) {
            declare_class(decl.name, decl.source_line);
        }
        for (const auto& axiom : doc_.axioms) {
            process(axiom);
        }
        return std::move(graph_);
    }

private:
    const OntologyDoc& doc_;
    const NormalizationConfig& cfg_;
    ConceptGraph graph_;
    std::set<const ConceptExpr*> edge_nodes_;  // restrictions already turned into edges

    void declare_class(const std::string& name, int line) {
        graph_.classes.insert(name);
        graph_.name_lines[name].insert(line);
    }

    void declare_individual(const std::string& name, int line) {
        graph_.individuals.insert(name);
        graph_.name_lines[name].insert(line);
    }

    void reference(const std::string& name, int line) {
        graph_.references[name].insert(line);
    }

    void record_role(const std::string& role, const std::string& domain,
                     const std::vector<std::string>& ranges, int line) {
        auto [it, inserted] = graph_.roles.try_emplace(role);
        if (inserted) it->second.domain = domain;  // first occurrence fixes the domain
        it->second.ranges.insert(ranges.begin(), ranges.end());
        it->second.source_lines.insert(line);
    }

    // Edge extraction for `some r . fillers` with r reserved, at top level or
    // as a conjunct. Returns false when the filler is not an atom list.
    bool try_reserved_edges(const Axiom& axiom, const ConceptExpr& expr) {
        const auto* ex = std::get_if<Exists>(&expr.node);
        if (!ex || !cfg_.is_reserved(ex->role)) return false;
        auto fillers = atom_list(ex->filler);
        if (!fillers) return false;

        int line = axiom.source_line;
        if (cfg_.subclass_roles.count(ex->role)) {
            for (const auto& parent : *fillers) {
                declare_class(parent, line);
                graph_.subclass_edges.emplace(axiom.lhs, parent);
                graph_.subclass_edge_lines[{axiom.lhs, parent}].insert(line);
            }
        } else if (cfg_.individual_roles.count(ex->role)) {
            for (const auto& ind : *fillers) {
                declare_individual(ind, line);
                graph_.individual_edges.emplace(ind, axiom.lhs);
            }
        } else {
            for (const auto& child : *fillers) {
                declare_class(child, line);
                graph_.composition_edges.emplace(axiom.lhs, child, ex->role);
            }
            // Composition roles also surface as object properties.
            record_role(ex->role, axiom.lhs, *fillers, line);
        }
        edge_nodes_.insert(&expr);
        return true;
    }

    // Collects role declarations and name references from every restriction
    // not already consumed as an edge, and rejects reserved roles under
    // 'only' or under a cardinality.
    void scan(const Axiom& axiom, const ConceptExpr& expr) {
        if (edge_nodes_.count(&expr)) return;
        int line = axiom.source_line;
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Atom>) {
                    reference(node.name, line);
                } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
                    for (const auto& child : node.children) scan(axiom, *child);
                } else if constexpr (std::is_same_v<T, Exists>) {
                    if (cfg_.is_reserved(node.role)) {
                        // Reserved restriction that yielded no edges (complex
                        // filler): keep its names visible as references.
                        scan(axiom, *node.filler);
                        return;
                    }
                    record_occurrence(axiom, node.role, node.filler);
                } else if constexpr (std::is_same_v<T, ForAll>) {
                    if (cfg_.is_reserved(node.role)) {
                        throw ReservedRoleMisuseError(node.role, line);
                    }
                    record_occurrence(axiom, node.role, node.filler);
                } else {
                    if (cfg_.is_reserved(node.role)) {
                        throw ReservedRoleMisuseError(node.role, line);
                    }
                    record_occurrence(axiom, node.role, node.filler);
                }
            },
            expr.node);
    }

    void record_occurrence(const Axiom& axiom, const std::string& role, const ExprPtr& filler) {
        auto fillers = atom_list(filler);
        if (fillers) {
            record_role(role, axiom.lhs, *fillers, axiom.source_line);
            for (const auto& name : *fillers) reference(name, axiom.source_line);
        } else {
            record_role(role, axiom.lhs, {}, axiom.source_line);
            if (filler) scan(axiom, *filler);
        }
    }

    void process(const Axiom& axiom) {
        declare_class(axiom.lhs, axiom.source_line);

        bool residual;
        if (try_reserved_edges(axiom, *axiom.rhs)) {
            residual = false;
        } else if (const auto* a = std::get_if<And>(&axiom.rhs->node)) {
            // Conjunctions are residual; reserved conjuncts still contribute
            // their edges.
            for (const auto& child : a->children) try_reserved_edges(axiom, *child);
            residual = true;
        } else if (const auto* ex = std::get_if<Exists>(&axiom.rhs->node)) {
            residual = !atom_list(ex->filler).has_value();
        } else if (const auto* fa = std::get_if<ForAll>(&axiom.rhs->node)) {
            residual = !atom_list(fa->filler).has_value();
        } else {
            residual = true;
        }

        scan(axiom, *axiom.rhs);
        if (residual) graph_.residual_axioms.push_back(axiom);
    }
};

}  // namespace

ConceptGraph normalize(const OntologyDoc& doc, const NormalizationConfig& cfg) {
    return Normalizer(doc, cfg).run();
}

std::vector<std::string> children(const ConceptGraph& graph, const NormalizationConfig& cfg,
                                  const std::string& c) {
    if (!graph.contains(c)) throw UnknownConceptError(c);
    std::set<std::string> out;
    for (const auto& [child, parent] : graph.subclass_edges) {
        if (parent == c) out.insert(child);
    }
    for (const auto& [individual, cls] : graph.individual_edges) {
        if (cls == c) out.insert(individual);
    }
    for (const auto& [parent, child, role] : graph.composition_edges) {
        if (parent == c && cfg.composition_roles.count(role)) out.insert(child);
    }
    return {out.begin(), out.end()};
}

}  // namespace ontokit
