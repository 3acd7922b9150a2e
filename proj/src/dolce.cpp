#include "ontokit/dolce.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "ontokit/errors.hpp"

namespace ontokit {

namespace {

// Fig.-style category tree: (category, parent). The root Entity has none.
const std::vector<std::pair<const char*, const char*>> kDefaultCategories = {
    {"Entity", ""},
    {"Endurant", "Entity"},
    {"Physical Endurant", "Endurant"},
    {"Physical Object", "Physical Endurant"},
    {"Agentive Physical Object", "Physical Object"},
    {"Non-Physical Endurant", "Endurant"},
    {"Non-Physical Object", "Non-Physical Endurant"},
    {"Social Object", "Non-Physical Object"},
    {"Agentive Social Object", "Social Object"},
    {"Social Agent", "Agentive Social Object"},
    {"Society", "Social Agent"},
    {"Non-Agentive Social Object", "Social Object"},
    {"Perdurant", "Entity"},
    {"Stative", "Perdurant"},
    {"Process", "Stative"},
    {"Quality", "Entity"},
    {"Temporal Quality", "Quality"},
    {"Abstract Quality", "Quality"},
};

DolceTaxonomy build_taxonomy(const std::vector<std::pair<std::string, std::string>>& records) {
    DolceTaxonomy tax;
    for (const auto& [category, parent] : records) {
        if (category.empty()) throw MalformedTaxonomyError("empty category name");
        if (!tax.categories.insert(category).second) {
            throw MalformedTaxonomyError("category listed twice: " + category);
        }
        if (parent.empty()) {
            if (!tax.root.empty()) {
                throw MalformedTaxonomyError("multiple roots: " + tax.root + " and " + category);
            }
            tax.root = category;
        } else {
            tax.parent[category] = parent;
        }
    }
    if (tax.root.empty()) throw MalformedTaxonomyError("no root category");
    for (const auto& [category, parent] : tax.parent) {
        if (!tax.categories.count(parent)) {
            throw MalformedTaxonomyError("parent of '" + category + "' not listed: " + parent);
        }
    }
    // Every category must reach the root without revisiting a node.
    for (const auto& category : tax.categories) {
        std::set<std::string> seen;
        std::string cursor = category;
        while (cursor != tax.root) {
            if (!seen.insert(cursor).second) {
                throw MalformedTaxonomyError("cycle through category: " + cursor);
            }
            auto it = tax.parent.find(cursor);
            if (it == tax.parent.end()) {
                throw MalformedTaxonomyError("second root or detached category: " + cursor);
            }
            cursor = it->second;
        }
    }
    return tax;
}

}  // namespace

DolceTaxonomy default_dolce_taxonomy() {
    std::vector<std::pair<std::string, std::string>> records;
    records.reserve(kDefaultCategories.size());
    for (const auto& [category, parent] : kDefaultCategories) records.emplace_back(category, parent);
    return build_taxonomy(records);
}

bool is_same_or_ancestor(const DolceTaxonomy& tax, const std::string& ancestor,
                         const std::string& descendant) {
    std::string cursor = descendant;
    while (true) {
        if (cursor == ancestor) return true;
        auto it = tax.parent.find(cursor);
        if (it == tax.parent.end()) return false;
        cursor = it->second;
    }
}

DolceTaxonomy load_dolce(const std::optional<std::filesystem::path>& path) {
    if (!path) return default_dolce_taxonomy();

    std::ifstream in(*path);
    if (!in) throw InputError("cannot open taxonomy file: " + path->string());
    nlohmann::json data;
    try {
        in >> data;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("taxonomy file " + path->string() + ": " + e.what());
    }
    if (!data.is_array()) throw InputError("taxonomy file " + path->string() + ": expected a JSON list");

    std::vector<std::pair<std::string, std::string>> records;
    for (const auto& record : data) {
        try {
            std::string category = record.at("category").get<std::string>();
            std::string parent = record.contains("parent") ? record["parent"].get<std::string>() : "";
            records.emplace_back(std::move(category), std::move(parent));
        } catch (const nlohmann::json::exception& e) {
            throw InputError("taxonomy file " + path->string() + ": " + e.what());
        }
    }
    return build_taxonomy(records);
}

AlignmentMap load_alignment(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open alignment file: " + path.string());
    nlohmann::json data;
    try {
        in >> data;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("alignment file " + path.string() + ": " + e.what());
    }
    if (!data.is_array()) throw InputError("alignment file " + path.string() + ": expected a JSON list");

    AlignmentMap map;
    for (const auto& record : data) {
        try {
            std::string concept_name = record.at("concept").get<std::string>();
            std::string category = record.at("dolce").get<std::string>();
            if (map.count(concept_name)) {
                throw InputError("alignment file " + path.string() + ": concept mapped twice: " +
                                 concept_name);
            }
            map[concept_name] = std::move(category);
        } catch (const nlohmann::json::exception& e) {
            throw InputError("alignment file " + path.string() + ": " + e.what());
        }
    }
    return map;
}

AlignmentReport validate_alignment(const ConceptGraph& graph, const AlignmentMap& map,
                                   const DolceTaxonomy& tax) {
    AlignmentReport report;

    for (const auto& [concept_name, category] : map) {
        if (!tax.contains(category)) {
            report.unknown_categories.push_back(UnknownCategoryEntry{concept_name, category});
        }
    }
    report.valid = report.unknown_categories.empty();

    std::size_t mapped = 0;
    for (const auto& cls : graph.classes) {
        if (map.count(cls)) ++mapped;
        else report.unmapped.push_back(cls);
    }
    report.coverage =
        graph.classes.empty() ? 1.0 : static_cast<double>(mapped) / static_cast<double>(graph.classes.size());

    for (const auto& [child, parent] : graph.subclass_edges) {
        auto child_it = map.find(child);
        auto parent_it = map.find(parent);
        if (child_it == map.end() || parent_it == map.end()) continue;
        if (!tax.contains(child_it->second) || !tax.contains(parent_it->second)) continue;
        if (!is_same_or_ancestor(tax, parent_it->second, child_it->second)) {
            report.incompatibilities.push_back(
                Incompatibility{child, parent, child_it->second, parent_it->second});
        }
    }
    return report;
}

}  // namespace ontokit
