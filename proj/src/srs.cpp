#include "ontokit/srs.hpp"

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>

#include "ontokit/errors.hpp"

namespace ontokit {

namespace {

enum class VisitState { InProgress, Done };

std::uint64_t card_rec(const ConceptGraph& graph, const NormalizationConfig& cfg,
                       const std::string& c, std::map<std::string, std::uint64_t>& memo,
                       std::map<std::string, VisitState>& state) {
    auto memoized = memo.find(c);
    if (memoized != memo.end()) return memoized->second;

    auto [it, inserted] = state.try_emplace(c, VisitState::InProgress);
    if (!inserted && it->second == VisitState::InProgress) throw CycleDetectedError(c);

    std::uint64_t total = 1;
    for (const auto& child : children(graph, cfg, c)) {
        total += card_rec(graph, cfg, child, memo, state);
    }
    it->second = VisitState::Done;
    memo[c] = total;
    return total;
}

}  // namespace

std::uint64_t card(const ConceptGraph& graph, const NormalizationConfig& cfg, const std::string& c) {
    if (!graph.contains(c)) return 0;
    std::map<std::string, std::uint64_t> memo;
    std::map<std::string, VisitState> state;
    return card_rec(graph, cfg, c, memo, state);
}

SrsEntry srs(const ConceptGraph& graph, const NormalizationConfig& cfg, const QuestionMapping& q) {
    SrsEntry entry;
    entry.question = q.id;
    for (const auto& concept_name : q.concepts) {
        PerConceptScore score;
        score.concept_name = concept_name;
        score.present = graph.contains(concept_name);
        score.card = score.present ? card(graph, cfg, concept_name) : 0;
        entry.srs += score.card;
        entry.per_concept.push_back(std::move(score));
    }
    return entry;
}

SrsReport srs_report(const ConceptGraph& graph, const NormalizationConfig& cfg,
                     const std::vector<QuestionMapping>& questions) {
    std::set<std::string> seen;
    for (const auto& q : questions) {
        if (!seen.insert(q.id).second) throw DuplicateQuestionIdError(q.id);
    }

    SrsReport report;
    bool first = true;
    for (const auto& q : questions) {
        SrsEntry entry = srs(graph, cfg, q);
        for (const auto& score : entry.per_concept) {
            if (!score.present) report.unmapped_concepts.insert(score.concept_name);
        }
        if (first) {
            report.min_srs = report.max_srs = entry.srs;
            first = false;
        } else {
            report.min_srs = std::min(report.min_srs, entry.srs);
            report.max_srs = std::max(report.max_srs, entry.srs);
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace {

nlohmann::json load_json_array(const std::filesystem::path& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw InputError(std::string("cannot open ") + what + " file: " + path.string());
    nlohmann::json data;
    try {
        in >> data;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string(what) + " file " + path.string() + ": " + e.what());
    }
    if (!data.is_array()) {
        throw InputError(std::string(what) + " file " + path.string() + ": expected a JSON list");
    }
    return data;
}

}  // namespace

std::vector<QuestionMapping> load_questions(const std::filesystem::path& path) {
    nlohmann::json data = load_json_array(path, "questions");
    std::vector<QuestionMapping> out;
    for (const auto& record : data) {
        QuestionMapping q;
        try {
            q.id = record.at("id").get<std::string>();
            q.text = record.at("text").get<std::string>();
            q.concepts = record.at("concepts").get<std::vector<std::string>>();
        } catch (const nlohmann::json::exception& e) {
            throw InputError("questions file " + path.string() + ": " + e.what());
        }
        if (!is_identifier(q.id)) {
            throw InputError("questions file " + path.string() + ": bad question id '" + q.id + "'");
        }
        for (const auto& c : q.concepts) {
            if (!is_identifier(c)) {
                throw InputError("questions file " + path.string() + ": bad concept name '" + c +
                                 "' in " + q.id);
            }
        }
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<SrsExpectation> load_srs_expectations(const std::filesystem::path& path) {
    nlohmann::json data = load_json_array(path, "expectations");
    std::vector<SrsExpectation> out;
    for (const auto& record : data) {
        SrsExpectation e;
        try {
            e.id = record.at("id").get<std::string>();
            e.expected_srs = record.at("expected_srs").get<std::uint64_t>();
            e.paper_discrepancy = record.at("paper_discrepancy").get<bool>();
            if (e.paper_discrepancy) e.paper_value = record.at("paper_value").get<std::uint64_t>();
        } catch (const nlohmann::json::exception& err) {
            throw InputError("expectations file " + path.string() + ": " + err.what());
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace ontokit
