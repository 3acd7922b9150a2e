#include "ontokit/owl.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "ontokit/diagnostics.hpp"
#include "ontokit/errors.hpp"

namespace ontokit {

namespace {

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c; break;
        }
    }
    return out;
}

}  // namespace

OwlDocument emit(const ConceptGraph& graph, const std::string& base_iri, bool enforce_clean) {
    if (enforce_clean) {
        auto errors = graph_errors(graph);
        if (!errors.empty()) throw UncleanGraphError(errors.front().message);
    }

    OwlDocument doc;
    std::string& out = doc.xml_text;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<rdf:RDF xmlns:owl=\"http://www.w3.org/2002/07/owl#\"\n";
    out += "         xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n";
    out += "         xmlns:rdfs=\"http://www.w3.org/2000/01/rdf-schema#\"\n";
    out += "         xml:base=\"" + xml_escape(base_iri) + "\">\n";

    // Object properties: domain first, then ranges, lexicographic.
    for (const auto& [role, decl] : graph.roles) {
        out += "  <owl:ObjectProperty rdf:about=\"#" + role + "\">\n";
        out += "    <rdfs:domain rdf:resource=\"#" + decl.domain + "\"/>\n";
        for (const auto& range : decl.ranges) {
            out += "    <rdfs:range rdf:resource=\"#" + range + "\"/>\n";
        }
        out += "  </owl:ObjectProperty>\n";
        ++doc.property_count;
    }

    // Classes with their parents; residual axioms ride along as comments in
    // source order.
    std::map<std::string, std::vector<std::string>> parents;
    for (const auto& [child, parent] : graph.subclass_edges) parents[child].push_back(parent);
    std::map<std::string, std::vector<std::string>> comments;
    for (const auto& axiom : graph.residual_axioms) {
        comments[axiom.lhs].push_back(pretty_print(axiom));
    }
    for (const auto& cls : graph.classes) {
        auto parent_it = parents.find(cls);
        auto comment_it = comments.find(cls);
        bool empty = parent_it == parents.end() && comment_it == comments.end();
        if (empty) {
            out += "  <owl:Class rdf:about=\"#" + cls + "\"/>\n";
        } else {
            out += "  <owl:Class rdf:about=\"#" + cls + "\">\n";
            if (parent_it != parents.end()) {
                std::sort(parent_it->second.begin(), parent_it->second.end());
                for (const auto& parent : parent_it->second) {
                    out += "    <rdfs:subClassOf rdf:resource=\"#" + parent + "\"/>\n";
                }
            }
            if (comment_it != comments.end()) {
                for (const auto& text : comment_it->second) {
                    out += "    <rdfs:comment>" + xml_escape(text) + "</rdfs:comment>\n";
                }
            }
            out += "  </owl:Class>\n";
        }
        ++doc.class_count;
    }

    // Individuals with their class memberships.
    std::map<std::string, std::vector<std::string>> memberships;
    for (const auto& [individual, cls] : graph.individual_edges) memberships[individual].push_back(cls);
    for (const auto& individual : graph.individuals) {
        auto it = memberships.find(individual);
        if (it == memberships.end()) {
            out += "  <owl:Thing rdf:about=\"#" + individual + "\"/>\n";
        } else {
            std::sort(it->second.begin(), it->second.end());
            out += "  <owl:Thing rdf:about=\"#" + individual + "\">\n";
            for (const auto& cls : it->second) {
                out += "    <rdf:type rdf:resource=\"#" + cls + "\"/>\n";
            }
            out += "  </owl:Thing>\n";
        }
        ++doc.individual_count;
    }

    out += "</rdf:RDF>\n";
    return doc;
}

namespace {

// Minimal XML reader for the vocabulary emit produces. Anything else is an
// UnsupportedElementError; genuinely broken markup is an InputError.
struct XmlNode {
    std::string name;
    std::map<std::string, std::string> attributes;
    std::vector<XmlNode> children;
    std::string text;
};

class XmlReader {
public:
    explicit XmlReader(const std::string& src) : src_(src) {}

    XmlNode parse_document() {
        skip_whitespace();
        if (starts_with("<?xml")) {
            std::size_t end = src_.find("?>", pos_);
            if (end == std::string::npos) throw InputError("unterminated xml declaration");
            pos_ = end + 2;
        }
        skip_whitespace();
        XmlNode root = parse_element();
        skip_whitespace();
        if (pos_ != src_.size()) throw InputError("trailing content after root element");
        return root;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    bool starts_with(const char* prefix) const {
        return src_.compare(pos_, std::string::traits_type::length(prefix), prefix) == 0;
    }

    void skip_whitespace() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    std::string read_name() {
        std::size_t start = pos_;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '_' || c == '-' ||
                c == '.') {
                ++pos_;
            } else {
                break;
            }
        }
        if (start == pos_) throw InputError("expected a name at offset " + std::to_string(pos_));
        return src_.substr(start, pos_ - start);
    }

    std::string read_attribute_value() {
        if (pos_ >= src_.size() || src_[pos_] != '"') throw InputError("expected '\"'");
        ++pos_;
        std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != '"') ++pos_;
        if (pos_ >= src_.size()) throw InputError("unterminated attribute value");
        std::string raw = src_.substr(start, pos_ - start);
        ++pos_;
        return unescape(raw);
    }

    static std::string unescape(const std::string& raw) {
        std::string out;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                out += raw[i];
                continue;
            }
            if (raw.compare(i, 5, "&amp;") == 0) { out += '&'; i += 4; }
            else if (raw.compare(i, 4, "&lt;") == 0) { out += '<'; i += 3; }
            else if (raw.compare(i, 4, "&gt;") == 0) { out += '>'; i += 3; }
            else if (raw.compare(i, 6, "&quot;") == 0) { out += '"'; i += 5; }
            else throw InputError("unknown entity in: " + raw);
        }
        return out;
    }

    XmlNode parse_element() {
        if (pos_ >= src_.size() || src_[pos_] != '<') throw InputError("expected '<'");
        ++pos_;
        XmlNode node;
        node.name = read_name();
        while (true) {
            skip_whitespace();
            if (pos_ >= src_.size()) throw InputError("unterminated element: " + node.name);
            if (src_[pos_] == '/') {
                if (pos_ + 1 >= src_.size() || src_[pos_ + 1] != '>') throw InputError("malformed tag");
                pos_ += 2;
                return node;
            }
            if (src_[pos_] == '>') {
                ++pos_;
                parse_content(node);
                return node;
            }
            std::string attr = read_name();
            skip_whitespace();
            if (pos_ >= src_.size() || src_[pos_] != '=') throw InputError("expected '='");
            ++pos_;
            skip_whitespace();
            node.attributes[attr] = read_attribute_value();
        }
    }

    void parse_content(XmlNode& node) {
        while (true) {
            std::size_t text_start = pos_;
            while (pos_ < src_.size() && src_[pos_] != '<') ++pos_;
            node.text += unescape(src_.substr(text_start, pos_ - text_start));
            if (pos_ >= src_.size()) throw InputError("unterminated element: " + node.name);
            if (src_.compare(pos_, 2, "</") == 0) {
                pos_ += 2;
                std::string closing = read_name();
                if (closing != node.name) {
                    throw InputError("mismatched closing tag: " + closing + " for " + node.name);
                }
                skip_whitespace();
                if (pos_ >= src_.size() || src_[pos_] != '>') throw InputError("expected '>'");
                ++pos_;
                return;
            }
            node.children.push_back(parse_element());
        }
    }
};

std::string local_name(const XmlNode& node, const char* attribute) {
    auto it = node.attributes.find(attribute);
    if (it == node.attributes.end()) {
        throw UnsupportedElementError("<" + node.name + "> without " + attribute);
    }
    const std::string& value = it->second;
    if (value.empty() || value[0] != '#' || !is_identifier(value.substr(1))) {
        throw UnsupportedElementError("<" + node.name + "> with non-local reference '" + value + "'");
    }
    return value.substr(1);
}

}  // namespace

ConceptGraph reparse(const OwlDocument& doc, const NormalizationConfig& cfg) {
    XmlNode root = XmlReader(doc.xml_text).parse_document();
    if (root.name != "rdf:RDF") throw UnsupportedElementError("root element <" + root.name + ">");

    ConceptGraph graph;
    graph.config = cfg;

    for (const XmlNode& element : root.children) {
        if (element.name == "owl:ObjectProperty") {
            std::string role = local_name(element, "rdf:about");
            RoleDecl decl;
            for (const XmlNode& child : element.children) {
                if (child.name == "rdfs:domain") decl.domain = local_name(child, "rdf:resource");
                else if (child.name == "rdfs:range") decl.ranges.insert(local_name(child, "rdf:resource"));
                else throw UnsupportedElementError("<" + child.name + "> inside owl:ObjectProperty");
            }
            if (cfg.composition_roles.count(role)) {
                for (const auto& range : decl.ranges) {
                    graph.composition_edges.emplace(decl.domain, range, role);
                }
            }
            graph.roles[role] = std::move(decl);
        } else if (element.name == "owl:Class") {
            std::string cls = local_name(element, "rdf:about");
            graph.classes.insert(cls);
            for (const XmlNode& child : element.children) {
                if (child.name == "rdfs:subClassOf") {
                    std::string parent = local_name(child, "rdf:resource");
                    graph.classes.insert(parent);
                    graph.subclass_edges.emplace(cls, parent);
                } else if (child.name == "rdfs:comment") {
                    // Annotation only; the axiom it carries is not re-read.
                } else {
                    throw UnsupportedElementError("<" + child.name + "> inside owl:Class");
                }
            }
        } else if (element.name == "owl:Thing") {
            std::string individual = local_name(element, "rdf:about");
            graph.individuals.insert(individual);
            for (const XmlNode& child : element.children) {
                if (child.name != "rdf:type") {
                    throw UnsupportedElementError("<" + child.name + "> inside owl:Thing");
                }
                graph.individual_edges.emplace(individual, local_name(child, "rdf:resource"));
            }
        } else {
            throw UnsupportedElementError("<" + element.name + ">");
        }
    }
    return graph;
}

bool graph_core_equal(const ConceptGraph& a, const ConceptGraph& b) {
    if (a.classes != b.classes || a.individuals != b.individuals ||
        a.subclass_edges != b.subclass_edges) {
        return false;
    }
    if (a.roles.size() != b.roles.size()) return false;
    for (const auto& [role, decl] : a.roles) {
        auto it = b.roles.find(role);
        if (it == b.roles.end()) return false;
        if (decl.domain != it->second.domain || decl.ranges != it->second.ranges) return false;
    }
    return true;
}

}  // namespace ontokit
