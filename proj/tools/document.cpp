#include "document.hpp"

#include <fstream>
#include <sstream>

#include "sublat/rational.hpp"

namespace sublat::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw DocumentError("document: " + where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ExactVector parse_vector(const json& j, std::size_t ambient, const std::string& where) {
    if (!j.is_array() || j.size() != ambient) {
        std::ostringstream os;
        os << "expected a vector of " << ambient << " entries";
        fail(where, os.str());
    }
    std::vector<GaussianRational> entries;
    entries.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        std::ostringstream os;
        os << where << "[" << k << "]";
        entries.push_back(entry_from_json(j[k], os.str()));
    }
    return ExactVector(std::move(entries));
}

ExactMatrix parse_matrix(const json& j, std::size_t ambient, const std::string& where) {
    if (!j.is_array() || j.size() != ambient) {
        std::ostringstream os;
        os << "expected a square matrix of size " << ambient;
        fail(where, os.str());
    }
    std::vector<GaussianRational> entries;
    entries.reserve(ambient * ambient);
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != ambient) {
            std::ostringstream os;
            os << where << " row " << r;
            fail(os.str(), "expected " + std::to_string(ambient) + " entries");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::ostringstream os;
            os << where << "[" << r << "][" << c << "]";
            entries.push_back(entry_from_json(row[c], os.str()));
        }
    }
    return ExactMatrix(ambient, ambient, std::move(entries));
}

} // namespace

nlohmann::ordered_json entry_to_json(const GaussianRational& value) {
    return nlohmann::ordered_json::array({to_string(value.re()), to_string(value.im())});
}

GaussianRational entry_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        fail(where, "expected an entry of the form [\"re\", \"im\"]");
    try {
        return GaussianRational(parse_rational(j[0].get<std::string>()),
                                parse_rational(j[1].get<std::string>()));
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

OperatorSetDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_and_column(text, e.byte ? e.byte - 1 : 0);
        std::ostringstream os;
        os << "document: invalid JSON at line " << line << ", column " << col;
        throw DocumentError(os.str());
    }

    if (!j.is_object()) fail("top level", "expected an object");
    if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_unsigned())
        fail("ambient_dim", "expected a positive integer");
    const std::size_t ambient = j["ambient_dim"].get<std::size_t>();
    if (ambient == 0) fail("ambient_dim", "expected a positive integer");

    OperatorSetDocument doc;
    doc.ambient_dim = ambient;

    if (j.contains("contexts")) {
        if (!j["contexts"].is_array()) fail("contexts", "expected an array");
        for (std::size_t k = 0; k < j["contexts"].size(); ++k) {
            const json& c = j["contexts"][k];
            std::ostringstream where;
            where << "contexts[" << k << "]";
            if (!c.is_object() || !c.contains("label") || !c["label"].is_string() ||
                !c.contains("projectors") || !c["projectors"].is_array())
                fail(where.str(), "expected {\"label\": text, \"projectors\": [...]}");
            ContextSpec spec;
            spec.label = c["label"].get<std::string>();
            for (std::size_t m = 0; m < c["projectors"].size(); ++m) {
                std::ostringstream mw;
                mw << where.str() << ".projectors[" << m << "]";
                spec.projectors.push_back(parse_matrix(c["projectors"][m], ambient, mw.str()));
            }
            doc.contexts.push_back(std::move(spec));
        }
    }

    if (j.contains("subspaces")) {
        if (!j["subspaces"].is_array()) fail("subspaces", "expected an array");
        for (std::size_t k = 0; k < j["subspaces"].size(); ++k) {
            const json& s = j["subspaces"][k];
            std::ostringstream where;
            where << "subspaces[" << k << "]";
            if (!s.is_object() || !s.contains("name") || !s["name"].is_string() ||
                !s.contains("span") || !s["span"].is_array())
                fail(where.str(), "expected {\"name\": text, \"span\": [...]}");
            SubspaceSpec spec;
            spec.name = s["name"].get<std::string>();
            for (std::size_t m = 0; m < s["span"].size(); ++m) {
                std::ostringstream mw;
                mw << where.str() << ".span[" << m << "]";
                spec.span.push_back(parse_vector(s["span"][m], ambient, mw.str()));
            }
            doc.subspaces.push_back(std::move(spec));
        }
    }

    return doc;
}

OperatorSetDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("document: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

nlohmann::ordered_json serialize_document(const OperatorSetDocument& doc) {
    nlohmann::ordered_json j;
    j["ambient_dim"] = doc.ambient_dim;
    j["contexts"] = nlohmann::ordered_json::array();
    for (const auto& c : doc.contexts) {
        nlohmann::ordered_json jc;
        jc["label"] = c.label;
        jc["projectors"] = nlohmann::ordered_json::array();
        for (const auto& m : c.projectors) {
            nlohmann::ordered_json jm = nlohmann::ordered_json::array();
            for (std::size_t r = 0; r < m.rows(); ++r) {
                nlohmann::ordered_json jr = nlohmann::ordered_json::array();
                for (std::size_t col = 0; col < m.cols(); ++col)
                    jr.push_back(entry_to_json(m(r, col)));
                jm.push_back(std::move(jr));
            }
            jc["projectors"].push_back(std::move(jm));
        }
        j["contexts"].push_back(std::move(jc));
    }
    if (!doc.subspaces.empty()) {
        j["subspaces"] = nlohmann::ordered_json::array();
        for (const auto& s : doc.subspaces) {
            nlohmann::ordered_json js;
            js["name"] = s.name;
            js["span"] = nlohmann::ordered_json::array();
            for (const auto& v : s.span) {
                nlohmann::ordered_json jv = nlohmann::ordered_json::array();
                for (std::size_t k = 0; k < v.dim(); ++k) jv.push_back(entry_to_json(v[k]));
                js["span"].push_back(std::move(jv));
            }
            j["subspaces"].push_back(std::move(js));
        }
    }
    return j;
}

} // namespace sublat::cli
