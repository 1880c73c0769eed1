#include "report.hpp"

#include "document.hpp"

namespace sublat::cli {

std::optional<Format> parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "dot") return Format::Dot;
    return std::nullopt;
}

std::string render(const Report& r, Format format) {
    switch (format) {
        case Format::Text: return r.text;
        case Format::Dot: return r.dot;
        case Format::Json: break;
    }
    nlohmann::ordered_json out;
    out["schema"] = 1;
    out["command"] = r.command;
    for (const auto& [key, value] : r.body.items()) out[key] = value;
    return out.dump(2) + "\n";
}

nlohmann::ordered_json subspace_to_json(const Subspace& s) {
    nlohmann::ordered_json j;
    j["dim"] = s.dim();
    j["basis"] = nlohmann::ordered_json::array();
    for (const auto& row : s.basis()) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < row.dim(); ++k) jr.push_back(entry_to_json(row[k]));
        j["basis"].push_back(std::move(jr));
    }
    return j;
}

Subspace subspace_from_json(const nlohmann::json& j, std::size_t ambient_dim) {
    if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
        throw DocumentError("subspace: expected {\"dim\": n, \"basis\": [...]}");
    std::vector<ExactVector> rows;
    for (const auto& jr : j["basis"]) {
        if (!jr.is_array() || jr.size() != ambient_dim)
            throw DocumentError("subspace: basis row has the wrong length");
        std::vector<GaussianRational> entries;
        entries.reserve(ambient_dim);
        for (const auto& je : jr) entries.push_back(entry_from_json(je, "subspace basis"));
        rows.emplace_back(std::move(entries));
    }
    return Subspace::from_span(rows, ambient_dim);
}

nlohmann::ordered_json axiom_report_to_json(const AxiomReport& report) {
    nlohmann::ordered_json j;
    j["axiom"] = std::string(axiom_name(report.axiom));
    j["holds"] = report.holds;
    if (!report.note.empty()) j["note"] = report.note;
    if (report.counterexample) {
        nlohmann::ordered_json jc;
        jc["indices"] = report.counterexample->indices;
        jc["lhs"] = subspace_to_json(report.counterexample->lhs);
        if (report.counterexample->rhs) jc["rhs"] = subspace_to_json(*report.counterexample->rhs);
        j["counterexample"] = std::move(jc);
    }
    return j;
}

} // namespace sublat::cli
