#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sublat/lattice.hpp"
#include "sublat/subspace.hpp"

namespace sublat::cli {

enum class Format { Text, Json, Dot };

std::optional<Format> parse_format(const std::string& name);

/// Outcome of one command: an exit code, a text rendering, an optional DOT
/// payload, and the structured body that the JSON rendering wraps in a
/// versioned envelope. Key order in body is fixed per command so JSON
/// output diffs cleanly.
struct Report {
    std::string command;
    int exit_code = 0;
    std::string text;
    std::string dot;
    nlohmann::ordered_json body = nlohmann::ordered_json::object();
};

/// The report in the requested format. JSON output is the body under a
/// {"schema": 1, "command": ...} envelope; requesting Dot from a command
/// that produced none yields an empty string.
std::string render(const Report& r, Format format);

/// {"dim": k, "basis": [[["re","im"], ...], ...]} with canonical basis rows.
nlohmann::ordered_json subspace_to_json(const Subspace& s);
/// Inverse of subspace_to_json for a known ambient dimension.
Subspace subspace_from_json(const nlohmann::json& j, std::size_t ambient_dim);

nlohmann::ordered_json axiom_report_to_json(const AxiomReport& report);

} // namespace sublat::cli
