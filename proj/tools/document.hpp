#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sublat/errors.hpp"
#include "sublat/matrix.hpp"

namespace sublat::cli {

/// Input document failed to parse: JSON syntax (with line/column), missing
/// or mistyped fields, malformed rational strings, or shape violations.
class DocumentError : public Error {
public:
    using Error::Error;
};

struct ContextSpec {
    std::string label;
    std::vector<ExactMatrix> projectors;
};

struct SubspaceSpec {
    std::string name;
    std::vector<ExactVector> span;
};

/// Operator-set input: an ambient dimension, labeled projector families,
/// and optionally named spanning sets. Matrix and vector entries are
/// [re, im] pairs of exact rational strings ("1/2", "-1", "0"); every
/// matrix must be square of size ambient_dim and every span vector of
/// length ambient_dim. Parsing checks structure only; whether a family is
/// a valid context is decided by the library.
struct OperatorSetDocument {
    std::size_t ambient_dim = 0;
    std::vector<ContextSpec> contexts;
    std::vector<SubspaceSpec> subspaces;
};

/// Parses and structurally validates a document; throws DocumentError with
/// position information on syntax errors and with a field path otherwise.
OperatorSetDocument parse_document(const std::string& text);

/// Reads the file and parses it; file access problems also raise
/// DocumentError.
OperatorSetDocument load_document(const std::string& path);

/// Canonical JSON form of a document; rational strings come out in lowest
/// terms, so parse followed by serialize is a canonicalizer.
nlohmann::ordered_json serialize_document(const OperatorSetDocument& doc);

/// [re, im] encoding helpers shared with report rendering.
nlohmann::ordered_json entry_to_json(const GaussianRational& value);
GaussianRational entry_from_json(const nlohmann::json& j, const std::string& where);

} // namespace sublat::cli
