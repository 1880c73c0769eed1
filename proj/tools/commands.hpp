#pragma once

#include <string>

#include "document.hpp"
#include "report.hpp"

namespace sublat::cli {

/// Validates every context in the document; exit code 1 when any is
/// invalid. Never throws for semantic problems, only for unreadable input.
Report cmd_validate(const std::string& input_path);

/// Lattice of one labeled context: elements, axiom verdicts, optional DOT.
/// Throws SelectorError for an unknown label.
Report cmd_context_lattice(const std::string& input_path, const std::string& label,
                           Format format);

/// Intersection of the lattices of every context in the document, with an
/// irreducibility flag when only {0} and the full space survive.
Report cmd_intersect(const std::string& input_path, Format format);

/// Dimension of the algebra generated by all projectors in the document,
/// with the per-round growth trace and the irreducibility verdict.
Report cmd_burnside(const std::string& input_path);

/// Axiom survey over the document's subspace list, or over the column
/// spaces of all context members plus {0} and the full space when no
/// subspace list is given. A family not closed under meet or join reports
/// the closure failure and skips the remaining checks (exit code 1).
Report cmd_axioms(const std::string& input_path, Format format);

/// Built-in walkthrough of the spin-1/2 operator set; checks every printed
/// claim and exits nonzero on the first mismatch.
Report cmd_demo_spin_half();

} // namespace sublat::cli
