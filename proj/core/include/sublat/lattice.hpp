#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sublat/subspace.hpp"
#include "sublat/subspace_lattice.hpp"

namespace sublat {

enum class Axiom { ClosureMeet, ClosureJoin, Distributive, ModularIdentity, Orthomodular };

/// Stable report label: "closure-meet", "closure-join", "distributive",
/// "modular-identity", "orthomodular".
std::string_view axiom_name(Axiom axiom);

/// Which reading of the modular identity a report certifies.
enum class ModularForm {
    /// U = (u^w) v (v^w) versus V = ((u^w) v v) ^ w for one given triple.
    FixedTriple,
    /// v <= w implies v v (u^w) = (v v u) ^ w, over all triples.
    WholeLattice,
};

/// Witness of a failed axiom: the element indices it was found at, plus the
/// evaluated sides. Closure failures carry only lhs (the meet or join that
/// escaped the family); equational failures carry both sides.
struct Counterexample {
    std::vector<std::size_t> indices;
    Subspace lhs;
    std::optional<Subspace> rhs;
};

/// Verdict for one axiom over one family. counterexample is present exactly
/// when holds is false, and replay_counterexample can re-derive the
/// violation from it. note labels non-default check variants.
struct AxiomReport {
    Axiom axiom;
    bool holds = true;
    std::optional<Counterexample> counterexample;
    std::string note;
    std::optional<ModularForm> modular_form;
};

/// Tests, over all pairs, whether meet(u,v) and join(u,v) stay inside the
/// family. Returns the meet report then the join report; search order is
/// pair index order, so the witness is deterministic. Throws DimensionError
/// on mixed ambient dimensions, LatticeError(EmptyFamily) on an empty list.
std::pair<AxiomReport, AxiomReport> check_closure(std::span<const Subspace> elements);

/// Tests u ^ (v v w) = (u^v) v (u^w) over all ordered triples of l, in
/// index order. Requires l closed under meet and join; throws
/// LatticeError(NotClosed) otherwise.
AxiomReport check_distributive(const SubspaceLattice& l);

/// Evaluates the two sides of the modular identity at one triple of
/// elements of l. Throws LatticeError(ElementNotInLattice) when u, v, or w
/// is not an element.
AxiomReport check_modular_identity(const SubspaceLattice& l, const Subspace& u,
                                   const Subspace& v, const Subspace& w);

/// Whole-lattice modular law: over all triples with v <= w, tests
/// v v (u^w) = (v v u) ^ w. The report's note marks it as the quantified
/// variant. Requires l closed under meet and join; throws
/// LatticeError(NotClosed) otherwise.
AxiomReport check_modular_identity(const SubspaceLattice& l);

/// Tests u <= v implies v = u v (v ^ complement(u)) over all pairs; needs
/// the orthocomplement map, so throws LatticeError(MissingComplementMap)
/// when l lacks one.
AxiomReport check_orthomodular(const SubspaceLattice& l);

/// Re-derives a failed report's violation from the raw family using only
/// subspace meet/join/orthocomplement. True iff the recomputed sides match
/// the stored witness and genuinely violate the axiom. Reports with
/// holds = true replay trivially.
bool replay_counterexample(std::span<const Subspace> elements, const AxiomReport& report);

/// DOT digraph of the covering relation, bottom-up ranks, node ids s0..sk
/// in canonical element order, each labeled with dimension and canonical
/// basis. Byte-stable for equal input.
std::string hasse_dot(const SubspaceLattice& l);

} // namespace sublat
