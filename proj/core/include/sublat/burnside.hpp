#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sublat/matrix.hpp"
#include "sublat/subspace.hpp"

namespace sublat {

/// The unital algebra generated by a set of n x n matrices, held as a
/// linearly independent matrix basis together with the generators and a
/// per-round dimension trace. Closure under left and right multiplication
/// by every generator is certified at construction.
class AlgebraSpan {
public:
    std::size_t ambient_dim() const { return ambient_dim_; }
    /// Linear dimension of the span as a subspace of n x n matrices.
    std::size_t dimension() const { return basis_.size(); }
    std::span<const ExactMatrix> basis() const { return basis_; }
    std::span<const ExactMatrix> generators() const { return generators_; }
    /// dimension after seeding, then after each closure round; the last two
    /// entries are equal only when a final round adjoined nothing, so the
    /// trace records how the span grew.
    std::span<const std::size_t> round_dimensions() const { return round_dimensions_; }

    /// Exact membership of m in the span.
    bool contains(const ExactMatrix& m) const;

private:
    friend AlgebraSpan algebra_closure(std::span<const ExactMatrix> generators,
                                       std::size_t ambient_dim);
    AlgebraSpan() = default;

    std::size_t ambient_dim_ = 0;
    std::vector<ExactMatrix> basis_;
    std::vector<ExactMatrix> generators_;
    std::vector<std::size_t> round_dimensions_;
    // Row-reduced vectorizations of basis_, for O(dim . n^2) membership.
    std::vector<std::vector<GaussianRational>> reduced_rows_;
    std::vector<std::size_t> pivot_cols_;
};

/// Smallest unital algebra containing the generators, grown breadth-first:
/// each round adjoins the independent left and right products of the
/// previous round's additions with every generator, until nothing new
/// appears. An empty generator list yields the scalars; its dimension must
/// then be supplied via ambient_dim (nonzero), which otherwise may be 0 to
/// infer from the generators. Throws DimensionError on mixed shapes.
AlgebraSpan algebra_closure(std::span<const ExactMatrix> generators,
                            std::size_t ambient_dim = 0);

/// Irreducibility verdict with its evidence. The span decides the verdict;
/// invariant_witness is a certified nontrivial common invariant subspace,
/// present only for reducible input when one of the caller's candidates
/// survives the invariance filter.
struct IrreducibilityResult {
    bool irreducible;
    AlgebraSpan span;
    std::optional<Subspace> invariant_witness;
};

/// Decides whether the generators act irreducibly: true iff the generated
/// algebra has dimension n^2, which over an algebraically closed field is
/// exact, and ranks over Q(i) agree with ranks over C. Candidate subspaces,
/// when given, are searched for a reducibility witness. Throws
/// OutOfScopeError when n < 2.
IrreducibilityResult is_irreducible(std::span<const ExactMatrix> generators,
                                    std::span<const Subspace> candidates = {},
                                    std::size_t ambient_dim = 0);

/// The sublist of candidates invariant under every generator. Empty
/// generators keep everything.
std::vector<Subspace> common_invariant_filter(std::span<const ExactMatrix> generators,
                                              std::span<const Subspace> candidates);

/// Coefficients of a 2 x 2 matrix over the basis
/// { 1, diag(1,-1), antidiag(1,1), [[0,-i],[i,0]] }.
struct PauliDecomposition {
    GaussianRational c;
    GaussianRational a_z;
    GaussianRational a_x;
    GaussianRational a_y;
};

/// Unique exact coefficients; pauli_reassemble inverts it. Throws
/// DimensionError unless m is 2 x 2.
PauliDecomposition pauli_decompose(const ExactMatrix& m);
ExactMatrix pauli_reassemble(const PauliDecomposition& d);

} // namespace sublat
