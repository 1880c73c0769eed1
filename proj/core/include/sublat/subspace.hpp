#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sublat/matrix.hpp"

namespace sublat {

/// Linear subspace of C^n, held as its unique reduced row-echelon basis.
/// Two Subspace values compare equal exactly when they describe the same
/// set of vectors, so equality is structural set equality. The zero
/// subspace has an empty basis.
class Subspace {
public:
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Span of arbitrary vectors (duplicates and zero vectors allowed).
    static Subspace from_span(std::span<const ExactVector> vectors, std::size_t ambient_dim);
    /// Row space of a matrix.
    static Subspace row_space(const ExactMatrix& m);
    /// Column space of a matrix.
    static Subspace col_space(const ExactMatrix& m);
    /// Kernel {v : m.v = 0}.
    static Subspace kernel(const ExactMatrix& m);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_dim_; }

    /// Canonical basis rows (empty for the zero subspace).
    std::span<const ExactVector> basis() const { return basis_; }
    /// Basis rows stacked as a matrix; throws DimensionError for the zero
    /// subspace, which has no rows.
    ExactMatrix basis_matrix() const;

    bool contains(const ExactVector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    /// "{0}", "C^2", or "span{[1, i]}".
    std::string str() const;

private:
    Subspace(std::size_t ambient_dim, std::vector<ExactVector> basis);

    std::size_t ambient_dim_;
    std::vector<ExactVector> basis_;
};

/// Smallest subspace containing both arguments.
Subspace join(const Subspace& u, const Subspace& v);
/// Largest subspace contained in both arguments, computed exactly as the
/// orthocomplement of the join of the orthocomplements.
Subspace meet(const Subspace& u, const Subspace& v);
/// {w : <b, w> = 0 for every b in u}, with the Hermitian inner product.
Subspace orthocomplement(const Subspace& u);

/// Partial order: u is a subset of v.
bool leq(const Subspace& u, const Subspace& v);

/// Total order for canonical sorting: ambient dimension, then dimension,
/// then basis rows lexicographically. Returns <0, 0, or >0.
int compare(const Subspace& a, const Subspace& b);

} // namespace sublat
