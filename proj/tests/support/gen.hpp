#pragma once

// Deterministic random generators for the randomized suites. Everything is
// seeded explicitly so failures reproduce.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sublat/matrix.hpp"
#include "sublat/projector.hpp"
#include "sublat/subspace.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline sublat::Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    sublat::Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline sublat::GaussianRational random_scalar(Rng& rng) {
    return {random_rational(rng), random_rational(rng)};
}

inline sublat::GaussianRational random_nonzero_scalar(Rng& rng) {
    for (;;) {
        sublat::GaussianRational s = random_scalar(rng);
        if (!s.is_zero()) return s;
    }
}

inline sublat::ExactVector random_vector(Rng& rng, std::size_t n) {
    std::vector<sublat::GaussianRational> entries;
    entries.reserve(n);
    for (std::size_t k = 0; k < n; ++k) entries.push_back(random_scalar(rng));
    return sublat::ExactVector(std::move(entries));
}

inline sublat::ExactMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    std::vector<sublat::GaussianRational> entries;
    entries.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(random_scalar(rng));
    return sublat::ExactMatrix(rows, cols, std::move(entries));
}

/// Span of up to n random vectors; dimension varies with the draw.
inline sublat::Subspace random_subspace(Rng& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> count(0, n);
    std::vector<sublat::ExactVector> vs;
    const std::size_t k = count(rng);
    vs.reserve(k);
    for (std::size_t j = 0; j < k; ++j) vs.push_back(random_vector(rng, n));
    return sublat::Subspace::from_span(vs, n);
}

inline sublat::ExactMatrix random_invertible(Rng& rng, std::size_t n) {
    for (;;) {
        sublat::ExactMatrix m = random_matrix(rng, n, n);
        if (sublat::rank(m) == n) return m;
    }
}

/// Pairwise-orthogonal (unnormalized) basis of C^n: exact Gram-Schmidt on
/// the rows of a random invertible matrix.
inline std::vector<sublat::ExactVector> random_orthogonal_basis(Rng& rng, std::size_t n) {
    const sublat::ExactMatrix m = random_invertible(rng, n);
    std::vector<sublat::ExactVector> basis;
    basis.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        sublat::ExactVector v = m.row(r);
        for (const sublat::ExactVector& u : basis) {
            const sublat::GaussianRational coeff = inner(u, v) / inner(u, u);
            v = v - coeff * u;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Orthogonal projector onto the span of the picked basis vectors, assembled
/// as sum of v v* / <v,v>. The basis must be pairwise orthogonal.
inline sublat::ExactMatrix projector_onto(const std::vector<sublat::ExactVector>& basis,
                                          const std::vector<std::size_t>& picks,
                                          std::size_t n) {
    std::vector<sublat::GaussianRational> entries(n * n);
    for (const std::size_t p : picks) {
        const sublat::ExactVector& v = basis[p];
        const sublat::GaussianRational norm = inner(v, v);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) entries[r * n + c] += v[r] * v[c].conj() / norm;
    }
    return sublat::ExactMatrix(n, n, std::move(entries));
}

/// Random composition of n into the given number of positive parts.
inline std::vector<std::size_t> random_composition(Rng& rng, std::size_t n, std::size_t parts) {
    std::vector<std::size_t> cuts;
    for (std::size_t k = 1; k < n; ++k) cuts.push_back(k);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(parts - 1);
    cuts.push_back(0);
    cuts.push_back(n);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::size_t> sizes;
    for (std::size_t k = 1; k < cuts.size(); ++k) sizes.push_back(cuts[k] - cuts[k - 1]);
    return sizes;
}

/// Matrices of a random maximal context: a random orthogonal basis split
/// into member_count groups, each mapped to its projector. The members are
/// pairwise orthogonal and sum to the identity by construction.
inline std::vector<sublat::ExactMatrix> random_context_matrices(Rng& rng, std::size_t n,
                                                                std::size_t member_count) {
    const std::vector<sublat::ExactVector> basis = random_orthogonal_basis(rng, n);
    const std::vector<std::size_t> sizes = random_composition(rng, n, member_count);
    std::vector<sublat::ExactMatrix> members;
    members.reserve(member_count);
    std::size_t next = 0;
    for (const std::size_t size : sizes) {
        std::vector<std::size_t> picks;
        for (std::size_t k = 0; k < size; ++k) picks.push_back(next++);
        members.push_back(projector_onto(basis, picks, n));
    }
    return members;
}

inline sublat::MaximalContext random_context(Rng& rng, const std::string& label, std::size_t n,
                                             std::size_t member_count) {
    return sublat::validate_context(label, random_context_matrices(rng, n, member_count));
}

/// Two commuting projectors sharing a random eigenbasis; their product
/// projects onto the span of the index intersection.
inline std::pair<sublat::Projector, sublat::Projector> random_commuting_pair(Rng& rng,
                                                                             std::size_t n) {
    const std::vector<sublat::ExactVector> basis = random_orthogonal_basis(rng, n);
    std::bernoulli_distribution flip(0.5);
    std::vector<std::size_t> s;
    std::vector<std::size_t> t;
    for (std::size_t k = 0; k < n; ++k) {
        if (flip(rng)) s.push_back(k);
        if (flip(rng)) t.push_back(k);
    }
    return {sublat::validate_projector(projector_onto(basis, s, n)),
            sublat::validate_projector(projector_onto(basis, t, n))};
}

inline sublat::Projector random_projector(Rng& rng, std::size_t n) {
    return sublat::projector_from_subspace(random_subspace(rng, n));
}

} // namespace gen
