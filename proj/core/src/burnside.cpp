#include "sublat/burnside.hpp"

#include <utility>

#include "sublat/errors.hpp"
#include "sublat/projector.hpp"

namespace sublat {

namespace {

std::vector<GaussianRational> vectorize(const ExactMatrix& m) {
    return {m.entries().begin(), m.entries().end()};
}

/// Reduces v in place against rows whose pivot columns are clean in every
/// other row; afterwards v is zero iff it lay in the row span.
void reduce(std::vector<GaussianRational>& v,
            const std::vector<std::vector<GaussianRational>>& rows,
            const std::vector<std::size_t>& pivot_cols) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const GaussianRational& coeff = v[pivot_cols[k]];
        if (coeff.is_zero()) continue;
        const GaussianRational f = coeff;
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[k][c];
    }
}

bool all_zero(const std::vector<GaussianRational>& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

} // namespace

bool AlgebraSpan::contains(const ExactMatrix& m) const {
    if (!m.is_square() || m.rows() != ambient_dim_)
        throw DimensionError("algebra span: matrix shape does not match the algebra");
    std::vector<GaussianRational> v = vectorize(m);
    reduce(v, reduced_rows_, pivot_cols_);
    return all_zero(v);
}

AlgebraSpan algebra_closure(std::span<const ExactMatrix> generators, std::size_t ambient_dim) {
    std::size_t n = ambient_dim;
    if (n == 0) {
        if (generators.empty())
            throw DimensionError(
                "algebra closure: ambient dimension required for an empty generator list");
        n = generators.front().rows();
    }
    for (const auto& g : generators)
        if (!g.is_square() || g.rows() != n)
            throw DimensionError("algebra closure: generators must be square of one size");

    AlgebraSpan s;
    s.ambient_dim_ = n;
    s.generators_.assign(generators.begin(), generators.end());

    auto adjoin = [&s](const ExactMatrix& m) -> bool {
        std::vector<GaussianRational> v = vectorize(m);
        reduce(v, s.reduced_rows_, s.pivot_cols_);
        std::size_t pivot = v.size();
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero()) {
                pivot = c;
                break;
            }
        if (pivot == v.size()) return false;
        const GaussianRational inv = GaussianRational(1) / v[pivot];
        for (std::size_t c = 0; c < v.size(); ++c) v[c] *= inv;
        for (auto& row : s.reduced_rows_) {
            const GaussianRational f = row[pivot];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < v.size(); ++c) row[c] -= f * v[c];
        }
        s.reduced_rows_.push_back(std::move(v));
        s.pivot_cols_.push_back(pivot);
        s.basis_.push_back(m);
        return true;
    };

    std::vector<std::size_t> frontier;
    if (adjoin(ExactMatrix::identity(n))) frontier.push_back(0);
    for (const auto& g : generators)
        if (adjoin(g)) frontier.push_back(s.basis_.size() - 1);
    s.round_dimensions_.push_back(s.basis_.size());

    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (const std::size_t idx : frontier) {
            const ExactMatrix b = s.basis_[idx];
            for (const auto& g : s.generators_) {
                if (adjoin(b * g)) next.push_back(s.basis_.size() - 1);
                if (adjoin(g * b)) next.push_back(s.basis_.size() - 1);
            }
        }
        s.round_dimensions_.push_back(s.basis_.size());
        frontier = std::move(next);
    }

    for (const auto& b : s.basis_)
        for (const auto& g : s.generators_)
            if (!s.contains(b * g) || !s.contains(g * b))
                throw Error("algebra closure: certificate failed");
    return s;
}

IrreducibilityResult is_irreducible(std::span<const ExactMatrix> generators,
                                    std::span<const Subspace> candidates,
                                    std::size_t ambient_dim) {
    std::size_t n = ambient_dim;
    if (n == 0) {
        if (generators.empty())
            throw DimensionError(
                "irreducibility: ambient dimension required for an empty generator list");
        n = generators.front().rows();
    }
    if (n < 2)
        throw OutOfScopeError("irreducibility: the ambient dimension must be at least 2");

    AlgebraSpan span = algebra_closure(generators, n);
    IrreducibilityResult result{span.dimension() == n * n, std::move(span), std::nullopt};
    if (!result.irreducible)
        for (const auto& c : candidates) {
            if (c.is_zero() || c.is_full()) continue;
            bool invariant = true;
            for (const auto& g : generators)
                if (!is_invariant(c, g)) {
                    invariant = false;
                    break;
                }
            if (invariant) {
                result.invariant_witness = c;
                break;
            }
        }
    return result;
}

std::vector<Subspace> common_invariant_filter(std::span<const ExactMatrix> generators,
                                              std::span<const Subspace> candidates) {
    for (const auto& g : generators)
        if (!g.is_square())
            throw DimensionError("invariant filter: generators must be square");
    std::vector<Subspace> surviving;
    for (const auto& c : candidates) {
        bool invariant = true;
        for (const auto& g : generators)
            if (!is_invariant(c, g)) {
                invariant = false;
                break;
            }
        if (invariant) surviving.push_back(c);
    }
    return surviving;
}

PauliDecomposition pauli_decompose(const ExactMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw DimensionError("decomposition: matrix must be 2 x 2");
    const GaussianRational half{Rational(1, 2)};
    const GaussianRational i = GaussianRational::i();
    return PauliDecomposition{
        half * (m(0, 0) + m(1, 1)),
        half * (m(0, 0) - m(1, 1)),
        half * (m(0, 1) + m(1, 0)),
        i * half * (m(0, 1) - m(1, 0)),
    };
}

ExactMatrix pauli_reassemble(const PauliDecomposition& d) {
    const GaussianRational i = GaussianRational::i();
    return ExactMatrix{{d.c + d.a_z, d.a_x - i * d.a_y}, {d.a_x + i * d.a_y, d.c - d.a_z}};
}

} // namespace sublat
