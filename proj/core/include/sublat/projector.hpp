#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sublat/matrix.hpp"
#include "sublat/subspace.hpp"
#include "sublat/subspace_lattice.hpp"

namespace sublat {

/// Orthogonal projection operator: a square matrix that is self-adjoint and
/// idempotent, both verified exactly at construction. There is no unchecked
/// path to a Projector value.
class Projector {
public:
    const ExactMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }
    std::size_t rank() const { return rank_; }

    static Projector zero(std::size_t n);
    static Projector identity(std::size_t n);

    friend bool operator==(const Projector& a, const Projector& b) {
        return a.matrix_ == b.matrix_;
    }
    friend bool operator!=(const Projector& a, const Projector& b) { return !(a == b); }

private:
    friend Projector validate_projector(const ExactMatrix& m);
    Projector(ExactMatrix m, std::size_t rank);

    ExactMatrix matrix_;
    std::size_t rank_;
};

/// Checks squareness, self-adjointness, and idempotence with zero tolerance;
/// throws ProjectorError with the specific violated property.
Projector validate_projector(const ExactMatrix& m);

/// Column space, as a canonical Subspace. Every basis vector b satisfies
/// p.b = b.
Subspace ran(const Projector& p);
/// Kernel; equals orthocomplement(ran(p)) and ran(negation(p)).
Subspace ker(const Projector& p);
/// 1 - p, itself a valid Projector.
Projector negation(const Projector& p);
/// Exact commutation test p.q = q.p.
bool commutes(const Projector& p, const Projector& q);

/// True iff a maps u into u, i.e. a.b lies in u for every basis vector b.
/// a must be square with side u.ambient_dim().
bool is_invariant(const Subspace& u, const ExactMatrix& a);

/// The four-element family { {0}, ran(p), ran(1-p), full } with duplicates
/// collapsed; every element is invariant under p.
SubspaceLattice invariant_lattice_of_projector(const Projector& p);

/// Ordered family of pairwise-orthogonal projectors summing to the identity.
/// Members may have any rank but none may be the zero operator.
class MaximalContext {
public:
    const std::string& label() const { return label_; }
    std::span<const Projector> members() const { return members_; }
    const Projector& operator[](std::size_t k) const { return members_[k]; }
    std::size_t size() const { return members_.size(); }
    std::size_t ambient_dim() const { return ambient_dim_; }

private:
    friend MaximalContext validate_context(const std::string& label,
                                           std::span<const ExactMatrix> ms);
    MaximalContext(std::string label, std::vector<Projector> members, std::size_t ambient_dim);

    std::string label_;
    std::vector<Projector> members_;
    std::size_t ambient_dim_;
};

/// Validates every matrix as a Projector, rejects zero members, checks all
/// pairwise products vanish in both orders, and checks the sum is the
/// identity. Throws ContextError with the specific failure; a
/// non-orthogonal pair is reported with both member indices.
MaximalContext validate_context(const std::string& label, std::span<const ExactMatrix> ms);

/// The unique orthogonal projector with column space u; inverse of ran.
/// With B the canonical basis rows, computes transpose(B) .
/// inverse(conj(B) . transpose(B)) . conj(B); the Gram factor is invertible
/// because the basis has full row rank.
Projector projector_from_subspace(const Subspace& u);

} // namespace sublat
