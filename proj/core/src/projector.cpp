#include "sublat/projector.hpp"

#include <sstream>
#include <utility>

#include "sublat/errors.hpp"

namespace sublat {

Projector::Projector(ExactMatrix m, std::size_t rank) : matrix_(std::move(m)), rank_(rank) {}

Projector Projector::zero(std::size_t n) { return Projector(ExactMatrix(n, n), 0); }

Projector Projector::identity(std::size_t n) { return Projector(ExactMatrix::identity(n), n); }

Projector validate_projector(const ExactMatrix& m) {
    if (!m.is_square())
        throw ProjectorError(ProjectorError::Kind::NotSquare, "projector: matrix is not square");
    if (adjoint(m) != m)
        throw ProjectorError(ProjectorError::Kind::NotSelfAdjoint,
                             "projector: matrix is not self-adjoint");
    if (m * m != m)
        throw ProjectorError(ProjectorError::Kind::NotIdempotent,
                             "projector: matrix is not idempotent");
    return Projector(m, rank(m));
}

Subspace ran(const Projector& p) { return Subspace::col_space(p.matrix()); }

Subspace ker(const Projector& p) { return Subspace::kernel(p.matrix()); }

Projector negation(const Projector& p) {
    return validate_projector(ExactMatrix::identity(p.dim()) - p.matrix());
}

bool commutes(const Projector& p, const Projector& q) {
    if (p.dim() != q.dim()) throw DimensionError("commutes: operators act on different spaces");
    return p.matrix() * q.matrix() == q.matrix() * p.matrix();
}

bool is_invariant(const Subspace& u, const ExactMatrix& a) {
    if (!a.is_square() || a.cols() != u.ambient_dim())
        throw DimensionError("is_invariant: operator shape does not match the ambient space");
    for (const auto& b : u.basis())
        if (!u.contains(a * b)) return false;
    return true;
}

SubspaceLattice invariant_lattice_of_projector(const Projector& p) {
    const std::vector<Subspace> family{Subspace::zero(p.dim()), ran(p), ran(negation(p)),
                                       Subspace::full(p.dim())};
    return SubspaceLattice::create(family);
}

MaximalContext::MaximalContext(std::string label, std::vector<Projector> members,
                               std::size_t ambient_dim)
    : label_(std::move(label)), members_(std::move(members)), ambient_dim_(ambient_dim) {}

MaximalContext validate_context(const std::string& label, std::span<const ExactMatrix> ms) {
    if (ms.empty())
        throw ContextError(ContextError::Kind::InvalidMember,
                           "context: needs at least one member");

    std::vector<Projector> members;
    members.reserve(ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k) {
        try {
            members.push_back(validate_projector(ms[k]));
        } catch (const ProjectorError& e) {
            std::ostringstream os;
            os << "context: member " << k << " is not a projector (" << e.what() << ")";
            throw ContextError(ContextError::Kind::InvalidMember, os.str(), k);
        }
    }

    const std::size_t n = members.front().dim();
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (members[k].dim() != n)
            throw ContextError(ContextError::Kind::InvalidMember,
                               "context: members act on different spaces", k);
        if (members[k].matrix().is_zero())
            throw ContextError(ContextError::Kind::ZeroMember,
                               "context: the zero operator cannot be a member", k);
    }

    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const ExactMatrix pq = members[i].matrix() * members[j].matrix();
            const ExactMatrix qp = members[j].matrix() * members[i].matrix();
            if (!pq.is_zero() || !qp.is_zero()) {
                std::ostringstream os;
                os << "context: members " << i << " and " << j << " are not orthogonal";
                throw ContextError(ContextError::Kind::NonOrthogonalPair, os.str(), i, j);
            }
        }

    ExactMatrix sum = members.front().matrix();
    for (std::size_t k = 1; k < members.size(); ++k) sum = sum + members[k].matrix();
    if (sum != ExactMatrix::identity(n))
        throw ContextError(ContextError::Kind::SumNotIdentity,
                           "context: members do not sum to the identity");

    return MaximalContext(label, std::move(members), n);
}

Projector projector_from_subspace(const Subspace& u) {
    const std::size_t n = u.ambient_dim();
    if (u.is_zero()) return Projector::zero(n);
    const ExactMatrix b = u.basis_matrix();
    const ExactMatrix bt = transpose(b);
    const ExactMatrix bc = conj(b);
    const ExactMatrix gram = bc * bt;
    return validate_projector(bt * inverse(gram) * bc);
}

} // namespace sublat
