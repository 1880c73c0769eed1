#include "sublat/subspace.hpp"

#include <sstream>
#include <utility>

#include "sublat/errors.hpp"

namespace sublat {

Subspace::Subspace(std::size_t ambient_dim, std::vector<ExactVector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (ambient_dim_ == 0) throw DimensionError("Subspace: ambient dimension must be at least 1");
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<ExactVector> basis;
    basis.reserve(ambient_dim);
    const ExactMatrix id = ExactMatrix::identity(ambient_dim);
    for (std::size_t k = 0; k < ambient_dim; ++k) basis.push_back(id.row(k));
    return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::from_span(std::span<const ExactVector> vectors, std::size_t ambient_dim) {
    if (vectors.empty()) return zero(ambient_dim);
    for (const auto& v : vectors)
        if (v.dim() != ambient_dim)
            throw DimensionError("from_span: vector dimension differs from ambient dimension");
    const RrefResult r = rref(ExactMatrix::from_rows(vectors));
    std::vector<ExactVector> basis;
    basis.reserve(r.rank);
    for (std::size_t k = 0; k < r.rank; ++k) basis.push_back(r.matrix.row(k));
    return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::row_space(const ExactMatrix& m) {
    const RrefResult r = rref(m);
    std::vector<ExactVector> basis;
    basis.reserve(r.rank);
    for (std::size_t k = 0; k < r.rank; ++k) basis.push_back(r.matrix.row(k));
    return Subspace(m.cols(), std::move(basis));
}

Subspace Subspace::col_space(const ExactMatrix& m) { return row_space(transpose(m)); }

Subspace Subspace::kernel(const ExactMatrix& m) {
    return Subspace(m.cols(), null_space(m));
}

ExactMatrix Subspace::basis_matrix() const {
    if (basis_.empty())
        throw DimensionError("basis_matrix: the zero subspace has an empty basis");
    return ExactMatrix::from_rows(basis_);
}

bool Subspace::contains(const ExactVector& v) const {
    if (v.dim() != ambient_dim_)
        throw DimensionError("contains: vector dimension differs from ambient dimension");
    if (v.is_zero()) return true;
    if (basis_.empty()) return false;
    std::vector<ExactVector> stacked(basis_.begin(), basis_.end());
    stacked.push_back(v);
    return rank(ExactMatrix::from_rows(stacked)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_)
        throw DimensionError("contains: ambient dimensions differ");
    if (other.basis_.empty()) return true;
    if (other.basis_.size() > basis_.size()) return false;
    std::vector<ExactVector> stacked(basis_.begin(), basis_.end());
    stacked.insert(stacked.end(), other.basis_.begin(), other.basis_.end());
    return rank(ExactMatrix::from_rows(stacked)) == basis_.size();
}

std::string Subspace::str() const {
    if (is_zero()) return "{0}";
    if (is_full()) {
        std::ostringstream os;
        os << "C^" << ambient_dim_;
        return os.str();
    }
    std::ostringstream os;
    os << "span{";
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (k) os << ", ";
        os << basis_[k].str();
    }
    os << '}';
    return os.str();
}

Subspace join(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionError("join: ambient dimensions differ");
    std::vector<ExactVector> stacked(u.basis().begin(), u.basis().end());
    stacked.insert(stacked.end(), v.basis().begin(), v.basis().end());
    return Subspace::from_span(stacked, u.ambient_dim());
}

Subspace orthocomplement(const Subspace& u) {
    if (u.is_zero()) return Subspace::full(u.ambient_dim());
    return Subspace::kernel(conj(u.basis_matrix()));
}

Subspace meet(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionError("meet: ambient dimensions differ");
    return orthocomplement(join(orthocomplement(u), orthocomplement(v)));
}

bool leq(const Subspace& u, const Subspace& v) { return v.contains(u); }

int compare(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        return a.ambient_dim() < b.ambient_dim() ? -1 : 1;
    if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.ambient_dim(); ++c) {
            const int cmp = compare(a.basis()[r][c], b.basis()[r][c]);
            if (cmp != 0) return cmp;
        }
    return 0;
}

} // namespace sublat
