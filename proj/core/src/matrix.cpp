#include "sublat/matrix.hpp"

#include <sstream>
#include <utility>

#include "sublat/errors.hpp"

namespace sublat {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw DimensionError(os.str());
    }
}

} // namespace

ExactVector::ExactVector(std::size_t dim) : entries_(dim) {
    if (dim == 0) throw DimensionError("ExactVector: dimension must be at least 1");
}

ExactVector::ExactVector(std::vector<GaussianRational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionError("ExactVector: dimension must be at least 1");
}

ExactVector::ExactVector(std::initializer_list<GaussianRational> entries)
    : ExactVector(std::vector<GaussianRational>(entries)) {}

bool ExactVector::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::string ExactVector::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (k) os << ", ";
        os << entries_[k].str();
    }
    os << ']';
    return os.str();
}

ExactVector operator+(const ExactVector& a, const ExactVector& b) {
    require_same_dim(a.dim(), b.dim(), "vector sum");
    std::vector<GaussianRational> out;
    out.reserve(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) out.push_back(a[k] + b[k]);
    return ExactVector(std::move(out));
}

ExactVector operator-(const ExactVector& a, const ExactVector& b) {
    require_same_dim(a.dim(), b.dim(), "vector difference");
    std::vector<GaussianRational> out;
    out.reserve(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) out.push_back(a[k] - b[k]);
    return ExactVector(std::move(out));
}

ExactVector operator*(const GaussianRational& s, const ExactVector& v) {
    std::vector<GaussianRational> out;
    out.reserve(v.dim());
    for (std::size_t k = 0; k < v.dim(); ++k) out.push_back(s * v[k]);
    return ExactVector(std::move(out));
}

GaussianRational inner(const ExactVector& a, const ExactVector& b) {
    require_same_dim(a.dim(), b.dim(), "inner product");
    GaussianRational acc;
    for (std::size_t k = 0; k < a.dim(); ++k) acc += a[k].conj() * b[k];
    return acc;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw DimensionError("ExactMatrix: rows and cols must be at least 1");
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0)
        throw DimensionError("ExactMatrix: rows and cols must be at least 1");
    if (entries_.size() != rows * cols)
        throw DimensionError("ExactMatrix: entry count does not match shape");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0)
        throw DimensionError("ExactMatrix: rows and cols must be at least 1");
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ExactMatrix: ragged initializer");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.entries_[k * n + k] = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(std::span<const ExactVector> rows) {
    if (rows.empty()) throw DimensionError("from_rows: need at least one row");
    const std::size_t cols = rows.front().dim();
    std::vector<GaussianRational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        require_same_dim(r.dim(), cols, "from_rows");
        entries.insert(entries.end(), r.entries().begin(), r.entries().end());
    }
    return ExactMatrix(rows.size(), cols, std::move(entries));
}

ExactVector ExactMatrix::row(std::size_t r) const {
    std::vector<GaussianRational> out(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                      entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return ExactVector(std::move(out));
}

ExactVector ExactMatrix::col(std::size_t c) const {
    std::vector<GaussianRational> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return ExactVector(std::move(out));
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << (*this)(r, c).str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream os;
        os << what << ": shape mismatch (" << a.rows() << 'x' << a.cols() << " vs " << b.rows()
           << 'x' << b.cols() << ")";
        throw DimensionError(os.str());
    }
}

} // namespace

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b, "matrix sum");
    std::vector<GaussianRational> out;
    out.reserve(a.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        out.push_back(a.entries()[k] + b.entries()[k]);
    return ExactMatrix(a.rows(), a.cols(), std::move(out));
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b, "matrix difference");
    std::vector<GaussianRational> out;
    out.reserve(a.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        out.push_back(a.entries()[k] - b.entries()[k]);
    return ExactMatrix(a.rows(), a.cols(), std::move(out));
}

ExactMatrix operator-(const ExactMatrix& a) {
    std::vector<GaussianRational> out;
    out.reserve(a.entries().size());
    for (const auto& e : a.entries()) out.push_back(-e);
    return ExactMatrix(a.rows(), a.cols(), std::move(out));
}

ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& a) {
    std::vector<GaussianRational> out;
    out.reserve(a.entries().size());
    for (const auto& e : a.entries()) out.push_back(s * e);
    return ExactMatrix(a.rows(), a.cols(), std::move(out));
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) {
        std::ostringstream os;
        os << "matrix product: inner dimensions differ (" << a.rows() << 'x' << a.cols() << " vs "
           << b.rows() << 'x' << b.cols() << ")";
        throw DimensionError(os.str());
    }
    std::vector<GaussianRational> out(a.rows() * b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const GaussianRational& ark = a(r, k);
            if (ark.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out[r * b.cols() + c] += ark * b(k, c);
        }
    return ExactMatrix(a.rows(), b.cols(), std::move(out));
}

ExactVector operator*(const ExactMatrix& a, const ExactVector& v) {
    require_same_dim(a.cols(), v.dim(), "matrix-vector product");
    std::vector<GaussianRational> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
    return ExactVector(std::move(out));
}

ExactMatrix transpose(const ExactMatrix& a) {
    std::vector<GaussianRational> out(a.entries().size());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out[c * a.rows() + r] = a(r, c);
    return ExactMatrix(a.cols(), a.rows(), std::move(out));
}

ExactMatrix conj(const ExactMatrix& a) {
    std::vector<GaussianRational> out;
    out.reserve(a.entries().size());
    for (const auto& e : a.entries()) out.push_back(e.conj());
    return ExactMatrix(a.rows(), a.cols(), std::move(out));
}

ExactMatrix adjoint(const ExactMatrix& a) { return transpose(conj(a)); }

GaussianRational trace(const ExactMatrix& a) {
    if (!a.is_square()) throw DimensionError("trace: matrix must be square");
    GaussianRational acc;
    for (std::size_t k = 0; k < a.rows(); ++k) acc += a(k, k);
    return acc;
}

RrefResult rref(const ExactMatrix& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<GaussianRational> m(a.entries().begin(), a.entries().end());
    auto at = [&](std::size_t r, std::size_t c) -> GaussianRational& { return m[r * cols + c]; };

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pr = lead;
        while (pr < rows && at(pr, col).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != lead)
            for (std::size_t c = col; c < cols; ++c) std::swap(at(lead, c), at(pr, c));
        const GaussianRational inv = GaussianRational(1) / at(lead, col);
        for (std::size_t c = col; c < cols; ++c) at(lead, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || at(r, col).is_zero()) continue;
            const GaussianRational f = at(r, col);
            for (std::size_t c = col; c < cols; ++c) at(r, c) -= f * at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return RrefResult{ExactMatrix(rows, cols, std::move(m)), pivots.size(), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& a) { return rref(a).rank; }

std::vector<ExactVector> null_space(const ExactMatrix& a) {
    const RrefResult r = rref(a);
    const std::size_t cols = a.cols();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<ExactVector> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<GaussianRational> v(cols);
        v[free_col] = GaussianRational(1);
        for (std::size_t prow = 0; prow < r.rank; ++prow)
            v[r.pivot_cols[prow]] = -r.matrix(prow, free_col);
        basis.emplace_back(std::move(v));
    }
    if (basis.empty()) return basis;

    // Row-reduce the kernel basis so every matrix with the same kernel
    // produces the identical vectors.
    const RrefResult canon = rref(ExactMatrix::from_rows(basis));
    std::vector<ExactVector> out;
    out.reserve(canon.rank);
    for (std::size_t k = 0; k < canon.rank; ++k) out.push_back(canon.matrix.row(k));
    return out;
}

ExactMatrix inverse(const ExactMatrix& a) {
    if (!a.is_square()) throw DimensionError("inverse: matrix must be square");
    const std::size_t n = a.rows();
    std::vector<GaussianRational> aug(n * 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r * 2 * n + c] = a(r, c);
        aug[r * 2 * n + n + r] = GaussianRational(1);
    }
    const RrefResult red = rref(ExactMatrix(n, 2 * n, std::move(aug)));
    for (std::size_t k = 0; k < n; ++k)
        if (k >= red.pivot_cols.size() || red.pivot_cols[k] != k)
            throw DivisionByZeroError("inverse: matrix is singular");
    std::vector<GaussianRational> out;
    out.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.push_back(red.matrix(r, n + c));
    return ExactMatrix(n, n, std::move(out));
}

} // namespace sublat
