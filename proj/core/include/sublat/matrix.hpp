#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sublat/rational.hpp"

namespace sublat {

/// Dense vector over Q(i). Immutable after construction.
class ExactVector {
public:
    /// Zero vector of the given dimension (dim >= 1).
    explicit ExactVector(std::size_t dim);
    explicit ExactVector(std::vector<GaussianRational> entries);
    ExactVector(std::initializer_list<GaussianRational> entries);

    std::size_t dim() const { return entries_.size(); }
    const GaussianRational& operator[](std::size_t k) const { return entries_[k]; }
    std::span<const GaussianRational> entries() const { return entries_; }

    bool is_zero() const;

    friend bool operator==(const ExactVector& a, const ExactVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactVector& a, const ExactVector& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<GaussianRational> entries_;
};

ExactVector operator+(const ExactVector& a, const ExactVector& b);
ExactVector operator-(const ExactVector& a, const ExactVector& b);
ExactVector operator*(const GaussianRational& s, const ExactVector& v);

/// Hermitian inner product <a,b> = sum_k conj(a_k) b_k.
GaussianRational inner(const ExactVector& a, const ExactVector& b);

/// Dense row-major matrix over Q(i). Shapes are fixed and entries frozen at
/// construction; all operations return new values, so matrices can be shared
/// freely across threads.
class ExactMatrix {
public:
    /// Zero matrix (rows >= 1, cols >= 1).
    ExactMatrix(std::size_t rows, std::size_t cols);
    /// entries is row-major and must have rows*cols elements.
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
    ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static ExactMatrix identity(std::size_t n);
    /// Stacks the given vectors as rows; all must share one dimension.
    static ExactMatrix from_rows(std::span<const ExactVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const GaussianRational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    std::span<const GaussianRational> entries() const { return entries_; }

    ExactVector row(std::size_t r) const;
    ExactVector col(std::size_t c) const;

    bool is_zero() const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    /// One-line display, e.g. "[[1, 0], [0, 1]]".
    std::string str() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GaussianRational> entries_;
};

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a);
ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& a);
/// Exact matrix product; throws DimensionError on shape mismatch.
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
/// Matrix-vector product a . v.
ExactVector operator*(const ExactMatrix& a, const ExactVector& v);

ExactMatrix transpose(const ExactMatrix& a);
ExactMatrix conj(const ExactMatrix& a);
/// Conjugate transpose.
ExactMatrix adjoint(const ExactMatrix& a);
GaussianRational trace(const ExactMatrix& a);

struct RrefResult {
    ExactMatrix matrix;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form over Q(i): pivots are the first nonzero entry in
/// column order, scaled to 1, with every other entry in a pivot column
/// eliminated. The RREF matrix is the unique canonical form of the row
/// space, which makes subspace equality decidable downstream.
RrefResult rref(const ExactMatrix& a);

std::size_t rank(const ExactMatrix& a);

/// Canonical basis of {v : a.v = 0}, with cols - rank elements. The basis is
/// itself row-reduced so equal kernels yield identical vectors.
std::vector<ExactVector> null_space(const ExactMatrix& a);

/// Exact inverse of a square matrix; throws DimensionError if not square,
/// DivisionByZeroError if singular.
ExactMatrix inverse(const ExactMatrix& a);

} // namespace sublat
