#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices of Gaussian rationals.
 *
 * Row-major storage, 0-based element access. Vectors are n x 1 matrices.
 * Row/column replacement takes 1-based indices to match the index-set
 * conventions of the minor routines.
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adjinv/errors.hpp"
#include "adjinv/scalar.hpp"

namespace adjinv {

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    }

    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
        if (data_.size() != rows * cols) throw DimensionError("entry count does not match dimensions");
    }

    /// Nested-list construction for literals: Matrix{{1, 2}, {3, 4}}.
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : rows_(rows.size()), cols_(0) {
        if (rows_ == 0) throw DimensionError("matrix dimensions must be positive");
        cols_ = rows.begin()->size();
        if (cols_ == 0) throw DimensionError("matrix dimensions must be positive");
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionError("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix id(n, n);
        for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
        return id;
    }

    static Matrix column(std::span<const Scalar> values) {
        return Matrix(values.size(), 1, std::vector<Scalar>(values.begin(), values.end()));
    }

    static Matrix row(std::span<const Scalar> values) {
        return Matrix(1, values.size(), std::vector<Scalar>(values.begin(), values.end()));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_vector() const noexcept { return cols_ == 1 || rows_ == 1; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Element of a vector (either orientation).
    const Scalar& operator[](std::size_t k) const { return data_[k]; }
    Scalar& operator[](std::size_t k) { return data_[k]; }

    std::span<const Scalar> entries() const noexcept { return data_; }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    /// 0-based column j as an m x 1 matrix.
    Matrix col(std::size_t j) const {
        Matrix out(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
        return out;
    }

    /// 0-based row i as a 1 x n matrix.
    Matrix row_at(std::size_t i) const {
        Matrix out(1, cols_);
        for (std::size_t j = 0; j < cols_; ++j) out(0, j) = (*this)(i, j);
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const Scalar& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

inline Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

/// A* : entry (i,j) is the conjugate of A(j,i).
inline Matrix conjugate_transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
    return out;
}

inline Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

/// A^k by repeated squaring; A^0 = I.
inline Matrix power(const Matrix& a, std::size_t k) {
    if (!a.is_square()) throw DimensionError("power of a non-square matrix");
    Matrix result = Matrix::identity(a.rows());
    Matrix base = a;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

/// A with its j-th column (1-based) replaced by b.
inline Matrix replace_column(const Matrix& a, std::size_t j, const Matrix& b) {
    if (j < 1 || j > a.cols()) throw DimensionError("column index out of range");
    if (!b.is_vector() || b.rows() * b.cols() != a.rows())
        throw DimensionError("replacement column length does not match row count");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j - 1) = b[i];
    return out;
}

/// A with its i-th row (1-based) replaced by b.
inline Matrix replace_row(const Matrix& a, std::size_t i, const Matrix& b) {
    if (i < 1 || i > a.rows()) throw DimensionError("row index out of range");
    if (!b.is_vector() || b.rows() * b.cols() != a.cols())
        throw DimensionError("replacement row length does not match column count");
    Matrix out = a;
    for (std::size_t j = 0; j < a.cols(); ++j) out(i - 1, j) = b[j];
    return out;
}

/// [A | B] side by side.
inline Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hconcat: row counts differ");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

/// Block diagonal diag(A, B).
inline Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

inline bool is_hermitian(const Matrix& a) { return a.is_square() && conjugate_transpose(a) == a; }

inline bool is_idempotent(const Matrix& a) { return a.is_square() && a * a == a; }

}  // namespace adjinv
