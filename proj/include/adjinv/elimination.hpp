#pragma once

/**
 * @file elimination.hpp
 * @brief Fraction-free elimination over the Gaussian integers.
 *
 * Every row is first cleared to a common denominator so the working matrix
 * lives in Z[i]; Bareiss elimination then keeps every intermediate entry a
 * minor of the scaled input, and each division is exact. Pivot = first
 * nonzero entry in column scan order.
 *
 * Also hosts the classical helpers built on determinants alone (adjugate,
 * inverse, reduced row-echelon form) used by the full-rank paths and oracles.
 */

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "adjinv/errors.hpp"
#include "adjinv/matrix.hpp"
#include "adjinv/scalar.hpp"

namespace adjinv {

namespace detail {

struct GaussInt {
    mpz_class re;
    mpz_class im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

inline GaussInt mul(const GaussInt& a, const GaussInt& b) {
    if (sgn(a.im) == 0 && sgn(b.im) == 0) return {a.re * b.re, 0};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

/// a / b, which must be exact in Z[i].
inline GaussInt divexact(const GaussInt& a, const GaussInt& b) {
    if (sgn(b.im) == 0) {
        if (!mpz_divisible_p(a.re.get_mpz_t(), b.re.get_mpz_t()) ||
            !mpz_divisible_p(a.im.get_mpz_t(), b.re.get_mpz_t()))
            throw InternalError("inexact Bareiss division");
        GaussInt q;
        mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
        mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
        return q;
    }
    mpz_class n = b.re * b.re + b.im * b.im;
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
        throw InternalError("inexact Bareiss division");
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
    return q;
}

/// Row-major Z[i] copy of a, each row multiplied by the lcm of its denominators.
/// scale receives the product of those multipliers.
struct IntegerRows {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<GaussInt> data;
    mpz_class scale = 1;

    GaussInt& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
};

inline IntegerRows clear_denominators(const Matrix& a) {
    IntegerRows out;
    out.rows = a.rows();
    out.cols = a.cols();
    out.data.resize(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).real().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).imag().get_den_mpz_t());
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& s = a(i, j);
            out.at(i, j) = {s.real().get_num() * (l / s.real().get_den()),
                            s.imag().get_num() * (l / s.imag().get_den())};
        }
        out.scale *= l;
    }
    return out;
}

/// In-place fraction-free echelon reduction. Returns the rank; *det receives
/// the signed last pivot (the determinant of the integer matrix) when square.
inline std::size_t bareiss(IntegerRows& m, GaussInt* det) {
    GaussInt prev{1, 0};
    bool negate = false;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c).is_zero()) ++p;
        if (p == m.rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
            negate = !negate;
        }
        const GaussInt pivot = m.at(r, c);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            const GaussInt lead = m.at(i, c);
            for (std::size_t j = c + 1; j < m.cols; ++j)
                m.at(i, j) = divexact(sub(mul(m.at(i, j), pivot), mul(lead, m.at(r, j))), prev);
            m.at(i, c) = GaussInt{0, 0};
        }
        prev = pivot;
        ++r;
    }
    if (det != nullptr) {
        if (r < m.rows || m.rows != m.cols) {
            *det = GaussInt{0, 0};
        } else {
            *det = prev;
            if (negate) *det = GaussInt{-det->re, -det->im};
        }
    }
    return r;
}

}  // namespace detail

/// Exact rank over the Gaussian rationals.
inline std::size_t rank(const Matrix& a) {
    auto m = detail::clear_denominators(a);
    return detail::bareiss(m, nullptr);
}

/// Exact determinant of a square matrix.
inline Scalar determinant(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
    auto m = detail::clear_denominators(a);
    detail::GaussInt det;
    detail::bareiss(m, &det);
    if (det.is_zero()) return Scalar(0);
    return Scalar(mpq_class(det.re, m.scale), mpq_class(det.im, m.scale));
}

/// A with row `skip_row` and column `skip_col` (0-based) removed.
inline Matrix drop_row_col(const Matrix& a, std::size_t skip_row, std::size_t skip_col) {
    Matrix out(a.rows() - 1, a.cols() - 1);
    for (std::size_t i = 0, oi = 0; i < a.rows(); ++i) {
        if (i == skip_row) continue;
        for (std::size_t j = 0, oj = 0; j < a.cols(); ++j) {
            if (j == skip_col) continue;
            out(oi, oj++) = a(i, j);
        }
        ++oi;
    }
    return out;
}

/// Classical adjugate: Adj(A) * A = det(A) * I.
inline Matrix adjugate(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("adjugate of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 1) return Matrix::identity(1);
    Matrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar c = determinant(drop_row_col(a, j, i));
            adj(i, j) = ((i + j) % 2 == 0) ? c : -c;
        }
    }
    return adj;
}

/// A^{-1} = Adj(A) / det(A). Throws PreconditionError when A is singular.
inline Matrix inverse(const Matrix& a) {
    Scalar det = determinant(a);
    if (det.is_zero()) throw PreconditionError("matrix is singular");
    return adjugate(a) * det.inverse();
}

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;  ///< 0-based
};

/// Reduced row-echelon form by Gauss-Jordan over the field.
inline RowEchelon rref(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace adjinv
