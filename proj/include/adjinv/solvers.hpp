#pragma once

/**
 * @file solvers.hpp
 * @brief Cramer-type rules for least-squares and Drazin-inverse solutions.
 *
 * Every component is a ratio of minor sums of a Gram (or power) matrix
 * whose column or row has been replaced by a transformed right-hand side:
 * f = A*y for A x = y, g = y A* for x A = y, and g = A^k y for the Drazin
 * solution of a singular square system.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adjinv/drazin.hpp"
#include "adjinv/elimination.hpp"
#include "adjinv/errors.hpp"
#include "adjinv/matrix.hpp"
#include "adjinv/minors.hpp"
#include "adjinv/parallel.hpp"

namespace adjinv {

enum class SolveMethod { eq13, eq14, row_eq_fullrank, row_eq_general, eq16, classical_cramer };

inline std::string_view to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::eq13: return "eq13";
        case SolveMethod::eq14: return "eq14";
        case SolveMethod::row_eq_fullrank: return "row_eq_fullrank";
        case SolveMethod::row_eq_general: return "row_eq_general";
        case SolveMethod::eq16: return "eq16";
        case SolveMethod::classical_cramer: return "classical_cramer";
    }
    return "unknown";
}

struct SolveReport {
    Matrix solution;  ///< column n x 1 for A x = y, row 1 x m for x A = y
    SolveMethod method = SolveMethod::eq14;
    Scalar denominator;
    std::vector<Scalar> numerators;  ///< solution[j] * denominator
    Matrix transformed_rhs;          ///< f, g or A^k y, same orientation as solution
};

namespace detail {

inline Matrix as_column(const Matrix& v, std::size_t expected, const char* what) {
    if (!v.is_vector() || v.rows() * v.cols() != expected)
        throw DimensionError(std::string(what) + ": right-hand side must have " + std::to_string(expected) +
                             " entries");
    return v.cols() == 1 ? v : transpose(v);
}

template <typename ComponentFn>
SolveReport finish(Matrix shape, SolveMethod method, Scalar denominator, Matrix rhs, unsigned threads,
                   ComponentFn&& component) {
    if (denominator.is_zero()) throw InternalError("vanishing Cramer denominator");
    const std::size_t count = shape.rows() * shape.cols();
    std::vector<Scalar> numerators(count);
    parallel_for(count, threads, [&](std::size_t t) { numerators[t] = component(t + 1); });
    const Scalar inv = denominator.inverse();
    for (std::size_t t = 0; t < count; ++t) shape[t] = numerators[t] * inv;
    return SolveReport{std::move(shape), method, std::move(denominator), std::move(numerators), std::move(rhs)};
}

inline SolveReport zero_solution(Matrix shape, SolveMethod method, Matrix rhs) {
    std::vector<Scalar> numerators(shape.rows() * shape.cols());
    return SolveReport{std::move(shape), method, Scalar(1), std::move(numerators), std::move(rhs)};
}

}  // namespace detail

/**
 * Minimal-norm least-squares solution x0 = A+ y of A x = y.
 * rank A = n: x0_j = det((A*A)_{.j}(f)) / det(A*A);
 * otherwise:  x0_j = sum over J_{r,n}{j} of |((A*A)_{.j}(f))_beta^beta| / d_r(A*A).
 */
inline SolveReport lsq_solve(const Matrix& a, const Matrix& y, ComputeOptions opts = {}) {
    const std::size_t n = a.cols();
    const Matrix rhs = detail::as_column(y, a.rows(), "lsq_solve");
    const Matrix a_star = conjugate_transpose(a);
    Matrix f = a_star * rhs;
    if (a.is_zero()) return detail::zero_solution(Matrix(n, 1), SolveMethod::eq14, std::move(f));
    const std::size_t r = rank(a);
    const Matrix gram = a_star * a;
    if (r == n) {
        return detail::finish(Matrix(n, 1), SolveMethod::eq13, determinant(gram), f, opts.threads,
                              [&](std::size_t j) { return determinant(replace_column(gram, j, f)); });
    }
    Scalar den = sum_principal_minors(gram, enumerate_k_subsets(r, n), opts).value;
    return detail::finish(Matrix(n, 1), SolveMethod::eq14, std::move(den), f, opts.threads, [&](std::size_t j) {
        return principal_minor_sum_containing(replace_column(gram, j, f), r, j).value;
    });
}

/**
 * Least-squares solution x0 = y A+ of the row system x A = y (x has m
 * entries, y has n). With g = y A*:
 * rank A = m: x0_i = det((AA*)_{i.}(g)) / det(AA*);
 * otherwise:  x0_i = sum over I_{r,m}{i} of |((AA*)_{i.}(g))_alpha^alpha| / d_r(AA*).
 */
inline SolveReport lsq_solve_row_system(const Matrix& y, const Matrix& a, ComputeOptions opts = {}) {
    const std::size_t m = a.rows();
    const Matrix rhs = transpose(detail::as_column(y, a.cols(), "lsq_solve_row_system"));
    const Matrix a_star = conjugate_transpose(a);
    Matrix g = rhs * a_star;
    if (a.is_zero()) return detail::zero_solution(Matrix(1, m), SolveMethod::row_eq_general, std::move(g));
    const std::size_t r = rank(a);
    const Matrix gram = a * a_star;
    if (r == m) {
        return detail::finish(Matrix(1, m), SolveMethod::row_eq_fullrank, determinant(gram), g, opts.threads,
                              [&](std::size_t i) { return determinant(replace_row(gram, i, g)); });
    }
    Scalar den = sum_principal_minors(gram, enumerate_k_subsets(r, m), opts).value;
    return detail::finish(Matrix(1, m), SolveMethod::row_eq_general, std::move(den), g, opts.threads,
                          [&](std::size_t i) {
                              return principal_minor_sum_containing(replace_row(gram, i, g), r, i).value;
                          });
}

/**
 * Drazin-inverse solution x = A^D y of a square system. With k = Ind A,
 * r = rank A^k and g = A^k y:
 *   x_i = sum over J_{r,n}{i} of |(A^{k+1}_{.i}(g))_beta^beta| / d_r(A^{k+1}).
 * Nonsingular A falls back to the classical Cramer rule.
 */
inline SolveReport drazin_solve(const Matrix& a, const Matrix& y, ComputeOptions opts = {}) {
    if (!a.is_square()) throw DimensionError("drazin_solve needs a square matrix");
    const std::size_t n = a.rows();
    const Matrix rhs = detail::as_column(y, n, "drazin_solve");
    const std::size_t k = index_of(a);
    if (k == 0) {
        return detail::finish(Matrix(n, 1), SolveMethod::classical_cramer, determinant(a), rhs, opts.threads,
                              [&](std::size_t i) { return determinant(replace_column(a, i, rhs)); });
    }
    const Matrix ak = power(a, k);
    Matrix g = ak * rhs;
    const std::size_t r = rank(ak);
    if (r == 0) return detail::zero_solution(Matrix(n, 1), SolveMethod::eq16, std::move(g));
    const Matrix high = ak * a;
    Scalar den = sum_principal_minors(high, enumerate_k_subsets(r, n), opts).value;
    return detail::finish(Matrix(n, 1), SolveMethod::eq16, std::move(den), g, opts.threads, [&](std::size_t i) {
        return principal_minor_sum_containing(replace_column(high, i, g), r, i).value;
    });
}

}  // namespace adjinv
