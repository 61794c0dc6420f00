#pragma once

/**
 * @file pinv.hpp
 * @brief Moore-Penrose inverse as a ratio of principal-minor sums.
 *
 * For A of rank r the column form reads
 *
 *   A+(i,j) = l_ij / d_r(A*A),
 *   l_ij    = sum over beta in J_{r,n}{i} of |((A*A)_{.i}(a*_{.j}))_beta^beta|,
 *
 * where (A*A)_{.i}(b) is A*A with column i replaced by b and a*_{.j} is
 * column j of A*. The row form swaps in AA*, row replacement and the index
 * families I_{r,m}{j}. Full-rank inputs reduce to single determinants.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "adjinv/elimination.hpp"
#include "adjinv/errors.hpp"
#include "adjinv/index_sets.hpp"
#include "adjinv/matrix.hpp"
#include "adjinv/minors.hpp"
#include "adjinv/parallel.hpp"

namespace adjinv {

/// Which representation produced a PinvResult.
enum class PinvMethod {
    eq1,                ///< column form, minor sums over A*A
    eq2,                ///< row form, minor sums over AA*
    eq6,                ///< full column rank, det((A*A)_{.i}(a*_{.j})) / det(A*A)
    eq7,                ///< full row rank, det((AA*)_{j.}(a*_{i.})) / det(AA*)
    classical_inverse,  ///< square nonsingular, Adj(A) / det(A)
    zero,               ///< A = 0
};

inline std::string_view to_string(PinvMethod m) {
    switch (m) {
        case PinvMethod::eq1: return "eq1";
        case PinvMethod::eq2: return "eq2";
        case PinvMethod::eq6: return "eq6";
        case PinvMethod::eq7: return "eq7";
        case PinvMethod::classical_inverse: return "classical_inverse";
        case PinvMethod::zero: return "zero";
    }
    return "unknown";
}

struct PinvResult {
    Matrix pseudo_inverse;  ///< n x m
    Scalar denominator;     ///< d_r of the Gram matrix used (det for the full-rank forms)
    Matrix numerators;      ///< pseudo_inverse * denominator, entry by entry
    PinvMethod representation_used = PinvMethod::zero;
    std::size_t rank = 0;
    /// Determinants evaluated for each numerator, row-major n x m.
    std::vector<std::uint64_t> numerator_minor_counts;
    std::uint64_t denominator_minor_count = 0;
};

enum class PinvChoice { automatic, eq1, eq2 };

struct PinvOptions {
    PinvChoice method = PinvChoice::automatic;
    unsigned threads = 1;
};

/// A*A (n x n).
inline Matrix gram_columns(const Matrix& a) { return conjugate_transpose(a) * a; }

/// AA* (m x m).
inline Matrix gram_rows(const Matrix& a) { return a * conjugate_transpose(a); }

namespace detail {

template <typename EntryFn>
PinvResult assemble(std::size_t rows, std::size_t cols, Scalar denominator, std::uint64_t denominator_terms,
                    PinvMethod method, std::size_t r, unsigned threads, EntryFn&& entry) {
    if (denominator.is_zero()) throw InternalError("vanishing denominator in determinantal representation");
    Matrix numerators(rows, cols);
    std::vector<std::uint64_t> counts(rows * cols);
    parallel_for(rows * cols, threads, [&](std::size_t idx) {
        MinorSum s = entry(idx / cols + 1, idx % cols + 1);
        numerators[idx] = std::move(s.value);
        counts[idx] = s.terms;
    });
    Matrix x = numerators * denominator.inverse();
    return PinvResult{std::move(x), std::move(denominator), std::move(numerators), method, r, std::move(counts),
                      denominator_terms};
}

inline void require_nonzero(const Matrix& a) {
    if (a.is_zero()) throw PreconditionError("determinantal representation needs a nonzero matrix");
}

}  // namespace detail

/// Column form: A+ = (l_ij / d_r(A*A)).
inline PinvResult mp_inverse_columns(const Matrix& a, ComputeOptions opts = {}) {
    detail::require_nonzero(a);
    const std::size_t n = a.cols();
    const std::size_t r = rank(a);
    const Matrix gram = gram_columns(a);
    const Matrix a_star = conjugate_transpose(a);
    MinorSum den = sum_principal_minors(gram, enumerate_k_subsets(r, n), opts);
    return detail::assemble(n, a.rows(), std::move(den.value), den.terms, PinvMethod::eq1, r, opts.threads,
                            [&](std::size_t i, std::size_t j) {
                                return principal_minor_sum_containing(replace_column(gram, i, a_star.col(j - 1)), r, i);
                            });
}

/// Row form: A+ = (r_ij / d_r(AA*)).
inline PinvResult mp_inverse_rows(const Matrix& a, ComputeOptions opts = {}) {
    detail::require_nonzero(a);
    const std::size_t m = a.rows();
    const std::size_t r = rank(a);
    const Matrix gram = gram_rows(a);
    const Matrix a_star = conjugate_transpose(a);
    MinorSum den = sum_principal_minors(gram, enumerate_k_subsets(r, m), opts);
    return detail::assemble(a.cols(), m, std::move(den.value), den.terms, PinvMethod::eq2, r, opts.threads,
                            [&](std::size_t i, std::size_t j) {
                                return principal_minor_sum_containing(replace_row(gram, j, a_star.row_at(i - 1)), r, j);
                            });
}

/// rank A = n: A+ = (A*A)^{-1} A* written with replaced-column determinants.
inline PinvResult mp_inverse_full_column_rank(const Matrix& a, ComputeOptions opts = {}) {
    const std::size_t n = a.cols();
    const std::size_t r = rank(a);
    if (r != n) throw PreconditionError("full column rank required");
    const Matrix gram = gram_columns(a);
    const Matrix a_star = conjugate_transpose(a);
    return detail::assemble(n, a.rows(), determinant(gram), 1, PinvMethod::eq6, r, opts.threads,
                            [&](std::size_t i, std::size_t j) {
                                return MinorSum{determinant(replace_column(gram, i, a_star.col(j - 1))), 1};
                            });
}

/// rank A = m: A+ = A* (AA*)^{-1} written with replaced-row determinants.
inline PinvResult mp_inverse_full_row_rank(const Matrix& a, ComputeOptions opts = {}) {
    const std::size_t m = a.rows();
    const std::size_t r = rank(a);
    if (r != m) throw PreconditionError("full row rank required");
    const Matrix gram = gram_rows(a);
    const Matrix a_star = conjugate_transpose(a);
    return detail::assemble(a.cols(), m, determinant(gram), 1, PinvMethod::eq7, r, opts.threads,
                            [&](std::size_t i, std::size_t j) {
                                return MinorSum{determinant(replace_row(gram, j, a_star.row_at(i - 1))), 1};
                            });
}

/// Square nonsingular A: Adj(A) / det(A).
inline PinvResult classical_inverse(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("classical inverse of a non-square matrix");
    Scalar det = determinant(a);
    if (det.is_zero()) throw PreconditionError("matrix is singular");
    Matrix adj = adjugate(a);
    Matrix x = adj * det.inverse();
    const std::size_t n = a.rows();
    return PinvResult{std::move(x), std::move(det), std::move(adj), PinvMethod::classical_inverse, n,
                      std::vector<std::uint64_t>(n * n, 1), 1};
}

/// Representation the automatic dispatch picks for a nonzero m x n matrix of rank r.
inline PinvMethod choose_pinv_method(std::size_t m, std::size_t n, std::size_t r) {
    if (m == n && r == n) return PinvMethod::classical_inverse;
    if (r == n && n < m) return PinvMethod::eq6;
    if (r == m && m < n) return PinvMethod::eq7;
    // Numerator minors per entry; the entry count n*m is common to both forms.
    return binomial(n - 1, r - 1) <= binomial(m - 1, r - 1) ? PinvMethod::eq1 : PinvMethod::eq2;
}

/**
 * Moore-Penrose inverse of any matrix. The zero matrix maps to the zero
 * n x m matrix; otherwise the representation follows choose_pinv_method
 * unless opts.method forces the column or row form.
 */
inline PinvResult mp_inverse(const Matrix& a, PinvOptions opts = {}) {
    if (a.is_zero()) {
        Matrix z(a.cols(), a.rows());
        return PinvResult{z, Scalar(1), z, PinvMethod::zero, 0, std::vector<std::uint64_t>(a.rows() * a.cols(), 0),
                          0};
    }
    const ComputeOptions compute{opts.threads};
    if (opts.method == PinvChoice::eq1) return mp_inverse_columns(a, compute);
    if (opts.method == PinvChoice::eq2) return mp_inverse_rows(a, compute);
    switch (choose_pinv_method(a.rows(), a.cols(), rank(a))) {
        case PinvMethod::classical_inverse: return classical_inverse(a);
        case PinvMethod::eq6: return mp_inverse_full_column_rank(a, compute);
        case PinvMethod::eq7: return mp_inverse_full_row_rank(a, compute);
        case PinvMethod::eq2: return mp_inverse_rows(a, compute);
        default: return mp_inverse_columns(a, compute);
    }
}

/**
 * P = A+A. When r < min(m,n) or r = m < n the entries are evaluated as
 * p_ij / d_r(A*A) with p_ij summing |((A*A)_{.i}(d_{.j}))_beta^beta| over
 * J_{r,n}{i}, d_{.j} the j-th column of A*A. Otherwise P is the product A+A.
 */
inline Matrix projector_p(const Matrix& a, ComputeOptions opts = {}) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (a.is_zero()) return zeros(n, n);
    const std::size_t r = rank(a);
    if (!(r < std::min(m, n) || (r == m && m < n))) return mp_inverse(a, {PinvChoice::automatic, opts.threads}).pseudo_inverse * a;
    const Matrix gram = gram_columns(a);
    Scalar den = sum_principal_minors(gram, enumerate_k_subsets(r, n), opts).value;
    if (den.is_zero()) throw InternalError("vanishing d_r(A*A)");
    Matrix p(n, n);
    parallel_for(n * n, opts.threads, [&](std::size_t idx) {
        const std::size_t i = idx / n + 1;
        const std::size_t j = idx % n + 1;
        p[idx] = principal_minor_sum_containing(replace_column(gram, i, gram.col(j - 1)), r, i).value;
    });
    return p * den.inverse();
}

/**
 * Q = AA+. When r < min(m,n) or r = n < m the entries are q_ij / d_r(AA*)
 * with q_ij summing |((AA*)_{j.}(g_{i.}))_alpha^alpha| over I_{r,m}{j},
 * g_{i.} the i-th row of AA*. Otherwise Q is the product AA+.
 */
inline Matrix projector_q(const Matrix& a, ComputeOptions opts = {}) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (a.is_zero()) return zeros(m, m);
    const std::size_t r = rank(a);
    if (!(r < std::min(m, n) || (r == n && n < m))) return a * mp_inverse(a, {PinvChoice::automatic, opts.threads}).pseudo_inverse;
    const Matrix gram = gram_rows(a);
    Scalar den = sum_principal_minors(gram, enumerate_k_subsets(r, m), opts).value;
    if (den.is_zero()) throw InternalError("vanishing d_r(AA*)");
    Matrix q(m, m);
    parallel_for(m * m, opts.threads, [&](std::size_t idx) {
        const std::size_t i = idx / m + 1;
        const std::size_t j = idx % m + 1;
        q[idx] = principal_minor_sum_containing(replace_row(gram, j, gram.row_at(i - 1)), r, j).value;
    });
    return q * den.inverse();
}

}  // namespace adjinv
