#pragma once

/**
 * @file drazin.hpp
 * @brief Matrix index, Drazin and group inverses via principal-minor sums.
 *
 * With k = Ind A and r = rank A^k >= 1,
 *
 *   A^D(i,j) = d_ij / d_r(A^{k+1}),
 *   d_ij     = sum over beta in J_{r,n}{i} of |(A^{k+1}_{.i}(a^{(k)}_{.j}))_beta^beta|,
 *
 * a^{(k)}_{.j} being column j of A^k. Index 0 is the classical inverse and a
 * nilpotent A (r = 0) has A^D = 0.
 */

#include <cstddef>
#include <string>
#include <utility>

#include "adjinv/elimination.hpp"
#include "adjinv/errors.hpp"
#include "adjinv/index_sets.hpp"
#include "adjinv/matrix.hpp"
#include "adjinv/minors.hpp"
#include "adjinv/parallel.hpp"

namespace adjinv {

struct DrazinResult {
    Matrix drazin_inverse;
    std::size_t index = 0;      ///< k = Ind A
    std::size_t rank_core = 0;  ///< r = rank A^k
    Scalar denominator;         ///< d_r(A^{k+1}); det A when k = 0; 1 when r = 0
    Matrix numerators;          ///< the d_ij ledger
};

/// Ind A: the smallest k >= 0 with rank A^{k+1} = rank A^k.
inline std::size_t index_of(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("index of a non-square matrix");
    std::size_t prev_rank = a.rows();
    Matrix p = a;  // A^{k+1}
    for (std::size_t k = 0;; ++k) {
        const std::size_t rk = rank(p);
        if (rk == prev_rank) return k;
        prev_rank = rk;
        p = p * a;
    }
}

namespace detail {

/// Minor-sum ratio with numerator columns taken from `columns`: entry (i,j) sums
/// |(high_{.i}(columns_{.j}))_beta^beta| over J_{r,n}{i}, divided by d_r(high).
inline std::pair<Matrix, Scalar> minor_ratio(const Matrix& high, const Matrix& columns, std::size_t r,
                                              ComputeOptions opts, Matrix* ledger) {
    const std::size_t n = high.rows();
    Scalar den = sum_principal_minors(high, enumerate_k_subsets(r, n), opts).value;
    if (den.is_zero())
        throw InternalError("d_" + std::to_string(r) + "(A^{k+1}) vanished although rank A^k = " + std::to_string(r));
    Matrix num(n, n);
    parallel_for(n * n, opts.threads, [&](std::size_t idx) {
        const std::size_t i = idx / n + 1;
        const std::size_t j = idx % n + 1;
        num[idx] = principal_minor_sum_containing(replace_column(high, i, columns.col(j - 1)), r, i).value;
    });
    Matrix x = num * den.inverse();
    if (ledger != nullptr) *ledger = std::move(num);
    return {std::move(x), std::move(den)};
}

}  // namespace detail

/**
 * Evaluates the Drazin representation with exponent s in place of Ind A
 * (numerator columns from A^s, minors of A^{s+1}, r = rank A^s). s must be
 * at least Ind A; s = 0 requires A nonsingular. The result does not depend
 * on the choice of s.
 */
inline DrazinResult drazin_inverse_at(const Matrix& a, std::size_t s, ComputeOptions opts = {}) {
    if (!a.is_square()) throw DimensionError("Drazin inverse of a non-square matrix");
    const std::size_t n = a.rows();
    if (s == 0) {
        Scalar det = determinant(a);
        if (det.is_zero()) throw PreconditionError("exponent 0 needs a nonsingular matrix");
        Matrix adj = adjugate(a);
        Matrix x = adj * det.inverse();
        return DrazinResult{std::move(x), 0, n, std::move(det), std::move(adj)};
    }
    const Matrix as = power(a, s);
    const std::size_t r = rank(as);
    if (r == 0) return DrazinResult{zeros(n, n), s, 0, Scalar(1), zeros(n, n)};
    const Matrix high = as * a;
    if (rank(high) != r) throw PreconditionError("exponent is below the index of the matrix");
    Matrix ledger(n, n);
    auto [x, den] = detail::minor_ratio(high, as, r, opts, &ledger);
    return DrazinResult{std::move(x), s, r, std::move(den), std::move(ledger)};
}

inline DrazinResult drazin_inverse(const Matrix& a, ComputeOptions opts = {}) {
    return drazin_inverse_at(a, index_of(a), opts);
}

/// A^# for Ind A <= 1 (the inverse when Ind A = 0). Throws PreconditionError otherwise.
inline DrazinResult group_inverse(const Matrix& a, ComputeOptions opts = {}) {
    const std::size_t k = index_of(a);
    if (k >= 2) throw PreconditionError("group inverse does not exist (index " + std::to_string(k) + ")");
    return drazin_inverse_at(a, k, opts);
}

/**
 * A^D A, entry (i,j) = v_ij / d_r(A^{k+1}) with v_ij summing
 * |(A^{k+1}_{.i}(a^{(k+1)}_{.j}))_beta^beta| over J_{r,n}{i}.
 */
inline Matrix drazin_times_a(const Matrix& a, ComputeOptions opts = {}) {
    if (!a.is_square()) throw DimensionError("Drazin projector of a non-square matrix");
    const std::size_t n = a.rows();
    const std::size_t k = index_of(a);
    if (k == 0) return Matrix::identity(n);
    const Matrix ak = power(a, k);
    const std::size_t r = rank(ak);
    if (r == 0) return zeros(n, n);
    const Matrix high = ak * a;
    return detail::minor_ratio(high, high, r, opts, nullptr).first;
}

}  // namespace adjinv
