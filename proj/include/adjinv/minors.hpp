#pragma once

/**
 * @file minors.hpp
 * @brief Minors |A_beta^alpha| and sums of principal minors.
 *
 * d_k(M) is the sum of all order-k principal minors of a square M; it is the
 * k-th coefficient (up to sign) of the characteristic polynomial of M. The
 * restricted sums over the subsets containing a fixed index produce every
 * numerator of the generalized-inverse representations.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "adjinv/elimination.hpp"
#include "adjinv/errors.hpp"
#include "adjinv/index_sets.hpp"
#include "adjinv/matrix.hpp"
#include "adjinv/parallel.hpp"
#include "adjinv/scalar.hpp"

namespace adjinv {

/// A sum of minors together with the number of determinants it took.
struct MinorSum {
    Scalar value;
    std::uint64_t terms = 0;
};

/// Submatrix on the selected rows and columns (copied).
inline Matrix submatrix(const Matrix& a, const IndexSeq& rows, const IndexSeq& cols) {
    Matrix out(rows.size(), cols.size());
    for (std::size_t s = 0; s < rows.size(); ++s)
        for (std::size_t t = 0; t < cols.size(); ++t) out(s, t) = a(rows[s] - 1, cols[t] - 1);
    return out;
}

/// |A_beta^alpha|: determinant of the rows alpha and columns beta of A.
inline Scalar minor(const Matrix& a, const IndexSeq& rows, const IndexSeq& cols) {
    if (rows.size() != cols.size()) throw DimensionError("minor needs as many rows as columns");
    if (rows.size() == 0) throw DimensionError("minor of order zero");
    if (rows.indices().back() > a.rows() || cols.indices().back() > a.cols())
        throw DimensionError("minor index set exceeds matrix dimensions");
    return determinant(submatrix(a, rows, cols));
}

inline Scalar principal_minor(const Matrix& a, const IndexSeq& beta) { return minor(a, beta, beta); }

/// Sum of |A_beta^beta| over every beta in `family`. With more than one
/// thread the family is cut into contiguous lexicographic slices.
inline MinorSum sum_principal_minors(const Matrix& a, const SubsetRange& family, ComputeOptions opts = {}) {
    if (!a.is_square()) throw DimensionError("principal minors of a non-square matrix");
    if (family.n() != a.rows()) throw DimensionError("index family universe does not match matrix order");
    const std::uint64_t total = family.size();
    const std::size_t chunks =
        static_cast<std::size_t>(std::min<std::uint64_t>(std::max(1U, opts.threads), total == 0 ? 1 : total));
    std::vector<Scalar> partial(chunks);
    parallel_for(chunks, opts.threads, [&](std::size_t c) {
        auto slice = family.slice(total * c / chunks, total * (c + 1) / chunks);
        Scalar acc;
        for (const IndexSeq& beta : slice) acc += principal_minor(a, beta);
        partial[c] = std::move(acc);
    });
    MinorSum out;
    for (auto& p : partial) out.value += p;
    out.terms = total;
    return out;
}

/// d_k(A): sum of all order-k principal minors.
inline Scalar principal_minor_sum(const Matrix& a, std::size_t k, ComputeOptions opts = {}) {
    if (!a.is_square()) throw DimensionError("principal minors of a non-square matrix");
    if (k < 1 || k > a.rows()) throw DimensionError("principal minor order out of range");
    return sum_principal_minors(a, enumerate_k_subsets(k, a.rows()), opts).value;
}

/// Sum of order-k principal minors over the subsets that contain index i (1-based).
inline MinorSum principal_minor_sum_containing(const Matrix& a, std::size_t k, std::size_t i,
                                               ComputeOptions opts = {}) {
    if (!a.is_square()) throw DimensionError("principal minors of a non-square matrix");
    return sum_principal_minors(a, enumerate_containing(k, a.rows(), i), opts);
}

/**
 * d_1 .. d_n with det(tI - A) = t^n - d_1 t^{n-1} + d_2 t^{n-2} - ... + (-1)^n d_n.
 * Returned 0-based: coeffs[k-1] = d_k.
 */
inline std::vector<Scalar> char_poly_coeffs(const Matrix& a, ComputeOptions opts = {}) {
    if (!a.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
    std::vector<Scalar> d;
    d.reserve(a.rows());
    for (std::size_t k = 1; k <= a.rows(); ++k) d.push_back(principal_minor_sum(a, k, opts));
    return d;
}

}  // namespace adjinv
