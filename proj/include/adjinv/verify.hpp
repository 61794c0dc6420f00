#pragma once

/**
 * @file verify.hpp
 * @brief Defining-equation checks and independent oracles.
 *
 * Nothing here touches the minor-sum machinery. oracle_pinv goes through a
 * rank factorization read off the reduced row-echelon form, and
 * oracle_drazin reuses it via A^D = A^k (A^{2k+1})+ A^k. All comparisons are
 * exact.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjinv/elimination.hpp"
#include "adjinv/errors.hpp"
#include "adjinv/matrix.hpp"

namespace adjinv {

struct VerifyReport {
    struct Check {
        std::string name;
        bool passed = false;
    };

    std::vector<Check> checks;
    std::optional<Matrix> witness;  ///< lhs - rhs of the first failing identity

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    void record(std::string name, const Matrix& lhs, const Matrix& rhs) {
        const bool ok = lhs == rhs;
        if (!ok && !witness) {
            if (lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols())
                witness = lhs - rhs;
            else
                witness = lhs;
        }
        checks.push_back({std::move(name), ok});
    }
};

/// AXA = A, XAX = X, (AX)* = AX, (XA)* = XA.
inline VerifyReport check_penrose(const Matrix& a, const Matrix& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw DimensionError("check_penrose: X must be " + std::to_string(a.cols()) + "x" + std::to_string(a.rows()));
    const Matrix ax = a * x;
    const Matrix xa = x * a;
    VerifyReport report;
    report.record("AXA = A", ax * a, a);
    report.record("XAX = X", x * ax, x);
    report.record("(AX)* = AX", conjugate_transpose(ax), ax);
    report.record("(XA)* = XA", conjugate_transpose(xa), xa);
    return report;
}

/// A^{k+1}X = A^k, XAX = X, AX = XA.
inline VerifyReport check_drazin(const Matrix& a, const Matrix& x, std::size_t k) {
    if (!a.is_square() || !x.is_square() || a.rows() != x.rows())
        throw DimensionError("check_drazin: A and X must be square of the same order");
    const Matrix ak = power(a, k);
    const Matrix ax = a * x;
    VerifyReport report;
    report.record("A^{k+1}X = A^k", ak * ax, ak);
    report.record("XAX = X", x * ax, x);
    report.record("AX = XA", ax, x * a);
    return report;
}

/**
 * A+ from the rank factorization A = F G, where F holds the pivot columns of
 * A and G the nonzero rows of rref(A):  A+ = G*(GG*)^{-1}(F*F)^{-1}F*.
 * The zero matrix maps to zero.
 */
inline Matrix oracle_pinv(const Matrix& a) {
    if (a.is_zero()) return zeros(a.cols(), a.rows());
    const RowEchelon e = rref(a);
    const std::size_t r = e.pivot_cols.size();
    Matrix f(a.rows(), r);
    Matrix g(r, a.cols());
    for (std::size_t t = 0; t < r; ++t) {
        for (std::size_t i = 0; i < a.rows(); ++i) f(i, t) = a(i, e.pivot_cols[t]);
        for (std::size_t j = 0; j < a.cols(); ++j) g(t, j) = e.reduced(t, j);
    }
    const Matrix f_star = conjugate_transpose(f);
    const Matrix g_star = conjugate_transpose(g);
    return g_star * inverse(g * g_star) * inverse(f_star * f) * f_star;
}

/// Ind A by rank iteration (same definition as index_of, kept local so the oracle stands alone).
inline std::size_t oracle_index(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("oracle_index: square matrix required");
    std::size_t k = 0;
    std::size_t prev = a.rows();
    Matrix p = a;
    while (true) {
        std::size_t rk = rank(p);
        if (rk == prev) return k;
        prev = rk;
        p = p * a;
        ++k;
    }
}

/// A^D = A^k (A^{2k+1})+ A^k with k = Ind A.
inline Matrix oracle_drazin(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("oracle_drazin: square matrix required");
    const std::size_t k = oracle_index(a);
    const Matrix ak = power(a, k);
    return ak * oracle_pinv(power(a, 2 * k + 1)) * ak;
}

/// x lies in the column space of B: rank [B | x] = rank B.
inline bool range_membership(const Matrix& b, const Matrix& x) {
    if (!x.is_vector() || x.rows() * x.cols() != b.rows())
        throw DimensionError("range_membership: vector length must equal the row count");
    const Matrix col = x.cols() == 1 ? x : transpose(x);
    return rank(hconcat(b, col)) == rank(b);
}

}  // namespace adjinv
