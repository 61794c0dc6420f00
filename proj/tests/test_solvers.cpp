#include <gtest/gtest.h>

#include "adjinv/pinv.hpp"
#include "adjinv/solvers.hpp"
#include "adjinv/verify.hpp"
#include "support/generators.hpp"
#include "worked_examples.hpp"

namespace adjinv {
namespace {

using testing::Gen;

TEST(LsqSolve, System1) {
    const SolveReport s = lsq_solve(examples::system1_matrix(), examples::shared_rhs());
    EXPECT_EQ(s.method, SolveMethod::eq14);
    EXPECT_EQ(s.transformed_rhs, parse_vector("26 -24 10 -23"));
    EXPECT_EQ(s.denominator, Scalar(102060));
    EXPECT_EQ(s.numerators, (std::vector<Scalar>{73158, -24960, 56700, 68316}));
    EXPECT_EQ(s.solution, parse_vector("12193/17010 -416/1701 5/9 5693/8505"));
    EXPECT_EQ(s.solution[1], Scalar::ratio(-24960, 102060));
}

TEST(LsqSolve, FullColumnRankUsesDeterminants) {
    const SolveReport s = lsq_solve(Matrix{{1}, {2}}, parse_vector("5 0"));
    EXPECT_EQ(s.method, SolveMethod::eq13);
    EXPECT_EQ(s.solution, (Matrix{{1}}));
}

TEST(LsqSolve, ZeroCases) {
    const SolveReport z = lsq_solve(Matrix(2, 3), parse_vector("1 2"));
    EXPECT_EQ(z.solution, Matrix(3, 1));
    const SolveReport zero_rhs = lsq_solve(examples::system1_matrix(), Matrix(4, 1));
    EXPECT_EQ(zero_rhs.solution, Matrix(4, 1));
    EXPECT_THROW(lsq_solve(examples::system1_matrix(), parse_vector("1 2 3")), DimensionError);
}

TEST(LsqSolve, EqualsPseudoInverseTimesRhs) {
    Gen g(61);
    for (const auto& c : testing::rank_corpus(62)) {
        const Matrix y = g.dense(c.a.rows(), 1, c.a.rows() % 2 == 0);
        const SolveReport s = lsq_solve(c.a, y);
        EXPECT_EQ(s.solution, mp_inverse(c.a).pseudo_inverse * y);
        EXPECT_EQ(s.method, c.rank == c.a.cols() ? SolveMethod::eq13 : SolveMethod::eq14);
        // Normal equations, and the solution lies in R(A*).
        EXPECT_EQ(conjugate_transpose(c.a) * c.a * s.solution, conjugate_transpose(c.a) * y);
        EXPECT_TRUE(range_membership(conjugate_transpose(c.a), s.solution));
        for (std::size_t j = 0; j < s.numerators.size(); ++j)
            EXPECT_EQ(s.numerators[j], s.solution[j] * s.denominator);
    }
}

// |v|^2 for a column vector.
mpq_class norm2(const Matrix& v) {
    mpq_class total = 0;
    for (const Scalar& x : v.entries()) total += x.norm();
    return total;
}

TEST(LsqSolve, NoPerturbationDoesBetter) {
    Gen g(63);
    for (const auto& c : testing::rank_corpus(64)) {
        const Matrix y = g.dense(c.a.rows(), 1);
        const Matrix x0 = lsq_solve(c.a, y).solution;
        const mpq_class best = norm2(c.a * x0 - y);
        for (int t = 0; t < 5; ++t) {
            const Matrix x = x0 + g.dense(c.a.cols(), 1, t % 2 == 0);
            const mpq_class res = norm2(c.a * x - y);
            EXPECT_GE(res, best);
            // Equal residual only for other least-squares solutions, which are longer.
            if (res == best && x != x0) { EXPECT_GT(norm2(x), norm2(x0)); }
        }
    }
}

TEST(RowSystem, SimpleExample) {
    // x A = y with A = (1, 2)^T and y = (5).
    const SolveReport s = lsq_solve_row_system(parse_vector("5"), Matrix{{1}, {2}});
    EXPECT_EQ(s.solution, (Matrix{{1, 2}}));
    EXPECT_EQ(s.method, SolveMethod::row_eq_general);
    EXPECT_EQ(s.transformed_rhs, (Matrix{{5, 10}}));
}

TEST(RowSystem, TransposeDuality) {
    Gen g(65);
    for (const auto& c : testing::rank_corpus(66)) {
        const Matrix y = g.dense(1, c.a.cols(), c.a.cols() % 2 == 1);
        const SolveReport row = lsq_solve_row_system(y, c.a);
        EXPECT_EQ(row.solution, y * mp_inverse(c.a).pseudo_inverse);
        // x A = y  <=>  A* x* = y*.
        const SolveReport col = lsq_solve(conjugate_transpose(c.a), conjugate_transpose(y));
        EXPECT_EQ(conjugate_transpose(row.solution), col.solution);
    }
}

TEST(DrazinSolve, System2) {
    const SolveReport s = drazin_solve(examples::system2_matrix(), examples::shared_rhs());
    EXPECT_EQ(s.method, SolveMethod::eq16);
    EXPECT_EQ(s.transformed_rhs, parse_vector("10 -1 13 10"));
    EXPECT_EQ(s.denominator, Scalar(8));
    EXPECT_EQ(s.numerators, (std::vector<Scalar>{4, 8, 8, 4}));
    EXPECT_EQ(s.solution, parse_vector("1/2 1 1 1/2"));
}

TEST(DrazinSolve, NonsingularAndNilpotent) {
    const SolveReport c = drazin_solve(Matrix{{2, 1}, {1, 1}}, parse_vector("3 2"));
    EXPECT_EQ(c.method, SolveMethod::classical_cramer);
    EXPECT_EQ(c.solution, parse_vector("1 1"));
    const SolveReport z = drazin_solve(Matrix{{0, 1}, {0, 0}}, parse_vector("3 2"));
    EXPECT_EQ(z.solution, Matrix(2, 1));
    EXPECT_THROW(drazin_solve(Matrix(2, 3), parse_vector("1 2")), DimensionError);
}

TEST(DrazinSolve, GeneralizedNormalEquations) {
    Gen g(67);
    for (const auto& c : testing::index_corpus(68, 2)) {
        const Matrix y = g.dense(c.a.rows(), 1, c.a.rows() % 2 == 0);
        const SolveReport s = drazin_solve(c.a, y);
        const Matrix ak = power(c.a, c.index);
        EXPECT_EQ(ak * c.a * s.solution, ak * y);
        EXPECT_TRUE(range_membership(ak, s.solution));
        EXPECT_EQ(s.solution, drazin_inverse(c.a).drazin_inverse * y);
    }
}

}  // namespace
}  // namespace adjinv
