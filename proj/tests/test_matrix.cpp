#include <gtest/gtest.h>

#include "adjinv/elimination.hpp"
#include "adjinv/io.hpp"
#include "adjinv/matrix.hpp"
#include "support/generators.hpp"
#include "worked_examples.hpp"

namespace adjinv {
namespace {

using testing::Gen;

TEST(Matrix, ConjugateTransposeOfSystem1) {
    const Matrix a = examples::system1_matrix();
    const Matrix expected = parse_matrix("4 4\n2 7 3 1\n0 -4 -4 -4\n-5 -9 7 12\n4 1.5 -6.5 -10.5");
    EXPECT_EQ(conjugate_transpose(a), expected);
}

TEST(Matrix, GramFirstRow) {
    const Matrix a = examples::system1_matrix();
    const Matrix gram = conjugate_transpose(a) * a;
    EXPECT_EQ(gram.row_at(0), parse_matrix("1 4\n63 -44 -40 -11.5"));
    EXPECT_EQ(gram(3, 3), Scalar::ratio(683, 4));
    EXPECT_TRUE(is_hermitian(gram));
}

TEST(Matrix, ConjugateTransposeConjugatesEntries) {
    const Matrix a{{Scalar(1, 2), Scalar(3)}, {Scalar(0, -1), Scalar(4, 5)}};
    const Matrix expected{{Scalar(1, -2), Scalar(0, 1)}, {Scalar(3), Scalar(4, -5)}};
    EXPECT_EQ(conjugate_transpose(a), expected);
    EXPECT_EQ(conjugate_transpose(conjugate_transpose(a)), a);
}

TEST(Matrix, PowersOfSystem2) {
    const Matrix a = examples::system2_matrix();
    EXPECT_EQ(power(a, 2), parse_matrix("4 4\n3 -4 4 3\n0 1 -1 0\n4 -5 5 4\n3 -4 4 3"));
    EXPECT_EQ(power(a, 3), parse_matrix("4 4\n10 -14 14 10\n-1 2 -2 -1\n13 -18 18 13\n10 -14 14 10"));
    EXPECT_EQ(power(a, 0), Matrix::identity(4));
    EXPECT_EQ(power(a, 5), a * a * a * a * a);
}

TEST(Matrix, MultiplicationIsAssociativeAndStarReverses) {
    Gen g(21);
    for (int t = 0; t < 50; ++t) {
        const bool complex = t % 2 == 0;
        const Matrix a = g.dense(3, 4, complex);
        const Matrix b = g.dense(4, 2, complex);
        const Matrix c = g.dense(2, 5, complex);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(conjugate_transpose(a * b), conjugate_transpose(b) * conjugate_transpose(a));
    }
}

TEST(Matrix, ShapeErrors) {
    EXPECT_THROW(Matrix(0, 3), DimensionError);
    EXPECT_THROW(Matrix(2, 2) * Matrix(3, 1), DimensionError);
    EXPECT_THROW(Matrix(2, 2) + Matrix(2, 3), DimensionError);
    EXPECT_THROW(power(Matrix(2, 3), 2), DimensionError);
    EXPECT_THROW(replace_column(Matrix(2, 2), 3, Matrix(2, 1)), DimensionError);
    EXPECT_THROW(replace_column(Matrix(2, 2), 1, Matrix(3, 1)), DimensionError);
    EXPECT_THROW(replace_row(Matrix(2, 2), 0, Matrix(1, 2)), DimensionError);
}

TEST(Matrix, ReplaceRowAndColumn) {
    const Matrix a{{1, 2}, {3, 4}};
    EXPECT_EQ(replace_column(a, 2, Matrix{{7}, {8}}), (Matrix{{1, 7}, {3, 8}}));
    EXPECT_EQ(replace_row(a, 1, Matrix{{5, 6}}), (Matrix{{5, 6}, {3, 4}}));
    // A column given as a row vector is accepted too.
    EXPECT_EQ(replace_column(a, 1, Matrix{{9, 9}}), (Matrix{{9, 2}, {9, 4}}));
}

TEST(Rank, WorkedExamples) {
    const Matrix a = examples::system1_matrix();
    EXPECT_EQ(rank(a), 3u);
    EXPECT_EQ(rank(conjugate_transpose(a) * a), 3u);
    EXPECT_EQ(rank(conjugate_transpose(a)), 3u);
    const Matrix b = examples::system2_matrix();
    EXPECT_EQ(rank(b), 3u);
    EXPECT_EQ(rank(power(b, 2)), 2u);
    EXPECT_EQ(rank(power(b, 3)), 2u);
    EXPECT_EQ(rank(Matrix(3, 2)), 0u);
}

TEST(Rank, MatchesConstructionAndGramRank) {
    Gen g(22);
    for (int t = 0; t < 120; ++t) {
        const std::size_t m = 1 + t % 5;
        const std::size_t n = 1 + (t / 5) % 5;
        const std::size_t r = static_cast<std::size_t>(g.integer(0, static_cast<long>(std::min(m, n))));
        const Matrix a = g.with_rank(m, n, r, t % 2 == 0);
        EXPECT_EQ(rank(a), r);
        EXPECT_EQ(rank(conjugate_transpose(a) * a), r);
        EXPECT_EQ(rank(a * conjugate_transpose(a)), r);
        EXPECT_EQ(rank(conjugate_transpose(a)), r);
        EXPECT_EQ(rref(a).pivot_cols.size(), r);
    }
}

TEST(Determinant, MatchesCofactorExpansion) {
    Gen g(23);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 1 + t % 4;
        const Matrix a = g.dense(n, n, t % 3 == 0);
        EXPECT_EQ(determinant(a), testing::cofactor_det(a));
    }
}

TEST(Determinant, SingularAndSmallCases) {
    EXPECT_EQ(determinant(Matrix{{1, 2}, {2, 4}}), Scalar());
    EXPECT_EQ(determinant(Matrix{{Scalar(0, 1)}}), Scalar(0, 1));
    EXPECT_EQ(determinant(examples::system1_matrix()), Scalar());
    EXPECT_THROW(determinant(Matrix(2, 3)), DimensionError);
}

TEST(Inverse, AdjugateOverDeterminant) {
    Gen g(24);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 4;
        const Matrix a = g.invertible(n, t % 2 == 0);
        const Matrix inv = inverse(a);
        EXPECT_EQ(a * inv, Matrix::identity(n));
        EXPECT_EQ(adjugate(a) * a, Matrix::identity(n) * determinant(a));
    }
    EXPECT_THROW(inverse(Matrix{{1, 1}, {1, 1}}), PreconditionError);
}

TEST(Rref, ReducedFormReproducesMatrix) {
    Gen g(25);
    for (int t = 0; t < 60; ++t) {
        const Matrix a = g.with_rank(4, 5, 1 + t % 4, t % 2 == 1);
        const RowEchelon e = rref(a);
        // Pivot columns of A times the nonzero rows of rref(A) give A back.
        const std::size_t r = e.pivot_cols.size();
        Matrix f(4, r);
        Matrix gm(r, 5);
        for (std::size_t c = 0; c < r; ++c) {
            for (std::size_t i = 0; i < 4; ++i) f(i, c) = a(i, e.pivot_cols[c]);
            for (std::size_t j = 0; j < 5; ++j) gm(c, j) = e.reduced(c, j);
            EXPECT_EQ(e.reduced(c, e.pivot_cols[c]), Scalar(1));
        }
        EXPECT_EQ(f * gm, a);
    }
}

}  // namespace
}  // namespace adjinv
