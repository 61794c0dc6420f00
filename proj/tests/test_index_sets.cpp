#include <gtest/gtest.h>

#include <vector>

#include "adjinv/index_sets.hpp"
#include "support/generators.hpp"

namespace adjinv {
namespace {

std::vector<std::vector<std::size_t>> collect(const SubsetRange& range) {
    std::vector<std::vector<std::size_t>> out;
    for (const IndexSeq& s : range) out.push_back(s.indices());
    return out;
}

TEST(Binomial, SmallValuesAndOverflow) {
    EXPECT_EQ(binomial(5, 2), 10u);
    EXPECT_EQ(binomial(4, 0), 1u);
    EXPECT_EQ(binomial(3, 5), 0u);
    EXPECT_EQ(binomial(60, 30), 118264581564861424ULL);
    EXPECT_THROW(binomial(200, 100), std::overflow_error);
}

TEST(Enumerate, ListsSubsetsOfThreeFromFour) {
    const std::vector<std::vector<std::size_t>> expected{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    EXPECT_EQ(collect(enumerate_k_subsets(3, 4)), expected);
}

TEST(Enumerate, ContainingFixedIndex) {
    const std::vector<std::vector<std::size_t>> expected{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}};
    EXPECT_EQ(collect(enumerate_containing(3, 4, 1)), expected);
    const std::vector<std::vector<std::size_t>> with2{{1, 2}, {2, 3}, {2, 4}};
    EXPECT_EQ(collect(enumerate_containing(2, 4, 2)), with2);
}

TEST(Enumerate, MatchesBitmaskFilter) {
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            const auto all = testing::filtered_subsets(k, n);
            const auto range = enumerate_k_subsets(k, n);
            EXPECT_EQ(collect(range), all) << k << " of " << n;
            EXPECT_EQ(range.size(), binomial(n, k));
            for (std::size_t i = 1; i <= n; ++i) {
                std::vector<std::vector<std::size_t>> filtered;
                for (const auto& s : all)
                    if (std::find(s.begin(), s.end(), i) != s.end()) filtered.push_back(s);
                const auto containing = enumerate_containing(k, n, i);
                EXPECT_EQ(collect(containing), filtered) << k << " of " << n << " containing " << i;
                EXPECT_EQ(containing.size(), binomial(n - 1, k - 1));
            }
        }
}

TEST(Enumerate, SlicesConcatenateToWhole) {
    for (const SubsetRange& whole : {enumerate_k_subsets(3, 7), enumerate_containing(3, 7, 4)}) {
        const auto expected = collect(whole);
        const std::uint64_t total = whole.size();
        for (std::uint64_t parts = 1; parts <= 6; ++parts) {
            std::vector<std::vector<std::size_t>> joined;
            for (std::uint64_t c = 0; c < parts; ++c) {
                auto piece = collect(whole.slice(total * c / parts, total * (c + 1) / parts));
                joined.insert(joined.end(), piece.begin(), piece.end());
            }
            EXPECT_EQ(joined, expected) << parts << " slices";
        }
    }
}

TEST(Enumerate, UnrankAgreesWithSuccessor) {
    const std::size_t k = 3;
    const std::size_t n = 6;
    std::vector<std::size_t> c{1, 2, 3};
    for (std::uint64_t pos = 0; pos < binomial(n, k); ++pos) {
        EXPECT_EQ(detail::unrank_subset(k, n, pos), c);
        detail::next_subset(c, n);
    }
}

TEST(Enumerate, RejectsBadArguments) {
    EXPECT_THROW(enumerate_k_subsets(0, 3), DimensionError);
    EXPECT_THROW(enumerate_k_subsets(4, 3), DimensionError);
    EXPECT_THROW(enumerate_containing(2, 3, 0), DimensionError);
    EXPECT_THROW(enumerate_containing(2, 3, 4), DimensionError);
    EXPECT_THROW(enumerate_k_subsets(2, 5).slice(3, 11), DimensionError);
}

TEST(IndexSeq, Validation) {
    EXPECT_NO_THROW(IndexSeq({1, 3, 4}, 4));
    EXPECT_THROW(IndexSeq({1, 5}, 4), DimensionError);
    EXPECT_THROW(IndexSeq({0, 2}, 4), DimensionError);
    EXPECT_THROW(IndexSeq({2, 2}, 4), DimensionError);
    EXPECT_THROW(IndexSeq({3, 1}, 4), DimensionError);
    EXPECT_TRUE(IndexSeq({1, 3}, 4).contains(3));
    EXPECT_FALSE(IndexSeq({1, 3}, 4).contains(2));
    EXPECT_EQ(IndexSeq::full(3), IndexSeq({1, 2, 3}, 3));
}

}  // namespace
}  // namespace adjinv
