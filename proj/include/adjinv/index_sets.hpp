#pragma once

/**
 * @file index_sets.hpp
 * @brief Strictly increasing index sequences and their lexicographic enumeration.
 *
 * enumerate_k_subsets(k, n) walks every k-subset of {1..n} in lexicographic
 * order; enumerate_containing(k, n, i) walks those that include i. Both are restartable
 * ranges holding only the current sequence, and both can be opened at an
 * arbitrary rank so workers can split an enumeration into contiguous blocks.
 */

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adjinv/errors.hpp"

namespace adjinv {

/// C(n, k); 0 when k > n. Throws on overflow of 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t t = 1; t <= k; ++t) {
        std::uint64_t numer = n - k + t;
        // result * numer / t is exact at every step; divide first where possible.
        std::uint64_t g = std::gcd(result, t);
        std::uint64_t r = result / g;
        std::uint64_t d = t / g;
        if (numer / d > std::numeric_limits<std::uint64_t>::max() / r)
            throw std::overflow_error("binomial coefficient overflows 64 bits");
        result = r * (numer / d);
    }
    return result;
}

/// Strictly increasing 1-based indices drawn from {1..universe}.
class IndexSeq {
public:
    IndexSeq(std::vector<std::size_t> indices, std::size_t universe)
        : indices_(std::move(indices)), universe_(universe) {
        for (std::size_t t = 0; t < indices_.size(); ++t) {
            if (indices_[t] < 1 || indices_[t] > universe_)
                throw DimensionError("index " + std::to_string(indices_[t]) + " outside 1.." +
                                     std::to_string(universe_));
            if (t > 0 && indices_[t - 1] >= indices_[t]) throw DimensionError("indices must be strictly increasing");
        }
    }

    /// (1, ..., n)
    static IndexSeq full(std::size_t n) {
        std::vector<std::size_t> v(n);
        for (std::size_t t = 0; t < n; ++t) v[t] = t + 1;
        return IndexSeq(std::move(v), n);
    }

    std::size_t size() const noexcept { return indices_.size(); }
    std::size_t universe() const noexcept { return universe_; }
    std::size_t operator[](std::size_t t) const { return indices_[t]; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    bool contains(std::size_t i) const {
        for (std::size_t x : indices_)
            if (x == i) return true;
        return false;
    }

    friend bool operator==(const IndexSeq&, const IndexSeq&) = default;

    friend std::ostream& operator<<(std::ostream& os, const IndexSeq& s) {
        os << '(';
        for (std::size_t t = 0; t < s.size(); ++t) os << (t ? "," : "") << s[t];
        return os << ')';
    }

private:
    std::vector<std::size_t> indices_;
    std::size_t universe_;
};

namespace detail {

inline void check_k_n(std::size_t k, std::size_t n) {
    if (k == 0) throw DimensionError("subset size must be at least 1");
    if (k > n) throw DimensionError("subset size " + std::to_string(k) + " exceeds universe " + std::to_string(n));
}

/// The k-subset of {1..n} at lexicographic position `pos` (0-based).
inline std::vector<std::size_t> unrank_subset(std::size_t k, std::size_t n, std::uint64_t pos) {
    std::vector<std::size_t> out;
    out.reserve(k);
    std::size_t next = 1;
    for (std::size_t slot = 0; slot < k; ++slot) {
        // Count subsets whose slot-th element is `next`; skip whole blocks.
        for (;;) {
            std::uint64_t block = binomial(n - next, k - slot - 1);
            if (pos < block) break;
            pos -= block;
            ++next;
        }
        out.push_back(next);
        ++next;
    }
    return out;
}

/// Advance to the lexicographic successor; false when c was the last subset.
inline bool next_subset(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t t = k;
    while (t > 0) {
        --t;
        if (c[t] < n - (k - 1 - t)) {
            ++c[t];
            for (std::size_t u = t + 1; u < k; ++u) c[u] = c[u - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/**
 * Lexicographic range over L_{k,n} (all k-subsets of {1..n}), optionally
 * restricted to positions [first, last) and optionally forced to contain a
 * fixed index. Iterators are input iterators that own their current subset.
 */
class SubsetRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = IndexSeq;
        using difference_type = std::ptrdiff_t;
        using pointer = const IndexSeq*;
        using reference = IndexSeq;

        iterator() = default;

        IndexSeq operator*() const { return IndexSeq(materialize(), universe_); }

        iterator& operator++() {
            ++pos_;
            if (pos_ < last_ && !detail::next_subset(base_, base_n_)) pos_ = last_;
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

        std::uint64_t position() const noexcept { return pos_; }

    private:
        friend class SubsetRange;

        std::vector<std::size_t> materialize() const {
            if (required_ == 0) return base_;
            // base_ is a (k-1)-subset of {1..n-1}; shift values >= required up and insert it.
            std::vector<std::size_t> out;
            out.reserve(base_.size() + 1);
            bool placed = false;
            for (std::size_t x : base_) {
                std::size_t v = x >= required_ ? x + 1 : x;
                if (!placed && v > required_) {
                    out.push_back(required_);
                    placed = true;
                }
                out.push_back(v);
            }
            if (!placed) out.push_back(required_);
            return out;
        }

        std::vector<std::size_t> base_;
        std::size_t base_n_ = 0;
        std::size_t universe_ = 0;
        std::size_t required_ = 0;
        std::uint64_t pos_ = 0;
        std::uint64_t last_ = 0;
    };

    iterator begin() const {
        iterator it;
        it.base_n_ = base_n_;
        it.universe_ = n_;
        it.required_ = required_;
        it.pos_ = first_;
        it.last_ = last_;
        if (first_ < last_) it.base_ = detail::unrank_subset(base_k_, base_n_, first_);
        return it;
    }

    iterator end() const {
        iterator it;
        it.pos_ = last_;
        return it;
    }

    /// Number of sequences this range yields.
    std::uint64_t size() const noexcept { return last_ - first_; }

    /// Total size of the unrestricted family (C(n,k) or C(n-1,k-1)).
    std::uint64_t family_size() const noexcept { return total_; }

    /// The sub-range of positions [first, last) of this family.
    SubsetRange slice(std::uint64_t first, std::uint64_t last) const {
        if (first > last || last > total_) throw DimensionError("slice outside enumeration");
        SubsetRange out = *this;
        out.first_ = first;
        out.last_ = last;
        return out;
    }

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }

private:
    friend SubsetRange enumerate_k_subsets(std::size_t k, std::size_t n);
    friend SubsetRange enumerate_containing(std::size_t k, std::size_t n, std::size_t i);

    SubsetRange() = default;

    std::size_t k_ = 0;
    std::size_t n_ = 0;
    std::size_t base_k_ = 0;
    std::size_t base_n_ = 0;
    std::size_t required_ = 0;  ///< 0 = none
    std::uint64_t total_ = 0;
    std::uint64_t first_ = 0;
    std::uint64_t last_ = 0;
};

/// L_{k,n}: every strictly increasing k-sequence over {1..n}, lexicographic.
inline SubsetRange enumerate_k_subsets(std::size_t k, std::size_t n) {
    detail::check_k_n(k, n);
    SubsetRange r;
    r.k_ = k;
    r.n_ = n;
    r.base_k_ = k;
    r.base_n_ = n;
    r.total_ = binomial(n, k);
    r.last_ = r.total_;
    return r;
}

/// The members of L_{k,n} containing i (the J_{k,n}{i} / I_{k,m}{j} families).
inline SubsetRange enumerate_containing(std::size_t k, std::size_t n, std::size_t i) {
    detail::check_k_n(k, n);
    if (i < 1 || i > n) throw DimensionError("required index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    SubsetRange r;
    r.k_ = k;
    r.n_ = n;
    r.required_ = i;
    r.base_k_ = k - 1;
    r.base_n_ = n - 1;
    r.total_ = binomial(n - 1, k - 1);
    r.last_ = r.total_;
    return r;
}

}  // namespace adjinv
