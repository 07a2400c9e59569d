#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphgen/bigcount.hpp"

namespace graphgen {

// A non-decreasing integer sequence over the alphabet [0, m-1]; the label of
// one Erdos-Renyi region of a Kronecker probability matrix. The exhausted
// state is the all-(-1) sentinel.
using NDSequence = std::vector<int>;

inline bool is_sentinel(const NDSequence& seq) noexcept {
    return !seq.empty() && seq[0] == -1;
}

inline bool is_non_decreasing(std::span<const int> seq) noexcept {
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i - 1] > seq[i]) return false;
    return true;
}

// Multiset as value -> multiplicity. Keys iterate in sorted order; the sum of
// multiplicities is the cardinality of the multiset.
struct MultisetCounter {
    std::map<int, std::int64_t> counts;

    std::int64_t cardinality() const noexcept {
        std::int64_t total = 0;
        for (const auto& [value, mult] : counts) total += mult;
        return total;
    }

    std::vector<int> keys() const {
        std::vector<int> out;
        out.reserve(counts.size());
        for (const auto& [value, mult] : counts) out.push_back(value);
        return out;
    }
};

// Lexicographic successor among non-decreasing sequences of the same length
// over [0, m-1]. The maximum sequence steps to the all-(-1) sentinel.
inline NDSequence next_region(const NDSequence& cur, int m) {
    if (cur.empty()) throw std::invalid_argument("next_region: empty sequence");
    if (is_sentinel(cur)) throw std::invalid_argument("next_region: sentinel input");
    NDSequence next = cur;
    std::size_t i = next.size();
    while (i > 0 && next[i - 1] == m - 1) --i;
    if (i == 0) {
        std::fill(next.begin(), next.end(), -1);
        return next;
    }
    ++next[i - 1];
    std::fill(next.begin() + static_cast<std::ptrdiff_t>(i), next.end(), next[i - 1]);
    return next;
}

// Visits every non-decreasing length-k sequence over [0, m-1] in
// lexicographic order; the sentinel never reaches the callback.
template <typename Fn>
inline void for_each_region(int m, std::int64_t k, Fn&& fn) {
    if (m < 1 || k < 1) throw std::domain_error("regions: need m >= 1 and k >= 1");
    NDSequence cur(static_cast<std::size_t>(k), 0);
    while (!is_sentinel(cur)) {
        fn(static_cast<const NDSequence&>(cur));
        cur = next_region(cur, m);
    }
}

inline std::vector<NDSequence> regions(int m, std::int64_t k) {
    std::vector<NDSequence> out;
    for_each_region(m, k, [&](const NDSequence& r) { out.push_back(r); });
    return out;
}

// Number of multisets of cardinality k over m symbols: C(k + m - 1, k).
inline BigCount count_regions(int m, std::int64_t k) {
    if (m < 1 || k < 0) throw std::domain_error("count_regions: need m >= 1 and k >= 0");
    return binomial(k + m - 1, k);
}

// Region count when the n-by-n initiator is symmetric: the distinct values
// number C(n+1, 2), so the count is C(C(n+1,2) + k - 1, k).
inline BigCount count_regions_symmetric(int n, std::int64_t k) {
    if (n < 1 || k < 0)
        throw std::domain_error("count_regions_symmetric: need n >= 1 and k >= 0");
    const std::int64_t distinct = static_cast<std::int64_t>(n) * (n + 1) / 2;
    return binomial(distinct + k - 1, k);
}

inline MultisetCounter ndseq_to_counter(std::span<const int> seq) {
    MultisetCounter mset;
    for (int v : seq) ++mset.counts[v];
    return mset;
}

inline NDSequence counter_to_ndseq(const MultisetCounter& mset) {
    NDSequence seq;
    seq.reserve(static_cast<std::size_t>(mset.cardinality()));
    for (const auto& [value, mult] : mset.counts)
        for (std::int64_t i = 0; i < mult; ++i) seq.push_back(value);
    return seq;
}

// Distinct arrangements of the multiset: m! / (a_1! a_2! ... a_k!), computed
// as a product of prefix binomials so intermediates never exceed the result.
inline BigCount num_multiset_permutations(const MultisetCounter& mset) {
    BigCount count{1};
    std::int64_t placed = 0;
    for (const auto& [value, mult] : mset.counts) {
        placed += mult;
        count *= binomial(placed, mult);
    }
    return count;
}

// The rank-th (0-based) distinct permutation of `seq` in lexicographic order.
// At each position the first symbol is found by subtracting sub-counts: with
// r elements left and total T arrangements, fixing symbol s leaves
// T * count(s) / r of them.
inline std::vector<int> unrank_multiset(std::span<const int> seq, std::uint64_t rank) {
    if (!is_non_decreasing(seq))
        throw std::invalid_argument("unrank_multiset: sequence not non-decreasing");
    MultisetCounter mset = ndseq_to_counter(seq);
    BigCount total = num_multiset_permutations(mset);
    if (BigCount(rank) >= total) throw std::out_of_range("unrank_multiset: rank too large");

    std::vector<int> out;
    out.reserve(seq.size());
    unsigned __int128 n = rank;
    std::int64_t remaining = static_cast<std::int64_t>(seq.size());
    while (remaining > 0) {
        if (n == 0) {
            for (const auto& [value, mult] : mset.counts)
                for (std::int64_t i = 0; i < mult; ++i) out.push_back(value);
            break;
        }
        bool placed = false;
        for (auto it = mset.counts.begin(); it != mset.counts.end(); ++it) {
            const BigCount with_s =
                total * BigCount(static_cast<std::uint64_t>(it->second)) /
                BigCount(static_cast<std::uint64_t>(remaining));
            if (with_s.raw() > n) {
                out.push_back(it->first);
                total = with_s;
                --remaining;
                if (--it->second == 0) mset.counts.erase(it);
                placed = true;
                break;
            }
            n -= with_s.raw();
        }
        if (!placed) throw std::out_of_range("unrank_multiset: rank too large");
    }
    return out;
}

// The rank-th strictly increasing length-`length` sequence over
// [0, max_val - 1] in lexicographic order. The first element is located by
// binary search on the hockey-stick cumulative C(M, r) - C(M - t - 1, r).
inline std::vector<std::int64_t> unrank_combination(BigCount rank, std::int64_t max_val,
                                                    std::int64_t length) {
    if (max_val < 0 || length < 0 || length > max_val)
        throw std::domain_error("unrank_combination: invalid domain");
    if (rank >= binomial(max_val, length))
        throw std::out_of_range("unrank_combination: rank too large");

    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(length));
    std::int64_t base = 0;  // smallest value still available
    std::int64_t avail = max_val;
    for (std::int64_t r = length; r > 0; --r) {
        // smallest offset t with rank < C(avail, r) - C(avail - t - 1, r)
        const BigCount all = binomial(avail, r);
        std::int64_t lo = 0, hi = avail - r;
        while (lo < hi) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (rank < all - binomial(avail - mid - 1, r))
                hi = mid;
            else
                lo = mid + 1;
        }
        rank -= all - binomial(avail - lo, r);
        out.push_back(base + lo);
        base += lo + 1;
        avail -= lo + 1;
    }
    return out;
}

inline std::vector<std::int64_t> unrank_combination(std::uint64_t rank, std::int64_t max_val,
                                                    std::int64_t length) {
    return unrank_combination(BigCount(rank), max_val, length);
}

namespace detail {

// Base-n digit de-interleave; least-significant digit goes to the row, the
// next to the column, alternating upward.
template <typename UInt>
inline std::pair<std::int64_t, std::int64_t> morton_decode_impl(UInt I, int n) {
    std::int64_t row = 0, col = 0;
    std::int64_t place = 1;
    const UInt base = static_cast<UInt>(n);
    while (I > 0) {
        row += static_cast<std::int64_t>(I % base) * place;
        I /= base;
        col += static_cast<std::int64_t>(I % base) * place;
        I /= base;
        place *= n;
    }
    return {row, col};
}

}  // namespace detail

inline std::pair<std::int64_t, std::int64_t> morton_decode(std::uint64_t I, int n) {
    if (n < 2) throw std::domain_error("morton_decode: base must be >= 2");
    return detail::morton_decode_impl<std::uint64_t>(I, n);
}

// Interleaves k base-n digits of row and col, row digit in the
// least-significant slot of each pair. Inverse of morton_decode on [0, n^2k).
inline std::uint64_t morton_encode(std::int64_t row, std::int64_t col, int n, int k) {
    if (n < 2) throw std::domain_error("morton_encode: base must be >= 2");
    if (k < 0) throw std::domain_error("morton_encode: negative digit count");
    unsigned __int128 limit = 1;
    for (int i = 0; i < k; ++i) limit *= static_cast<unsigned>(n);
    if (row < 0 || col < 0 || static_cast<unsigned __int128>(row) >= limit ||
        static_cast<unsigned __int128>(col) >= limit)
        throw std::range_error("morton_encode: coordinate out of range");
    unsigned __int128 out = 0;
    unsigned __int128 place = 1;
    for (int i = 0; i < k; ++i) {
        out += place * static_cast<unsigned __int128>(row % n);
        place *= static_cast<unsigned>(n);
        out += place * static_cast<unsigned __int128>(col % n);
        place *= static_cast<unsigned>(n);
        row /= n;
        col /= n;
    }
    if (out > static_cast<unsigned __int128>(UINT64_MAX))
        throw std::overflow_error("morton_encode: code exceeds 64 bits");
    return static_cast<std::uint64_t>(out);
}

// Positional value of a most-significant-first digit sequence:
// sum of mind[i] * base^(k-1-i).
inline std::uint64_t multiindex_to_linear(std::span<const int> mind, std::int64_t base) {
    if (base < 1) throw std::domain_error("multiindex_to_linear: base must be >= 1");
    unsigned __int128 out = 0;
    for (int digit : mind) {
        if (digit < 0 || digit >= base)
            throw std::range_error("multiindex_to_linear: digit out of range");
        out = out * static_cast<unsigned __int128>(base) +
              static_cast<unsigned __int128>(digit);
        if (out > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("multiindex_to_linear: index exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(out);
}

}  // namespace graphgen
