#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphgen/bigcount.hpp"
#include "graphgen/combinat.hpp"
#include "graphgen/detail/parallel.hpp"
#include "graphgen/edgelist.hpp"
#include "graphgen/er.hpp"
#include "graphgen/matrix.hpp"
#include "graphgen/random.hpp"

namespace graphgen {

// Small n-by-n initiator matrix K; the k-fold Kronecker power of K is the
// probability matrix of the model. v is the column-major vectorization,
// v[i + j*n] = K(i, j).
struct Initiator {
    std::int64_t n = 0;
    std::vector<double> entries;  // row-major n*n

    Initiator() = default;
    explicit Initiator(const ProbabilityMatrix& K) : n(K.rows), entries(K.data) {
        if (K.rows != K.cols) throw std::domain_error("Initiator: matrix must be square");
        if (K.rows < 1) throw std::domain_error("Initiator: empty matrix");
        K.validate_probabilities();
    }
    Initiator(std::initializer_list<std::initializer_list<double>> rows) {
        n = static_cast<std::int64_t>(rows.size());
        for (const auto& row : rows) {
            if (static_cast<std::int64_t>(row.size()) != n)
                throw std::domain_error("Initiator: matrix must be square");
            for (double v : row) {
                if (!(v >= 0.0 && v <= 1.0))
                    throw std::domain_error("Initiator: entry outside [0, 1]");
                entries.push_back(v);
            }
        }
        if (n < 1) throw std::domain_error("Initiator: empty matrix");
    }

    double at(std::int64_t i, std::int64_t j) const {
        return entries[static_cast<std::size_t>(i * n + j)];
    }
};

// Column-major flattening: vec([[a,b],[c,d]]) = [a, c, b, d].
inline std::vector<double> vectorize(const Initiator& K) {
    std::vector<double> v;
    v.reserve(K.entries.size());
    for (std::int64_t j = 0; j < K.n; ++j)
        for (std::int64_t i = 0; i < K.n; ++i) v.push_back(K.at(i, j));
    return v;
}

// Multiplication-table entry: the product v[r_1] v[r_2] ... v[r_k].
inline double multtable(std::span<const int> r, std::span<const double> v) {
    double prod = 1.0;
    for (int idx : r) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= v.size())
            throw std::range_error("multtable: index out of range");
        prod *= v[static_cast<std::size_t>(idx)];
    }
    return prod;
}

// One Erdos-Renyi region of the multiplication table: its label, common
// probability, cell count, and the multiset permutations the sampler landed
// on. Hits are the grass-hop landings unranked in lexicographic order.
struct RegionSample {
    NDSequence region;
    double prob = 0.0;
    BigCount size;
    std::vector<std::vector<int>> hits;
    std::uint64_t geometric_draws = 0;
};

// Grass-hop the linear positions 0..size-1 of one region; every landing is
// unranked to a multiplication-table multi-index. Each cell of the region is
// hit with probability exactly `prob`. Regions with 2^63 or more cells are
// beyond the 64-bit gap arithmetic and rejected.
inline RegionSample grass_hop_region(const NDSequence& region, std::span<const double> v,
                                     RandomStream& stream) {
    if (!is_non_decreasing(region))
        throw std::invalid_argument("grass_hop_region: region must be non-decreasing");
    RegionSample sample;
    sample.region = region;
    sample.prob = multtable(region, v);
    sample.size = num_multiset_permutations(ndseq_to_counter(region));
    if (!(sample.prob >= 0.0 && sample.prob <= 1.0))
        throw std::domain_error("grass_hop_region: region probability outside [0, 1]");
    if (sample.prob == 0.0) return sample;
    if (!sample.size.fits_u64() || sample.size.to_u64() > static_cast<std::uint64_t>(INT64_MAX))
        throw std::overflow_error("grass_hop_region: region size exceeds 2^63-1");

    const std::int64_t size = static_cast<std::int64_t>(sample.size.to_u64());
    const Probability p(sample.prob);
    std::int64_t index = -1;
    for (;;) {
        const std::int64_t gap = sample_geometric(stream, p);
        ++sample.geometric_draws;
        if (gap > size - 1 - index) break;
        index += gap;
        sample.hits.push_back(unrank_multiset(region, static_cast<std::uint64_t>(index)));
    }
    return sample;
}

// Multiplication-table multi-index -> (row, col) of the Kronecker matrix:
// linearize the multi-index in base n^2, then Morton-decode in base n. The
// landed cell's probability equals multtable(mind, v).
inline std::pair<std::int64_t, std::int64_t> map_mult_to_kron(std::span<const int> mind,
                                                              std::int64_t n) {
    if (n < 1) throw std::domain_error("map_mult_to_kron: initiator side must be >= 1");
    const std::int64_t n2 = n * n;
    unsigned __int128 linear = 0;
    for (int digit : mind) {
        if (digit < 0 || digit >= n2)
            throw std::range_error("map_mult_to_kron: multi-index entry out of range");
        linear = linear * static_cast<unsigned __int128>(n2) +
                 static_cast<unsigned __int128>(digit);
    }
    if (n == 1) return {0, 0};
    return detail::morton_decode_impl<unsigned __int128>(linear, static_cast<int>(n));
}

// Same map without the linear-index intermediate: digit i contributes
// (r_i mod n) n^place to the row and floor(r_i / n) n^place to the column.
inline std::pair<std::int64_t, std::int64_t> backward_map(std::span<const int> mind,
                                                          std::int64_t n) {
    if (n < 1) throw std::domain_error("backward_map: initiator side must be >= 1");
    const std::int64_t n2 = n * n;
    std::int64_t row = 0, col = 0;
    std::int64_t place = 1;
    for (std::size_t i = mind.size(); i-- > 0;) {
        const int digit = mind[i];
        if (digit < 0 || digit >= n2)
            throw std::range_error("backward_map: multi-index entry out of range");
        row += (digit % n) * place;
        col += (digit / n) * place;
        place *= n;
    }
    return {row, col};
}

// Dense K^(x)k, oracle scale only (side capped at 2^12). Each cell is the
// product over digit positions of K(row digit, col digit), most-significant
// first -- the same factor order multtable uses, so values agree exactly.
inline ProbabilityMatrix kronecker_power_dense(const Initiator& K, int k) {
    if (k < 1) throw std::domain_error("kronecker_power_dense: power must be >= 1");
    std::int64_t side = 1;
    for (int i = 0; i < k; ++i) {
        side *= K.n;
        if (side > (std::int64_t{1} << 12))
            throw std::overflow_error("kronecker_power_dense: side exceeds 2^12");
    }
    ProbabilityMatrix P(side, side);
    for (std::int64_t i = 0; i < side; ++i) {
        for (std::int64_t j = 0; j < side; ++j) {
            double prod = 1.0;
            for (std::int64_t place = side / K.n; place >= 1; place /= K.n)
                prod *= K.at((i / place) % K.n, (j / place) % K.n);
            P.at(i, j) = prod;
        }
    }
    return P;
}

struct KronSampleReport {
    EdgeList edges;
    std::uint64_t regions_total = 0;    // non-decreasing sequences enumerated
    std::uint64_t regions_sampled = 0;  // regions with positive probability
    std::uint64_t geometric_draws = 0;  // one per edge plus one overshoot per sampled region
};

// The full pipeline: enumerate the C(k + n^2 - 1, k) regions of the
// multiplication table, grass-hop inside each, and map every hit through the
// Morton code to Kronecker coordinates. Cell (i,j) appears with probability
// (K^(x)k)(i,j) exactly. Regions draw from child streams keyed by region
// rank, so sampling them across threads reproduces the sequential output.
inline KronSampleReport grass_hop_kron_report(const Initiator& K, int k, RandomStream& stream,
                                              int threads = 1) {
    if (k < 1 || k > 34)
        throw std::domain_error("grass_hop_kron: power must lie in [1, 34]");
    unsigned __int128 side = 1;
    for (int i = 0; i < k; ++i) side *= static_cast<unsigned>(K.n);
    if (side > (static_cast<unsigned __int128>(1) << 62))
        throw std::overflow_error("grass_hop_kron: node count exceeds 2^62");

    const std::vector<double> v = vectorize(K);
    const int m = static_cast<int>(K.n * K.n);

    KronSampleReport report;
    report.edges.num_rows = static_cast<std::int64_t>(side);
    report.edges.num_cols = static_cast<std::int64_t>(side);
    RandomStream region_master(stream.next_u64());

    auto absorb = [&](const RegionSample& sample) {
        ++report.regions_total;
        if (sample.prob > 0.0) ++report.regions_sampled;
        report.geometric_draws += sample.geometric_draws;
        for (const auto& hit : sample.hits) {
            const auto [row, col] = map_mult_to_kron(hit, K.n);
            report.edges.edges.push_back({row, col});
        }
    };

    if (threads <= 1) {
        std::uint64_t ri = 0;
        for_each_region(m, k, [&](const NDSequence& region) {
            RandomStream region_stream = region_master.child(ri++);
            absorb(grass_hop_region(region, v, region_stream));
        });
        return report;
    }

    // Parallel mode materializes the region labels; fine at desk scale.
    std::vector<NDSequence> region_list;
    for_each_region(m, k, [&](const NDSequence& r) { region_list.push_back(r); });
    std::vector<RegionSample> samples(region_list.size());
    detail::parallel_for_index(region_list.size(), threads, [&](std::size_t ri) {
        RandomStream region_stream = region_master.child(ri);
        samples[ri] = grass_hop_region(region_list[ri], v, region_stream);
    });
    for (const RegionSample& sample : samples) absorb(sample);
    return report;
}

inline EdgeList grass_hop_kron(const Initiator& K, int k, RandomStream& stream,
                               int threads = 1) {
    return grass_hop_kron_report(K, k, stream, threads).edges;
}

// Coin-flip oracle over the dense Kronecker power; validates grass_hop_kron
// at small scale.
inline EdgeList coin_flip_kron(const Initiator& K, int k, RandomStream& stream) {
    const ProbabilityMatrix P = kronecker_power_dense(K, k);
    return coin_flip_matrix(P, stream);
}

}  // namespace graphgen
