#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "graphgen/detail/parallel.hpp"
#include "graphgen/edgelist.hpp"
#include "graphgen/er.hpp"
#include "graphgen/matrix.hpp"
#include "graphgen/random.hpp"

namespace graphgen {

// Target degree per node for the Chung-Lu model.
using DegreeSequence = std::vector<std::int64_t>;

// Stochastic block model: block sizes n_1..n_t and a t-by-t matrix Q where
// Q(r,s) is the edge probability between block r and block s.
struct BlockSpec {
    std::vector<std::int64_t> sizes;
    ProbabilityMatrix q;

    std::int64_t num_nodes() const noexcept {
        return std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
    }

    void validate() const {
        if (sizes.empty()) throw std::domain_error("BlockSpec: no blocks");
        for (std::int64_t s : sizes)
            if (s < 1) throw std::domain_error("BlockSpec: block sizes must be >= 1");
        if (q.rows != static_cast<std::int64_t>(sizes.size()) || q.rows != q.cols)
            throw std::domain_error("BlockSpec: Q shape must match block count");
        q.validate_probabilities();
    }
};

namespace detail {

inline std::int64_t degree_total(const DegreeSequence& d) {
    std::int64_t total = 0;
    for (std::int64_t v : d) {
        if (v < 0) throw std::domain_error("DegreeSequence: negative degree");
        total += v;
    }
    return total;
}

// All P_ij = d_i d_j / total must be probabilities, i.e. max(d)^2 <= total.
inline std::int64_t validate_chung_lu(const DegreeSequence& d) {
    const std::int64_t total = degree_total(d);
    if (total <= 0) throw std::domain_error("chung_lu: degree sum must be positive");
    const std::int64_t dmax = *std::max_element(d.begin(), d.end());
    if (dmax > total / dmax)
        throw std::domain_error("chung_lu: max degree squared exceeds degree sum");
    return total;
}

// Nodes stably sorted by ascending degree, partitioned into runs of equal
// degree. perm[sorted position] = original node index.
struct DegreeGroups {
    std::vector<std::int64_t> perm;
    std::vector<std::int64_t> start;   // first sorted position of each group
    std::vector<std::int64_t> degree;  // common degree of each group

    std::int64_t count() const noexcept { return static_cast<std::int64_t>(degree.size()); }
    std::int64_t size(std::int64_t g) const noexcept {
        return (g + 1 < count() ? start[static_cast<std::size_t>(g + 1)]
                                : static_cast<std::int64_t>(perm.size())) -
               start[static_cast<std::size_t>(g)];
    }
};

inline DegreeGroups group_degrees(const DegreeSequence& d) {
    DegreeGroups groups;
    groups.perm.resize(d.size());
    std::iota(groups.perm.begin(), groups.perm.end(), std::int64_t{0});
    std::stable_sort(groups.perm.begin(), groups.perm.end(),
                     [&](std::int64_t a, std::int64_t b) {
                         return d[static_cast<std::size_t>(a)] < d[static_cast<std::size_t>(b)];
                     });
    for (std::size_t pos = 0; pos < groups.perm.size(); ++pos) {
        const std::int64_t deg = d[static_cast<std::size_t>(groups.perm[pos])];
        if (groups.degree.empty() || groups.degree.back() != deg) {
            groups.start.push_back(static_cast<std::int64_t>(pos));
            groups.degree.push_back(deg);
        }
    }
    return groups;
}

}  // namespace detail

// The Chung-Lu cell probability P_ij = d_i d_j / sum(d).
inline double chung_lu_probability(const DegreeSequence& d, std::size_t i, std::size_t j) {
    const std::int64_t total = detail::degree_total(d);
    if (total <= 0) throw std::domain_error("chung_lu_probability: degree sum must be positive");
    if (i >= d.size() || j >= d.size())
        throw std::out_of_range("chung_lu_probability: node index out of range");
    const double p = static_cast<double>(d[i]) * static_cast<double>(d[j]) /
                     static_cast<double>(total);
    if (p > 1.0) throw std::domain_error("chung_lu_probability: d_i d_j exceeds degree sum");
    return p;
}

struct ChungLuGrassReport {
    EdgeList edges;
    std::int64_t blocks_visited = 0;
};

// Chung-Lu as a union of Erdos-Renyi blocks: nodes are sorted by degree into
// t groups, each of the t^2 group pairs is grass-hopped at probability
// d_a d_b / sum(d), and the inverse permutation restores original node ids.
// Each block draws from a child stream keyed by block index, so the parallel
// mode produces output identical to the sequential one.
inline ChungLuGrassReport chung_lu_grass_report(const DegreeSequence& d, RandomStream& stream,
                                                int threads = 1) {
    const std::int64_t total = detail::validate_chung_lu(d);
    const detail::DegreeGroups groups = detail::group_degrees(d);
    const std::int64_t t = groups.count();

    RandomStream block_master(stream.next_u64());
    std::vector<EdgeList> blocks(static_cast<std::size_t>(t * t));
    detail::parallel_for_index(blocks.size(), threads, [&](std::size_t index) {
        const std::int64_t a = static_cast<std::int64_t>(index) / t;
        const std::int64_t b = static_cast<std::int64_t>(index) % t;
        const double p = static_cast<double>(groups.degree[static_cast<std::size_t>(a)]) *
                         static_cast<double>(groups.degree[static_cast<std::size_t>(b)]) /
                         static_cast<double>(total);
        RandomStream block_stream = block_master.child(index);
        blocks[index] =
            grass_hop_er_rect(groups.size(a), groups.size(b), Probability(p), block_stream);
    });

    ChungLuGrassReport report;
    report.edges.num_rows = static_cast<std::int64_t>(d.size());
    report.edges.num_cols = static_cast<std::int64_t>(d.size());
    for (std::size_t index = 0; index < blocks.size(); ++index) {
        const std::int64_t a = static_cast<std::int64_t>(index) / t;
        const std::int64_t b = static_cast<std::int64_t>(index) % t;
        const std::int64_t row0 = groups.start[static_cast<std::size_t>(a)];
        const std::int64_t col0 = groups.start[static_cast<std::size_t>(b)];
        ++report.blocks_visited;
        for (const Edge& e : blocks[index].edges)
            report.edges.edges.push_back({groups.perm[static_cast<std::size_t>(row0 + e.src)],
                                          groups.perm[static_cast<std::size_t>(col0 + e.dst)]});
    }
    return report;
}

inline EdgeList chung_lu_grass(const DegreeSequence& d, RandomStream& stream, int threads = 1) {
    return chung_lu_grass_report(d, stream, threads).edges;
}

// The repeated-index list: node i appears d[i] times, so a uniform pick from
// the list selects i with probability d_i / sum(d).
inline std::vector<std::int64_t> build_repeat_list(const DegreeSequence& d) {
    std::vector<std::int64_t> list;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) throw std::domain_error("build_repeat_list: negative degree");
        for (std::int64_t c = 0; c < d[i]; ++c)
            list.push_back(static_cast<std::int64_t>(i));
    }
    return list;
}

// Chung-Lu by ball dropping: each drop picks both endpoints from the
// repeated-index list, hitting cell (i,j) with probability
// d_i d_j / (sum d)^2; duplicates are rejected until sum(d) distinct edges
// exist. Can converge slowly when high-degree corners saturate.
inline BallDropReport chung_lu_ball(const DegreeSequence& d, RandomStream& stream) {
    const std::int64_t n = static_cast<std::int64_t>(d.size());
    const std::int64_t total = detail::degree_total(d);
    if (total <= 0) throw std::domain_error("chung_lu_ball: degree sum must be positive");
    if (total > n * n)
        throw std::domain_error("chung_lu_ball: degree sum exceeds the number of cells");
    const std::vector<std::int64_t> list = build_repeat_list(d);

    BallDropReport report;
    report.edges.num_rows = n;
    report.edges.num_cols = n;
    report.edges.edges.reserve(static_cast<std::size_t>(total));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(2 * total));
    const std::int64_t last = static_cast<std::int64_t>(list.size()) - 1;
    while (static_cast<std::int64_t>(report.edges.size()) < total) {
        const std::int64_t src = list[static_cast<std::size_t>(uniform_int(stream, 0, last))];
        const std::int64_t dst = list[static_cast<std::size_t>(uniform_int(stream, 0, last))];
        ++report.draws;
        const std::uint64_t key = static_cast<std::uint64_t>(src) * static_cast<std::uint64_t>(n) +
                                  static_cast<std::uint64_t>(dst);
        if (seen.insert(key).second)
            report.edges.edges.push_back({src, dst});
        else
            ++report.duplicates;
    }
    return report;
}

// SBM by grass-hopping each (r,s) block at probability Q(r,s) and offsetting
// edges by the block corner. Per-block child streams as in chung_lu_grass.
inline EdgeList sbm_grass(const BlockSpec& spec, RandomStream& stream, int threads = 1) {
    spec.validate();
    const std::int64_t t = static_cast<std::int64_t>(spec.sizes.size());
    std::vector<std::int64_t> corner(spec.sizes.size() + 1, 0);
    for (std::size_t i = 0; i < spec.sizes.size(); ++i)
        corner[i + 1] = corner[i] + spec.sizes[i];

    RandomStream block_master(stream.next_u64());
    std::vector<EdgeList> blocks(static_cast<std::size_t>(t * t));
    detail::parallel_for_index(blocks.size(), threads, [&](std::size_t index) {
        const std::int64_t r = static_cast<std::int64_t>(index) / t;
        const std::int64_t s = static_cast<std::int64_t>(index) % t;
        RandomStream block_stream = block_master.child(index);
        blocks[index] = grass_hop_er_rect(spec.sizes[static_cast<std::size_t>(r)],
                                          spec.sizes[static_cast<std::size_t>(s)],
                                          Probability(spec.q.at(r, s)), block_stream);
    });

    EdgeList out;
    out.num_rows = spec.num_nodes();
    out.num_cols = out.num_rows;
    for (std::size_t index = 0; index < blocks.size(); ++index) {
        const std::int64_t r = static_cast<std::int64_t>(index) / t;
        const std::int64_t s = static_cast<std::int64_t>(index) % t;
        for (const Edge& e : blocks[index].edges)
            out.edges.push_back({e.src + corner[static_cast<std::size_t>(r)],
                                 e.dst + corner[static_cast<std::size_t>(s)]});
    }
    return out;
}

// SBM by ball dropping: per-block edge targets drawn up front from
// Binomial(n_r n_s, Q(r,s)); each drop picks a still-unfinished block with
// probability proportional to n_r n_s Q(r,s), then a uniform cell inside it,
// rejecting duplicates until every block reaches its target.
inline BallDropReport sbm_ball(const BlockSpec& spec, RandomStream& stream) {
    spec.validate();
    const std::int64_t t = static_cast<std::int64_t>(spec.sizes.size());
    std::vector<std::int64_t> corner(spec.sizes.size() + 1, 0);
    for (std::size_t i = 0; i < spec.sizes.size(); ++i)
        corner[i + 1] = corner[i] + spec.sizes[i];

    struct BlockState {
        std::int64_t r, s;
        std::int64_t target;
        std::int64_t filled = 0;
        double weight;
    };
    std::vector<BlockState> blocks;
    for (std::int64_t r = 0; r < t; ++r) {
        for (std::int64_t s = 0; s < t; ++s) {
            const std::int64_t rows = spec.sizes[static_cast<std::size_t>(r)];
            const std::int64_t cols = spec.sizes[static_cast<std::size_t>(s)];
            const double q = spec.q.at(r, s);
            const std::int64_t target = sample_binomial(stream, rows * cols, Probability(q));
            blocks.push_back({r, s, target, 0,
                              static_cast<double>(rows) * static_cast<double>(cols) * q});
        }
    }

    BallDropReport report;
    report.edges.num_rows = spec.num_nodes();
    report.edges.num_cols = report.edges.num_rows;
    std::unordered_set<std::uint64_t> seen;

    std::vector<std::size_t> active;
    std::vector<double> weights;
    auto rebuild_active = [&] {
        active.clear();
        weights.clear();
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].filled < blocks[b].target) {
                active.push_back(b);
                weights.push_back(blocks[b].weight);
            }
        }
    };
    rebuild_active();
    const std::uint64_t n = static_cast<std::uint64_t>(report.edges.num_rows);
    while (!active.empty()) {
        BlockState& blk = blocks[active[sample_discrete(stream, weights)]];
        const std::int64_t i =
            corner[static_cast<std::size_t>(blk.r)] +
            uniform_int(stream, 0, spec.sizes[static_cast<std::size_t>(blk.r)] - 1);
        const std::int64_t j =
            corner[static_cast<std::size_t>(blk.s)] +
            uniform_int(stream, 0, spec.sizes[static_cast<std::size_t>(blk.s)] - 1);
        ++report.draws;
        const std::uint64_t key = static_cast<std::uint64_t>(i) * n + static_cast<std::uint64_t>(j);
        if (seen.insert(key).second) {
            report.edges.edges.push_back({i, j});
            if (++blk.filled == blk.target) rebuild_active();
        } else {
            ++report.duplicates;
        }
    }
    return report;
}

// The block view of Chung-Lu: group equal degrees (ascending), block sizes
// are the group sizes, and Q(a,b) = d_a d_b / sum(d). Sampling the result
// with sbm_grass, then applying the degree-sort permutation, matches
// chung_lu_grass in distribution.
inline BlockSpec chung_lu_as_sbm(const DegreeSequence& d) {
    const std::int64_t total = detail::validate_chung_lu(d);
    const detail::DegreeGroups groups = detail::group_degrees(d);
    const std::int64_t t = groups.count();

    BlockSpec spec;
    spec.q = ProbabilityMatrix(t, t);
    for (std::int64_t a = 0; a < t; ++a) {
        spec.sizes.push_back(groups.size(a));
        for (std::int64_t b = 0; b < t; ++b)
            spec.q.at(a, b) = static_cast<double>(groups.degree[static_cast<std::size_t>(a)]) *
                              static_cast<double>(groups.degree[static_cast<std::size_t>(b)]) /
                              static_cast<double>(total);
    }
    return spec;
}

}  // namespace graphgen
