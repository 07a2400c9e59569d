#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "graphgen/bigcount.hpp"
#include "graphgen/combinat.hpp"
#include "graphgen/edgelist.hpp"
#include "graphgen/matrix.hpp"
#include "graphgen/random.hpp"

namespace graphgen {

namespace detail {

inline std::int64_t checked_cell_count(std::int64_t rows, std::int64_t cols) {
    if (rows < 1 || cols < 1) throw std::domain_error("sampler: need at least one node");
    if (rows > (std::int64_t{1} << 62) / cols)
        throw std::overflow_error("sampler: cell count exceeds 2^62");
    return rows * cols;
}

}  // namespace detail

// One Bernoulli trial per cell of P. The general oracle every faster sampler
// is validated against. Cells are visited column-major.
inline EdgeList coin_flip_matrix(const ProbabilityMatrix& P, RandomStream& stream) {
    P.validate_probabilities();
    EdgeList out;
    out.num_rows = P.rows;
    out.num_cols = P.cols;
    for (std::int64_t j = 0; j < P.cols; ++j)
        for (std::int64_t i = 0; i < P.rows; ++i)
            if (stream.uniform_unit() < P.at(i, j)) out.edges.push_back({i, j});
    return out;
}

// Erdos-Renyi by coin flipping: all n^2 cells, column-major, probability p
// each. O(n^2) regardless of how sparse the result is.
inline EdgeList coin_flip_er(std::int64_t n, Probability p, RandomStream& stream) {
    detail::checked_cell_count(n, n);
    const double pv = p.value();
    EdgeList out;
    out.num_rows = n;
    out.num_cols = n;
    for (std::int64_t j = 0; j < n; ++j)
        for (std::int64_t i = 0; i < n; ++i)
            if (stream.uniform_unit() < pv) out.edges.push_back({i, j});
    return out;
}

// Erdos-Renyi by ball dropping: draw the edge count m ~ Binomial(n^2, p),
// then drop uniform cells, rejecting duplicates, until m distinct edges
// exist. Exact; the marginal of every cell is p. Intended for p <= 0.5 --
// see ball_drop_er_complement for dense graphs.
inline BallDropReport ball_drop_er(std::int64_t n, Probability p, RandomStream& stream) {
    const std::int64_t cells = detail::checked_cell_count(n, n);
    const std::int64_t m = sample_binomial(stream, cells, p);

    BallDropReport report;
    report.edges.num_rows = n;
    report.edges.num_cols = n;
    report.edges.edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(2 * m));
    while (static_cast<std::int64_t>(report.edges.size()) < m) {
        const std::int64_t i = uniform_int(stream, 0, n - 1);
        const std::int64_t j = uniform_int(stream, 0, n - 1);
        ++report.draws;
        const std::uint64_t key = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n) +
                                  static_cast<std::uint64_t>(j);
        if (seen.insert(key).second)
            report.edges.edges.push_back({i, j});
        else
            ++report.duplicates;
    }
    return report;
}

// Dense variant: ball-drop the non-edges at probability 1-p and return the
// complement. Per-cell marginal is still exactly p. Requires p > 0.5.
inline BallDropReport ball_drop_er_complement(std::int64_t n, Probability p,
                                              RandomStream& stream) {
    if (!(p.value() > 0.5))
        throw std::domain_error("ball_drop_er_complement: requires p > 0.5");
    const std::int64_t cells = detail::checked_cell_count(n, n);
    BallDropReport inner = ball_drop_er(n, Probability(1.0 - p.value()), stream);

    std::vector<bool> missing(static_cast<std::size_t>(cells), false);
    for (const Edge& e : inner.edges.edges)
        missing[static_cast<std::size_t>(e.src * n + e.dst)] = true;

    BallDropReport report;
    report.draws = inner.draws;
    report.duplicates = inner.duplicates;
    report.edges.num_rows = n;
    report.edges.num_cols = n;
    report.edges.edges.reserve(static_cast<std::size_t>(cells) - inner.edges.size());
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            if (!missing[static_cast<std::size_t>(i * n + j)])
                report.edges.edges.push_back({i, j});
    return report;
}

// Grass-hopping over a rows-by-cols Bernoulli(p) grid: the linear index
// starts at -1 and advances by geometric gaps; every landing inside the grid
// is an edge at (index div cols, index mod cols). Work is proportional to
// the number of edges emitted, and each cell's marginal is exactly p.
inline EdgeList grass_hop_er_rect(std::int64_t rows, std::int64_t cols, Probability p,
                                  RandomStream& stream) {
    const std::int64_t cells = detail::checked_cell_count(rows, cols);
    EdgeList out;
    out.num_rows = rows;
    out.num_cols = cols;
    if (p.value() == 0.0) return out;
    std::int64_t index = -1;
    for (;;) {
        const std::int64_t gap = sample_geometric(stream, p);
        if (gap > cells - 1 - index) break;
        index += gap;
        out.edges.push_back({index / cols, index % cols});
    }
    return out;
}

inline EdgeList grass_hop_er(std::int64_t n, Probability p, RandomStream& stream) {
    return grass_hop_er_rect(n, n, p, stream);
}

// Uniform sample from the graphs with n vertices and exactly m undirected
// edges: draw one rank below C(C(n,2), m), unrank it to m strictly
// increasing pair indices, and unrank each pair index to a node pair.
// Emits undirected edges as (src, dst) with src < dst.
inline EdgeList fixed_edge_er(std::int64_t n, std::int64_t m, RandomStream& stream) {
    if (n < 1) throw std::domain_error("fixed_edge_er: need at least one node");
    const BigCount pair_count = binomial(n, 2);
    if (!pair_count.fits_u64() || pair_count.to_u64() > (std::uint64_t{1} << 62))
        throw std::overflow_error("fixed_edge_er: pair space exceeds 2^62");
    const std::int64_t slots = static_cast<std::int64_t>(pair_count.to_u64());
    if (m < 0 || m > slots)
        throw std::overflow_error("fixed_edge_er: edge count exceeds C(n,2)");

    const BigCount graphs = binomial(slots, m);  // throws past 128 bits
    const BigCount rank = BigCount::from_raw(uniform_below_u128(stream, graphs.raw()));

    EdgeList out;
    out.num_rows = n;
    out.num_cols = n;
    out.edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t pair_index : unrank_combination(rank, slots, m)) {
        const auto pair =
            unrank_combination(BigCount(static_cast<std::uint64_t>(pair_index)), n, 2);
        out.edges.push_back({pair[0], pair[1]});
    }
    return out;
}

// Undirected interpretation of a directed sample: keep the strict upper
// triangle and mirror it, so the output adjacency is T + T' with an empty
// diagonal.
inline EdgeList symmetrize(const EdgeList& input) {
    if (input.num_rows != input.num_cols)
        throw std::invalid_argument("symmetrize: node space must be square");
    EdgeList out;
    out.num_rows = input.num_rows;
    out.num_cols = input.num_cols;
    for (const Edge& e : input.edges) {
        if (e.src < e.dst) {
            out.edges.push_back(e);
            out.edges.push_back({e.dst, e.src});
        }
    }
    return out;
}

}  // namespace graphgen
