#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

namespace graphgen {

struct Edge {
    std::int64_t src = 0;
    std::int64_t dst = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Ordered collection of directed edges over a rows-by-cols node space.
// Samplers guarantee 0 <= src < num_rows, 0 <= dst < num_cols and no
// duplicate pairs; edge order is emission order for seed reproducibility.
struct EdgeList {
    std::vector<Edge> edges;
    std::int64_t num_rows = 0;
    std::int64_t num_cols = 0;

    std::size_t size() const noexcept { return edges.size(); }

    void sort_lexicographic() { std::sort(edges.begin(), edges.end()); }

    friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

// Ball-drop outcome with the rejection accounting of the coupon-collector
// analysis: draws = |edges| + duplicates.
struct BallDropReport {
    EdgeList edges;
    std::uint64_t draws = 0;
    std::uint64_t duplicates = 0;
};

}  // namespace graphgen
