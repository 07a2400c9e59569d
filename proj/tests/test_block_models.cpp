#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "graphgen/block_models.hpp"
#include "graphgen/stats.hpp"

using namespace graphgen;

TEST_CASE("chung_lu_probability matches the d_i d_j / sum(d) table") {
    const DegreeSequence d{4, 3, 2, 2, 2, 1, 1, 1};
    CHECK(chung_lu_probability(d, 0, 0) == 1.00);
    CHECK(chung_lu_probability(d, 0, 1) == 0.75);

    const DegreeSequence with_zero{0, 2, 2};
    for (std::size_t j = 0; j < with_zero.size(); ++j)
        CHECK(chung_lu_probability(with_zero, 0, j) == 0.0);

    const DegreeSequence invalid{5, 1, 1};  // 25 > 7
    CHECK_THROWS_AS(chung_lu_probability(invalid, 0, 0), std::domain_error);
}

TEST_CASE("chung_lu_grass visits t^2 blocks and respects bounds") {
    const DegreeSequence d{4, 3, 2, 2, 2, 1, 1, 1};
    RandomStream s(1);
    const ChungLuGrassReport report = chung_lu_grass_report(d, s);
    CHECK(report.blocks_visited == 16);  // four distinct degrees
    CHECK(report.edges.num_rows == 8);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const Edge& e : report.edges.edges) {
        CHECK(e.src >= 0);
        CHECK(e.src < 8);
        CHECK(e.dst >= 0);
        CHECK(e.dst < 8);
        CHECK(seen.insert({e.src, e.dst}).second);
    }
    CHECK_THROWS_AS(chung_lu_grass(DegreeSequence{5, 1, 1}, s), std::domain_error);
}

TEST_CASE("uniform degrees degenerate to a single ER block") {
    const DegreeSequence d{2, 2, 2, 2};  // p = 4/8 everywhere
    RandomStream s(2);
    const ChungLuGrassReport report = chung_lu_grass_report(d, s);
    CHECK(report.blocks_visited == 1);

    const std::uint64_t samples = 4000;
    RandomStream base(3);
    const FrequencyMatrix freq = empirical_frequency(
        [&](RandomStream& cs) { return chung_lu_grass(d, cs); }, 4, 4, samples, base);
    const double bound = 4.0 * std::sqrt(0.5 * 0.5 / double(samples));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::abs(freq.frequency(i, j) - 0.5) < bound);
}

TEST_CASE("successive samples from one stream differ") {
    const DegreeSequence d{4, 3, 2, 2, 2, 1, 1, 1};
    RandomStream s(4);
    const EdgeList a = chung_lu_grass(d, s);
    const EdgeList b = chung_lu_grass(d, s);
    CHECK(a.edges != b.edges);
}

TEST_CASE("build_repeat_list and chung_lu_ball") {
    CHECK(build_repeat_list(DegreeSequence{1, 1}) == std::vector<std::int64_t>{0, 1});
    CHECK(build_repeat_list(DegreeSequence{2, 1, 1}) == std::vector<std::int64_t>{0, 0, 1, 2});

    // endpoint draw frequency: entry 0 occupies half the list for d = (2,1,1)
    RandomStream s(5);
    const std::vector<std::int64_t> list = build_repeat_list(DegreeSequence{2, 1, 1});
    int zeros = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
        zeros += list[static_cast<std::size_t>(uniform_int(s, 0, 3))] == 0 ? 1 : 0;
    CHECK(std::abs(zeros / double(draws) - 0.5) < 0.0063);

    // the paper-style skewed sequence: exactly sum(d) = 12 edges per sample
    for (int rep = 0; rep < 20; ++rep) {
        RandomStream fresh(600 + rep);
        const BallDropReport report = chung_lu_ball(DegreeSequence{5, 1, 1, 2, 2, 1}, fresh);
        CHECK(report.edges.size() == 12);
        CHECK(report.draws == report.edges.size() + report.duplicates);
        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        for (const Edge& e : report.edges.edges) CHECK(seen.insert({e.src, e.dst}).second);
    }
}

TEST_CASE("BlockSpec validation") {
    BlockSpec bad;
    bad.sizes = {3, 0};
    bad.q = ProbabilityMatrix(2, 2, 0.5);
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.sizes = {3, 5};
    bad.q = ProbabilityMatrix(3, 3, 0.5);
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.q = ProbabilityMatrix(2, 2, 0.5);
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("sbm_grass marginal structure at the two-block example") {
    BlockSpec spec;
    spec.sizes = {3, 5};
    spec.q = ProbabilityMatrix(2, 2, 0.1);
    spec.q.at(0, 0) = spec.q.at(1, 1) = 0.7;

    // the expected marginal matrix is block-constant
    const auto expected = [&](std::int64_t i, std::int64_t j) {
        const int bi = i < 3 ? 0 : 1;
        const int bj = j < 3 ? 0 : 1;
        return spec.q.at(bi, bj);
    };
    const std::uint64_t samples = 4000;
    RandomStream base(6);
    const FrequencyMatrix freq = empirical_frequency(
        [&](RandomStream& cs) { return sbm_grass(spec, cs); }, 8, 8, samples, base);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const double p = expected(i, j);
            const double bound = 4.0 * std::sqrt(p * (1 - p) / double(samples));
            CHECK(std::abs(freq.frequency(i, j) - p) < bound);
        }
    }
}

TEST_CASE("sbm_ball reaches each block's binomial target without duplicates") {
    BlockSpec spec;
    spec.sizes = {3, 5};
    spec.q = ProbabilityMatrix(2, 2, 0.1);
    spec.q.at(0, 0) = spec.q.at(1, 1) = 0.7;

    RandomStream s(7);
    const BallDropReport report = sbm_ball(spec, s);
    CHECK(report.draws == report.edges.size() + report.duplicates);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const Edge& e : report.edges.edges) {
        CHECK(e.src >= 0);
        CHECK(e.src < 8);
        CHECK(e.dst >= 0);
        CHECK(e.dst < 8);
        CHECK(seen.insert({e.src, e.dst}).second);
    }

    BlockSpec zero;
    zero.sizes = {4};
    zero.q = ProbabilityMatrix(1, 1, 0.0);
    RandomStream zs(8);
    CHECK(sbm_ball(zero, zs).edges.size() == 0);

    // single block degenerates to plain ER ball-dropping
    BlockSpec single;
    single.sizes = {6};
    single.q = ProbabilityMatrix(1, 1, 0.3);
    RandomStream ss(9);
    const BallDropReport er_like = sbm_ball(single, ss);
    CHECK(er_like.edges.num_rows == 6);
    for (const Edge& e : er_like.edges.edges) {
        CHECK(e.src < 6);
        CHECK(e.dst < 6);
    }
}

TEST_CASE("single-block sbm_grass matches grass_hop_er in distribution") {
    BlockSpec spec;
    spec.sizes = {6};
    spec.q = ProbabilityMatrix(1, 1, 0.35);
    const std::uint64_t samples = 4000;
    RandomStream base(10);
    const FrequencyMatrix freq = empirical_frequency(
        [&](RandomStream& cs) { return sbm_grass(spec, cs); }, 6, 6, samples, base);
    const double bound = 4.0 * std::sqrt(0.35 * 0.65 / double(samples));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(std::abs(freq.frequency(i, j) - 0.35) < bound);
}

TEST_CASE("chung_lu_as_sbm reconstructs the probability table") {
    const DegreeSequence d{4, 3, 2, 2, 2, 1, 1, 1};
    const BlockSpec spec = chung_lu_as_sbm(d);
    CHECK(spec.sizes == std::vector<std::int64_t>{3, 3, 1, 1});  // ascending degrees 1,2,3,4
    CHECK(spec.q.at(3, 3) == 1.0);

    const DegreeSequence uniform{3, 3, 3};
    CHECK(chung_lu_as_sbm(uniform).sizes == std::vector<std::int64_t>{3});

    // round-trip: the block-constant matrix rebuilt from (sizes, Q), mapped
    // back through the degree sort, must equal d_i d_j / sum(d) entrywise.
    RandomStream seeds(11);
    for (int rep = 0; rep < 20; ++rep) {
        DegreeSequence random_d;
        const int n = static_cast<int>(uniform_int(seeds, 2, 9));
        for (int i = 0; i < n; ++i) random_d.push_back(uniform_int(seeds, 0, 3));
        std::int64_t total = 0, dmax = 0;
        for (std::int64_t v : random_d) {
            total += v;
            dmax = std::max(dmax, v);
        }
        if (total == 0 || dmax * dmax > total) continue;

        const BlockSpec rebuilt = chung_lu_as_sbm(random_d);
        // sorted node order: stable ascending by degree
        std::vector<std::size_t> order(random_d.size());
        std::iota(order.begin(), order.end(), 0u);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return random_d[a] < random_d[b];
        });
        std::vector<int> block_of_sorted;
        for (std::size_t b = 0; b < rebuilt.sizes.size(); ++b)
            for (std::int64_t c = 0; c < rebuilt.sizes[b]; ++c)
                block_of_sorted.push_back(static_cast<int>(b));
        for (std::size_t si = 0; si < order.size(); ++si) {
            for (std::size_t sj = 0; sj < order.size(); ++sj) {
                const double q = rebuilt.q.at(block_of_sorted[si], block_of_sorted[sj]);
                const double direct = chung_lu_probability(random_d, order[si], order[sj]);
                CHECK(q == Catch::Approx(direct).margin(1e-15));
            }
        }
    }
}
