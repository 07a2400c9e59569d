#pragma once

// The statistical verification battery: every check pins its tolerances and
// seeds in code so a run is reproducible. Checks that estimate frequencies
// use 4-sigma binomial bounds; distribution-shape checks use a chi-square
// test at p > 0.001.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphgen/block_models.hpp"
#include "graphgen/combinat.hpp"
#include "graphgen/er.hpp"
#include "graphgen/kronecker.hpp"
#include "graphgen/random.hpp"
#include "graphgen/stats.hpp"

namespace graphgen::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline std::string fmt(double v, int prec = 6) {
    std::ostringstream ss;
    ss.precision(prec);
    ss << v;
    return ss.str();
}

inline CheckResult make(const std::string& name, bool pass, const std::string& detail) {
    return {name, pass, detail};
}

// 4-sigma band for a frequency estimate of probability p over S samples.
inline double freq_bound(double p, std::uint64_t samples) {
    return 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

// Worst per-cell deviation of an empirical frequency matrix from expected
// cell probabilities, measured in units of each cell's own 4-sigma band
// (cells with p in {0,1} must match exactly).
struct CellDeviation {
    double worst_ratio = 0.0;  // |f - p| / band, or infinity for exact cells off
    std::int64_t row = -1, col = -1;
    bool pass = true;
};

template <typename ExpectedFn>
inline CellDeviation max_cell_deviation(const FrequencyMatrix& freq, ExpectedFn&& expected) {
    CellDeviation dev;
    for (std::int64_t i = 0; i < freq.rows; ++i) {
        for (std::int64_t j = 0; j < freq.cols; ++j) {
            const double p = expected(i, j);
            const double f = freq.frequency(i, j);
            const double band = freq_bound(p, freq.samples);
            const double err = std::abs(f - p);
            if (band == 0.0) {
                if (err != 0.0) {
                    dev.pass = false;
                    dev.worst_ratio = std::numeric_limits<double>::infinity();
                    dev.row = i;
                    dev.col = j;
                    return dev;
                }
                continue;
            }
            const double ratio = err / band;
            if (ratio > dev.worst_ratio) {
                dev.worst_ratio = ratio;
                dev.row = i;
                dev.col = j;
            }
        }
    }
    dev.pass = dev.worst_ratio <= 1.0;
    return dev;
}

// Chi-square test of an edge-count histogram against Binomial(cells, p),
// pooling adjacent bins until each expected count reaches 5.
inline ChiSquareResult edge_count_chi_square(const std::vector<std::uint64_t>& histogram,
                                             std::int64_t cells, double p,
                                             std::uint64_t samples) {
    std::vector<double> pooled_obs, pooled_exp;
    double acc_obs = 0.0, acc_exp = 0.0;
    for (std::int64_t k = 0; k <= cells; ++k) {
        const double log_pmf = std::lgamma(static_cast<double>(cells) + 1.0) -
                               std::lgamma(static_cast<double>(k) + 1.0) -
                               std::lgamma(static_cast<double>(cells - k) + 1.0) +
                               static_cast<double>(k) * std::log(p) +
                               static_cast<double>(cells - k) * std::log1p(-p);
        acc_exp += static_cast<double>(samples) * std::exp(log_pmf);
        acc_obs += static_cast<double>(histogram[static_cast<std::size_t>(k)]);
        if (acc_exp >= 5.0) {
            pooled_obs.push_back(acc_obs);
            pooled_exp.push_back(acc_exp);
            acc_obs = acc_exp = 0.0;
        }
    }
    if (acc_exp > 0.0 && !pooled_exp.empty()) {
        pooled_obs.back() += acc_obs;
        pooled_exp.back() += acc_exp;
    }
    return chi_square(pooled_obs, pooled_exp);
}

// Independent oracle for region counting: recursive enumeration of
// non-decreasing sequences, no binomial formula involved.
inline std::uint64_t brute_force_region_count(int m, int k, int min_value = 0) {
    if (k == 0) return 1;
    std::uint64_t total = 0;
    for (int v = min_value; v < m; ++v) total += brute_force_region_count(m, k - 1, v);
    return total;
}

// Independent oracle for multiset permutations: generate-and-collect in
// lexicographic order.
inline std::vector<std::vector<int>> brute_force_permutations(std::vector<int> seq) {
    std::vector<std::vector<int>> out;
    std::sort(seq.begin(), seq.end());
    do {
        out.push_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

}  // namespace detail

// --- region-count -----------------------------------------------------------

inline std::vector<CheckResult> check_region_count() {
    using detail::make;
    std::vector<CheckResult> results;

    const std::vector<NDSequence> expected20 = {
        {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 1, 1}, {0, 1, 2}, {0, 1, 3},
        {0, 2, 2}, {0, 2, 3}, {0, 3, 3}, {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2},
        {1, 2, 3}, {1, 3, 3}, {2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}};
    const std::vector<NDSequence> got = regions(4, 3);
    results.push_back(make("region-count/regions(4,3)-ordered-list", got == expected20,
                           "enumerated " + std::to_string(got.size()) + " sequences"));

    results.push_back(make("region-count/count(4,7)", count_regions(4, 7) == BigCount(120),
                           "count=" + count_regions(4, 7).str()));

    bool brute_ok = true;
    std::string mismatch;
    for (int m = 1; m <= 9 && brute_ok; ++m) {
        for (int k = 0; k <= 5 && brute_ok; ++k) {
            const std::uint64_t brute = detail::brute_force_region_count(m, k);
            if (count_regions(m, k) != BigCount(brute)) {
                brute_ok = false;
                mismatch = "m=" + std::to_string(m) + " k=" + std::to_string(k);
            }
        }
    }
    results.push_back(make("region-count/formula-vs-enumeration(m<=9,k<=5)", brute_ok,
                           brute_ok ? "all 60 cases agree" : "mismatch at " + mismatch));
    return results;
}

// --- theorem1 ---------------------------------------------------------------

inline std::vector<CheckResult> check_theorem1() {
    using detail::make;
    std::vector<CheckResult> results;

    {
        const std::vector<int> a{1, 3};
        const auto [r, c] = map_mult_to_kron(a, 2);
        results.push_back(make("theorem1/map([1,3],2)", r == 3 && c == 1,
                               "(" + std::to_string(r) + "," + std::to_string(c) + ")"));
        const std::vector<int> b{4, 0, 7};
        const auto [r2, c2] = map_mult_to_kron(b, 3);
        results.push_back(make("theorem1/map([4,0,7],3)", r2 == 10 && c2 == 11,
                               "(" + std::to_string(r2) + "," + std::to_string(c2) + ")"));
    }

    const Initiator k2{{0.99, 0.5}, {0.5, 0.2}};
    const Initiator k3{{0.9, 0.8, 0.7}, {0.6, 0.5, 0.4}, {0.3, 0.2, 0.1}};
    for (const Initiator* K : {&k2, &k3}) {
        const std::vector<double> v = vectorize(*K);
        for (int k = 2; k <= 3; ++k) {
            const ProbabilityMatrix dense = kronecker_power_dense(*K, k);
            const std::int64_t side = dense.rows;
            const std::int64_t m = K->n * K->n;
            std::int64_t total = 1;
            for (int i = 0; i < k; ++i) total *= m;

            std::vector<int> visits(static_cast<std::size_t>(side * side), 0);
            bool values_ok = true;
            double worst_rel = 0.0;
            std::vector<int> mind(static_cast<std::size_t>(k), 0);
            for (std::int64_t linear = 0; linear < total; ++linear) {
                std::int64_t rest = linear;
                for (int d = k - 1; d >= 0; --d) {
                    mind[static_cast<std::size_t>(d)] = static_cast<int>(rest % m);
                    rest /= m;
                }
                const auto [row, col] = map_mult_to_kron(mind, K->n);
                ++visits[static_cast<std::size_t>(row * side + col)];
                const double table = multtable(mind, v);
                const double cell = dense.at(row, col);
                const double rel = std::abs(table - cell) / std::max(1e-300, std::abs(cell));
                worst_rel = std::max(worst_rel, rel);
                if (rel > 1e-12) values_ok = false;
            }
            const bool bijective =
                std::all_of(visits.begin(), visits.end(), [](int c) { return c == 1; });
            const std::string tag = "n=" + std::to_string(K->n) + ",k=" + std::to_string(k);
            results.push_back(make("theorem1/value-match(" + tag + ")", values_ok,
                                   "worst rel err " + detail::fmt(worst_rel, 3)));
            results.push_back(make("theorem1/bijection(" + tag + ")", bijective,
                                   "each of " + std::to_string(side * side) +
                                       " cells hit exactly once"));
        }
    }
    return results;
}

// --- morton-roundtrip -------------------------------------------------------

inline std::vector<CheckResult> check_morton_roundtrip() {
    using detail::make;
    std::vector<CheckResult> results;

    const auto [r, c] = morton_decode(7, 2);
    results.push_back(make("morton/decode(7,2)", r == 3 && c == 1,
                           "(" + std::to_string(r) + "," + std::to_string(c) + ")"));
    results.push_back(make("morton/encode(1,2,2,2)", morton_encode(1, 2, 2, 2) == 9,
                           "code=" + std::to_string(morton_encode(1, 2, 2, 2))));

    bool ok = true;
    std::string mismatch;
    for (int n : {2, 3, 4}) {
        for (int k = 1; k <= 4 && ok; ++k) {
            std::uint64_t limit = 1;
            for (int i = 0; i < 2 * k; ++i) limit *= static_cast<std::uint64_t>(n);
            for (std::uint64_t I = 0; I < limit; ++I) {
                const auto [row, col] = morton_decode(I, n);
                if (morton_encode(row, col, n, k) != I) {
                    ok = false;
                    mismatch = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               " I=" + std::to_string(I);
                    break;
                }
            }
        }
    }
    results.push_back(make("morton/roundtrip(n=2..4,k<=4)", ok,
                           ok ? "identity on every code" : "mismatch at " + mismatch));
    return results;
}

// --- unrank-oracle ----------------------------------------------------------

inline std::vector<CheckResult> check_unrank_oracle() {
    using detail::make;
    std::vector<CheckResult> results;

    {
        const std::vector<int> seq{0, 1, 1, 3};
        const bool pinned = unrank_multiset(seq, 0) == std::vector<int>({0, 1, 1, 3}) &&
                            unrank_multiset(seq, 1) == std::vector<int>({0, 1, 3, 1}) &&
                            unrank_multiset(seq, 2) == std::vector<int>({0, 3, 1, 1});
        results.push_back(make("unrank/pinned([0,1,1,3])", pinned, "ranks 0,1,2"));
        results.push_back(make("unrank/pinned([0,1,2,2],4)",
                               unrank_multiset(std::vector<int>{0, 1, 2, 2}, 4) ==
                                   std::vector<int>({1, 2, 0, 2}),
                               "rank 4"));
        MultisetCounter mset;
        mset.counts = {{0, 1}, {1, 1}, {2, 2}};
        results.push_back(make("unrank/count({0:1,1:1,2:2})",
                               num_multiset_permutations(mset) == BigCount(12),
                               "count=" + num_multiset_permutations(mset).str()));
    }

    bool ok = true;
    std::uint64_t seqs = 0;
    std::string mismatch;
    for (int k = 1; k <= 6 && ok; ++k) {
        for_each_region(4, k, [&](const NDSequence& seq) {
            if (!ok) return;
            ++seqs;
            const auto oracle = detail::brute_force_permutations(seq);
            const BigCount count = num_multiset_permutations(ndseq_to_counter(seq));
            if (count != BigCount(oracle.size())) {
                ok = false;
                mismatch = "count mismatch";
                return;
            }
            for (std::size_t i = 0; i < oracle.size(); ++i) {
                if (unrank_multiset(seq, i) != oracle[i]) {
                    ok = false;
                    mismatch = "rank " + std::to_string(i);
                    return;
                }
            }
        });
    }
    results.push_back(make("unrank/exhaustive(k<=6,symbols<=4)", ok,
                           ok ? std::to_string(seqs) + " multisets match the brute force"
                              : mismatch));
    return results;
}

// --- er-marginals -----------------------------------------------------------

inline std::vector<CheckResult> check_er_marginals(std::uint64_t samples = 20000) {
    using detail::make;
    std::vector<CheckResult> results;
    const std::int64_t n = 8;

    struct Method {
        std::string name;
        double p;
        std::function<EdgeList(RandomStream&)> run;
    };
    std::vector<Method> methods;
    for (double p : {0.25, 0.9}) {
        methods.push_back({"coin@" + detail::fmt(p, 2), p, [n, p](RandomStream& s) {
                               return coin_flip_er(n, Probability(p), s);
                           }});
        methods.push_back({"ball@" + detail::fmt(p, 2), p, [n, p](RandomStream& s) {
                               return ball_drop_er(n, Probability(p), s).edges;
                           }});
        methods.push_back({"grass@" + detail::fmt(p, 2), p, [n, p](RandomStream& s) {
                               return grass_hop_er(n, Probability(p), s);
                           }});
    }
    methods.push_back({"ball-complement@0.9", 0.9, [n](RandomStream& s) {
                           return ball_drop_er_complement(n, Probability(0.9), s).edges;
                       }});

    std::uint64_t seed = 0x5eed0005;
    for (const Method& method : methods) {
        RandomStream base(seed++);
        FrequencyMatrix freq;
        freq.rows = n;
        freq.cols = n;
        freq.samples = samples;
        freq.counts.assign(static_cast<std::size_t>(n * n), 0);
        std::vector<std::uint64_t> histogram(static_cast<std::size_t>(n * n + 1), 0);
        for (std::uint64_t s = 0; s < samples; ++s) {
            RandomStream child = base.child(s);
            const EdgeList sample = method.run(child);
            ++histogram[sample.size()];
            for (const Edge& e : sample.edges)
                ++freq.counts[static_cast<std::size_t>(e.src * n + e.dst)];
        }
        const auto dev = detail::max_cell_deviation(
            freq, [&](std::int64_t, std::int64_t) { return method.p; });
        results.push_back(make("er-marginals/cells(" + method.name + ")", dev.pass,
                               "worst |f-p| = " + detail::fmt(dev.worst_ratio, 3) +
                                   " of the 4-sigma band"));
        const ChiSquareResult chi =
            detail::edge_count_chi_square(histogram, n * n, method.p, samples);
        results.push_back(make("er-marginals/edge-count-chi2(" + method.name + ")",
                               chi.p_value > 0.001,
                               "p-value " + detail::fmt(chi.p_value, 4)));
    }
    return results;
}

// --- coupon-curve -----------------------------------------------------------

inline std::vector<CheckResult> check_coupon_curve(std::uint64_t trials = 200) {
    using detail::make;
    std::vector<CheckResult> results;
    const std::int64_t n = 1000;
    const std::int64_t cells = n * n;
    RandomStream base(0x5eed0006);
    std::uint64_t index = 0;
    for (double p : {0.001, 0.01, 0.1}) {
        double total_draws = 0.0, total_edges = 0.0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            RandomStream child = base.child(index++);
            const BallDropReport report = ball_drop_er(n, Probability(p), child);
            total_draws += static_cast<double>(report.draws);
            total_edges += static_cast<double>(report.edges.size());
        }
        const double mean_draws = total_draws / static_cast<double>(trials);
        const double log_model = static_cast<double>(cells) * -std::log1p(-p);
        const double harmonic_model = expected_ball_drops_exact(
            cells, static_cast<std::int64_t>(std::llround(static_cast<double>(cells) * p)));
        const double rel_log = std::abs(mean_draws - log_model) / log_model;
        const double rel_harmonic = std::abs(mean_draws - harmonic_model) / harmonic_model;
        const double ratio = total_draws / total_edges;
        const std::string tag = "p=" + detail::fmt(p, 3);
        results.push_back(make("coupon/mean-draws(" + tag + ")",
                               rel_log < 0.05 && rel_harmonic < 0.05,
                               "mean " + detail::fmt(mean_draws, 6) + " vs log model " +
                                   detail::fmt(log_model, 6) + " (rel " +
                                   detail::fmt(rel_log, 3) + ") and harmonic model " +
                                   detail::fmt(harmonic_model, 6)));
        results.push_back(make("coupon/oversample-ratio(" + tag + ")", ratio > 1.0,
                               "draws/edges = " + detail::fmt(ratio, 6)));
    }
    return results;
}

// --- kron-marginals ---------------------------------------------------------

inline std::vector<CheckResult> check_kron_marginals(std::uint64_t samples = 20000) {
    using detail::make;
    std::vector<CheckResult> results;
    const Initiator K{{0.99, 0.5}, {0.5, 0.2}};
    const int k = 3;
    const ProbabilityMatrix dense = kronecker_power_dense(K, k);
    const std::int64_t side = dense.rows;

    RandomStream base(0x5eed0007);
    FrequencyMatrix freq;
    freq.rows = side;
    freq.cols = side;
    freq.samples = samples;
    freq.counts.assign(static_cast<std::size_t>(side * side), 0);
    bool draws_ok = true;
    for (std::uint64_t s = 0; s < samples; ++s) {
        RandomStream child = base.child(s);
        const KronSampleReport report = grass_hop_kron_report(K, k, child);
        if (report.geometric_draws != report.edges.size() + report.regions_sampled)
            draws_ok = false;
        for (const Edge& e : report.edges.edges)
            ++freq.counts[static_cast<std::size_t>(e.src * side + e.dst)];
    }
    const auto dev = detail::max_cell_deviation(
        freq, [&](std::int64_t i, std::int64_t j) { return dense.at(i, j); });
    results.push_back(make("kron-marginals/cells", dev.pass,
                           "worst |f-p| = " + detail::fmt(dev.worst_ratio, 3) +
                               " of the 4-sigma band"));
    results.push_back(make("kron-marginals/draws=edges+regions", draws_ok,
                           draws_ok ? "held for every run" : "violated"));
    return results;
}

// --- chung-lu ---------------------------------------------------------------

inline std::vector<CheckResult> check_chung_lu(std::uint64_t samples = 20000) {
    using detail::make;
    std::vector<CheckResult> results;
    const DegreeSequence d{4, 3, 2, 2, 2, 1, 1, 1};
    const std::int64_t n = static_cast<std::int64_t>(d.size());
    const double total = 16.0;

    RandomStream base(0x5eed0008);
    const FrequencyMatrix freq = empirical_frequency(
        [&](RandomStream& s) { return chung_lu_grass(d, s); }, n, n, samples, base);

    const auto expected = [&](std::int64_t i, std::int64_t j) {
        return static_cast<double>(d[static_cast<std::size_t>(i)]) *
               static_cast<double>(d[static_cast<std::size_t>(j)]) / total;
    };
    const auto dev = detail::max_cell_deviation(freq, expected);
    results.push_back(make("chung-lu/cells", dev.pass,
                           "worst |f-p| = " + detail::fmt(dev.worst_ratio, 3) +
                               " of the 4-sigma band"));
    results.push_back(make("chung-lu/corner-cell-always-present",
                           freq.count(0, 0) == samples,
                           "cell (0,0) hit " + std::to_string(freq.count(0, 0)) + "/" +
                               std::to_string(samples) + " times"));

    bool degrees_ok = true;
    std::string worst;
    for (std::int64_t i = 0; i < n; ++i) {
        double mean_out = 0.0, variance = 0.0;
        for (std::int64_t j = 0; j < n; ++j) {
            mean_out += freq.frequency(i, j);
            const double p = expected(i, j);
            variance += p * (1.0 - p);
        }
        const double bound = 4.0 * std::sqrt(variance / static_cast<double>(samples));
        const double err = std::abs(mean_out - static_cast<double>(d[static_cast<std::size_t>(i)]));
        if (err > bound) {
            degrees_ok = false;
            worst = "node " + std::to_string(i) + " mean " + detail::fmt(mean_out, 4);
        }
    }
    results.push_back(make("chung-lu/mean-out-degrees", degrees_ok,
                           degrees_ok ? "all 8 within 4 sigma" : worst));
    return results;
}

// --- sbm --------------------------------------------------------------------

inline std::vector<CheckResult> check_sbm(std::uint64_t samples = 20000) {
    using detail::make;
    std::vector<CheckResult> results;
    BlockSpec spec;
    spec.sizes = {3, 5};
    spec.q = ProbabilityMatrix(2, 2);
    spec.q.at(0, 0) = spec.q.at(1, 1) = 0.7;
    spec.q.at(0, 1) = spec.q.at(1, 0) = 0.1;
    const std::int64_t n = spec.num_nodes();
    const auto block_of = [&](std::int64_t v) { return v < spec.sizes[0] ? 0 : 1; };
    const auto expected = [&](std::int64_t i, std::int64_t j) {
        return spec.q.at(block_of(i), block_of(j));
    };

    std::uint64_t seed = 0x5eed0009;
    for (const char* method : {"grass", "ball"}) {
        RandomStream base(seed++);
        const FrequencyMatrix freq = empirical_frequency(
            [&](RandomStream& s) {
                return std::string(method) == "grass" ? sbm_grass(spec, s)
                                                      : sbm_ball(spec, s).edges;
            },
            n, n, samples, base);
        const auto dev = detail::max_cell_deviation(freq, expected);
        results.push_back(make(std::string("sbm/cells(") + method + ")", dev.pass,
                               "worst |f-p| = " + detail::fmt(dev.worst_ratio, 3) +
                                   " of the 4-sigma band"));
    }
    return results;
}

// --- fixed-edge-uniformity --------------------------------------------------

inline std::vector<CheckResult> check_fixed_edge_uniformity(std::uint64_t samples = 30000) {
    using detail::make;
    std::vector<CheckResult> results;
    const std::int64_t n = 4, m = 2;

    // all C(6,2) = 15 two-edge graphs on the C(4,2) = 6 node pairs
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> pair_index;
    std::int64_t next = 0;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = a + 1; b < n; ++b) pair_index[{a, b}] = next++;

    std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> graph_counts;
    RandomStream base(0x5eed000a);
    bool sizes_ok = true;
    for (std::uint64_t s = 0; s < samples; ++s) {
        RandomStream child = base.child(s);
        const EdgeList sample = fixed_edge_er(n, m, child);
        if (sample.size() != static_cast<std::size_t>(m)) sizes_ok = false;
        std::int64_t p0 = pair_index.at({sample.edges[0].src, sample.edges[0].dst});
        std::int64_t p1 = pair_index.at({sample.edges[1].src, sample.edges[1].dst});
        if (p0 > p1) std::swap(p0, p1);
        ++graph_counts[{p0, p1}];
    }
    results.push_back(make("fixed-edge/every-sample-has-2-edges", sizes_ok, ""));

    const double target = 1.0 / 15.0;
    const double bound = detail::freq_bound(target, samples);
    bool uniform = graph_counts.size() == 15;
    double worst = 0.0;
    for (const auto& [graph, count] : graph_counts) {
        const double f = static_cast<double>(count) / static_cast<double>(samples);
        worst = std::max(worst, std::abs(f - target));
        if (std::abs(f - target) > bound) uniform = false;
    }
    results.push_back(make("fixed-edge/all-15-graphs-uniform", uniform,
                           std::to_string(graph_counts.size()) + " graphs seen, worst |f-1/15| " +
                               detail::fmt(worst, 5) + " vs bound " + detail::fmt(bound, 5)));
    return results;
}

// --- chi-square-fixture -----------------------------------------------------

inline std::vector<CheckResult> check_chi_square_fixture() {
    using detail::make;
    std::vector<CheckResult> results;
    const std::vector<double> observed{30, 32, 33, 31, 29, 25};
    const std::vector<double> expected{30, 30, 30, 30, 30, 30};
    const ChiSquareResult r = chi_square(observed, expected);
    results.push_back(make("chi-square/statistic=4/3",
                           std::abs(r.statistic - 4.0 / 3.0) < 1e-12,
                           "statistic " + detail::fmt(r.statistic, 12)));
    results.push_back(make("chi-square/p=0.931", std::abs(r.p_value - 0.931) <= 0.001,
                           "p " + detail::fmt(r.p_value, 6)));
    return results;
}

// --- performance ------------------------------------------------------------

inline std::vector<CheckResult> check_performance() {
    using detail::make;
    using clock = std::chrono::steady_clock;
    std::vector<CheckResult> results;
    const double target_edges = 1e5;

    auto time_best_of = [&](int reps, auto&& fn) {
        double best = std::numeric_limits<double>::infinity();
        for (int r = 0; r < reps; ++r) {
            const auto t0 = clock::now();
            fn();
            const auto t1 = clock::now();
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
        }
        return best;
    };

    RandomStream stream(0x5eed000c);
    std::vector<double> grass_times;
    std::string grass_detail;
    double grass_mid = 0.0;
    for (std::int64_t n : {std::int64_t{1000}, std::int64_t{10000}, std::int64_t{100000}}) {
        const double p = target_edges / (static_cast<double>(n) * static_cast<double>(n));
        std::size_t edges = 0;
        const double t = time_best_of(5, [&] {
            edges = grass_hop_er(n, Probability(p), stream).size();
        });
        grass_times.push_back(t);
        if (n == 10000) grass_mid = t;
        grass_detail += "n=" + std::to_string(n) + ":" + detail::fmt(t * 1e3, 3) + "ms(" +
                        std::to_string(edges) + " edges) ";
    }
    const double spread = *std::max_element(grass_times.begin(), grass_times.end()) /
                          *std::min_element(grass_times.begin(), grass_times.end());
    results.push_back(make("performance/grass-hop-independent-of-n", spread <= 3.0,
                           grass_detail + "spread " + detail::fmt(spread, 3) + "x"));

    const std::int64_t n = 10000;
    const double p = target_edges / (static_cast<double>(n) * static_cast<double>(n));
    const double coin_time = time_best_of(1, [&] {
        coin_flip_er(n, Probability(p), stream);
    });
    results.push_back(make("performance/coin-flip-at-least-10x-slower",
                           coin_time >= 10.0 * grass_mid,
                           "coin " + detail::fmt(coin_time * 1e3, 3) + "ms vs grass " +
                               detail::fmt(grass_mid * 1e3, 3) + "ms (" +
                               detail::fmt(coin_time / grass_mid, 1) + "x)"));
    return results;
}

// --- registry ---------------------------------------------------------------

struct Suite {
    std::string name;
    std::string description;
    std::function<std::vector<CheckResult>(std::uint64_t)> run;  // 0 = default budget
};

inline const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {"region-count", "region enumeration order and counting formula",
         [](std::uint64_t) { return check_region_count(); }},
        {"theorem1", "multiplication-table to Kronecker map: values and bijection",
         [](std::uint64_t) { return check_theorem1(); }},
        {"morton-roundtrip", "Morton encode/decode are mutually inverse",
         [](std::uint64_t) { return check_morton_roundtrip(); }},
        {"unrank-oracle", "multiset unranking matches brute-force enumeration",
         [](std::uint64_t) { return check_unrank_oracle(); }},
        {"er-marginals", "per-cell exactness and edge-count law for the ER samplers",
         [](std::uint64_t s) { return check_er_marginals(s ? s : 20000); }},
        {"coupon-curve", "ball-drop oversampling follows the coupon-collector curve",
         [](std::uint64_t s) { return check_coupon_curve(s ? s : 200); }},
        {"kron-marginals", "Kronecker grass-hopping matches the dense power",
         [](std::uint64_t s) { return check_kron_marginals(s ? s : 20000); }},
        {"chung-lu", "Chung-Lu marginals and expected degrees",
         [](std::uint64_t s) { return check_chung_lu(s ? s : 20000); }},
        {"sbm", "stochastic block model marginals, both methods",
         [](std::uint64_t s) { return check_sbm(s ? s : 20000); }},
        {"fixed-edge-uniformity", "fixed-edge sampler is uniform over all graphs",
         [](std::uint64_t s) { return check_fixed_edge_uniformity(s ? s : 30000); }},
        {"chi-square-fixture", "chi-square statistic and p-value fixture",
         [](std::uint64_t) { return check_chi_square_fixture(); }},
        {"performance", "grass-hop cost tracks edges, not cells",
         [](std::uint64_t) { return check_performance(); }},
    };
    return all;
}

inline std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t budget = 0) {
    for (const Suite& suite : suites())
        if (suite.name == name) return suite.run(budget);
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace graphgen::verify
