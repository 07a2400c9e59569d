#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphgen/edgelist.hpp"
#include "graphgen/random.hpp"

namespace graphgen {

namespace detail {

// Regularized lower incomplete gamma P(a, x) by power series; converges for
// x < a + 1.
inline double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int i = 1; i < 10000; ++i) {
        term *= x / (a + i);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by modified Lentz continued
// fraction; converges for x >= a + 1.
inline double gamma_q_continued_fraction(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace detail

// Regularized upper incomplete gamma Q(a, x); the chi-square tail
// probability is Q(dof/2, statistic/2). Series below the a+1 split,
// continued fraction above.
inline double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0)
        throw std::domain_error("regularized_gamma_q: need a > 0 and x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
    return detail::gamma_q_continued_fraction(a, x);
}

inline double regularized_gamma_p(double a, double x) {
    return 1.0 - regularized_gamma_q(a, x);
}

struct ChiSquareResult {
    double statistic = 0.0;
    std::int64_t dof = 0;
    double p_value = 1.0;
};

// Pearson's cumulative test statistic sum (O - E)^2 / E over the categories,
// with dof = categories - 1 and the tail probability from the chi-square
// distribution.
inline ChiSquareResult chi_square(std::span<const double> observed,
                                  std::span<const double> expected) {
    if (observed.size() != expected.size())
        throw std::domain_error("chi_square: category count mismatch");
    if (observed.size() < 2) throw std::domain_error("chi_square: need at least 2 categories");
    ChiSquareResult result;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!(expected[i] > 0.0))
            throw std::domain_error("chi_square: expected counts must be positive");
        const double diff = observed[i] - expected[i];
        result.statistic += diff * diff / expected[i];
    }
    result.dof = static_cast<std::int64_t>(observed.size()) - 1;
    result.p_value =
        regularized_gamma_q(static_cast<double>(result.dof) / 2.0, result.statistic / 2.0);
    return result;
}

// Expected ball drops per edge collected: (1/p) ln(1/(1-p)). Greater than 1
// for every p in (0,1) and tends to 1 as p -> 0; the tiny-p limit is served
// by the series 1 + p/2 + p^2/3 to dodge the 0/0.
inline double expected_ball_drop_ratio(double p) {
    if (!(p > 0.0) || p >= 1.0)
        throw std::domain_error("expected_ball_drop_ratio: need 0 < p < 1");
    if (p < 1e-12) return 1.0 + p / 2.0 + p * p / 3.0;
    return -std::log1p(-p) / p;
}

// Exact coupon-collector expectation: drawing uniformly with replacement
// from `cells` objects, the expected draws to collect m distinct ones is
// cells * (H_cells - H_(cells-m)), summed directly.
inline double expected_ball_drops_exact(std::int64_t cells, std::int64_t m) {
    if (cells < 0 || m < 0 || m > cells)
        throw std::domain_error("expected_ball_drops_exact: need 0 <= m <= cells");
    double harmonic_slice = 0.0;
    for (std::int64_t i = cells; i > cells - m; --i)
        harmonic_slice += 1.0 / static_cast<double>(i);
    return static_cast<double>(cells) * harmonic_slice;
}

// Per-cell hit counts over repeated sampler runs.
struct FrequencyMatrix {
    std::vector<std::uint64_t> counts;  // rows * cols, row-major
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::uint64_t samples = 0;

    std::uint64_t count(std::int64_t i, std::int64_t j) const {
        return counts[static_cast<std::size_t>(i * cols + j)];
    }
    double frequency(std::int64_t i, std::int64_t j) const {
        return static_cast<double>(count(i, j)) / static_cast<double>(samples);
    }
};

// Runs `sampler(stream) -> EdgeList` once per sample on child stream i and
// tallies per-cell hits. Deterministic in (stream seed, samples).
template <typename Sampler>
inline FrequencyMatrix empirical_frequency(Sampler&& sampler, std::int64_t rows,
                                           std::int64_t cols, std::uint64_t samples,
                                           const RandomStream& stream) {
    if (samples < 1) throw std::domain_error("empirical_frequency: need at least one sample");
    FrequencyMatrix freq;
    freq.rows = rows;
    freq.cols = cols;
    freq.samples = samples;
    freq.counts.assign(static_cast<std::size_t>(rows * cols), 0);
    for (std::uint64_t s = 0; s < samples; ++s) {
        RandomStream child = stream.child(s);
        const EdgeList sample = sampler(child);
        for (const Edge& e : sample.edges) {
            if (e.src < 0 || e.src >= rows || e.dst < 0 || e.dst >= cols)
                throw std::out_of_range("empirical_frequency: edge outside node space");
            ++freq.counts[static_cast<std::size_t>(e.src * cols + e.dst)];
        }
    }
    return freq;
}

}  // namespace graphgen
