#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "graphgen/er.hpp"
#include "graphgen/stats.hpp"

using namespace graphgen;

namespace {

// Long-series reference for the regularized lower incomplete gamma:
// P(a,x) = x^a e^-x sum_{n>=0} x^n / (a (a+1) ... (a+n)), all-positive terms,
// carried to up to one million terms.
double reference_gamma_p(double a, double x) {
    if (x == 0.0) return 0.0;
    long double term = 1.0L / a;
    long double sum = term;
    for (int n = 1; n < 1000000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (term < sum * 1e-20L) break;
    }
    const long double log_prefix = a * std::log((long double)x) - x - std::lgamma((long double)a);
    return static_cast<double>(sum * std::exp(log_prefix));
}

}  // namespace

TEST_CASE("incomplete gamma matches the series reference at spot points") {
    const std::vector<std::pair<double, double>> points = {
        {0.5, 0.25}, {0.5, 5.0},  {1.0, 1.0},  {2.5, 0.6667}, {2.5, 10.0},
        {5.0, 2.0},  {5.0, 12.0}, {10.0, 3.0}, {10.0, 25.0},  {32.0, 40.0}};
    for (const auto& [a, x] : points) {
        CAPTURE(a, x);
        CHECK(std::abs(regularized_gamma_q(a, x) - (1.0 - reference_gamma_p(a, x))) < 1e-8);
    }
}

TEST_CASE("chi_square dice fixture") {
    const std::vector<double> observed{30, 32, 33, 31, 29, 25};
    const std::vector<double> expected{30, 30, 30, 30, 30, 30};
    const ChiSquareResult r = chi_square(observed, expected);
    CHECK(r.statistic == Catch::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(r.dof == 5);
    CHECK(std::abs(r.p_value - 0.931) <= 0.001);
}

TEST_CASE("chi_square degenerate and extreme cases") {
    const std::vector<double> equal{10, 20, 30};
    const ChiSquareResult same = chi_square(equal, equal);
    CHECK(same.statistic == 0.0);
    CHECK(same.p_value == 1.0);

    // direct formula: (10-5)^2/5 + (0-5)^2/5 = 10, so p = Q(1/2, 5)
    const ChiSquareResult skew =
        chi_square(std::vector<double>{10, 0}, std::vector<double>{5, 5});
    CHECK(skew.statistic == Catch::Approx(10.0).epsilon(1e-14));
    CHECK(skew.dof == 1);
    CHECK(skew.p_value == Catch::Approx(1.0 - reference_gamma_p(0.5, 5.0)).margin(1e-10));

    CHECK_THROWS_AS(chi_square(std::vector<double>{1, 2}, std::vector<double>{1, 0}),
                    std::domain_error);
    CHECK_THROWS_AS(chi_square(std::vector<double>{1}, std::vector<double>{1}),
                    std::domain_error);
}

TEST_CASE("chi-square p-value is monotone decreasing in the statistic") {
    double prev = 1.0;
    for (double stat : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0}) {
        const double p = regularized_gamma_q(2.5, stat / 2.0);
        CHECK(p < prev);
        prev = p;
    }
}

TEST_CASE("expected_ball_drop_ratio evaluates the closed form") {
    CHECK(expected_ball_drop_ratio(0.5) == Catch::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(expected_ball_drop_ratio(0.004) == Catch::Approx(1.00200535).epsilon(1e-6));
    CHECK(expected_ball_drop_ratio(1e-14) == Catch::Approx(1.0).margin(1e-12));
    CHECK_THROWS_AS(expected_ball_drop_ratio(1.0), std::domain_error);
    CHECK_THROWS_AS(expected_ball_drop_ratio(0.0), std::domain_error);

    // greater than 1 everywhere, tending to 1 from above as p -> 0
    double prev = expected_ball_drop_ratio(0.999);
    for (double p : {0.9, 0.5, 0.1, 0.01, 1e-4, 1e-8}) {
        const double r = expected_ball_drop_ratio(p);
        CHECK(r > 1.0);
        CHECK(r < prev);
        prev = r;
    }
    CHECK(prev < 1.0 + 1e-7);
}

TEST_CASE("expected_ball_drops_exact harmonic sums") {
    CHECK(expected_ball_drops_exact(100, 0) == 0.0);
    CHECK(expected_ball_drops_exact(100, 1) == Catch::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(expected_ball_drops_exact(10, 11), std::domain_error);

    // the exact harmonic sum tracks the log approximation at desk scale
    const double exact = expected_ball_drops_exact(1000000, 4000);
    const double approx = 4000.0 * expected_ball_drop_ratio(0.004);
    CHECK(std::abs(exact - approx) / approx < 0.005);
}

TEST_CASE("empirical_frequency tallies deterministic samplers") {
    const auto all_edges = [](RandomStream&) {
        EdgeList e;
        e.num_rows = e.num_cols = 3;
        for (std::int64_t i = 0; i < 3; ++i)
            for (std::int64_t j = 0; j < 3; ++j) e.edges.push_back({i, j});
        return e;
    };
    RandomStream base(1);
    const FrequencyMatrix full = empirical_frequency(all_edges, 3, 3, 50, base);
    for (std::int64_t i = 0; i < 3; ++i)
        for (std::int64_t j = 0; j < 3; ++j) CHECK(full.count(i, j) == 50);

    const auto no_edges = [](RandomStream&) {
        EdgeList e;
        e.num_rows = e.num_cols = 3;
        return e;
    };
    const FrequencyMatrix empty = empirical_frequency(no_edges, 3, 3, 50, base);
    for (std::int64_t i = 0; i < 3; ++i)
        for (std::int64_t j = 0; j < 3; ++j) CHECK(empty.count(i, j) == 0);
}

TEST_CASE("empirical_frequency puts ER grass-hopping inside the 4-sigma band") {
    RandomStream base(2);
    const std::uint64_t samples = 20000;
    const FrequencyMatrix freq = empirical_frequency(
        [](RandomStream& s) { return grass_hop_er(8, Probability(0.25), s); }, 8, 8, samples,
        base);
    for (std::int64_t i = 0; i < 8; ++i) {
        for (std::int64_t j = 0; j < 8; ++j) {
            CHECK(freq.frequency(i, j) >= 0.2378);
            CHECK(freq.frequency(i, j) <= 0.2622);
        }
    }
}
