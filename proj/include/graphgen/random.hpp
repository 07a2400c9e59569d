#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace graphgen {

// An edge probability. Construction rejects anything outside [0, 1].
class Probability {
public:
    Probability(double v) : v_(v) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::domain_error("Probability: value must lie in [0, 1]");
    }
    double value() const noexcept { return v_; }

private:
    double v_;
};

// Seeded deterministic stream of uniform variates. All randomness in the
// library flows through one of these.
//
// Generator: xoshiro256** 1.0 (Blackman & Vigna), state expanded from the
// 64-bit seed with splitmix64. Pinned: the same seed produces the same
// variate sequence on every platform and in every release.
//
// A stream is single-owner; concurrent use requires distinct streams derived
// via child(). child(i) is a pure function of (seed, i):
//   child_seed = mix64(seed ^ mix64(i + 0x9E3779B97F4A7C15))
// where mix64 is the splitmix64 finalizer.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed = 0) noexcept : seed_(seed) {
        std::uint64_t x = seed;
        for (auto& w : state_) {
            x += 0x9E3779B97F4A7C15ULL;
            w = mix64(x);
        }
    }

    std::uint64_t seed() const noexcept { return seed_; }

    // Raw 64-bit words drawn so far; every variate consumes at least one.
    std::uint64_t words_drawn() const noexcept { return words_; }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        ++words_;
        return result;
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    RandomStream child(std::uint64_t index) const noexcept {
        return RandomStream(mix64(seed_ ^ mix64(index + 0x9E3779B97F4A7C15ULL)));
    }

    static std::uint64_t mix64(std::uint64_t z) noexcept {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    std::uint64_t seed_;
    std::uint64_t words_ = 0;
};

inline double uniform_unit(RandomStream& stream) noexcept {
    return stream.uniform_unit();
}

// Uniform integer in [lo, hi], bias-free via rejection.
inline std::int64_t uniform_int(RandomStream& stream, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::range_error("uniform_int: lo > hi");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(stream.next_u64());  // full 64-bit range
    const std::uint64_t excess = (0 - span) % span;  // 2^64 mod span
    for (;;) {
        const std::uint64_t x = stream.next_u64();
        if (x >= excess)
            return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + (x - excess) % span);
    }
}

// Number of Bernoulli(p) trials up to and including the first success:
// Prob[X = k] = (1-p)^(k-1) p. Inverse-CDF on a single uniform, O(1).
// Gaps that would exceed 2^63-1 (possible only for p below ~1e-18) throw.
inline std::int64_t sample_geometric(RandomStream& stream, Probability p) {
    const double pv = p.value();
    if (pv <= 0.0) throw std::domain_error("sample_geometric: p must be positive");
    if (pv == 1.0) return 1;
    const double u = stream.uniform_unit();
    const double r = std::log1p(-u) / std::log1p(-pv);
    if (!(r < static_cast<double>(std::numeric_limits<std::int64_t>::max())))
        throw std::overflow_error("sample_geometric: gap exceeds 2^63-1");
    return static_cast<std::int64_t>(r) + 1;
}

namespace detail {

// Sequential CDF search from k = 0. Exact; usable only while (1-p)^trials
// stays above the double underflow threshold.
inline std::int64_t binomial_inversion(RandomStream& stream, std::int64_t trials, double p) {
    const double q = 1.0 - p;
    const double u = stream.uniform_unit();
    double pmf = std::exp(static_cast<double>(trials) * std::log1p(-p));
    double cdf = pmf;
    std::int64_t k = 0;
    while (u >= cdf && k < trials) {
        pmf *= (static_cast<double>(trials - k) / static_cast<double>(k + 1)) * (p / q);
        ++k;
        cdf += pmf;
    }
    return k;
}

// Count successes among `trials` slots by hopping over failures with
// geometric gaps. Exact for any trial count; O(trials * p) draws.
inline std::int64_t binomial_geometric_hops(RandomStream& stream, std::int64_t trials, double p) {
    std::int64_t successes = 0;
    std::int64_t consumed = 0;
    for (;;) {
        const std::int64_t gap = sample_geometric(stream, Probability(p));
        if (gap > trials - consumed) break;
        consumed += gap;
        ++successes;
    }
    return successes;
}

// BTRS transformed rejection (Hoermann 1993) for large means; exact, the
// acceptance test compares against the true pmf via lgamma. Requires
// p <= 0.5 and trials*p >= 10.
inline std::int64_t binomial_btrs(RandomStream& stream, std::int64_t trials, double p) {
    const double n = static_cast<double>(trials);
    const double q = 1.0 - p;
    const double spq = std::sqrt(n * p * q);
    const double b = 1.15 + 2.53 * spq;
    const double a = -0.0873 + 0.0248 * b + 0.01 * p;
    const double c = n * p + 0.5;
    const double v_r = 0.92 - 4.2 / b;
    const double alpha = (2.83 + 5.1 / b) * spq;
    const double lpq = std::log(p / q);
    const std::int64_t m = static_cast<std::int64_t>(std::floor((n + 1.0) * p));
    const double h = std::lgamma(static_cast<double>(m) + 1.0) +
                     std::lgamma(n - static_cast<double>(m) + 1.0);
    for (;;) {
        const double u = stream.uniform_unit() - 0.5;
        double v = stream.uniform_unit();
        const double us = 0.5 - std::abs(u);
        const double kd = std::floor((2.0 * a / us + b) * u + c);
        if (kd < 0.0 || kd > n) continue;
        const std::int64_t k = static_cast<std::int64_t>(kd);
        if (us >= 0.07 && v <= v_r) return k;
        v = std::log(v * alpha / (a / (us * us) + b));
        const double bound = h - std::lgamma(kd + 1.0) - std::lgamma(n - kd + 1.0) +
                             (kd - static_cast<double>(m)) * lpq;
        if (v <= bound) return k;
    }
}

}  // namespace detail

// Exact Binomial(trials, p) sample.
//
// Dispatch: means up to 1e5 use sequential-search inversion, falling back to
// geometric-gap success counting when (1-p)^trials underflows double range;
// larger means use BTRS rejection. Every path samples the exact distribution.
inline std::int64_t sample_binomial(RandomStream& stream, std::int64_t trials, Probability p) {
    if (trials < 0) throw std::domain_error("sample_binomial: negative trial count");
    const double pv = p.value();
    if (trials == 0 || pv == 0.0) return 0;
    if (pv == 1.0) return trials;
    if (pv > 0.5) return trials - sample_binomial(stream, trials, Probability(1.0 - pv));

    const double mean = static_cast<double>(trials) * pv;
    if (mean <= 1e5) {
        if (static_cast<double>(trials) * std::log1p(-pv) >= -700.0)
            return detail::binomial_inversion(stream, trials, pv);
        return detail::binomial_geometric_hops(stream, trials, pv);
    }
    return detail::binomial_btrs(stream, trials, pv);
}

// Index i with probability weights[i] / sum(weights): cumulative sums plus
// binary search on one uniform variate. Zero-weight entries are never chosen.
inline std::size_t sample_discrete(RandomStream& stream, std::span<const double> weights) {
    if (weights.empty()) throw std::domain_error("sample_discrete: empty weights");
    std::vector<double> cumulative(weights.size());
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0))
            throw std::domain_error("sample_discrete: negative weight");
        total += weights[i];
        cumulative[i] = total;
    }
    if (!(total > 0.0)) throw std::domain_error("sample_discrete: all weights zero");
    const double target = stream.uniform_unit() * total;
    std::size_t lo = 0, hi = weights.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (cumulative[mid] > target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

// Uniform value in [0, bound) for bounds up to 128 bits, by masked rejection.
inline unsigned __int128 uniform_below_u128(RandomStream& stream, unsigned __int128 bound) {
    if (bound == 0) throw std::domain_error("uniform_below_u128: zero bound");
    if (bound == 1) return 0;
    int bits = 0;
    for (unsigned __int128 v = bound - 1; v > 0; v >>= 1) ++bits;
    const unsigned __int128 mask =
        bits >= 128 ? ~static_cast<unsigned __int128>(0)
                    : (static_cast<unsigned __int128>(1) << bits) - 1;
    for (;;) {
        unsigned __int128 x = stream.next_u64();
        if (bits > 64) x |= static_cast<unsigned __int128>(stream.next_u64()) << 64;
        x &= mask;
        if (x < bound) return x;
    }
}

}  // namespace graphgen
