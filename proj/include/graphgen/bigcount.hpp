#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphgen {

// Exact non-negative 128-bit counter for combinatorial counts (region counts,
// multiset permutation counts, binomial coefficients). Arithmetic never wraps:
// any operation that would exceed 128 bits throws std::overflow_error.
class BigCount {
public:
    constexpr BigCount() noexcept : v_(0) {}
    constexpr BigCount(std::uint64_t v) noexcept : v_(v) {}

    static constexpr BigCount from_raw(unsigned __int128 v) noexcept {
        BigCount c;
        c.v_ = v;
        return c;
    }

    constexpr unsigned __int128 raw() const noexcept { return v_; }

    BigCount operator+(BigCount o) const {
        unsigned __int128 r = v_ + o.v_;
        if (r < v_) throw std::overflow_error("BigCount: addition exceeds 128 bits");
        return from_raw(r);
    }

    BigCount operator-(BigCount o) const {
        if (o.v_ > v_) throw std::overflow_error("BigCount: negative result");
        return from_raw(v_ - o.v_);
    }

    BigCount operator*(BigCount o) const {
        if (v_ == 0 || o.v_ == 0) return BigCount();
        unsigned __int128 r = v_ * o.v_;
        if (r / v_ != o.v_) throw std::overflow_error("BigCount: product exceeds 128 bits");
        return from_raw(r);
    }

    // Plain truncating division; callers use this where divisibility is exact.
    BigCount operator/(BigCount o) const {
        if (o.v_ == 0) throw std::domain_error("BigCount: division by zero");
        return from_raw(v_ / o.v_);
    }

    BigCount& operator+=(BigCount o) { return *this = *this + o; }
    BigCount& operator-=(BigCount o) { return *this = *this - o; }
    BigCount& operator*=(BigCount o) { return *this = *this * o; }

    friend constexpr bool operator==(BigCount a, BigCount b) noexcept { return a.v_ == b.v_; }
    friend constexpr bool operator!=(BigCount a, BigCount b) noexcept { return a.v_ != b.v_; }
    friend constexpr bool operator<(BigCount a, BigCount b) noexcept { return a.v_ < b.v_; }
    friend constexpr bool operator<=(BigCount a, BigCount b) noexcept { return a.v_ <= b.v_; }
    friend constexpr bool operator>(BigCount a, BigCount b) noexcept { return a.v_ > b.v_; }
    friend constexpr bool operator>=(BigCount a, BigCount b) noexcept { return a.v_ >= b.v_; }

    constexpr bool fits_u64() const noexcept {
        return v_ <= static_cast<unsigned __int128>(UINT64_MAX);
    }

    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("BigCount: value exceeds 64 bits");
        return static_cast<std::uint64_t>(v_);
    }

    double to_double() const noexcept {
        return static_cast<double>(v_);
    }

    std::string str() const {
        if (v_ == 0) return "0";
        std::string s;
        unsigned __int128 v = v_;
        while (v > 0) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        }
        return s;
    }

private:
    unsigned __int128 v_;
};

// n! as an exact count; overflows past 34! (34! < 2^128 < 35!).
inline BigCount factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigCount r{1};
    for (std::int64_t i = 2; i <= n; ++i) r *= BigCount(static_cast<std::uint64_t>(i));
    return r;
}

// Binomial coefficient C(n, k), exact. Intermediate products stay within one
// multiply of the result because each step's value is itself a binomial.
inline BigCount binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
    if (k > n) return BigCount(0);
    if (k > n - k) k = n - k;
    BigCount r{1};
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * BigCount(static_cast<std::uint64_t>(n - k + i)) /
            BigCount(static_cast<std::uint64_t>(i));
    }
    return r;
}

}  // namespace graphgen
