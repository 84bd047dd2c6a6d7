#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "edgeprofiler/errors.hpp"

namespace edgeprofiler {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline std::int64_t narrow_i128(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw OverflowError("value exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

} // namespace detail

// Exact rational with checked 64-bit numerator/denominator. Byte quantities
// are multiples of bits/8, so INT4 (half a byte per element) stays exact
// instead of truncating to zero. Always stored reduced with den > 0.
class Ratio {
  public:
    constexpr Ratio() = default;
    Ratio(std::int64_t value) : num_(value) {} // NOLINT(google-explicit-constructor)

    Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw InternalError("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Ratio operator+(const Ratio& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return from_i128(n, d);
    }

    Ratio operator-(const Ratio& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return from_i128(n, d);
    }

    Ratio operator*(const Ratio& o) const {
        return from_i128(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    }

    Ratio operator/(const Ratio& o) const {
        if (o.num_ == 0) throw InternalError("rational division by zero");
        return from_i128(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    }

    bool operator==(const Ratio& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Ratio& o) const { return !(*this == o); }

    bool operator<(const Ratio& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator>(const Ratio& o) const { return o < *this; }
    bool operator<=(const Ratio& o) const { return !(o < *this); }
    bool operator>=(const Ratio& o) const { return !(*this < o); }

    // Exact whenever num fits in a double's 53-bit mantissa and den is a
    // power of two, which covers every bits/8-derived byte quantity here.
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    void normalize() {
        if (den_ < 0) {
            if (num_ == INT64_MIN || den_ == INT64_MIN)
                throw OverflowError("rational normalization overflow");
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    static Ratio from_i128(__int128 n, __int128 d) {
        if (d == 0) throw InternalError("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd_i128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Ratio r;
        r.num_ = detail::narrow_i128(n);
        r.den_ = detail::narrow_i128(d);
        if (r.num_ == 0) r.den_ = 1;
        return r;
    }

    static __int128 gcd_i128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace edgeprofiler
