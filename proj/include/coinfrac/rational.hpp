#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coinfrac {

/// Exact rational number with 64-bit numerator and denominator.
/// Always stored reduced with a positive denominator, so equality is
/// field-wise and ordering never needs floating point.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n) {} // NOLINT: implicit from integers is intended
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// x + q for integer q; reduction is preserved.
    Rational translated(std::int64_t q) const {
        Rational r;
        r.num_ = checked(static_cast<__int128>(num_) + static_cast<__int128>(q) * den_);
        r.den_ = den_;
        return r;
    }

    /// x / k for integer k != 0.
    Rational scaled_down(std::int64_t k) const {
        return Rational(num_, checked(static_cast<__int128>(den_) * k));
    }

    Rational operator+(const Rational& o) const {
        return Rational(checked(static_cast<__int128>(num_) * o.den_ +
                                static_cast<__int128>(o.num_) * den_),
                        checked(static_cast<__int128>(den_) * o.den_));
    }

    Rational operator-(const Rational& o) const {
        return Rational(checked(static_cast<__int128>(num_) * o.den_ -
                                static_cast<__int128>(o.num_) * den_),
                        checked(static_cast<__int128>(den_) * o.den_));
    }

    Rational operator*(const Rational& o) const {
        return Rational(checked(static_cast<__int128>(num_) * o.num_),
                        checked(static_cast<__int128>(den_) * o.den_));
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::strong_ordering operator<=>(const Rational& o) const {
        const __int128 lhs = static_cast<__int128>(num_) * o.den_;
        const __int128 rhs = static_cast<__int128>(o.num_) * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static std::int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("rational arithmetic overflow");
        return static_cast<std::int64_t>(v);
    }

    void normalize() {
        if (den_ == 0)
            throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace coinfrac
