#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hodgemhd {

/// Exact rational number on 64-bit numerator/denominator.
///
/// All arithmetic goes through 128-bit intermediates and is normalized
/// (gcd reduced, denominator positive) after every operation. Overflow of
/// the reduced result throws std::overflow_error instead of wrapping, so
/// an identity verified with this type is verified exactly.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        normalize_from(num, den);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return raw(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static Rational raw(std::int64_t n, std::int64_t d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    void normalize_from(std::int64_t num, std::int64_t den) {
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num, den);
        num_ = g ? num / g : 0;
        den_ = g ? den / g : 1;
        if (num_ == 0) den_ = 1;
    }

    static std::int64_t check_narrow(i128 v) {
        if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
            throw std::overflow_error("Rational: 64-bit overflow");
        return std::int64_t(v);
    }

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) { i128 t = a % b; a = b; b = t; }
        return a;
    }

    static Rational from_i128(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const i128 g = gcd128(num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) return raw(0, 1);
        return raw(check_narrow(num), check_narrow(den));
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

} // namespace hodgemhd
