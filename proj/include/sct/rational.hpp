#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "sct/error.hpp"

namespace sct {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long narrow128(int128 v) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        fail("ArithmeticOverflow", "exact rational arithmetic exceeded 64-bit range");
    return static_cast<long long>(v);
}

} // namespace detail

/// Exact rational number over checked 64-bit integers. Always normalized:
/// denominator positive, gcd(num, den) = 1. Overflow throws, never wraps.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    long long as_integer() const {
        require(den_ == 1, "NotAnInteger", "rational " + str() + " is not an integer");
        return num_;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using detail::int128;
        int128 n = int128(a.num_) * b.den_ + int128(b.num_) * a.den_;
        int128 d = int128(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        using detail::int128;
        int128 n = int128(a.num_) * b.den_ - int128(b.num_) * a.den_;
        int128 d = int128(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        using detail::int128;
        return from128(int128(a.num_) * b.num_, int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        require(b.num_ != 0, "DivisionByZero", "rational division by zero");
        using detail::int128;
        return from128(int128(a.num_) * b.den_, int128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
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
        using detail::int128;
        return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void assign(long long n, long long d) {
        require(d != 0, "DivisionByZero", "rational with zero denominator");
        *this = from128(detail::int128(n), detail::int128(d));
    }

    static Rational from128(detail::int128 n, detail::int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::int128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = detail::narrow128(n);
        r.den_ = detail::narrow128(d == 0 ? 1 : d);
        if (r.den_ == 0) fail("DivisionByZero", "rational with zero denominator");
        return r;
    }

    long long num_;
    long long den_;
};

inline bool divides(long long a, long long b) {
    if (a == 0) return b == 0;
    return b % a == 0;
}

} // namespace sct
