#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "sct/rational.hpp"

namespace sct {

namespace detail {

/// Coefficients of the e-th cyclotomic polynomial, lowest degree first,
/// computed by exact division of x^e - 1 by all lower-order factors.
inline const std::vector<long long>& cyclotomic_polynomial(long long e) {
    static std::map<long long, std::vector<long long>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    auto compute = [](auto&& self, long long m) -> const std::vector<long long>& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        // x^m - 1
        std::vector<long long> p(static_cast<size_t>(m) + 1, 0);
        p[0] = -1;
        p[static_cast<size_t>(m)] = 1;
        for (long long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            const std::vector<long long>& q = self(self, d);
            // exact division p /= q (q is monic)
            std::vector<long long> quot(p.size() - q.size() + 1, 0);
            std::vector<long long> rem = p;
            for (size_t i = quot.size(); i-- > 0;) {
                long long c = rem[i + q.size() - 1];
                quot[i] = c;
                if (c == 0) continue;
                for (size_t j = 0; j < q.size(); ++j) rem[i + j] -= c * q[j];
            }
            p = std::move(quot);
        }
        return cache.emplace(m, std::move(p)).first->second;
    };
    return compute(compute, e);
}

inline size_t phi_degree(long long e) { return cyclotomic_polynomial(e).size() - 1; }

} // namespace detail

/// Element of the cyclotomic field Q(zeta_e), stored as a rational polynomial
/// in zeta_e reduced modulo the e-th cyclotomic polynomial. The conductor is
/// part of the value; mixed-conductor arithmetic lifts both operands to the
/// least common multiple. Equality is mathematical (lcm lift then compare).
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
    Cyclotomic(const Rational& r) : conductor_(1), coeffs_(1, r) {}
    Cyclotomic(long long n) : conductor_(1), coeffs_(1, Rational(n)) {}

    static Cyclotomic zero(long long e = 1) {
        Cyclotomic c;
        c.conductor_ = e;
        c.coeffs_.assign(detail::phi_degree(e), Rational(0));
        return c;
    }

    /// zeta_e^k
    static Cyclotomic root_of_unity(long long e, long long k) {
        require(e >= 1, "PreconditionFailed", "conductor must be positive");
        k %= e;
        if (k < 0) k += e;
        std::vector<Rational> poly(static_cast<size_t>(e), Rational(0));
        poly[static_cast<size_t>(k)] = Rational(1);
        return from_poly(e, std::move(poly));
    }

    /// sum_t coeffs[t] * zeta_e^t (coeffs indexed by power, size at most e).
    static Cyclotomic from_root_combination(long long e, std::vector<Rational> coeffs_by_power) {
        require(e >= 1 && coeffs_by_power.size() <= static_cast<size_t>(e), "PreconditionFailed",
                "bad root combination");
        coeffs_by_power.resize(static_cast<size_t>(e), Rational(0));
        return from_poly(e, std::move(coeffs_by_power));
    }

    long long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }

    Rational rational_part() const {
        require(is_rational(), "NotRational", "cyclotomic value " + str() + " is not rational");
        return coeffs_[0];
    }

    bool is_integer() const { return is_rational() && coeffs_[0].is_integer(); }

    long long as_integer() const { return rational_part().as_integer(); }

    /// Rewrite in Q(zeta_to); requires conductor() | to.
    Cyclotomic lifted(long long to) const {
        if (to == conductor_) return *this;
        require(to % conductor_ == 0, "PreconditionFailed", "conductor lift must be a multiple");
        long long step = to / conductor_;
        std::vector<Rational> poly(static_cast<size_t>(to), Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            poly[static_cast<size_t>((long long)i * step % to)] += coeffs_[i];
        return from_poly(to, std::move(poly));
    }

    /// Galois substitution zeta -> zeta^k, gcd(k, conductor) = 1.
    Cyclotomic galois(long long k) const {
        long long e = conductor_;
        k %= e;
        if (k < 0) k += e;
        require(std::gcd(k, e) == 1, "PreconditionFailed", "galois exponent must be coprime to conductor");
        std::vector<Rational> poly(static_cast<size_t>(e), Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            poly[static_cast<size_t>((long long)i * k % e)] += coeffs_[i];
        return from_poly(e, std::move(poly));
    }

    /// Complex conjugate: zeta -> zeta^{-1}.
    Cyclotomic conj() const { return conductor_ == 1 ? *this : galois(conductor_ - 1); }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        long long e = x.conductor_;
        std::vector<Rational> poly(static_cast<size_t>(e), Rational(0));
        for (size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < y.coeffs_.size(); ++j) {
                if (y.coeffs_[j].is_zero()) continue;
                poly[(i + j) % static_cast<size_t>(e)] += x.coeffs_[i] * y.coeffs_[j];
            }
        }
        return from_poly(e, std::move(poly));
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
        Cyclotomic r = a;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Rational& s) {
        require(!s.is_zero(), "DivisionByZero", "cyclotomic division by zero scalar");
        Cyclotomic r = a;
        for (auto& c : r.coeffs_) c /= s;
        return r;
    }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
        auto [x, y] = aligned(a, b);
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Total order used only for canonical sorting; compares coefficient
    /// vectors after lifting to a common conductor.
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] != y.coeffs_[i]) return x.coeffs_[i] < y.coeffs_[i];
        }
        return false;
    }

    std::string str() const {
        if (is_rational()) return coeffs_[0].str();
        std::string out;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            std::string term;
            std::string mag = (c == Rational(1) || c == Rational(-1)) && i > 0 ? "" : ((c < Rational(0) ? -c : c).str());
            if (i > 0) {
                term = "z" + std::to_string(conductor_);
                if (i > 1) term += "^" + std::to_string(i);
                if (!mag.empty()) term = mag + "*" + term;
            } else {
                term = mag;
            }
            if (out.empty())
                out = (c < Rational(0) ? "-" : "") + term;
            else
                out += (c < Rational(0) ? " - " : " + ") + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    static std::pair<Cyclotomic, Cyclotomic> aligned(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_) return {a, b};
        long long e = std::lcm(a.conductor_, b.conductor_);
        return {a.lifted(e), b.lifted(e)};
    }

    /// Reduce a polynomial whose exponents are already wrapped mod e (size e)
    /// modulo the e-th cyclotomic polynomial.
    static Cyclotomic from_poly(long long e, std::vector<Rational> poly) {
        const auto& phi = detail::cyclotomic_polynomial(e);
        size_t deg = phi.size() - 1;
        for (size_t i = poly.size(); i-- > deg;) {
            Rational c = poly[i];
            if (c.is_zero()) continue;
            poly[i] = Rational(0);
            for (size_t j = 0; j < deg; ++j)
                poly[i - deg + j] -= c * Rational(phi[j]);
        }
        poly.resize(deg);
        Cyclotomic out;
        out.conductor_ = e;
        out.coeffs_ = std::move(poly);
        return out;
    }

    long long conductor_;
    std::vector<Rational> coeffs_; // basis 1, zeta, ..., zeta^{deg-1}
};

/// |z|^2 = z * conj(z); rational for the values this library produces.
inline Cyclotomic norm_squared(const Cyclotomic& z) { return z * z.conj(); }

} // namespace sct
