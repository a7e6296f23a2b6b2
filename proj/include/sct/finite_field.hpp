#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sct/error.hpp"

namespace sct {

namespace detail {

inline bool is_prime_small(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

/// The field F_q with q = p^k, as F_p[X] modulo a monic irreducible
/// polynomial. Elements are integers in [0, q): the base-p digits of an
/// element are its coefficients against 1, X, ..., X^{k-1}.
class FiniteField {
public:
    /// Degrees are bounded by the order cap in make_field (2^16 < 100000),
    /// which keeps the arithmetic below on stack buffers.
    static constexpr int kMaxDegree = 17;

    FiniteField() = default;

    int p() const { return p_; }
    int k() const { return k_; }
    long long order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    std::vector<int> digits(long long a) const {
        std::vector<int> out(static_cast<size_t>(k_));
        for (int i = 0; i < k_; i++) {
            out[static_cast<size_t>(i)] = static_cast<int>(a % p_);
            a /= p_;
        }
        return out;
    }

    long long from_digits(const std::vector<int>& d) const {
        long long out = 0;
        for (size_t i = d.size(); i-- > 0;) out = out * p_ + d[i] % p_;
        return out;
    }

    long long add(long long a, long long b) const {
        if (k_ == 1) return (a + b) % p_;
        long long out = 0, place = 1;
        for (int i = 0; i < k_; i++) {
            out += ((a % p_ + b % p_) % p_) * place;
            place *= p_;
            a /= p_;
            b /= p_;
        }
        return out;
    }

    long long neg(long long a) const {
        if (k_ == 1) return (p_ - a) % p_;
        long long out = 0, place = 1;
        for (int i = 0; i < k_; i++) {
            out += ((p_ - a % p_) % p_) * place;
            place *= p_;
            a /= p_;
        }
        return out;
    }

    long long sub(long long a, long long b) const { return add(a, neg(b)); }

    long long mul(long long a, long long b) const {
        if (k_ == 1) return (a * b) % p_;
        int da[kMaxDegree], db[kMaxDegree], prod[2 * kMaxDegree] = {};
        for (int i = 0; i < k_; i++) {
            da[i] = static_cast<int>(a % p_);
            db[i] = static_cast<int>(b % p_);
            a /= p_;
            b /= p_;
        }
        for (int i = 0; i < k_; i++) {
            if (da[i] == 0) continue;
            for (int j = 0; j < k_; j++) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        for (int i = 2 * k_ - 2; i >= k_; i--) {
            int c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (int j = 0; j < k_; j++)
                prod[i - k_ + j] = ((prod[i - k_ + j] - c * modulus_[static_cast<size_t>(j)]) % p_ + p_) % p_;
        }
        long long out = 0;
        for (int i = k_; i-- > 0;) out = out * p_ + prod[i];
        return out;
    }

    long long pow(long long a, long long e) const {
        long long out = 1, base = a;
        while (e > 0) {
            if (e & 1) out = mul(out, base);
            base = mul(base, base);
            e >>= 1;
        }
        return out;
    }

    long long inv(long long a) const {
        require(a != 0, "PreconditionFailed", "zero has no multiplicative inverse");
        for (long long b = 1; b < q_; b++)
            if (mul(a, b) == 1) return b;
        fail_internal("no inverse found in a validated field");
    }

    /// Embedding of the prime field.
    long long scalar(int c) const { return ((c % p_) + p_) % p_; }

    /// Trace to the prime field: a + a^p + ... + a^{p^{k-1}}, as an integer
    /// in [0, p).
    int trace(long long a) const {
        long long acc = a, frob = a;
        for (int i = 1; i < k_; i++) {
            frob = pow(frob, p_);
            acc = add(acc, frob);
        }
        std::vector<int> d = digits(acc);
        for (int i = 1; i < k_; i++)
            if (d[static_cast<size_t>(i)] != 0)
                fail_internal("trace landed outside the prime field");
        return d[0];
    }

    friend FiniteField make_field(int p, int k, std::vector<int> modulus);

private:
    int p_ = 0;
    int k_ = 0;
    long long q_ = 0;
    std::vector<int> modulus_;  // monic, coefficients of 1, X, ..., X^k
};

namespace detail {

/// Remainder of monic polynomial division over F_p; both low-to-high.
inline bool divides_poly(int p, const std::vector<int>& divisor, std::vector<int> target) {
    size_t d = divisor.size() - 1;
    for (size_t i = target.size(); i-- > d;) {
        int c = target[i];
        if (c == 0) continue;
        for (size_t j = 0; j <= d; j++)
            target[i - d + j] = ((target[i - d + j] - c * divisor[j]) % p + p) % p;
    }
    for (size_t i = 0; i < d; i++)
        if (target[i] != 0) return false;
    return true;
}

inline void check_field_axioms(const FiniteField& F) {
    const long long q = F.order();
    if (q > 16) return;
    for (long long a = 0; a < q; a++) {
        require(F.add(a, 0) == a && F.mul(a, 1) == a && F.mul(a, 0) == 0, "InternalError",
                "field identity axiom failed");
        if (a != 0) {
            long long b = F.inv(a);
            require(F.mul(a, b) == 1, "InternalError", "field inverse axiom failed");
        }
        for (long long b = 0; b < q; b++) {
            require(F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a), "InternalError",
                    "field commutativity axiom failed");
            for (long long c = 0; c < q; c++) {
                require(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)), "InternalError",
                        "field associativity axiom failed");
                require(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)), "InternalError",
                        "field distributivity axiom failed");
            }
        }
    }
}

}  // namespace detail

/// Builds F_{p^k}. Without an explicit modulus, a built-in irreducible
/// polynomial is used; these exist for every prime p with k = 1 and for
/// q in {4, 8, 9}.
inline FiniteField make_field(int p, int k, std::vector<int> modulus = {}) {
    require(detail::is_prime_small(p), "BadField",
            "characteristic " + std::to_string(p) + " is not prime");
    require(k >= 1, "BadField", "extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < k; i++) {
        q *= p;
        require(q <= 100000, "BadField", "field order too large");
    }

    if (modulus.empty()) {
        if (k == 1) {
            modulus = {0, 1};
        } else if (p == 2 && k == 2) {
            modulus = {1, 1, 1};
        } else if (p == 2 && k == 3) {
            modulus = {1, 1, 0, 1};
        } else if (p == 3 && k == 2) {
            modulus = {1, 0, 1};
        } else {
            fail("BadField", "no built-in modulus for p=" + std::to_string(p) +
                                 ", k=" + std::to_string(k) + "; supply one");
        }
    }
    require(modulus.size() == static_cast<size_t>(k) + 1, "BadField",
            "modulus must have degree k");
    for (int& c : modulus) c = ((c % p) + p) % p;
    require(modulus.back() == 1, "BadField", "modulus must be monic");

    // irreducibility by trial division over the monic polynomials of degree
    // at most k/2
    for (int d = 1; 2 * d <= k; d++) {
        long long count = 1;
        for (int i = 0; i < d; i++) count *= p;
        for (long long lo = 0; lo < count; lo++) {
            std::vector<int> divisor(static_cast<size_t>(d) + 1);
            long long rest = lo;
            for (int i = 0; i < d; i++) {
                divisor[static_cast<size_t>(i)] = static_cast<int>(rest % p);
                rest /= p;
            }
            divisor[static_cast<size_t>(d)] = 1;
            require(!detail::divides_poly(p, divisor, modulus), "BadField",
                    "modulus is reducible");
        }
    }

    FiniteField F;
    F.p_ = p;
    F.k_ = k;
    F.q_ = q;
    F.modulus_ = std::move(modulus);
    detail::check_field_axioms(F);
    return F;
}

/// Builds F_q from its order, factoring q as p^k.
inline FiniteField field_from_order(long long q, std::vector<int> modulus = {}) {
    require(q >= 2, "BadField", "field order must be at least 2");
    int p = 2;
    while (q % p != 0) {
        p++;
        require(p <= q, "BadField", "field order is not a prime power");
    }
    int k = 0;
    long long rest = q;
    while (rest % p == 0) {
        rest /= p;
        k++;
    }
    require(rest == 1, "BadField", std::to_string(q) + " is not a prime power");
    return make_field(p, k, std::move(modulus));
}

}  // namespace sct
