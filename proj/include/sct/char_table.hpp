#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sct/cyclotomic.hpp"
#include "sct/error.hpp"
#include "sct/group.hpp"

namespace sct {

/// A complex-valued function on a group that is constant on conjugacy
/// classes, with exact cyclotomic values stored per class.
class ClassFunction {
public:
    ClassFunction(GroupPtr group, std::vector<Cyclotomic> values_by_class)
        : group_(std::move(group)), values_(std::move(values_by_class)) {
        require(group_ != nullptr, "PreconditionFailed", "class function needs a group");
        require(values_.size() == group_->num_classes(), "PreconditionFailed",
                "class function needs one value per conjugacy class");
    }

    const GroupPtr& group() const { return group_; }
    const std::vector<Cyclotomic>& values() const { return values_; }
    const Cyclotomic& at_class(size_t c) const { return values_.at(c); }
    const Cyclotomic& at_element(int g) const { return values_.at(group_->class_of(g)); }

    /// Value at the identity.
    const Cyclotomic& degree() const { return values_[0]; }

    /// Degree as an integer; fails if the value at 1 is not one.
    long long degree_int() const {
        require(degree().is_integer(), "NotAnInteger", "degree is not an integer");
        return degree().as_integer();
    }

    bool operator==(const ClassFunction& o) const {
        return same_group(group_, o.group_) && values_ == o.values_;
    }
    bool operator!=(const ClassFunction& o) const { return !(*this == o); }

    ClassFunction operator+(const ClassFunction& o) const {
        check_same(o);
        std::vector<Cyclotomic> v;
        v.reserve(values_.size());
        for (size_t i = 0; i < values_.size(); i++) v.push_back(values_[i] + o.values_[i]);
        return ClassFunction(group_, std::move(v));
    }
    ClassFunction operator-(const ClassFunction& o) const {
        check_same(o);
        std::vector<Cyclotomic> v;
        v.reserve(values_.size());
        for (size_t i = 0; i < values_.size(); i++) v.push_back(values_[i] - o.values_[i]);
        return ClassFunction(group_, std::move(v));
    }
    ClassFunction operator*(const ClassFunction& o) const {
        check_same(o);
        std::vector<Cyclotomic> v;
        v.reserve(values_.size());
        for (size_t i = 0; i < values_.size(); i++) v.push_back(values_[i] * o.values_[i]);
        return ClassFunction(group_, std::move(v));
    }
    ClassFunction operator*(const Rational& r) const {
        std::vector<Cyclotomic> v;
        v.reserve(values_.size());
        for (const auto& x : values_) v.push_back(x * r);
        return ClassFunction(group_, std::move(v));
    }
    ClassFunction conj() const {
        std::vector<Cyclotomic> v;
        v.reserve(values_.size());
        for (const auto& x : values_) v.push_back(x.conj());
        return ClassFunction(group_, std::move(v));
    }

private:
    void check_same(const ClassFunction& o) const {
        require(same_group(group_, o.group_), "GroupMismatch",
                "class functions live on different groups");
    }

    GroupPtr group_;
    std::vector<Cyclotomic> values_;
};

/// <a, b> = (1/|G|) sum_g a(g) conj(b(g)), summed classwise.
inline Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
    require(same_group(a.group(), b.group()), "GroupMismatch",
            "inner product needs class functions on the same group");
    const auto& G = *a.group();
    Cyclotomic total(Rational(0));
    for (size_t c = 0; c < G.num_classes(); c++) {
        Cyclotomic term = a.at_class(c) * b.at_class(c).conj();
        total = total + term * Rational(G.class_sizes()[c]);
    }
    return total / Rational(static_cast<long long>(G.order()));
}

namespace detail {

// ---- arithmetic mod a word-sized prime ------------------------------------

inline long long modp_mul(long long a, long long b, long long p) {
    return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

inline long long modp_pow(long long a, long long n, long long p) {
    a %= p;
    if (a < 0) a += p;
    long long r = 1;
    while (n > 0) {
        if (n & 1) r = modp_mul(r, a, p);
        a = modp_mul(a, a, p);
        n >>= 1;
    }
    return r;
}

inline long long modp_inv(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    require(a != 0, "DivisionByZero", "inverse of zero mod p");
    return modp_pow(a, p - 2, p);
}

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

/// Smallest prime p with p = 1 (mod e) and p > floor, found by scanning.
inline long long find_splitting_prime(long long e, long long floor_bound) {
    long long p = ((floor_bound / e) + 1) * e + 1;
    while (!is_prime_ll(p)) p += e;
    return p;
}

/// Smallest generator of (Z/p)^*.
inline long long primitive_root(long long p) {
    std::vector<long long> prime_factors;
    long long m = p - 1;
    for (long long d = 2; d * d <= m; d++) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    for (long long z = 2; z < p; z++) {
        bool ok = true;
        for (long long q : prime_factors)
            if (modp_pow(z, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return z;
    }
    fail_internal("no primitive root found");
}

using PMat = std::vector<std::vector<long long>>;

/// Row reduce in place; returns pivot columns. Fully reduced (pivot columns
/// are zero outside their pivot row, pivots are one).
inline std::vector<size_t> rref_mod(PMat& m, long long p) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) sel++;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        long long iv = modp_inv(m[r][c], p);
        for (size_t j = c; j < cols; j++) m[r][j] = modp_mul(m[r][j], iv, p);
        for (size_t i = 0; i < rows; i++) {
            if (i == r || m[i][c] == 0) continue;
            long long f = m[i][c];
            for (size_t j = c; j < cols; j++) {
                m[i][j] = (m[i][j] - modp_mul(f, m[r][j], p)) % p;
                if (m[i][j] < 0) m[i][j] += p;
            }
        }
        pivots.push_back(c);
        r++;
    }
    m.resize(pivots.size(), std::vector<long long>(cols, 0));
    return pivots;
}

/// Basis of the right nullspace of m, one vector per free column, in
/// ascending free-column order.
inline PMat nullspace_mod(PMat m, long long p) {
    size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<size_t> pivots = rref_mod(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    PMat basis;
    for (size_t c = 0; c < cols; c++) {
        if (is_pivot[c]) continue;
        std::vector<long long> v(cols, 0);
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); r++) {
            long long val = m[r][c];
            if (val != 0) v[pivots[r]] = p - val;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Characteristic polynomial mod p (monic, coefficient of x^i at index i),
/// by similarity reduction to Hessenberg form and the standard recurrence.
/// Uses only divisions by field elements, so it works for any p.
inline std::vector<long long> charpoly_mod(PMat a, long long p) {
    size_t n = a.size();
    for (size_t c = 0; c + 2 < n; c++) {
        size_t piv = c + 1;
        while (piv < n && a[piv][c] == 0) piv++;
        if (piv == n) continue;
        if (piv != c + 1) {
            std::swap(a[piv], a[c + 1]);
            for (size_t i = 0; i < n; i++) std::swap(a[i][piv], a[i][c + 1]);
        }
        long long iv = modp_inv(a[c + 1][c], p);
        for (size_t r = c + 2; r < n; r++) {
            if (a[r][c] == 0) continue;
            long long f = modp_mul(a[r][c], iv, p);
            for (size_t j = 0; j < n; j++) {
                a[r][j] = (a[r][j] - modp_mul(f, a[c + 1][j], p)) % p;
                if (a[r][j] < 0) a[r][j] += p;
            }
            for (size_t i = 0; i < n; i++)
                a[i][c + 1] = (a[i][c + 1] + modp_mul(f, a[i][r], p)) % p;
        }
    }
    // p_i = charpoly of leading i x i block of the Hessenberg matrix.
    std::vector<std::vector<long long>> cp(n + 1);
    cp[0] = {1};
    for (size_t i = 1; i <= n; i++) {
        // (x - a[i-1][i-1]) * cp[i-1]
        std::vector<long long> poly(i + 1, 0);
        for (size_t t = 0; t < cp[i - 1].size(); t++) {
            poly[t + 1] = (poly[t + 1] + cp[i - 1][t]) % p;
            poly[t] = (poly[t] - modp_mul(a[i - 1][i - 1], cp[i - 1][t], p)) % p;
            if (poly[t] < 0) poly[t] += p;
        }
        long long sub = 1;
        for (size_t j = i - 1; j >= 1; j--) {
            sub = modp_mul(sub, a[j][j - 1], p);
            long long f = modp_mul(a[j - 1][i - 1], sub, p);
            if (f != 0) {
                for (size_t t = 0; t < cp[j - 1].size(); t++) {
                    poly[t] = (poly[t] - modp_mul(f, cp[j - 1][t], p)) % p;
                    if (poly[t] < 0) poly[t] += p;
                }
            }
        }
        cp[i] = std::move(poly);
    }
    return cp[n];
}

inline long long poly_eval_mod(const std::vector<long long>& poly, long long x, long long p) {
    long long r = 0;
    for (size_t i = poly.size(); i-- > 0;) r = (modp_mul(r, x, p) + poly[i]) % p;
    return r;
}

// ---- exact table construction ---------------------------------------------

/// Character data before packaging: value exponents or cyclotomic values per
/// conjugacy class.
struct RawCharacter {
    std::vector<Cyclotomic> values;
};

/// Character group of an abelian group, built by extending linear characters
/// along a chain of cyclic extensions. Values are exact powers of a fixed
/// primitive e-th root of unity, e the exponent of the group.
inline std::vector<RawCharacter> abelian_characters(const FiniteGroup& G) {
    const long long e = G.exponent();
    const size_t n = G.order();
    // chars[i][g] = exponent a with chi_i(g) = zeta_e^a, defined for g in H.
    std::vector<std::vector<long long>> chars{std::vector<long long>(n, 0)};
    std::vector<int> members{0};
    std::vector<bool> in_h(n, false);
    in_h[0] = true;
    while (members.size() < n) {
        int x = 0;
        while (in_h[x]) x++;
        long long m = 1;
        int pw = x;
        while (!in_h[pw]) {
            m++;
            pw = G.mult(pw, x);
        }
        // pw = x^m is the first power landing in H.
        std::vector<std::vector<long long>> next;
        next.reserve(chars.size() * static_cast<size_t>(m));
        for (const auto& a : chars) {
            long long t = a[pw];
            require(t % m == 0, "InternalError", "abelian extension value not divisible");
            for (long long j = 0; j < m; j++) {
                long long s = (t / m + (e / m) * j) % e;
                std::vector<long long> ext = a;
                long long xl = 0;  // x^l
                long long sl = 0;  // s*l mod e
                for (long long l = 1; l < m; l++) {
                    xl = l == 1 ? x : G.mult(static_cast<int>(xl), x);
                    sl = (sl + s) % e;
                    for (int h : members) ext[G.mult(h, static_cast<int>(xl))] = (a[h] + sl) % e;
                }
                next.push_back(std::move(ext));
            }
        }
        chars = std::move(next);
        std::vector<int> grown;
        grown.reserve(members.size() * static_cast<size_t>(m));
        long long xl = 0;
        for (long long l = 0; l < m; l++) {
            if (l > 0) xl = l == 1 ? x : G.mult(static_cast<int>(xl), x);
            for (int h : members) {
                int g = l == 0 ? h : G.mult(h, static_cast<int>(xl));
                grown.push_back(g);
                in_h[g] = true;
            }
        }
        members = std::move(grown);
    }
    require(chars.size() == n, "InternalError", "abelian character count mismatch");
    std::vector<RawCharacter> out;
    out.reserve(n);
    for (const auto& a : chars) {
        RawCharacter rc;
        rc.values.reserve(G.num_classes());
        for (size_t c = 0; c < G.num_classes(); c++)
            rc.values.push_back(Cyclotomic::root_of_unity(e, a[G.class_reps()[c]]));
        out.push_back(std::move(rc));
    }
    return out;
}

/// Irreducible characters of an arbitrary group: split the class algebra mod
/// a prime p = 1 (mod exponent), read off central character values, recover
/// degrees, and lift every entry to an exact sum of e-th roots of unity via
/// the power map of the group.
inline std::vector<RawCharacter> modular_characters(const FiniteGroup& G) {
    const size_t k = G.num_classes();
    const long long n = G.order();
    const long long e = G.exponent();
    const auto& sizes = G.class_sizes();
    const auto& reps = G.class_reps();

    // Class-sum structure constants a[i][j][r]: K_i K_j = sum_r a[i][j][r] K_r.
    std::vector<std::vector<std::vector<long long>>> a(
        k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
    for (size_t r = 0; r < k; r++) {
        int z = reps[r];
        for (size_t i = 0; i < k; i++)
            for (int x : G.classes().blocks[i]) a[i][G.class_of(G.mult(G.inv(x), z))][r]++;
    }

    long long max_class = *std::max_element(sizes.begin(), sizes.end());
    long long sqrt_n = 1;
    while (sqrt_n * sqrt_n < n) sqrt_n++;
    const long long p = find_splitting_prime(e, 2 * sqrt_n * max_class);
    const long long root = primitive_root(p);
    const long long we = modp_pow(root, (p - 1) / e, p);

    std::vector<PMat> A(k, PMat(k, std::vector<long long>(k, 0)));
    for (size_t i = 0; i < k; i++)
        for (size_t j = 0; j < k; j++)
            for (size_t r = 0; r < k; r++) A[i][j][r] = a[i][j][r] % p;

    // Split the common eigenspaces. Subspaces are kept as RREF row bases.
    struct Space {
        PMat rows;
        std::vector<size_t> pivots;
    };
    PMat full(k, std::vector<long long>(k, 0));
    for (size_t i = 0; i < k; i++) full[i][i] = 1;
    std::vector<Space> spaces{{full, [&] {
                                   std::vector<size_t> pv(k);
                                   std::iota(pv.begin(), pv.end(), size_t{0});
                                   return pv;
                               }()}};
    for (size_t mi = 1; mi < k; mi++) {
        bool all_lines = true;
        for (const auto& s : spaces)
            if (s.rows.size() > 1) { all_lines = false; break; }
        if (all_lines) break;
        std::vector<Space> next;
        for (auto& s : spaces) {
            size_t m = s.rows.size();
            if (m == 1) {
                next.push_back(std::move(s));
                continue;
            }
            // Restriction R of A[mi] to the subspace: column t holds the
            // coordinates of A[mi] * basis_t.
            PMat R(m, std::vector<long long>(m, 0));
            for (size_t t = 0; t < m; t++) {
                std::vector<long long> w(k, 0);
                for (size_t row = 0; row < k; row++) {
                    long long acc = 0;
                    for (size_t col = 0; col < k; col++)
                        if (A[mi][row][col] != 0 && s.rows[t][col] != 0)
                            acc = (acc + modp_mul(A[mi][row][col], s.rows[t][col], p)) % p;
                    w[row] = acc;
                }
                std::vector<long long> coeff(m);
                for (size_t sidx = 0; sidx < m; sidx++) coeff[sidx] = w[s.pivots[sidx]];
                for (size_t col = 0; col < k; col++) {
                    long long acc = 0;
                    for (size_t sidx = 0; sidx < m; sidx++)
                        acc = (acc + modp_mul(coeff[sidx], s.rows[sidx][col], p)) % p;
                    require(acc == w[col], "InternalError", "class matrix does not preserve subspace");
                }
                for (size_t sidx = 0; sidx < m; sidx++) R[sidx][t] = coeff[sidx];
            }
            std::vector<long long> cp = charpoly_mod(R, p);
            size_t found_dim = 0;
            for (long long lam = 0; lam < p && found_dim < m; lam++) {
                if (poly_eval_mod(cp, lam, p) != 0) continue;
                PMat shifted = R;
                for (size_t d = 0; d < m; d++)
                    shifted[d][d] = (shifted[d][d] - lam % p + p) % p;
                PMat ns = nullspace_mod(std::move(shifted), p);
                if (ns.empty()) continue;
                found_dim += ns.size();
                PMat glob;
                for (const auto& c : ns) {
                    std::vector<long long> v(k, 0);
                    for (size_t t = 0; t < m; t++)
                        if (c[t] != 0)
                            for (size_t col = 0; col < k; col++)
                                v[col] = (v[col] + modp_mul(c[t], s.rows[t][col], p)) % p;
                    glob.push_back(std::move(v));
                }
                std::vector<size_t> pv = rref_mod(glob, p);
                next.push_back({std::move(glob), std::move(pv)});
            }
            require(found_dim == m, "InternalError", "class matrix failed to split subspace");
        }
        spaces = std::move(next);
    }
    require(spaces.size() == k, "InternalError", "wrong number of central characters");

    // Each line is spanned by the vector of central character values
    // (omega_0, ..., omega_{k-1}) with omega_0 = 1.
    std::vector<std::vector<long long>> omega;
    omega.reserve(k);
    for (auto& s : spaces) {
        require(s.rows.size() == 1, "InternalError", "eigenspace did not reduce to a line");
        std::vector<long long> u = s.rows[0];
        require(u[0] != 0, "InternalError", "central character vanishes on the identity class");
        long long f = modp_inv(u[0], p);
        for (auto& x : u) x = modp_mul(x, f, p);
        omega.push_back(std::move(u));
    }

    std::vector<size_t> inv_class(k);
    for (size_t c = 0; c < k; c++) inv_class[c] = G.class_of(G.inv(reps[c]));

    // Power map: pm[c][s] = class of rep_c^s.
    std::vector<std::vector<size_t>> pm(k, std::vector<size_t>(static_cast<size_t>(e)));
    for (size_t c = 0; c < k; c++)
        for (long long s = 0; s < e; s++) pm[c][static_cast<size_t>(s)] = G.class_of(G.power(reps[c], s));

    std::vector<long long> we_pow(static_cast<size_t>(e));
    for (long long t = 0; t < e; t++) we_pow[static_cast<size_t>(t)] = modp_pow(we, t, p);
    const long long inv_e = modp_inv(e % p, p);

    std::vector<RawCharacter> out;
    out.reserve(k);
    for (size_t ch = 0; ch < k; ch++) {
        long long tsum = 0;
        for (size_t j = 0; j < k; j++) {
            long long term = modp_mul(omega[ch][j], omega[ch][inv_class[j]], p);
            tsum = (tsum + modp_mul(term, modp_inv(sizes[j] % p, p), p)) % p;
        }
        long long d2 = modp_mul(n % p, modp_inv(tsum, p), p);
        long long degree = 0;
        for (long long d = 1; d * d <= n; d++) {
            if (modp_mul(d, d, p) == d2) {
                require(degree == 0, "InternalError", "ambiguous character degree");
                degree = d;
            }
        }
        require(degree != 0, "InternalError", "no character degree matches");

        std::vector<long long> valp(k);
        for (size_t c = 0; c < k; c++)
            valp[c] = modp_mul(modp_mul(degree % p, omega[ch][c], p), modp_inv(sizes[c] % p, p), p);

        RawCharacter rc;
        rc.values.reserve(k);
        for (size_t c = 0; c < k; c++) {
            std::vector<Rational> mult(static_cast<size_t>(e), Rational(0));
            long long mult_total = 0;
            for (long long t = 0; t < e; t++) {
                long long acc = 0;
                for (long long s = 0; s < e; s++) {
                    long long w = we_pow[static_cast<size_t>((e - t % e) * s % e)];
                    acc = (acc + modp_mul(valp[pm[c][static_cast<size_t>(s)]], w, p)) % p;
                }
                long long mt = modp_mul(acc, inv_e, p);
                require(mt <= degree, "InternalError", "root multiplicity exceeds degree");
                mult[static_cast<size_t>(t)] = Rational(mt);
                mult_total += mt;
            }
            require(mult_total == degree, "InternalError", "root multiplicities do not sum to degree");
            rc.values.push_back(Cyclotomic::from_root_combination(e, std::move(mult)));
        }
        out.push_back(std::move(rc));
    }
    return out;
}

}  // namespace detail

/// The exact table of irreducible characters of a finite group. Rows are
/// sorted with the trivial character first, then by increasing degree and
/// lexicographic value tuple, so construction is deterministic.
class CharacterTable {
public:
    CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles)
        : group_(std::move(group)), irreducibles_(std::move(irreducibles)) {}

    const GroupPtr& group() const { return group_; }
    const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
    size_t size() const { return irreducibles_.size(); }
    const ClassFunction& irreducible(size_t i) const { return irreducibles_.at(i); }

    /// Degrees of the irreducible characters, in row order.
    std::vector<long long> degrees() const {
        std::vector<long long> d;
        d.reserve(irreducibles_.size());
        for (const auto& ch : irreducibles_) d.push_back(ch.degree_int());
        return d;
    }

    /// Index of the row equal to the given class function, if any.
    std::optional<size_t> index_of(const ClassFunction& f) const {
        for (size_t i = 0; i < irreducibles_.size(); i++)
            if (irreducibles_[i] == f) return i;
        return std::nullopt;
    }

private:
    GroupPtr group_;
    std::vector<ClassFunction> irreducibles_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// Largest group order for which exact character tables are computed.
inline constexpr size_t kTableOrderCap = 1024;

/// Compute the exact character table of a finite group. The result is
/// certified internally: rows must be orthonormal and the degrees must
/// satisfy sum d_i^2 = |G|.
inline TablePtr character_table(const GroupPtr& G) {
    require(G != nullptr, "PreconditionFailed", "character_table needs a group");
    require(G->order() <= kTableOrderCap, "OrderCapExceeded",
            "exact character tables are limited to order " + std::to_string(kTableOrderCap));
    const size_t k = G->num_classes();
    std::vector<detail::RawCharacter> raw =
        G->abelian() ? detail::abelian_characters(*G) : detail::modular_characters(*G);
    require(raw.size() == k, "InternalError", "irreducible count does not match class count");

    std::vector<ClassFunction> rows;
    rows.reserve(k);
    for (auto& rc : raw) rows.emplace_back(G, std::move(rc.values));

    // Canonical order: trivial character, then by degree, then by values.
    const Cyclotomic one(Rational(1));
    auto is_trivial = [&](const ClassFunction& f) {
        for (const auto& v : f.values())
            if (!(v == one)) return false;
        return true;
    };
    std::sort(rows.begin(), rows.end(), [&](const ClassFunction& x, const ClassFunction& y) {
        bool tx = is_trivial(x), ty = is_trivial(y);
        if (tx != ty) return tx;
        long long dx = x.degree_int(), dy = y.degree_int();
        if (dx != dy) return dx < dy;
        for (size_t c = 0; c < x.values().size(); c++) {
            if (x.values()[c] == y.values()[c]) continue;
            return x.values()[c] < y.values()[c];
        }
        return false;
    });

    long long degree_sq_sum = 0;
    for (const auto& r : rows) degree_sq_sum += r.degree_int() * r.degree_int();
    require(degree_sq_sum == static_cast<long long>(G->order()), "InternalError",
            "degree squares do not sum to the group order");

    const Cyclotomic zero(Rational(0));
    // Full pairwise orthonormality is certified for moderate tables; for
    // large ones check row norms and orthogonality against the trivial row.
    const bool full_check = k <= 64;
    for (size_t i = 0; i < k; i++) {
        require(inner_product(rows[i], rows[i]) == one, "InternalError",
                "irreducible row is not norm one");
        size_t j_end = (full_check || i == 0) ? k : i + 1;
        for (size_t j = i + 1; j < j_end; j++)
            require(inner_product(rows[i], rows[j]) == zero, "InternalError",
                    "irreducible rows are not orthogonal");
    }

    return std::make_shared<CharacterTable>(G, std::move(rows));
}

// ---- derived operations -----------------------------------------------------

/// Restriction of a class function to a subgroup, as a class function on the
/// standalone group of the subgroup.
inline ClassFunction restrict_to(const ClassFunction& f, const SubgroupGroup& H) {
    require(same_group(f.group(), H.sub.parent), "GroupMismatch",
            "restriction needs a subgroup of the function's group");
    std::vector<Cyclotomic> vals;
    vals.reserve(H.group->num_classes());
    for (size_t c = 0; c < H.group->num_classes(); c++) {
        int rep = H.group->class_reps()[c];
        vals.push_back(f.at_element(H.to_parent()[rep]));
    }
    return ClassFunction(H.group, std::move(vals));
}

/// Induction of a class function from a subgroup to the parent group:
/// Ind(f)(g) = (1/|H|) sum over t in G with t^-1 g t in H of f(t^-1 g t).
inline ClassFunction induce_from(const ClassFunction& f, const SubgroupGroup& H) {
    require(same_group(f.group(), H.group), "GroupMismatch",
            "induction needs a class function on the subgroup");
    const auto& G = *H.sub.parent;
    std::vector<Cyclotomic> vals;
    vals.reserve(G.num_classes());
    for (size_t c = 0; c < G.num_classes(); c++) {
        int g = G.class_reps()[c];
        Cyclotomic sum(Rational(0));
        for (size_t t = 0; t < G.order(); t++) {
            int conj = G.conjugate(G.inv(static_cast<int>(t)), g);
            if (!H.sub.contains(conj)) continue;
            sum = sum + f.at_element(H.index_of_parent(conj));
        }
        vals.push_back(sum / Rational(static_cast<long long>(H.sub.order())));
    }
    return ClassFunction(H.sub.parent, std::move(vals));
}

/// Deflation of a class function along a quotient map. The kernel must lie
/// inside the kernel of the function.
inline ClassFunction deflate(const ClassFunction& f, const QuotientMap& qm) {
    require(same_group(f.group(), qm.source), "GroupMismatch",
            "deflation needs a class function on the source group");
    for (int m : qm.kernel.members)
        require(f.at_element(m) == f.degree(), "KernelDoesNotContainN",
                "class function is not trivial on the kernel");
    std::vector<Cyclotomic> vals;
    vals.reserve(qm.quotient->num_classes());
    for (size_t c = 0; c < qm.quotient->num_classes(); c++) {
        int qrep = qm.quotient->class_reps()[c];
        vals.push_back(f.at_element(qm.fibers.blocks[static_cast<size_t>(qrep)][0]));
    }
    return ClassFunction(qm.quotient, std::move(vals));
}

/// Inflation of a class function on the quotient back to the source group.
inline ClassFunction inflate(const ClassFunction& f, const QuotientMap& qm) {
    require(same_group(f.group(), qm.quotient), "GroupMismatch",
            "inflation needs a class function on the quotient group");
    std::vector<Cyclotomic> vals;
    vals.reserve(qm.source->num_classes());
    for (size_t c = 0; c < qm.source->num_classes(); c++)
        vals.push_back(f.at_element(qm.image_of[qm.source->class_reps()[c]]));
    return ClassFunction(qm.source, std::move(vals));
}

/// Coefficients of f in the basis of irreducible characters.
inline std::vector<Cyclotomic> decompose(const CharacterTable& table, const ClassFunction& f) {
    require(same_group(table.group(), f.group()), "GroupMismatch",
            "decomposition needs a class function on the table's group");
    std::vector<Cyclotomic> coeffs;
    coeffs.reserve(table.size());
    for (const auto& chi : table.irreducibles()) coeffs.push_back(inner_product(f, chi));
    return coeffs;
}

/// True when f is a character: a nonzero nonnegative-integer combination of
/// irreducible characters.
inline bool is_character(const CharacterTable& table, const ClassFunction& f,
                         std::vector<long long>* multiplicities = nullptr) {
    std::vector<Cyclotomic> coeffs = decompose(table, f);
    std::vector<long long> mult;
    mult.reserve(coeffs.size());
    bool nonzero = false;
    for (const auto& c : coeffs) {
        if (!c.is_integer()) return false;
        long long m = c.as_integer();
        if (m < 0) return false;
        if (m > 0) nonzero = true;
        mult.push_back(m);
    }
    if (!nonzero) return false;
    if (multiplicities) *multiplicities = std::move(mult);
    return true;
}

/// Kernel of a character: elements where the value equals the degree.
inline Subgroup kernel_of(const CharacterTable& table, const ClassFunction& f) {
    require(is_character(table, f), "NotACharacter", "kernel is defined for characters only");
    std::vector<int> members;
    for (size_t g = 0; g < f.group()->order(); g++)
        if (f.at_element(static_cast<int>(g)) == f.degree()) members.push_back(static_cast<int>(g));
    return make_subgroup(f.group(), members);
}

/// Center of a character: elements where |f(g)| equals the degree.
inline Subgroup center_of(const CharacterTable& table, const ClassFunction& f) {
    require(is_character(table, f), "NotACharacter", "center is defined for characters only");
    Cyclotomic d2 = f.degree() * f.degree();
    std::vector<int> members;
    for (size_t g = 0; g < f.group()->order(); g++)
        if (norm_squared(f.at_element(static_cast<int>(g))) == d2)
            members.push_back(static_cast<int>(g));
    return make_subgroup(f.group(), members);
}

/// omega_chi(K) = sum_{g in K} chi(g) / chi(1) for a conjugation-closed set
/// K of group elements.
inline Cyclotomic central_character_value(const ClassFunction& chi, const std::vector<int>& members) {
    const auto& G = *chi.group();
    std::vector<bool> in_set(G.order(), false);
    for (int m : members) {
        require(m >= 0 && static_cast<size_t>(m) < G.order(), "PreconditionFailed",
                "element out of range");
        in_set[m] = true;
    }
    for (int m : members)
        for (int c : G.classes().blocks[G.class_of(m)])
            require(in_set[c], "NotClassClosed",
                    "set is not closed under conjugation at element " + G.label(c));
    Cyclotomic sum(Rational(0));
    for (int m : members) sum = sum + chi.at_element(m);
    return sum / Rational(chi.degree_int());
}

}  // namespace sct
