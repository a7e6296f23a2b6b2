#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sct/group.hpp"

namespace sct {

inline GroupPtr cyclic_group(int n) {
    require(n >= 1, "InputError", "cyclic group order must be positive");
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
    for (int a = 0; a < n; ++a)
        labels.push_back(a == 0 ? "1" : (a == 1 ? "x" : "x^" + std::to_string(a)));
    return detail::make_group(n, t, std::move(labels));
}

/// Direct product of cyclic groups of the given orders.
inline GroupPtr abelian_group(const std::vector<int>& dims) {
    require(!dims.empty(), "InputError", "abelian group needs at least one factor");
    long long n = 1;
    for (int d : dims) {
        require(d >= 1, "InputError", "cyclic factor must be positive");
        n *= d;
        require(n <= kDefaultOrderCap, "OrderCapExceeded", "abelian group too large");
    }
    int N = static_cast<int>(n);
    auto decode = [&](int idx) {
        std::vector<int> v(dims.size());
        for (size_t i = 0; i < dims.size(); ++i) {
            v[i] = idx % dims[i];
            idx /= dims[i];
        }
        return v;
    };
    auto encode = [&](const std::vector<int>& v) {
        int idx = 0;
        for (size_t i = dims.size(); i-- > 0;) idx = idx * dims[i] + v[i];
        return idx;
    };
    std::vector<std::vector<int>> t(static_cast<size_t>(N), std::vector<int>(static_cast<size_t>(N)));
    std::vector<std::string> labels;
    for (int a = 0; a < N; ++a) {
        std::vector<int> va = decode(a);
        std::string lab = "(";
        for (size_t i = 0; i < va.size(); ++i) lab += (i ? "," : "") + std::to_string(va[i]);
        labels.push_back(lab + ")");
        for (int b = 0; b < N; ++b) {
            std::vector<int> vb = decode(b);
            for (size_t i = 0; i < dims.size(); ++i) vb[i] = (vb[i] + va[i]) % dims[i];
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] = encode(vb);
        }
    }
    return detail::make_group(N, t, std::move(labels));
}

inline GroupPtr elementary_abelian_group(int p, int k) {
    return abelian_group(std::vector<int>(static_cast<size_t>(k), p));
}

/// Dihedral group of order 2n (symmetries of the n-gon), n >= 1.
inline GroupPtr dihedral_group(int n) {
    require(n >= 1, "InputError", "dihedral parameter must be positive");
    int N = 2 * n;
    auto idx = [n](int i, int j) { return ((i % n + n) % n) + n * j; };
    std::vector<std::vector<int>> t(static_cast<size_t>(N), std::vector<int>(static_cast<size_t>(N)));
    std::vector<std::string> labels;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i) {
            std::string lab = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
            if (j) lab += lab.empty() ? "s" : " s";
            labels.push_back(lab.empty() ? "1" : lab);
        }
    // order of labels above matches idx(i, j) = i + n*j
    std::vector<std::string> ordered(static_cast<size_t>(N));
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i)
            ordered[static_cast<size_t>(idx(i, j))] = labels[static_cast<size_t>(j * n + i)];
    for (int j1 = 0; j1 < 2; ++j1)
        for (int i1 = 0; i1 < n; ++i1)
            for (int j2 = 0; j2 < 2; ++j2)
                for (int i2 = 0; i2 < n; ++i2) {
                    int i = j1 == 0 ? i1 + i2 : i1 - i2;
                    int j = j1 ^ j2;
                    t[static_cast<size_t>(idx(i1, j1))][static_cast<size_t>(idx(i2, j2))] = idx(i, j);
                }
    return detail::make_group(N, t, std::move(ordered));
}

/// Dicyclic group of order 4k: a^{2k} = 1, b^2 = a^k, b a b^{-1} = a^{-1}.
inline GroupPtr dicyclic_group(int k) {
    require(k >= 1, "InputError", "dicyclic parameter must be positive");
    int m = 2 * k, N = 4 * k;
    auto idx = [m](int i, int j) { return ((i % m + m) % m) + m * j; };
    std::vector<std::vector<int>> t(static_cast<size_t>(N), std::vector<int>(static_cast<size_t>(N)));
    std::vector<std::string> labels(static_cast<size_t>(N));
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < m; ++i) {
            std::string lab = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
            if (j) lab += lab.empty() ? "b" : " b";
            labels[static_cast<size_t>(idx(i, j))] = lab.empty() ? "1" : lab;
        }
    for (int j1 = 0; j1 < 2; ++j1)
        for (int i1 = 0; i1 < m; ++i1)
            for (int j2 = 0; j2 < 2; ++j2)
                for (int i2 = 0; i2 < m; ++i2) {
                    int i, j;
                    if (j1 == 0) {
                        i = i1 + i2;
                        j = j2;
                    } else if (j2 == 0) {
                        i = i1 - i2;
                        j = 1;
                    } else {
                        i = i1 - i2 + k; // b^2 = a^k
                        j = 0;
                    }
                    t[static_cast<size_t>(idx(i1, j1))][static_cast<size_t>(idx(i2, j2))] = idx(i, j);
                }
    return detail::make_group(N, t, std::move(labels));
}

inline GroupPtr quaternion_group() { return dicyclic_group(2); }

inline GroupPtr symmetric_group(int n) {
    require(n >= 1 && n <= 7, "InputError", "symmetric group supported for 1 <= n <= 7");
    if (n == 1) return build_group_from_permutations(1, {});
    std::vector<int> transposition(static_cast<size_t>(n)), cycle(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        transposition[static_cast<size_t>(i)] = i;
        cycle[static_cast<size_t>(i)] = (i + 1) % n;
    }
    std::swap(transposition[0], transposition[1]);
    return build_group_from_permutations(n, {transposition, cycle});
}

inline GroupPtr alternating_group(int n) {
    require(n >= 3 && n <= 7, "InputError", "alternating group supported for 3 <= n <= 7");
    std::vector<std::vector<int>> gens;
    // generated by consecutive 3-cycles (i, i+1, i+2)
    for (int i = 0; i + 2 < n; ++i) {
        std::vector<int> g(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) g[static_cast<size_t>(j)] = j;
        g[static_cast<size_t>(i)] = i + 1;
        g[static_cast<size_t>(i + 1)] = i + 2;
        g[static_cast<size_t>(i + 2)] = i;
        gens.push_back(std::move(g));
    }
    return build_group_from_permutations(n, gens);
}

/// Parse builtin group names such as "cyclic:6", "abelian:4x2", "elemab:2:3",
/// "dihedral:4", "dicyclic:3", "quaternion:8", "symmetric:4", "alternating:4".
inline std::optional<GroupPtr> parse_builtin_group(const std::string& name) {
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : s) {
            if (c == sep) {
                parts.push_back(cur);
                cur.clear();
            } else
                cur += c;
        }
        parts.push_back(cur);
        return parts;
    };
    auto to_int = [](const std::string& s) -> std::optional<int> {
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (!isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        try {
            return std::stoi(s);
        } catch (...) {
            return std::nullopt;
        }
    };
    std::vector<std::string> parts = split(name, ':');
    const std::string& kind = parts[0];
    auto arg = [&](size_t i) -> std::optional<int> {
        return i < parts.size() ? to_int(parts[i]) : std::nullopt;
    };
    if (kind == "cyclic" && arg(1)) return cyclic_group(*arg(1));
    if (kind == "dihedral" && arg(1)) return dihedral_group(*arg(1));
    if (kind == "dicyclic" && arg(1)) return dicyclic_group(*arg(1));
    if (kind == "quaternion" && arg(1) && *arg(1) == 8) return quaternion_group();
    if (kind == "symmetric" && arg(1)) return symmetric_group(*arg(1));
    if (kind == "alternating" && arg(1)) return alternating_group(*arg(1));
    if (kind == "elemab" && arg(1) && arg(2)) return elementary_abelian_group(*arg(1), *arg(2));
    if (kind == "abelian" && parts.size() == 2) {
        std::vector<int> dims;
        for (const std::string& d : split(parts[1], 'x')) {
            auto v = to_int(d);
            if (!v) return std::nullopt;
            dims.push_back(*v);
        }
        return abelian_group(dims);
    }
    return std::nullopt;
}

/// The reference corpus of small groups exercised by the test suites.
inline std::vector<std::pair<std::string, GroupPtr>> corpus_groups() {
    std::vector<std::pair<std::string, GroupPtr>> out;
    for (int n = 2; n <= 12; ++n) out.emplace_back("C" + std::to_string(n), cyclic_group(n));
    out.emplace_back("C2xC2", abelian_group({2, 2}));
    out.emplace_back("C2xC2xC2", abelian_group({2, 2, 2}));
    out.emplace_back("C4xC2", abelian_group({4, 2}));
    out.emplace_back("C3xC3", abelian_group({3, 3}));
    out.emplace_back("S3", symmetric_group(3));
    out.emplace_back("D4", dihedral_group(4));
    out.emplace_back("Q8", quaternion_group());
    out.emplace_back("D5", dihedral_group(5));
    out.emplace_back("D6", dihedral_group(6));
    out.emplace_back("A4", alternating_group(4));
    out.emplace_back("Dic3", dicyclic_group(3));
    return out;
}

} // namespace sct
