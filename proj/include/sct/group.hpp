#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "sct/error.hpp"

namespace sct {

/// Partition of {0, ..., n-1} in canonical form: every block sorted
/// ascending, blocks ordered by least member. Canonical form makes
/// operator== meaningful set-partition equality.
struct Partition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;

    int universe_size() const { return static_cast<int>(block_of.size()); }
    int num_blocks() const { return static_cast<int>(blocks.size()); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.blocks == b.blocks; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    static Partition from_blocks(int n, std::vector<std::vector<int>> blocks) {
        std::vector<int> seen(static_cast<size_t>(n), 0);
        for (auto& blk : blocks) {
            require(!blk.empty(), "InvalidPartition", "empty block");
            std::sort(blk.begin(), blk.end());
            for (int x : blk) {
                require(x >= 0 && x < n, "InvalidPartition", "member " + std::to_string(x) + " out of range");
                require(!seen[static_cast<size_t>(x)], "InvalidPartition",
                        "member " + std::to_string(x) + " appears in two blocks");
                seen[static_cast<size_t>(x)] = 1;
            }
        }
        for (int x = 0; x < n; ++x)
            require(seen[static_cast<size_t>(x)], "InvalidPartition",
                    "member " + std::to_string(x) + " not covered");
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a[0] < b[0]; });
        Partition p;
        p.blocks = std::move(blocks);
        p.block_of.assign(static_cast<size_t>(n), -1);
        for (int b = 0; b < p.num_blocks(); ++b)
            for (int x : p.blocks[static_cast<size_t>(b)]) p.block_of[static_cast<size_t>(x)] = b;
        return p;
    }

    static Partition from_block_of(const std::vector<int>& assignment) {
        int m = 0;
        for (int a : assignment) m = std::max(m, a + 1);
        std::vector<std::vector<int>> blocks(static_cast<size_t>(m));
        for (size_t x = 0; x < assignment.size(); ++x) {
            require(assignment[x] >= 0, "InvalidPartition", "negative block id");
            blocks[static_cast<size_t>(assignment[x])].push_back(static_cast<int>(x));
        }
        blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                    [](const auto& b) { return b.empty(); }),
                     blocks.end());
        return from_blocks(static_cast<int>(assignment.size()), std::move(blocks));
    }

    static Partition discrete(int n) {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) blocks.push_back({i});
        return from_blocks(n, std::move(blocks));
    }
};

/// True iff every P-block is contained in some Q-block (P is finer or equal).
inline bool partition_refines(const Partition& P, const Partition& Q) {
    require(P.universe_size() == Q.universe_size(), "InvalidPartition",
            "refinement compare over different universes");
    for (const auto& blk : P.blocks) {
        int q = Q.block_of[static_cast<size_t>(blk[0])];
        for (int x : blk)
            if (Q.block_of[static_cast<size_t>(x)] != q) return false;
    }
    return true;
}

/// Mutual coarsening: the finest partition coarser than both arguments.
inline Partition partition_join(const Partition& P, const Partition& Q) {
    int n = P.universe_size();
    require(n == Q.universe_size(), "InvalidPartition", "join over different universes");
    std::vector<int> root(static_cast<size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[static_cast<size_t>(x)] != x) {
            root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
            x = root[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { root[static_cast<size_t>(find(a))] = find(b); };
    for (const auto& blk : P.blocks)
        for (size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    for (const auto& blk : Q.blocks)
        for (size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    std::vector<int> assignment(static_cast<size_t>(n));
    std::map<int, int> ids;
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        auto it = ids.find(r);
        if (it == ids.end()) it = ids.emplace(r, static_cast<int>(ids.size())).first;
        assignment[static_cast<size_t>(x)] = it->second;
    }
    return Partition::from_block_of(assignment);
}

/// Finite group given by its full multiplication table. Immutable after
/// construction; identity is always element 0. Conjugacy data, inverses and
/// the exponent are precomputed. Safe to share across threads.
class FiniteGroup {
public:
    /// Trusts that `flat` (row-major, n*n) is a group table with identity 0.
    /// Use the build_group_* functions for validated construction.
    FiniteGroup(int n, std::vector<uint16_t> flat, std::vector<std::string> labels)
        : n_(n), mult_(std::move(flat)), labels_(std::move(labels)) {
        if (labels_.empty()) {
            labels_.reserve(static_cast<size_t>(n_));
            for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
        }
        if (n_ < 1 || mult_.size() != static_cast<size_t>(n_) * static_cast<size_t>(n_) ||
            labels_.size() != static_cast<size_t>(n_))
            fail_internal("malformed group table");
        for (int x = 0; x < n_; ++x)
            if (mult(0, x) != x || mult(x, 0) != x) fail_internal("identity is not element 0");
        inv_.assign(static_cast<size_t>(n_), -1);
        for (int g = 0; g < n_; ++g) {
            for (int h = 0; h < n_; ++h) {
                if (mult(g, h) == 0 && mult(h, g) == 0) {
                    inv_[static_cast<size_t>(g)] = h;
                    break;
                }
            }
            if (inv_[static_cast<size_t>(g)] < 0) fail_internal("element without inverse");
        }
        element_order_.assign(static_cast<size_t>(n_), 1);
        exponent_ = 1;
        for (int g = 0; g < n_; ++g) {
            int x = g, ord = 1;
            while (x != 0) {
                x = mult(x, g);
                ++ord;
            }
            element_order_[static_cast<size_t>(g)] = ord;
            exponent_ = std::lcm<long long>(exponent_, ord);
        }
        abelian_ = true;
        for (int a = 0; a < n_ && abelian_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (mult(a, b) != mult(b, a)) {
                    abelian_ = false;
                    break;
                }
        // conjugacy classes, canonical order (blocks by least member)
        std::vector<int> cls(static_cast<size_t>(n_), -1);
        std::vector<std::vector<int>> blocks;
        for (int g = 0; g < n_; ++g) {
            if (cls[static_cast<size_t>(g)] >= 0) continue;
            int id = static_cast<int>(blocks.size());
            std::vector<int> orbit;
            for (int t = 0; t < n_; ++t) {
                int c = conjugate(t, g);
                if (cls[static_cast<size_t>(c)] < 0) {
                    cls[static_cast<size_t>(c)] = id;
                    orbit.push_back(c);
                }
            }
            std::sort(orbit.begin(), orbit.end());
            blocks.push_back(std::move(orbit));
        }
        classes_ = Partition::from_blocks(n_, std::move(blocks));
        class_sizes_.reserve(classes_.blocks.size());
        class_reps_.reserve(classes_.blocks.size());
        for (const auto& blk : classes_.blocks) {
            class_sizes_.push_back(static_cast<int>(blk.size()));
            class_reps_.push_back(blk[0]);
        }
    }

    int order() const { return n_; }
    int mult(int a, int b) const {
        return mult_[static_cast<size_t>(a) * static_cast<size_t>(n_) + static_cast<size_t>(b)];
    }
    int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
    int conjugate(int t, int g) const { return mult(mult(t, g), inv(t)); }
    int element_order(int g) const { return element_order_[static_cast<size_t>(g)]; }
    long long exponent() const { return exponent_; }
    bool abelian() const { return abelian_; }

    int power(int g, long long k) const {
        if (k < 0) return power(inv(g), -k);
        int acc = 0, base = g;
        while (k > 0) {
            if (k & 1) acc = mult(acc, base);
            base = mult(base, base);
            k >>= 1;
        }
        return acc;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int g) const { return labels_[static_cast<size_t>(g)]; }

    const Partition& classes() const { return classes_; }
    int num_classes() const { return classes_.num_blocks(); }
    int class_of(int g) const { return classes_.block_of[static_cast<size_t>(g)]; }
    const std::vector<int>& class_sizes() const { return class_sizes_; }
    const std::vector<int>& class_reps() const { return class_reps_; }

private:
    int n_;
    std::vector<uint16_t> mult_;
    std::vector<std::string> labels_;
    std::vector<int> inv_;
    std::vector<int> element_order_;
    long long exponent_;
    bool abelian_;
    Partition classes_;
    std::vector<int> class_sizes_;
    std::vector<int> class_reps_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr int kDefaultOrderCap = 10000;

namespace detail {

inline GroupPtr make_group(int n, const std::vector<std::vector<int>>& table,
                           std::vector<std::string> labels) {
    std::vector<uint16_t> flat(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            flat[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                static_cast<uint16_t>(table[static_cast<size_t>(a)][static_cast<size_t>(b)]);
    return std::make_shared<FiniteGroup>(n, std::move(flat), std::move(labels));
}

} // namespace detail

/// Pointer identity or structural equality (same order and same table).
inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->order() != b->order()) return false;
    int n = a->order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (a->mult(x, y) != b->mult(x, y)) return false;
    return true;
}

/// Validated construction from a full multiplication table. Checks identity,
/// two-sided inverses and associativity exhaustively; relabels so the
/// identity becomes element 0 if needed.
inline GroupPtr build_group_from_cayley(const std::vector<std::vector<int>>& table,
                                        std::vector<std::string> labels = {},
                                        int cap = kDefaultOrderCap) {
    int n = static_cast<int>(table.size());
    require(n >= 1, "InputError", "empty multiplication table");
    require(n <= cap, "OrderCapExceeded",
            "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    for (const auto& row : table) {
        require(static_cast<int>(row.size()) == n, "InputError", "table is not square");
        for (int v : row)
            require(v >= 0 && v < n, "InputError", "table entry out of range");
    }
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = table[static_cast<size_t>(cand)][static_cast<size_t>(x)] == x &&
                 table[static_cast<size_t>(x)][static_cast<size_t>(cand)] == x;
        if (ok) {
            e = cand;
            break;
        }
    }
    require(e >= 0, "NoIdentity", "table has no two-sided identity");

    // relabel so the identity sits at index 0
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[static_cast<size_t>(e)]);
    std::vector<int> inv_perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) inv_perm[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] = inv_perm[static_cast<size_t>(
                table[static_cast<size_t>(perm[static_cast<size_t>(a)])]
                     [static_cast<size_t>(perm[static_cast<size_t>(b)])])];
    std::vector<std::string> lab;
    if (!labels.empty()) {
        require(labels.size() == static_cast<size_t>(n), "InputError", "label count mismatch");
        lab.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) lab.push_back(labels[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
    }

    for (int g = 0; g < n; ++g) {
        int h = -1;
        for (int x = 0; x < n; ++x)
            if (t[static_cast<size_t>(g)][static_cast<size_t>(x)] == 0) {
                h = x;
                break;
            }
        require(h >= 0 && t[static_cast<size_t>(h)][static_cast<size_t>(g)] == 0, "NoInverse",
                "element " + std::to_string(g) + " has no two-sided inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int ab_c = t[static_cast<size_t>(t[static_cast<size_t>(a)][static_cast<size_t>(b)])]
                            [static_cast<size_t>(c)];
                int a_bc = t[static_cast<size_t>(a)]
                            [static_cast<size_t>(t[static_cast<size_t>(b)][static_cast<size_t>(c)])];
                if (ab_c != a_bc)
                    fail("NotAssociative", "witness triple (" + std::to_string(a) + "," +
                                               std::to_string(b) + "," + std::to_string(c) + ")");
            }
    return detail::make_group(n, t, std::move(lab));
}

namespace detail {

inline std::string cycle_notation(const std::vector<int>& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        std::string cyc = "(" + std::to_string(i);
        seen[i] = 1;
        for (int j = p[i]; j != static_cast<int>(i); j = p[static_cast<size_t>(j)]) {
            cyc += " " + std::to_string(j);
            seen[static_cast<size_t>(j)] = 1;
        }
        out += cyc + ")";
    }
    return out.empty() ? "e" : out;
}

} // namespace detail

/// Breadth-first closure of a permutation generating set. Element order is
/// deterministic: identity first, then discovery order (right multiplication
/// by the generators in the order given).
inline GroupPtr build_group_from_permutations(int degree, const std::vector<std::vector<int>>& gens,
                                              int cap = kDefaultOrderCap) {
    require(degree >= 1, "InputError", "permutation degree must be positive");
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& g = gens[gi];
        std::vector<char> hit(static_cast<size_t>(degree), 0);
        bool ok = g.size() == static_cast<size_t>(degree);
        for (int v : g) {
            if (v < 0 || v >= degree || hit[static_cast<size_t>(v)]) {
                ok = false;
                break;
            }
            hit[static_cast<size_t>(v)] = 1;
        }
        require(ok, "NotAPermutation", "generator " + std::to_string(gi) + " is not a permutation");
    }
    std::vector<int> identity(static_cast<size_t>(degree));
    std::iota(identity.begin(), identity.end(), 0);
    auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(static_cast<size_t>(degree));
        for (int i = 0; i < degree; ++i)
            c[static_cast<size_t>(i)] = b[static_cast<size_t>(a[static_cast<size_t>(i)])];
        return c;
    };
    std::map<std::vector<int>, int> id_of;
    std::vector<std::vector<int>> elems;
    std::queue<int> work;
    id_of.emplace(identity, 0);
    elems.push_back(identity);
    work.push(0);
    while (!work.empty()) {
        int x = work.front();
        work.pop();
        for (const auto& g : gens) {
            std::vector<int> y = compose(elems[static_cast<size_t>(x)], g);
            if (id_of.count(y)) continue;
            require(static_cast<int>(elems.size()) < cap, "OrderCapExceeded",
                    "closure exceeds order cap " + std::to_string(cap));
            int id = static_cast<int>(elems.size());
            id_of.emplace(y, id);
            elems.push_back(std::move(y));
            work.push(id);
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) labels.push_back(detail::cycle_notation(elems[static_cast<size_t>(a)]));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                id_of.at(compose(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]));
    return detail::make_group(n, table, std::move(labels));
}

/// Subgroup of a parent group, stored as the sorted member list.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> members; // sorted, contains 0
    std::vector<char> mask;   // size parent->order()

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const { return mask[static_cast<size_t>(g)] != 0; }
};

inline Subgroup make_subgroup(GroupPtr G, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup H;
    H.parent = std::move(G);
    H.mask.assign(static_cast<size_t>(H.parent->order()), 0);
    for (int m : members) {
        require(m >= 0 && m < H.parent->order(), "NotASubgroup", "member out of range");
        H.mask[static_cast<size_t>(m)] = 1;
    }
    require(!members.empty() && members[0] == 0, "NotASubgroup", "subgroup must contain the identity");
    for (int a : members)
        for (int b : members) {
            int p = H.parent->mult(a, b);
            require(H.mask[static_cast<size_t>(p)], "NotASubgroup",
                    "not closed: " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                        std::to_string(p) + " escapes");
        }
    H.members = std::move(members);
    return H;
}

inline Subgroup trivial_subgroup(GroupPtr G) { return make_subgroup(std::move(G), {0}); }

inline Subgroup full_subgroup(GroupPtr G) {
    std::vector<int> all(static_cast<size_t>(G->order()));
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(std::move(G), std::move(all));
}

/// Smallest subgroup containing the given elements (product closure; finite
/// order makes inverse closure automatic).
inline Subgroup generated_subgroup(GroupPtr G, const std::vector<int>& gens) {
    std::vector<char> mask(static_cast<size_t>(G->order()), 0);
    std::vector<int> list = {0};
    mask[0] = 1;
    for (int g : gens) {
        require(g >= 0 && g < G->order(), "InputError", "generator out of range");
        if (!mask[static_cast<size_t>(g)]) {
            mask[static_cast<size_t>(g)] = 1;
            list.push_back(g);
        }
    }
    for (size_t i = 0; i < list.size(); ++i) {
        for (size_t j = 0; j < list.size(); ++j) {
            int p = G->mult(list[i], list[j]);
            if (!mask[static_cast<size_t>(p)]) {
                mask[static_cast<size_t>(p)] = 1;
                list.push_back(p);
            }
            p = G->mult(list[j], list[i]);
            if (!mask[static_cast<size_t>(p)]) {
                mask[static_cast<size_t>(p)] = 1;
                list.push_back(p);
            }
        }
    }
    std::sort(list.begin(), list.end());
    Subgroup H;
    H.parent = std::move(G);
    H.members = std::move(list);
    H.mask = std::move(mask);
    return H;
}

inline bool subgroup_equal(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }

/// True iff b is contained in a.
inline bool subgroup_contains(const Subgroup& a, const Subgroup& b) {
    for (int m : b.members)
        if (!a.contains(m)) return false;
    return true;
}

inline bool is_normal_subgroup(const Subgroup& H, std::pair<int, int>* witness = nullptr) {
    const FiniteGroup& G = *H.parent;
    for (int g = 0; g < G.order(); ++g)
        for (int n : H.members)
            if (!H.contains(G.conjugate(g, n))) {
                if (witness) *witness = {g, n};
                return false;
            }
    return true;
}

/// Quotient of a parent group by a normal subgroup. Cosets are ordered by
/// least member, so the image of the identity is quotient element 0.
struct QuotientMap {
    GroupPtr source;
    Subgroup kernel;
    GroupPtr quotient;
    std::vector<int> image_of; // source element -> quotient element
    Partition fibers;          // cosets, as a partition of the source
};

inline QuotientMap quotient_group(const Subgroup& N) {
    std::pair<int, int> w;
    if (!is_normal_subgroup(N, &w))
        fail("NotNormal", "conjugate of member " + std::to_string(w.second) + " by " +
                              std::to_string(w.first) + " escapes the subgroup");
    const GroupPtr& G = N.parent;
    int n = G->order();
    std::vector<int> image(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> cosets;
    std::vector<int> reps;
    for (int g = 0; g < n; ++g) {
        if (image[static_cast<size_t>(g)] >= 0) continue;
        int id = static_cast<int>(cosets.size());
        std::vector<int> coset;
        for (int m : N.members) {
            int x = G->mult(g, m);
            if (image[static_cast<size_t>(x)] < 0) {
                image[static_cast<size_t>(x)] = id;
                coset.push_back(x);
            }
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
        reps.push_back(g);
    }
    int q = static_cast<int>(cosets.size());
    std::vector<std::vector<int>> table(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                image[static_cast<size_t>(G->mult(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]))];
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(q));
    for (int a = 0; a < q; ++a) labels.push_back("[" + G->label(reps[static_cast<size_t>(a)]) + "]");
    QuotientMap qm;
    qm.source = G;
    qm.kernel = N;
    qm.quotient = detail::make_group(q, table, std::move(labels));
    qm.image_of = std::move(image);
    qm.fibers = Partition::from_blocks(n, std::move(cosets));
    return qm;
}

/// Preimage in the source of a subgroup of the quotient.
inline Subgroup quotient_preimage(const QuotientMap& qm, const Subgroup& of_quotient) {
    require(same_group(of_quotient.parent, qm.quotient), "GroupMismatch",
            "subgroup does not live in the quotient");
    std::vector<int> members;
    for (int g = 0; g < qm.source->order(); ++g)
        if (of_quotient.contains(qm.image_of[static_cast<size_t>(g)])) members.push_back(g);
    return make_subgroup(qm.source, std::move(members));
}

/// Image in the quotient of a subgroup of the source.
inline Subgroup quotient_image(const QuotientMap& qm, const Subgroup& of_source) {
    require(same_group(of_source.parent, qm.source), "GroupMismatch",
            "subgroup does not live in the source");
    std::vector<int> members;
    for (int m : of_source.members) members.push_back(qm.image_of[static_cast<size_t>(m)]);
    return make_subgroup(qm.quotient, std::move(members));
}

/// A subgroup repackaged as a group in its own right. Element i of `group`
/// corresponds to parent element `sub.members[i]`; the identity stays at 0.
struct SubgroupGroup {
    Subgroup sub;
    GroupPtr group;

    const std::vector<int>& to_parent() const { return sub.members; }
    int index_of_parent(int parent_element) const {
        auto it = std::lower_bound(sub.members.begin(), sub.members.end(), parent_element);
        require(it != sub.members.end() && *it == parent_element, "PreconditionFailed",
                "element is not a member of the subgroup");
        return static_cast<int>(it - sub.members.begin());
    }
};

inline SubgroupGroup as_group(const Subgroup& H) {
    int m = H.order();
    std::vector<int> pos(static_cast<size_t>(H.parent->order()), -1);
    for (int i = 0; i < m; ++i) pos[static_cast<size_t>(H.members[static_cast<size_t>(i)])] = i;
    std::vector<std::vector<int>> table(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] = pos[static_cast<size_t>(
                H.parent->mult(H.members[static_cast<size_t>(a)], H.members[static_cast<size_t>(b)]))];
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) labels.push_back(H.parent->label(H.members[static_cast<size_t>(a)]));
    SubgroupGroup sg;
    sg.sub = H;
    sg.group = detail::make_group(m, table, std::move(labels));
    return sg;
}

inline Subgroup subgroup_intersection(const Subgroup& A, const Subgroup& B) {
    require(same_group(A.parent, B.parent), "ParentMismatch",
            "intersection of subgroups of different groups");
    std::vector<int> members;
    for (int m : A.members)
        if (B.contains(m)) members.push_back(m);
    return make_subgroup(A.parent, std::move(members));
}

/// Product set AB. Always a subgroup when either factor is normal; otherwise
/// the set is checked for closure and rejected if it is not a subgroup.
inline Subgroup subgroup_product(const Subgroup& A, const Subgroup& B) {
    require(same_group(A.parent, B.parent), "ParentMismatch",
            "product of subgroups of different groups");
    const GroupPtr& G = A.parent;
    std::vector<char> mask(static_cast<size_t>(G->order()), 0);
    std::vector<int> members;
    for (int a : A.members)
        for (int b : B.members) {
            int p = G->mult(a, b);
            if (!mask[static_cast<size_t>(p)]) {
                mask[static_cast<size_t>(p)] = 1;
                members.push_back(p);
            }
        }
    std::sort(members.begin(), members.end());
    for (int a : members)
        for (int b : members)
            if (!mask[static_cast<size_t>(G->mult(a, b))])
                fail("ProductNotSubgroup", "neither factor is normal and the product set is not closed");
    Subgroup H;
    H.parent = G;
    H.members = std::move(members);
    H.mask = std::move(mask);
    return H;
}

/// Center of the group.
inline Subgroup group_center(const GroupPtr& G) {
    std::vector<int> members;
    for (int g = 0; g < G->order(); ++g) {
        bool central = true;
        for (int h = 0; h < G->order() && central; ++h) central = G->mult(g, h) == G->mult(h, g);
        if (central) members.push_back(g);
    }
    return make_subgroup(G, std::move(members));
}

/// Derived subgroup [G, G].
inline Subgroup commutator_subgroup(const GroupPtr& G) {
    std::vector<int> gens;
    for (int a = 0; a < G->order(); ++a)
        for (int b = 0; b < G->order(); ++b)
            gens.push_back(G->mult(G->mult(G->inv(a), G->inv(b)), G->mult(a, b)));
    return generated_subgroup(G, gens);
}

} // namespace sct
