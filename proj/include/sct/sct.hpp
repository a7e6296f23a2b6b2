#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sct/char_table.hpp"
#include "sct/error.hpp"
#include "sct/group.hpp"

namespace sct {

/// A supercharacter theory of a finite group: a partition of the irreducible
/// characters together with a compatible partition of the group elements.
/// Block 0 of `classes` is always {identity}; block 0 of `char_blocks` always
/// holds the trivial character.
struct SupercharacterTheory {
    TablePtr table;
    Partition classes;      // of group elements
    Partition char_blocks;  // of irreducible character indices
    std::vector<ClassFunction> supercharacters;       // one per char block
    std::vector<std::vector<Cyclotomic>> block_values;  // [char block][class block]

    const GroupPtr& group() const { return table->group(); }
    int num_blocks() const { return classes.num_blocks(); }
    int class_block_of(int g) const { return classes.block_of[static_cast<size_t>(g)]; }
    int char_block_of(int irr_index) const {
        return char_blocks.block_of[static_cast<size_t>(irr_index)];
    }
    const ClassFunction& supercharacter(int x) const {
        return supercharacters[static_cast<size_t>(x)];
    }
};

inline bool theories_equal(const SupercharacterTheory& a, const SupercharacterTheory& b) {
    return same_group(a.group(), b.group()) && a.classes == b.classes;
}

/// sigma_X = sum over the given irreducibles of chi(1) * chi.
inline ClassFunction sigma_character(const CharacterTable& table, const std::vector<int>& irr_indices) {
    require(!irr_indices.empty(), "EmptySet", "sigma of an empty character set");
    std::vector<Cyclotomic> vals(table.group()->num_classes(), Cyclotomic(0));
    for (int i : irr_indices) {
        require(i >= 0 && static_cast<size_t>(i) < table.size(), "PreconditionFailed",
                "irreducible index out of range");
        const ClassFunction& chi = table.irreducible(static_cast<size_t>(i));
        Rational d(chi.degree_int());
        for (size_t c = 0; c < vals.size(); c++) vals[c] = vals[c] + chi.at_class(c) * d;
    }
    return ClassFunction(table.group(), std::move(vals));
}

/// Result of checking a candidate class partition.
struct ValidationOutcome {
    bool valid = false;
    std::string reason;  // empty when valid
    std::optional<SupercharacterTheory> theory;
};

namespace detail {

/// Integer coefficient vectors of the character table at a uniform conductor,
/// for exact arithmetic without rationals: coeffs[i][c] are the basis
/// coefficients of chi_i at class c, each of length phi(e).
struct IntTable {
    long long conductor;
    size_t width;  // phi(e)
    std::vector<long long> degrees;
    std::vector<std::vector<std::vector<long long>>> coeffs;  // [irr][class][basis]
};

inline IntTable int_table(const CharacterTable& table) {
    const FiniteGroup& G = *table.group();
    IntTable t;
    t.conductor = G.exponent();
    t.width = phi_degree(t.conductor);
    t.degrees.reserve(table.size());
    t.coeffs.reserve(table.size());
    for (const auto& chi : table.irreducibles()) {
        t.degrees.push_back(chi.degree_int());
        std::vector<std::vector<long long>> per_class;
        per_class.reserve(chi.values().size());
        for (const auto& v : chi.values()) {
            Cyclotomic lifted = v.lifted(t.conductor);
            std::vector<long long> row;
            row.reserve(t.width);
            for (const auto& r : lifted.coeffs()) {
                require(r.is_integer(), "InternalError", "character value is not an algebraic integer");
                row.push_back(r.as_integer());
            }
            per_class.push_back(std::move(row));
        }
        t.coeffs.push_back(std::move(per_class));
    }
    return t;
}

}  // namespace detail

/// Check whether a partition of the group elements is the class partition of
/// a supercharacter theory. On success the induced character partition and
/// the supercharacters are returned with the theory.
///
/// If `expected_char_blocks` is given, the induced character partition must
/// also match it exactly.
inline ValidationOutcome validate_sct(const TablePtr& table, const Partition& classes,
                                      const Partition* expected_char_blocks = nullptr) {
    require(table != nullptr, "PreconditionFailed", "validate_sct needs a character table");
    const FiniteGroup& G = *table->group();
    const int n = G.order();
    const int k = G.num_classes();
    require(static_cast<int>(classes.block_of.size()) == n, "PreconditionFailed",
            "partition does not cover the group");
    ValidationOutcome out;
    auto reject = [&](std::string why) {
        out.valid = false;
        out.reason = std::move(why);
        return out;
    };

    const int b = classes.num_blocks();
    if (classes.blocks[0].size() != 1)
        return reject("the identity must form a class block on its own");
    for (int g = 0; g < n; g++) {
        int cg = classes.block_of[static_cast<size_t>(g)];
        for (int h : G.classes().blocks[static_cast<size_t>(G.class_of(g))])
            if (classes.block_of[static_cast<size_t>(h)] != cg)
                return reject("class blocks must be unions of conjugacy classes; the block of " +
                              G.label(g) + " splits its conjugacy class");
    }
    for (int blk = 0; blk < b; blk++) {
        int inv_block = classes.block_of[static_cast<size_t>(G.inv(classes.blocks[static_cast<size_t>(blk)][0]))];
        size_t hits = 0;
        for (int m : classes.blocks[static_cast<size_t>(blk)])
            if (classes.block_of[static_cast<size_t>(G.inv(m))] == inv_block) hits++;
        if (hits != classes.blocks[static_cast<size_t>(blk)].size() ||
            classes.blocks[static_cast<size_t>(inv_block)].size() != classes.blocks[static_cast<size_t>(blk)].size())
            return reject("the set of inverses of class block " + std::to_string(blk) +
                          " is not a class block");
    }

    // Group the irreducibles by their central character sums over the class
    // blocks: key_i = (1/d_i) * (sum_{g in B} chi_i(g))_B, held exactly as a
    // reduced integer fraction vector.
    detail::IntTable it = detail::int_table(*table);
    std::vector<std::vector<long long>> sums(static_cast<size_t>(k));
    for (int i = 0; i < k; i++) {
        std::vector<long long> s(static_cast<size_t>(b) * it.width, 0);
        for (int blk = 0; blk < b; blk++)
            for (int m : classes.blocks[static_cast<size_t>(blk)]) {
                const auto& row = it.coeffs[static_cast<size_t>(i)][static_cast<size_t>(G.class_of(m))];
                for (size_t w = 0; w < it.width; w++)
                    s[static_cast<size_t>(blk) * it.width + w] += row[w];
            }
        s.push_back(it.degrees[static_cast<size_t>(i)]);  // denominator, then reduce
        long long g = 0;
        for (long long v : s) g = std::gcd(g, v < 0 ? -v : v);
        if (g > 1)
            for (auto& v : s) v /= g;
        sums[static_cast<size_t>(i)] = std::move(s);
    }
    std::map<std::vector<long long>, int> group_ids;
    std::vector<int> family_of(static_cast<size_t>(k));
    for (int i = 0; i < k; i++) {
        auto pos = group_ids.try_emplace(sums[static_cast<size_t>(i)],
                                         static_cast<int>(group_ids.size()))
                       .first;
        family_of[static_cast<size_t>(i)] = pos->second;
    }
    if (static_cast<int>(group_ids.size()) != b)
        return reject("the class partition groups the irreducible characters into " +
                      std::to_string(group_ids.size()) + " families, expected " + std::to_string(b));
    Partition char_blocks = Partition::from_block_of(family_of);

    // sigma_X must be constant on every class block (exact integer check).
    std::vector<std::vector<std::vector<long long>>> sigma_int(
        static_cast<size_t>(b),
        std::vector<std::vector<long long>>(static_cast<size_t>(k), std::vector<long long>(it.width, 0)));
    for (int i = 0; i < k; i++) {
        int x = char_blocks.block_of[static_cast<size_t>(i)];
        long long d = it.degrees[static_cast<size_t>(i)];
        for (int c = 0; c < k; c++)
            for (size_t w = 0; w < it.width; w++)
                sigma_int[static_cast<size_t>(x)][static_cast<size_t>(c)][w] +=
                    d * it.coeffs[static_cast<size_t>(i)][static_cast<size_t>(c)][w];
    }
    for (int x = 0; x < b; x++)
        for (int blk = 0; blk < b; blk++) {
            const auto& first =
                sigma_int[static_cast<size_t>(x)]
                         [static_cast<size_t>(G.class_of(classes.blocks[static_cast<size_t>(blk)][0]))];
            for (int m : classes.blocks[static_cast<size_t>(blk)])
                if (sigma_int[static_cast<size_t>(x)][static_cast<size_t>(G.class_of(m))] != first)
                    return reject("supercharacter " + std::to_string(x) +
                                  " is not constant on class block " + std::to_string(blk));
        }

    require(char_blocks.blocks[0].size() == 1 && char_blocks.blocks[0][0] == 0, "InternalError",
            "trivial character is not isolated in a valid theory");
    if (expected_char_blocks && !(char_blocks == *expected_char_blocks))
        return reject("the character partition does not match the one induced by the class partition");

    SupercharacterTheory thy;
    thy.table = table;
    thy.classes = classes;
    thy.char_blocks = std::move(char_blocks);
    thy.supercharacters.reserve(static_cast<size_t>(b));
    thy.block_values.assign(static_cast<size_t>(b), std::vector<Cyclotomic>());
    for (int x = 0; x < b; x++) {
        ClassFunction sigma = sigma_character(*table, thy.char_blocks.blocks[static_cast<size_t>(x)]);
        auto& bv = thy.block_values[static_cast<size_t>(x)];
        bv.reserve(static_cast<size_t>(b));
        for (int blk = 0; blk < b; blk++)
            bv.push_back(sigma.at_element(classes.blocks[static_cast<size_t>(blk)][0]));
        thy.supercharacters.push_back(std::move(sigma));
    }
    out.valid = true;
    out.theory = std::move(thy);
    return out;
}

/// validate_sct, but a failure is an exception.
inline SupercharacterTheory require_sct(const TablePtr& table, const Partition& classes) {
    ValidationOutcome out = validate_sct(table, classes);
    if (!out.valid) fail("ValidationFailure", out.reason);
    return *std::move(out.theory);
}

/// The finest theory: conjugacy classes and single irreducibles.
inline SupercharacterTheory minimal_theory(const TablePtr& table) {
    SupercharacterTheory thy = require_sct(table, table->group()->classes());
    require(thy.char_blocks.num_blocks() == static_cast<int>(table->size()), "InternalError",
            "minimal theory must isolate every irreducible");
    return thy;
}

/// The coarsest theory: {1} and everything else.
inline SupercharacterTheory maximal_theory(const TablePtr& table) {
    int n = table->group()->order();
    std::vector<std::vector<int>> blocks{{0}};
    if (n > 1) {
        std::vector<int> rest(static_cast<size_t>(n - 1));
        std::iota(rest.begin(), rest.end(), 1);
        blocks.push_back(std::move(rest));
    }
    return require_sct(table, Partition::from_blocks(n, std::move(blocks)));
}

/// S refines T: every class block of S lies inside a class block of T.
inline bool refines(const SupercharacterTheory& S, const SupercharacterTheory& T) {
    require(same_group(S.group(), T.group()), "GroupMismatch",
            "refinement compares theories of one group");
    return partition_refines(S.classes, T.classes);
}

/// Least upper bound of two theories: mutual coarsening of the class
/// partitions. The result is again a theory, and its character partition is
/// the join of the character partitions.
inline SupercharacterTheory join_theories(const SupercharacterTheory& S, const SupercharacterTheory& T) {
    require(same_group(S.group(), T.group()), "GroupMismatch", "join needs theories of one group");
    Partition joined = partition_join(S.classes, T.classes);
    ValidationOutcome out = validate_sct(S.table, joined);
    require(out.valid, "InternalError", "join of theories failed to validate: " + out.reason);
    require(out.theory->char_blocks == partition_join(S.char_blocks, T.char_blocks), "InternalError",
            "character partition of a join is not the join of character partitions");
    return *std::move(out.theory);
}

inline constexpr int kDefaultEnumerationCap = 12;

/// All supercharacter theories of the group, canonically ordered by the
/// multiset of class block sizes and then by block contents. Groups with
/// more than `cap` non-identity conjugacy classes are rejected.
inline std::vector<SupercharacterTheory> enumerate_scts(const TablePtr& table,
                                                        int cap = kDefaultEnumerationCap) {
    const FiniteGroup& G = *table->group();
    const int k = G.num_classes();
    require(k - 1 <= cap, "EnumerationCapExceeded",
            "group has " + std::to_string(k - 1) + " non-identity conjugacy classes, cap is " +
                std::to_string(cap));

    std::vector<int> inv_class(static_cast<size_t>(k));
    for (int c = 0; c < k; c++)
        inv_class[static_cast<size_t>(c)] = G.class_of(G.inv(G.class_reps()[static_cast<size_t>(c)]));

    std::vector<SupercharacterTheory> found;
    std::vector<int> blk(static_cast<size_t>(k), -1);  // block id per conjugacy class
    blk[0] = -2;                                       // identity class handled separately

    auto emit = [&](int used) {
        std::vector<std::vector<int>> blocks(static_cast<size_t>(used) + 1);
        for (int g = 0; g < G.order(); g++) {
            int c = G.class_of(g);
            int id = c == 0 ? 0 : blk[static_cast<size_t>(c)] + 1;
            blocks[static_cast<size_t>(id)].push_back(g);
        }
        ValidationOutcome out = validate_sct(table, Partition::from_blocks(G.order(), std::move(blocks)));
        if (out.valid) found.push_back(*std::move(out.theory));
    };

    // Depth-first restricted growth over non-identity conjugacy classes, with
    // inverse-compatibility pruning: classes land in one block exactly when
    // their inverse classes do.
    auto dfs = [&](auto&& self, int c, int used) -> void {
        if (c == k) {
            emit(used);
            return;
        }
        for (int b = 0; b <= used; b++) {
            blk[static_cast<size_t>(c)] = b;
            bool ok = true;
            for (int d = 1; d <= c && ok; d++) {
                int ic = inv_class[static_cast<size_t>(c)], id = inv_class[static_cast<size_t>(d)];
                if (ic > c || id > c) continue;
                bool same = blk[static_cast<size_t>(c)] == blk[static_cast<size_t>(d)];
                bool inv_same = blk[static_cast<size_t>(ic)] == blk[static_cast<size_t>(id)];
                ok = same == inv_same;
            }
            if (ok) self(self, c + 1, std::max(used, b + 1));
            blk[static_cast<size_t>(c)] = -1;
        }
    };
    if (k == 1) {
        emit(0);
    } else {
        dfs(dfs, 1, 0);
    }

    auto key = [](const SupercharacterTheory& t) {
        std::vector<int> sizes;
        sizes.reserve(t.classes.blocks.size());
        for (const auto& b : t.classes.blocks) sizes.push_back(static_cast<int>(b.size()));
        std::sort(sizes.begin(), sizes.end());
        std::vector<int> flat;
        for (const auto& b : t.classes.blocks) flat.insert(flat.end(), b.begin(), b.end());
        return std::make_pair(std::move(sizes), std::move(flat));
    };
    std::sort(found.begin(), found.end(),
              [&](const SupercharacterTheory& a, const SupercharacterTheory& b) {
                  return key(a) < key(b);
              });
    return found;
}

/// Greatest lower bound of two theories, computed as the join of all common
/// lower bounds taken from `candidates` (which must contain every theory of
/// the group, e.g. the result of enumerate_scts).
inline SupercharacterTheory meet_theories(const SupercharacterTheory& S, const SupercharacterTheory& T,
                                          const std::vector<SupercharacterTheory>& candidates) {
    require(same_group(S.group(), T.group()), "GroupMismatch", "meet needs theories of one group");
    std::optional<SupercharacterTheory> acc;
    for (const auto& U : candidates) {
        if (!refines(U, S) || !refines(U, T)) continue;
        acc = acc ? join_theories(*acc, U) : U;
    }
    require(acc.has_value(), "InternalError", "no common lower bound found; candidate list incomplete");
    require(refines(*acc, S) && refines(*acc, T), "InternalError", "meet is not a lower bound");
    return *std::move(acc);
}

/// Meet that enumerates the full lattice itself; subject to the enumeration cap.
inline SupercharacterTheory meet_theories(const SupercharacterTheory& S, const SupercharacterTheory& T,
                                          int cap = kDefaultEnumerationCap) {
    return meet_theories(S, T, enumerate_scts(S.table, cap));
}

}  // namespace sct
