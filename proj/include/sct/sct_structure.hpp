#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sct/char_table.hpp"
#include "sct/error.hpp"
#include "sct/group.hpp"
#include "sct/report.hpp"
#include "sct/sct.hpp"

namespace sct {

/// True iff H is a union of class blocks of S (an "S-normal" subgroup).
inline bool is_s_normal(const SupercharacterTheory& S, const Subgroup& H) {
    require(same_group(H.parent, S.group()), "GroupMismatch",
            "subgroup belongs to a different group");
    for (const auto& block : S.classes.blocks) {
        size_t inside = 0;
        for (int g : block)
            if (H.contains(g)) inside++;
        if (inside != 0 && inside != block.size()) return false;
    }
    return true;
}

namespace detail {

/// Smallest S-normal subgroup containing the given elements: alternately
/// close under the group operation and saturate with whole class blocks
/// until stable. Every element added is forced into any S-normal subgroup
/// containing the seed, so the fixed point is the intersection of all
/// S-normal subgroups over the seed.
inline Subgroup forced_s_closure(const SupercharacterTheory& S, std::vector<int> members) {
    const GroupPtr& G = S.group();
    for (;;) {
        Subgroup H = generated_subgroup(G, members);
        std::vector<char> in(static_cast<size_t>(G->order()), 0);
        for (int g : H.members)
            for (int k : S.classes.blocks[static_cast<size_t>(S.class_block_of(g))])
                in[static_cast<size_t>(k)] = 1;
        std::vector<int> saturated;
        for (int g = 0; g < G->order(); g++)
            if (in[static_cast<size_t>(g)]) saturated.push_back(g);
        if (saturated == H.members) return H;
        members = std::move(saturated);
    }
}

/// Sort each block, order blocks by least member. Block 0 then holds the
/// identity whenever some block does.
inline std::vector<std::vector<int>> canonical_blocks(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return blocks;
}

}  // namespace detail

/// All subgroups that are unions of class blocks, sorted by order and then
/// by member list. Found by repeatedly extending known S-normal subgroups
/// with one more class block and closing; every S-normal subgroup is
/// reachable this way because the closure of a subset of it stays inside it.
inline std::vector<Subgroup> s_normal_subgroups(const SupercharacterTheory& S) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> found;
    Subgroup triv = trivial_subgroup(S.group());
    seen.insert(triv.members);
    found.push_back(triv);
    for (size_t next = 0; next < found.size(); next++) {
        Subgroup N = found[next];
        for (const auto& block : S.classes.blocks) {
            bool outside = false;
            for (int g : block)
                if (!N.contains(g)) outside = true;
            if (!outside) continue;
            std::vector<int> seed = N.members;
            seed.insert(seed.end(), block.begin(), block.end());
            Subgroup H = detail::forced_s_closure(S, seed);
            if (seen.insert(H.members).second) found.push_back(H);
        }
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members < b.members;
    });
    return found;
}

/// Z(S): the set of elements lying in singleton class blocks.
inline Subgroup sct_center(const SupercharacterTheory& S) {
    const GroupPtr& G = S.group();
    std::vector<int> members;
    std::vector<char> in(static_cast<size_t>(G->order()), 0);
    for (const auto& block : S.classes.blocks)
        if (block.size() == 1) {
            members.push_back(block[0]);
            in[static_cast<size_t>(block[0])] = 1;
        }
    std::sort(members.begin(), members.end());
    for (int a : members)
        for (int b : members)
            if (!in[static_cast<size_t>(G->mult(a, b))])
                fail("InternalClosureFailure",
                     "the singleton class blocks do not form a subgroup");
    return make_subgroup(G, members);
}

/// [H,S]: the subgroup generated by g^{-1}k over g in H and k in the class
/// block of g. Always normal in G; S-normal whenever H is.
inline Subgroup sct_commutator(const SupercharacterTheory& S, const Subgroup& H) {
    const GroupPtr& G = S.group();
    require(same_group(H.parent, G), "GroupMismatch", "subgroup belongs to a different group");
    std::set<int> gens;
    for (int g : H.members) {
        int gi = G->inv(g);
        for (int k : S.classes.blocks[static_cast<size_t>(S.class_block_of(g))])
            gens.insert(G->mult(gi, k));
    }
    Subgroup result = generated_subgroup(G, std::vector<int>(gens.begin(), gens.end()));
    if (!is_normal_subgroup(result)) fail_internal("[H,S] is not normal in G");
    if (is_s_normal(S, H) && !is_s_normal(S, result))
        fail_internal("[N,S] is not S-normal although N is");
    return result;
}

/// [G,S].
inline Subgroup sct_commutator(const SupercharacterTheory& S) {
    return sct_commutator(S, full_subgroup(S.group()));
}

/// The smallest S-normal subgroup containing H, computed as H[H,S] and
/// cross-checked against the intersection-of-overgroups definition.
inline Subgroup s_closure(const SupercharacterTheory& S, const Subgroup& H) {
    require(same_group(H.parent, S.group()), "GroupMismatch",
            "subgroup belongs to a different group");
    Subgroup product = subgroup_product(H, sct_commutator(S, H));
    Subgroup forced = detail::forced_s_closure(S, H.members);
    if (!subgroup_equal(product, forced))
        fail_internal("H[H,S] differs from the intersection of S-normal overgroups");
    return product;
}

/// The theory induced on an S-normal subgroup N: its class blocks are the
/// class blocks of S lying inside N. The character partition that emerges is
/// cross-checked against the constituent supports of the restricted
/// supercharacters.
struct RestrictedTheory {
    SubgroupGroup sub;
    SupercharacterTheory theory;
};

inline RestrictedTheory restrict_theory(const SupercharacterTheory& S, const Subgroup& N) {
    require(same_group(N.parent, S.group()), "GroupMismatch",
            "subgroup belongs to a different group");
    require(is_s_normal(S, N), "NotSNormal", "restriction needs an S-normal subgroup");
    SubgroupGroup sub = as_group(N);
    TablePtr table = character_table(sub.group);

    std::vector<std::vector<int>> blocks;
    for (const auto& block : S.classes.blocks) {
        if (!N.contains(block[0])) continue;
        std::vector<int> inside;
        inside.reserve(block.size());
        for (int g : block) inside.push_back(sub.index_of_parent(g));
        blocks.push_back(std::move(inside));
    }
    Partition classes = Partition::from_blocks(N.order(), detail::canonical_blocks(blocks));
    ValidationOutcome outcome = validate_sct(table, classes);
    if (!outcome.valid)
        fail_internal("restriction to an S-normal subgroup is not a theory: " + outcome.reason);

    std::set<std::vector<int>> expected;
    for (const auto& chi : S.supercharacters) {
        std::vector<Cyclotomic> mult = decompose(*table, restrict_to(chi, sub));
        std::vector<int> support;
        for (size_t i = 0; i < mult.size(); i++)
            if (!mult[i].is_zero()) support.push_back(static_cast<int>(i));
        expected.insert(std::move(support));
    }
    std::set<std::vector<int>> actual(outcome.theory->char_blocks.blocks.begin(),
                                      outcome.theory->char_blocks.blocks.end());
    if (expected != actual)
        fail_internal("restricted character blocks do not match the restriction supports");
    return {std::move(sub), std::move(*outcome.theory)};
}

/// The theory induced on G/N for S-normal N: its class blocks are the images
/// of the class blocks of S. The character side is cross-checked against the
/// supercharacters whose kernels contain N.
struct DeflatedTheory {
    QuotientMap qm;
    SupercharacterTheory theory;
};

inline DeflatedTheory deflate_theory(const SupercharacterTheory& S, const Subgroup& N) {
    require(same_group(N.parent, S.group()), "GroupMismatch",
            "subgroup belongs to a different group");
    require(is_s_normal(S, N), "NotSNormal", "deflation needs an S-normal subgroup");
    QuotientMap qm = quotient_group(N);
    TablePtr table = character_table(qm.quotient);

    std::set<std::vector<int>> images;
    for (const auto& block : S.classes.blocks) {
        std::set<int> img;
        for (int g : block) img.insert(qm.image_of[static_cast<size_t>(g)]);
        images.insert(std::vector<int>(img.begin(), img.end()));
    }
    std::vector<std::vector<int>> blocks(images.begin(), images.end());
    Partition classes = Partition::from_blocks(qm.quotient->order(),
                                               detail::canonical_blocks(std::move(blocks)));
    ValidationOutcome outcome = validate_sct(table, classes);
    if (!outcome.valid)
        fail_internal("quotient by an S-normal subgroup is not a theory: " + outcome.reason);

    int deflatable = 0;
    for (const auto& chi : S.supercharacters) {
        bool kernel_contains = true;
        for (int m : N.members)
            if (chi.at_element(m) != chi.degree()) kernel_contains = false;
        if (!kernel_contains) continue;
        deflatable++;
        ClassFunction image = deflate(chi, qm);
        bool matched = false;
        for (const auto& psi : outcome.theory->supercharacters)
            if (psi == image) matched = true;
        if (!matched) fail_internal("a deflated supercharacter is missing from the quotient theory");
    }
    if (deflatable != outcome.theory->num_blocks())
        fail_internal("quotient theory block count does not match the deflatable supercharacters");
    return {std::move(qm), std::move(*outcome.theory)};
}

namespace detail {

/// True iff upper/lower_term is central in the quotient theory: every member
/// of `upper` lands in a singleton class block of S^{G/lower_term}.
inline bool central_step(const SupercharacterTheory& S, const Subgroup& upper,
                         const Subgroup& lower_term) {
    DeflatedTheory D = deflate_theory(S, lower_term);
    for (int m : upper.members) {
        int q = D.qm.image_of[static_cast<size_t>(m)];
        if (D.theory.classes.blocks[static_cast<size_t>(D.theory.class_block_of(q))].size() != 1)
            return false;
    }
    return true;
}

}  // namespace detail

/// A descending chain G = N_1 >= ... >= N_{r+1} of S-normal subgroups with
/// each factor N_i/N_{i+1} inside the center of the theory on G/N_{i+1}.
/// Both standard constructions stop at their stabilization point;
/// `terminates` records whether the target ({1} below, G on top) was reached.
struct CentralSeries {
    enum class Kind { lower, upper, custom };

    SupercharacterTheory theory;
    Kind kind = Kind::custom;
    std::vector<Subgroup> terms;
    bool terminates = false;
    std::vector<bool> certificates;  // step i: terms[i]/terms[i+1] is central

    int length() const { return static_cast<int>(terms.size()) - 1; }
};

namespace detail {

inline void certify_central_series(const SupercharacterTheory& S, CentralSeries& series) {
    for (const Subgroup& term : series.terms)
        if (!is_s_normal(S, term)) fail_internal("central series term is not S-normal");
    for (size_t i = 0; i + 1 < series.terms.size(); i++) {
        bool ok = central_step(S, series.terms[i], series.terms[i + 1]);
        if (!ok) fail_internal("central series step certificate failed");
        series.certificates.push_back(ok);
    }
}

}  // namespace detail

/// gamma_1 = G, gamma_{i+1} = [gamma_i, S], cut at stabilization.
inline CentralSeries lower_central_series(const SupercharacterTheory& S) {
    CentralSeries series;
    series.theory = S;
    series.kind = CentralSeries::Kind::lower;
    series.terms.push_back(full_subgroup(S.group()));
    for (;;) {
        Subgroup next = sct_commutator(S, series.terms.back());
        if (subgroup_equal(next, series.terms.back())) break;
        series.terms.push_back(std::move(next));
    }
    series.terminates = series.terms.back().order() == 1;
    detail::certify_central_series(S, series);
    return series;
}

/// zeta_0 = 1, zeta_{i+1} = preimage of Z(S^{G/zeta_i}), cut at
/// stabilization and stored top term first.
inline CentralSeries upper_central_series(const SupercharacterTheory& S) {
    std::vector<Subgroup> ascending;
    ascending.push_back(trivial_subgroup(S.group()));
    for (;;) {
        DeflatedTheory D = deflate_theory(S, ascending.back());
        Subgroup next = quotient_preimage(D.qm, sct_center(D.theory));
        if (subgroup_equal(next, ascending.back())) break;
        ascending.push_back(std::move(next));
    }
    CentralSeries series;
    series.theory = S;
    series.kind = CentralSeries::Kind::upper;
    series.terminates = ascending.back().order() == S.group()->order();
    series.terms.assign(ascending.rbegin(), ascending.rend());
    detail::certify_central_series(S, series);
    return series;
}

/// A maximal descending chain G = terms[0] > ... > terms.back() = 1 in the
/// lattice of S-normal subgroups. Each factor theory (restrict to terms[i],
/// quotient by terms[i+1]) is certified to have no nontrivial proper normal
/// subgroup; `factor_central` and `factor_minimal` record whether the factor
/// sits centrally in the quotient theory and whether its theory is the
/// finest one, the data behind the nilpotence characterizations.
struct ChiefSeries {
    SupercharacterTheory theory;
    std::vector<Subgroup> terms;
    std::vector<int> factor_orders;
    std::vector<bool> factor_simple;
    std::vector<bool> factor_central;
    std::vector<bool> factor_minimal;

    int length() const { return static_cast<int>(terms.size()) - 1; }
};

inline ChiefSeries s_chief_series(const SupercharacterTheory& S,
                                  std::optional<unsigned long long> seed = std::nullopt) {
    std::vector<Subgroup> normals = s_normal_subgroups(S);
    std::mt19937_64 rng(seed ? *seed : 0);

    ChiefSeries series;
    series.theory = S;
    series.terms.push_back(full_subgroup(S.group()));
    while (series.terms.back().order() > 1) {
        const Subgroup& current = series.terms.back();
        std::vector<const Subgroup*> proper;
        for (const Subgroup& M : normals)
            if (M.order() < current.order() && subgroup_contains(current, M))
                proper.push_back(&M);
        std::vector<const Subgroup*> maximal;
        for (const Subgroup* M : proper) {
            bool covered = false;
            for (const Subgroup* other : proper)
                if (other != M && subgroup_contains(*other, *M) &&
                    other->order() > M->order())
                    covered = true;
            if (!covered) maximal.push_back(M);
        }
        std::sort(maximal.begin(), maximal.end(),
                  [](const Subgroup* a, const Subgroup* b) { return a->members < b->members; });
        size_t pick = seed ? static_cast<size_t>(rng() % maximal.size()) : 0;
        series.terms.push_back(*maximal[pick]);
    }

    for (size_t i = 0; i + 1 < series.terms.size(); i++) {
        const Subgroup& top = series.terms[i];
        const Subgroup& bottom = series.terms[i + 1];
        series.factor_orders.push_back(top.order() / bottom.order());
        series.factor_central.push_back(detail::central_step(S, top, bottom));

        SupercharacterTheory factor = [&] {
            if (top.order() == S.group()->order()) return deflate_theory(S, bottom).theory;
            RestrictedTheory R = restrict_theory(S, top);
            std::vector<int> inside;
            inside.reserve(bottom.members.size());
            for (int g : bottom.members) inside.push_back(R.sub.index_of_parent(g));
            return deflate_theory(R.theory, make_subgroup(R.sub.group, std::move(inside))).theory;
        }();
        bool simple = s_normal_subgroups(factor).size() == 2;
        if (!simple) fail_internal("chief factor theory is not simple");
        series.factor_simple.push_back(simple);
        series.factor_minimal.push_back(theories_equal(factor, minimal_theory(factor.table)));
    }
    return series;
}

/// True iff the lower central series of S reaches {1}.
inline bool is_s_nilpotent(const SupercharacterTheory& S) {
    return lower_central_series(S).terminates;
}

/// Full evidence for (or against) S-nilpotence: both central series, a chief
/// series, and the equivalent characterizations, which must agree.
struct NilpotenceCertificate {
    bool nilpotent = false;
    int nilpotency_class = -1;  // common terminating series length, -1 otherwise
    CentralSeries lower;
    CentralSeries upper;
    ChiefSeries chief;
    bool lower_terminates = false;
    bool upper_terminates = false;
    bool chief_factors_prime = false;    // every chief factor has prime order
    bool chief_factors_minimal = false;  // every chief factor theory is the finest one
    bool chief_is_central = false;       // the chief series is a central series
};

inline NilpotenceCertificate s_nilpotence(const SupercharacterTheory& S) {
    NilpotenceCertificate cert;
    cert.lower = lower_central_series(S);
    cert.upper = upper_central_series(S);
    cert.chief = s_chief_series(S);
    cert.lower_terminates = cert.lower.terminates;
    cert.upper_terminates = cert.upper.terminates;
    auto all = [](const std::vector<bool>& v) {
        for (bool x : v)
            if (!x) return false;
        return true;
    };
    cert.chief_factors_prime = true;
    for (int f : cert.chief.factor_orders)
        if (!detail::is_prime_ll(f)) cert.chief_factors_prime = false;
    cert.chief_factors_minimal = all(cert.chief.factor_minimal);
    cert.chief_is_central = all(cert.chief.factor_central);

    cert.nilpotent = cert.lower_terminates;
    bool factors_condition = cert.chief_factors_prime && cert.chief_factors_minimal;
    if (cert.upper_terminates != cert.nilpotent || factors_condition != cert.nilpotent ||
        cert.chief_is_central != cert.nilpotent)
        fail_internal("the nilpotence characterizations disagree");
    if (cert.nilpotent) {
        if (cert.lower.length() != cert.upper.length())
            fail_internal("terminating central series lengths disagree");
        cert.nilpotency_class = cert.lower.length();
    }
    return cert;
}

/// sum over supercharacters of chi(g) conj(chi(h)) / chi(1); equals
/// |G|/|cl_S(g)| when g and h share a class block and 0 otherwise.
inline Cyclotomic column_orthogonality_sum(const SupercharacterTheory& S, int g, int h) {
    const int n = S.group()->order();
    require(g >= 0 && g < n && h >= 0 && h < n, "PreconditionFailed", "element out of range");
    int cg = S.class_block_of(g);
    int ch = S.class_block_of(h);
    Cyclotomic sum(0);
    for (const auto& row : S.block_values) {
        Rational degree = row[0].rational_part();
        sum = sum + (row[static_cast<size_t>(cg)] * row[static_cast<size_t>(ch)].conj()) / degree;
    }
    return sum;
}

/// Pointwise product of the supercharacter in block `chi_block` with the
/// linear supercharacter in block `lambda_block`; returns the block index of
/// the product, which is again a supercharacter.
inline int multiply_by_linear(const SupercharacterTheory& S, int chi_block, int lambda_block) {
    const int b = S.num_blocks();
    require(chi_block >= 0 && chi_block < b && lambda_block >= 0 && lambda_block < b,
            "PreconditionFailed", "character block out of range");
    const auto& lambda = S.block_values[static_cast<size_t>(lambda_block)];
    require(lambda[0] == Cyclotomic(1), "PreconditionFailed",
            "the acting supercharacter must be linear");
    Subgroup comm = sct_commutator(S);
    for (int m : comm.members)
        require(lambda[static_cast<size_t>(S.class_block_of(m))] == Cyclotomic(1),
                "PreconditionFailed", "[G,S] must lie in the kernel of the linear character");

    std::vector<Cyclotomic> product;
    product.reserve(static_cast<size_t>(b));
    const auto& chi = S.block_values[static_cast<size_t>(chi_block)];
    for (size_t c = 0; c < chi.size(); c++) product.push_back(chi[c] * lambda[c]);
    for (int x = 0; x < b; x++)
        if (S.block_values[static_cast<size_t>(x)] == product) return x;
    fail_internal("the product with a linear supercharacter is not a supercharacter");
}

/// Checks that restricting to S-normal H and then quotienting by S-normal
/// N <= H yields the same theory as quotienting first and restricting after,
/// with the two carrier groups identified coset by coset.
inline bool induced_theories_compatible(const SupercharacterTheory& S, const Subgroup& H,
                                        const Subgroup& N) {
    require(is_s_normal(S, H) && is_s_normal(S, N), "NotSNormal",
            "both subgroups must be S-normal");
    require(subgroup_contains(H, N), "PreconditionFailed", "the subgroups must be nested");

    RestrictedTheory RH = restrict_theory(S, H);
    std::vector<int> inside;
    inside.reserve(N.members.size());
    for (int g : N.members) inside.push_back(RH.sub.index_of_parent(g));
    DeflatedTheory A = deflate_theory(RH.theory, make_subgroup(RH.sub.group, std::move(inside)));

    DeflatedTheory DN = deflate_theory(S, N);
    std::set<int> image;
    for (int g : H.members) image.insert(DN.qm.image_of[static_cast<size_t>(g)]);
    RestrictedTheory B =
        restrict_theory(DN.theory, make_subgroup(DN.qm.quotient,
                                                 std::vector<int>(image.begin(), image.end())));

    // Identify both carriers with the set of N-cosets inside H, keyed by the
    // least original element of each coset.
    auto key_a = [&](int a) {
        int least = -1;
        for (int m : A.qm.fibers.blocks[static_cast<size_t>(a)]) {
            int g = RH.sub.to_parent()[static_cast<size_t>(m)];
            if (least < 0 || g < least) least = g;
        }
        return least;
    };
    auto key_b = [&](int x) {
        int q = B.sub.to_parent()[static_cast<size_t>(x)];
        int least = -1;
        for (int g : DN.qm.fibers.blocks[static_cast<size_t>(q)])
            if (least < 0 || g < least) least = g;
        return least;
    };

    auto class_keys = [](const Partition& classes, auto&& key) {
        std::set<std::vector<int>> out;
        for (const auto& block : classes.blocks) {
            std::vector<int> keys;
            keys.reserve(block.size());
            for (int x : block) keys.push_back(key(x));
            std::sort(keys.begin(), keys.end());
            out.insert(std::move(keys));
        }
        return out;
    };
    if (class_keys(A.theory.classes, key_a) != class_keys(B.theory.classes, key_b)) return false;

    // Compare the value matrices with columns aligned by class key and rows
    // compared as multisets.
    auto rows = [](const SupercharacterTheory& T, auto&& key) {
        std::vector<std::pair<int, int>> order;  // (least class key, block index)
        for (int c = 0; c < T.num_blocks(); c++) {
            int least = -1;
            for (int x : T.classes.blocks[static_cast<size_t>(c)]) {
                int k = key(x);
                if (least < 0 || k < least) least = k;
            }
            order.emplace_back(least, c);
        }
        std::sort(order.begin(), order.end());
        std::set<std::vector<Cyclotomic>> out;
        for (const auto& row : T.block_values) {
            std::vector<Cyclotomic> aligned;
            aligned.reserve(order.size());
            for (const auto& [k, c] : order) aligned.push_back(row[static_cast<size_t>(c)]);
            out.insert(std::move(aligned));
        }
        return out;
    };
    return rows(A.theory, key_a) == rows(B.theory, key_b);
}

/// The largest S-normal p-subgroup P for which the restricted theory on P is
/// nilpotent; equivalently, for which every class block inside P has p-power
/// size. Returns {1} when no larger candidate exists.
inline Subgroup s_normal_p_core(const SupercharacterTheory& S, int p) {
    require(p >= 2 && detail::is_prime_ll(p), "PreconditionFailed", "p must be prime");
    auto is_p_power = [p](long long m) {
        while (m % p == 0) m /= p;
        return m == 1;
    };
    std::vector<Subgroup> candidates;
    for (const Subgroup& N : s_normal_subgroups(S)) {
        if (!is_p_power(N.order())) continue;
        if (N.order() == 1 || is_s_nilpotent(restrict_theory(S, N).theory))
            candidates.push_back(N);
    }
    Subgroup core = trivial_subgroup(S.group());
    for (const Subgroup& N : candidates) core = subgroup_product(core, N);

    if (!is_p_power(core.order()) || !is_s_normal(S, core))
        fail_internal("the p-core candidates do not generate an S-normal p-subgroup");
    if (core.order() > 1 && !is_s_nilpotent(restrict_theory(S, core).theory))
        fail_internal("the product of nilpotent p-core candidates is not nilpotent");
    for (const Subgroup& N : candidates)
        if (!subgroup_contains(core, N)) fail_internal("p-core misses a candidate subgroup");
    for (const auto& block : S.classes.blocks)
        if (core.contains(block[0]) && !is_p_power(static_cast<long long>(block.size())))
            fail_internal("a class block inside the p-core does not have p-power size");
    return core;
}

/// Checks every divisibility statement the theory supports, one report entry
/// per instance: restriction degree ratios, quotient class sizes, the
/// central and linear-action refinements, and the nilpotent-only facts.
inline Report divisibility_report(const SupercharacterTheory& S) {
    Report rep;
    rep.title = "divisibility";
    const GroupPtr& G = S.group();
    const long long n = G->order();
    const int b = S.num_blocks();

    bool nilpotent = is_s_nilpotent(S);
    rep.note("nilpotent", "the group is S-nilpotent", nilpotent ? "yes" : "no");
    Subgroup comm = sct_commutator(S);
    Subgroup center = sct_center(S);
    std::vector<Subgroup> normals = s_normal_subgroups(S);

    auto degree_of = [&](int x) {
        return S.block_values[static_cast<size_t>(x)][0].rational_part().num();
    };

    for (size_t ni = 0; ni < normals.size(); ni++) {
        const Subgroup& N = normals[ni];
        std::string nid = "N" + std::to_string(ni);
        rep.note(nid, "S-normal subgroup", "order " + std::to_string(N.order()));
        RestrictedTheory R = restrict_theory(S, N);
        DeflatedTheory D = deflate_theory(S, N);

        std::vector<long long> alpha(static_cast<size_t>(b), 0);
        for (int x = 0; x < b; x++) {
            ClassFunction res = restrict_to(S.supercharacter(x), R.sub);
            bool found = false;
            for (const auto& psi : R.theory.supercharacters) {
                Rational ratio = res.degree().rational_part() / psi.degree().rational_part();
                if (psi * ratio == res) {
                    found = ratio.is_integer() && ratio.num() >= 1;
                    if (found) alpha[static_cast<size_t>(x)] = ratio.num();
                    break;
                }
            }
            rep.add(nid + ".res.X" + std::to_string(x),
                    "the restriction to an S-normal subgroup is a positive integer multiple "
                    "of one supercharacter of the restricted theory",
                    found, found ? "ratio " + std::to_string(alpha[static_cast<size_t>(x)]) : "");
        }

        for (int c = 0; c < b; c++) {
            long long size = static_cast<long long>(S.classes.blocks[static_cast<size_t>(c)].size());
            int rep_element = S.classes.blocks[static_cast<size_t>(c)][0];
            int q = D.qm.image_of[static_cast<size_t>(rep_element)];
            long long qsize = static_cast<long long>(
                D.theory.classes.blocks[static_cast<size_t>(D.theory.class_block_of(q))].size());
            rep.add(nid + ".cls.K" + std::to_string(c),
                    "the class block size in the quotient theory divides the class block size",
                    size % qsize == 0,
                    std::to_string(qsize) + " | " + std::to_string(size));
            if (subgroup_contains(center, N) && size % qsize == 0) {
                long long ratio = size / qsize;
                rep.add(nid + ".ctr.K" + std::to_string(c),
                        "below the center, the class block size ratio divides the subgroup order",
                        N.order() % ratio == 0,
                        std::to_string(ratio) + " | " + std::to_string(N.order()));
            }
        }

        if (subgroup_contains(N, comm)) {
            for (int x = 0; x < b; x++) {
                bool kernel_contains = true;
                for (int m : N.members)
                    if (S.block_values[static_cast<size_t>(x)]
                                      [static_cast<size_t>(S.class_block_of(m))] !=
                        S.block_values[static_cast<size_t>(x)][0])
                        kernel_contains = false;
                if (kernel_contains) continue;
                long long index = n / N.order();
                rep.add(nid + ".act.X" + std::to_string(x),
                        "above [G,S], the degree ratio divides the index of the subgroup",
                        alpha[static_cast<size_t>(x)] != 0 &&
                            index % alpha[static_cast<size_t>(x)] == 0,
                        std::to_string(alpha[static_cast<size_t>(x)]) + " | " +
                            std::to_string(index));
            }
        }
    }

    if (nilpotent) {
        for (int x = 0; x < b; x++) {
            long long deg = degree_of(x);
            Subgroup ker = kernel_of(*S.table, S.supercharacter(x));
            long long index = n / ker.order();
            rep.add("nil.ind.X" + std::to_string(x),
                    "for a nilpotent theory, the degree divides the index of the kernel",
                    index % deg == 0, std::to_string(deg) + " | " + std::to_string(index));
            rep.add("nil.deg.X" + std::to_string(x),
                    "for a nilpotent theory, the degree divides the group order",
                    n % deg == 0, std::to_string(deg) + " | " + std::to_string(n));
        }
        for (int c = 0; c < b; c++) {
            long long size = static_cast<long long>(S.classes.blocks[static_cast<size_t>(c)].size());
            rep.add("nil.cls.K" + std::to_string(c),
                    "for a nilpotent theory, the class block size divides the group order",
                    n % size == 0, std::to_string(size) + " | " + std::to_string(n));
        }
    }
    return rep;
}

}  // namespace sct
