#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sct/algebra.hpp"
#include "sct/builtin_groups.hpp"
#include "sct/report.hpp"
#include "sct/sct_structure.hpp"

namespace sct {

/// A corpus entry: a named group together with every supercharacter theory it
/// admits (under the enumeration cap).
struct CorpusTheories {
    std::string name;
    GroupPtr group;
    TablePtr table;
    std::vector<SupercharacterTheory> theories;
};

inline std::vector<CorpusTheories> enumerate_corpus(
    const std::vector<std::pair<std::string, GroupPtr>>& groups,
    int cap = kDefaultEnumerationCap) {
    std::vector<CorpusTheories> out;
    out.reserve(groups.size());
    for (const auto& [name, G] : groups) {
        CorpusTheories entry;
        entry.name = name;
        entry.group = G;
        entry.table = character_table(G);
        entry.theories = enumerate_scts(entry.table, cap);
        out.push_back(std::move(entry));
    }
    return out;
}

/// The builtin reference corpus with all theories enumerated, computed once.
inline const std::vector<CorpusTheories>& corpus_theories() {
    static const std::vector<CorpusTheories> corpus = enumerate_corpus(corpus_groups());
    return corpus;
}

/// A named nilpotent algebra, the input unit of the algebra suite.
struct AlgebraCase {
    std::string name;
    NilpotentAlgebra algebra;
};

inline std::vector<AlgebraCase> default_algebra_cases() {
    return {{"ut(3,2)", ut_algebra(3, 2)},
            {"ut(3,3)", ut_algebra(3, 3)},
            {"ut(4,2)", ut_algebra(4, 2)}};
}

namespace detail {

inline std::string count_witness(size_t n, const std::string& noun) {
    std::string plural = noun;
    if (n != 1) {
        if (plural.size() > 1 && plural.back() == 'y') {
            plural.pop_back();
            plural += "ies";
        } else if (!plural.empty() && plural.back() == 's') {
            plural += "es";
        } else {
            plural += "s";
        }
    }
    return std::to_string(n) + " " + plural;
}

/// True when the factor top/bottom is abelian, i.e. all commutators of top
/// members land in bottom.
inline bool abelian_factor(const GroupPtr& G, const Subgroup& top, const Subgroup& bottom) {
    for (int a : top.members)
        for (int b : top.members) {
            int c = G->mult(G->mult(G->inv(a), G->inv(b)), G->mult(a, b));
            if (!bottom.contains(c)) return false;
        }
    return true;
}

inline long long integer_degree(const SupercharacterTheory& S, int x) {
    const Cyclotomic& d = S.supercharacter(x).values()[0];
    require(d.is_integer(), "InternalError", "supercharacter degree is not an integer");
    return d.as_integer();
}

inline bool is_prime_power_order(long long n) {
    if (n < 2) return false;
    long long p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (p * p > n) p = n;
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace detail

/// Re-derive every axiom of every enumerated theory from scratch: block
/// structure, validation round trip, and the sigma characters.
inline Report axiom_suite(const std::vector<CorpusTheories>& corpus) {
    Report rep("axioms");
    for (const auto& entry : corpus) {
        const std::string anchor = entry.name;
        bool ok = true;
        std::string witness = detail::count_witness(entry.theories.size(), "theory");
        for (size_t t = 0; ok && t < entry.theories.size(); ++t) {
            const SupercharacterTheory& S = entry.theories[t];
            auto reject = [&](const std::string& why) {
                ok = false;
                witness = "theory " + std::to_string(t) + ": " + why;
            };

            if (S.classes.blocks.empty() || S.classes.blocks[0] != std::vector<int>{0}) {
                reject("identity block is not {0}");
                continue;
            }
            if (S.char_blocks.blocks.empty() ||
                !std::count(S.char_blocks.blocks[0].begin(), S.char_blocks.blocks[0].end(), 0)) {
                reject("trivial character is outside block 0");
                continue;
            }
            if (S.classes.num_blocks() != S.char_blocks.num_blocks()) {
                reject("class and character partitions have different sizes");
                continue;
            }

            ValidationOutcome outcome = validate_sct(S.table, S.classes);
            if (!outcome.valid) {
                reject("validation rejected it: " + outcome.reason);
                continue;
            }
            const SupercharacterTheory& round = *outcome.theory;
            if (!theories_equal(S, round) || S.char_blocks != round.char_blocks ||
                S.block_values != round.block_values) {
                reject("validation round trip changed the theory");
                continue;
            }

            for (int x = 0; ok && x < S.num_blocks(); ++x) {
                ClassFunction sigma = sigma_character(*S.table, S.char_blocks.blocks[x]);
                if (!(sigma == S.supercharacter(x))) reject("sigma character mismatch");
            }
        }
        rep.add("axioms." + anchor, anchor, ok, witness);
    }
    return rep;
}

/// Frozen theory counts for the two smallest nontrivial cyclic groups.
inline Report theory_count_checks() {
    Report rep("theory counts");
    auto check = [&](const std::string& name, size_t expected) {
        TablePtr table = character_table(*parse_builtin_group(name));
        size_t got = enumerate_scts(table).size();
        rep.add("count." + name, name, got == expected,
                std::to_string(got) + " of " + std::to_string(expected));
    };
    check("cyclic:3", 2);
    check("cyclic:4", 3);
    return rep;
}

/// Run the per-theory divisibility report over the whole corpus. One entry
/// per group; a failure carries the first failing inner check.
inline Report restriction_suite(const std::vector<CorpusTheories>& corpus) {
    Report rep("restriction divisibility");
    for (const auto& entry : corpus) {
        bool ok = true;
        size_t checks = 0;
        std::string witness;
        for (size_t t = 0; ok && t < entry.theories.size(); ++t) {
            Report inner = divisibility_report(entry.theories[t]);
            checks += inner.checks();
            if (!inner.all_passed()) {
                ok = false;
                for (const auto& e : inner.entries)
                    if (e.status == CheckStatus::fail) {
                        witness = "theory " + std::to_string(t) + ": " + e.id +
                                  (e.witness.empty() ? "" : " (" + e.witness + ")");
                        break;
                    }
            }
        }
        if (ok) witness = detail::count_witness(checks, "divisibility check");
        rep.add("restriction." + entry.name, entry.name, ok, witness);
    }
    return rep;
}

/// Second orthogonality over superclass columns: the weighted column sum is
/// |G| / |cl(g)| on the diagonal blocks and vanishes off them.
inline Report orthogonality_suite(const std::vector<CorpusTheories>& corpus) {
    Report rep("column orthogonality");
    for (const auto& entry : corpus) {
        const int n = entry.group->order();
        bool ok = true;
        size_t pairs = 0;
        std::string witness;
        for (size_t t = 0; ok && t < entry.theories.size(); ++t) {
            const SupercharacterTheory& S = entry.theories[t];
            for (int g = 0; ok && g < n; ++g)
                for (int h = 0; h < n; ++h) {
                    const bool same = S.class_block_of(g) == S.class_block_of(h);
                    const auto& cls = S.classes.blocks[static_cast<size_t>(S.class_block_of(g))];
                    Cyclotomic expected =
                        same ? Cyclotomic(Rational(n, static_cast<long long>(cls.size())))
                             : Cyclotomic(0);
                    ++pairs;
                    if (!(column_orthogonality_sum(S, g, h) == expected)) {
                        ok = false;
                        witness = "theory " + std::to_string(t) + ", elements (" +
                                  std::to_string(g) + ", " + std::to_string(h) + ")";
                        break;
                    }
                }
        }
        if (ok) witness = detail::count_witness(pairs, "column pair");
        rep.add("orthogonality." + entry.name, entry.name, ok, witness);
    }
    return rep;
}

/// The running C6 example: the coarse theory with classes {1}, {x^3},
/// {x^2, x^4}, {x, x^5} and its center, quotients, and chief series.
inline Report worked_example_checks() {
    Report rep("worked example");
    GroupPtr G = cyclic_group(6);
    TablePtr table = character_table(G);

    Partition classes = Partition::from_blocks(6, {{0}, {3}, {2, 5}, {1, 4}});
    ValidationOutcome outcome = validate_sct(table, classes);
    rep.add("example.validates", "C6", outcome.valid, outcome.valid ? "" : outcome.reason);
    if (!outcome.valid) return rep;
    const SupercharacterTheory& S = *outcome.theory;

    Subgroup P = make_subgroup(G, {0, 3});
    Subgroup Q = make_subgroup(G, {0, 2, 4});
    rep.add("example.center", "C6", subgroup_equal(sct_center(S), P), "Z(S) = <x^3>");
    rep.add("example.Q_not_normal", "C6", !is_s_normal(S, Q), "<x^2> escapes S-normality");

    RestrictedTheory down = restrict_theory(S, P);
    rep.add("example.restricted_minimal", "C6",
            theories_equal(down.theory, minimal_theory(down.theory.table)),
            "S_P is the finest theory of P");

    DeflatedTheory up = deflate_theory(S, P);
    rep.add("example.deflated_minimal", "C6",
            theories_equal(up.theory, minimal_theory(up.theory.table)),
            "S_{G/P} is the finest theory of G/P");

    ChiefSeries chief = s_chief_series(S);
    std::vector<int> orders;
    for (const auto& term : chief.terms) orders.push_back(term.order());
    rep.add("example.chief", "C6", orders == std::vector<int>{6, 2, 1},
            "series G > <x^3> > 1");
    rep.add("example.nilpotent", "C6", is_s_nilpotent(S), "");
    return rep;
}

/// On groups of prime power order, S-nilpotence, degree divisibility, and
/// class size divisibility coincide theory by theory.
inline Report p_group_suite(const std::vector<CorpusTheories>& corpus) {
    Report rep("prime power order");
    for (const auto& entry : corpus) {
        if (!detail::is_prime_power_order(entry.group->order())) continue;
        const long long n = entry.group->order();
        bool ok = true;
        std::string witness = detail::count_witness(entry.theories.size(), "theory");
        for (size_t t = 0; ok && t < entry.theories.size(); ++t) {
            const SupercharacterTheory& S = entry.theories[t];
            bool degrees_divide = true;
            bool sizes_divide = true;
            for (int x = 0; x < S.num_blocks(); ++x) {
                if (n % detail::integer_degree(S, x) != 0) degrees_divide = false;
                if (n % static_cast<long long>(S.classes.blocks[static_cast<size_t>(x)].size()) !=
                    0)
                    sizes_divide = false;
            }
            const bool nilpotent = is_s_nilpotent(S);
            if (nilpotent != degrees_divide || nilpotent != sizes_divide) {
                ok = false;
                witness = "theory " + std::to_string(t) + ": nilpotent=" +
                          (nilpotent ? "yes" : "no") + ", degrees=" +
                          (degrees_divide ? "yes" : "no") + ", sizes=" +
                          (sizes_divide ? "yes" : "no");
            }
        }
        rep.add("pgroup." + entry.name, entry.name, ok, witness);
    }
    return rep;
}

/// Center and commutator behaviour across the whole theory lattice of each
/// group: monotonicity under refinement, exact values at joins, and the
/// containments at meets.
inline Report lattice_suite(const std::vector<CorpusTheories>& corpus) {
    Report rep("lattice");
    for (const auto& entry : corpus) {
        const auto& theories = entry.theories;
        bool ok = true;
        std::string witness;
        size_t pairs = 0;
        for (size_t i = 0; ok && i < theories.size(); ++i)
            for (size_t j = 0; j < theories.size(); ++j) {
                const SupercharacterTheory& S = theories[i];
                const SupercharacterTheory& T = theories[j];
                Subgroup zS = sct_center(S), zT = sct_center(T);
                Subgroup cS = sct_commutator(S), cT = sct_commutator(T);
                auto reject = [&](const std::string& what) {
                    ok = false;
                    witness = "theories (" + std::to_string(i) + ", " + std::to_string(j) +
                              "): " + what;
                };
                ++pairs;

                if (refines(S, T) &&
                    (!subgroup_contains(zS, zT) || !subgroup_contains(cT, cS))) {
                    reject("refinement fails to shrink the center or grow the commutator");
                    break;
                }

                SupercharacterTheory J = join_theories(S, T);
                if (!subgroup_equal(sct_center(J), subgroup_intersection(zS, zT))) {
                    reject("join center is not the intersection");
                    break;
                }
                if (!subgroup_equal(sct_commutator(J), subgroup_product(cS, cT))) {
                    reject("join commutator is not the product");
                    break;
                }

                SupercharacterTheory M = meet_theories(S, T, theories);
                if (!subgroup_contains(sct_center(M), subgroup_product(zS, zT))) {
                    reject("meet center misses the product of centers");
                    break;
                }
                if (!subgroup_contains(subgroup_intersection(cS, cT), sct_commutator(M))) {
                    reject("meet commutator exceeds the intersection");
                    break;
                }
            }
        if (ok) witness = detail::count_witness(pairs, "theory pair");
        rep.add("lattice." + entry.name, entry.name, ok, witness);
    }
    return rep;
}

/// Jordan-Holder behaviour of seeded chief series: the multiset of factor
/// fingerprints (order, abelian or not) is independent of the seed, and for
/// S-nilpotent theories every factor has prime order.
inline Report jordan_holder_suite(const std::vector<CorpusTheories>& corpus) {
    Report rep("chief series");
    const std::vector<unsigned long long> seeds = {1, 2, 3, 4, 5};
    for (const auto& entry : corpus) {
        bool ok = true;
        std::string witness = detail::count_witness(entry.theories.size(), "theory");
        for (size_t t = 0; ok && t < entry.theories.size(); ++t) {
            const SupercharacterTheory& S = entry.theories[t];
            auto reject = [&](const std::string& why) {
                ok = false;
                witness = "theory " + std::to_string(t) + ": " + why;
            };

            std::multiset<std::pair<int, bool>> reference;
            bool primes = true;
            for (size_t s = 0; ok && s < seeds.size(); ++s) {
                ChiefSeries series = s_chief_series(S, seeds[s]);
                std::multiset<std::pair<int, bool>> prints;
                for (size_t f = 0; f + 1 < series.terms.size(); ++f) {
                    int order = series.factor_orders[f];
                    prints.emplace(order, detail::abelian_factor(entry.group, series.terms[f],
                                                                 series.terms[f + 1]));
                    if (!detail::is_prime_ll(order)) primes = false;
                }
                if (s == 0)
                    reference = std::move(prints);
                else if (prints != reference)
                    reject("seed " + std::to_string(seeds[s]) +
                           " changes the factor fingerprints");
            }
            if (ok && is_s_nilpotent(S) && !primes)
                reject("S-nilpotent but a chief factor has composite order");
        }
        rep.add("chief." + entry.name, entry.name, ok, witness);
    }
    return rep;
}

/// Restriction and deflation commute: for nested S-normal subgroups N <= H,
/// the two routes to a theory of H/N give the same theory.
inline Report induction_suite(const std::vector<CorpusTheories>& corpus) {
    Report rep("induced theories");
    for (const auto& entry : corpus) {
        bool ok = true;
        size_t pairs = 0;
        std::string witness;
        for (size_t t = 0; ok && t < entry.theories.size(); ++t) {
            const SupercharacterTheory& S = entry.theories[t];
            std::vector<Subgroup> normals = s_normal_subgroups(S);
            for (const Subgroup& H : normals) {
                bool bad = false;
                for (const Subgroup& N : normals) {
                    if (!subgroup_contains(H, N)) continue;
                    ++pairs;
                    if (!induced_theories_compatible(S, H, N)) {
                        ok = false;
                        bad = true;
                        witness = "theory " + std::to_string(t) + ", subgroups of orders (" +
                                  std::to_string(H.order()) + ", " + std::to_string(N.order()) +
                                  ")";
                        break;
                    }
                }
                if (bad) break;
            }
        }
        if (ok) witness = detail::count_witness(pairs, "nested pair");
        rep.add("induction." + entry.name, entry.name, ok, witness);
    }
    return rep;
}

/// Full double-orbit pipeline per algebra: the theory validates, the sizes
/// and degrees are powers of q, the two series match term by term, and every
/// power of q below the group order is hit by an S-normal ideal subgroup.
inline Report algebra_case_suite(const std::vector<AlgebraCase>& cases) {
    Report rep("algebra");
    for (const auto& [name, A0] : cases) {
        try {
            AlgebraGroup A = algebra_group(A0);
            const long long q = A.algebra.field.order();
            SupercharacterTheory S = double_orbit_sct(A);
            rep.add(name + ".validates", name, true,
                    detail::count_witness(static_cast<size_t>(S.num_blocks()), "superclass"));

            bool powers = true;
            for (int x = 0; powers && x < S.num_blocks(); ++x) {
                long long size = static_cast<long long>(S.classes.blocks[static_cast<size_t>(x)].size());
                long long deg = detail::integer_degree(S, x);
                while (size % q == 0) size /= q;
                while (deg % q == 0) deg /= q;
                powers = size == 1 && deg == 1;
            }
            rep.add(name + ".qpowers", name, powers, "superclass sizes and degrees");

            Report series = compare_series(A, S);
            std::string detail_line;
            if (!series.all_passed())
                for (const auto& e : series.entries)
                    if (e.status == CheckStatus::fail) {
                        detail_line = e.id;
                        break;
                    }
            rep.add(name + ".series", name, series.all_passed(),
                    series.all_passed() ? detail::count_witness(series.checks(), "series check")
                                        : detail_line);

            auto ideals = ideal_subgroups_by_order(A, S);
            bool ladder = ideals.size() == static_cast<size_t>(A.algebra.dim) + 1;
            long long expect = 1;
            for (const auto& [order, H] : ideals) {
                if (order != expect || H.order() != expect || !is_s_normal(S, H)) ladder = false;
                expect *= q;
            }
            rep.add(name + ".ideals", name, ladder,
                    detail::count_witness(ideals.size(), "ideal subgroup"));
        } catch (const Error& e) {
            rep.add(name + ".validates", name, false, e.what());
        }
    }
    return rep;
}

/// Frozen facts about the smallest interesting case.
inline Report algebra_desk_checks() {
    Report rep("algebra landmarks");
    AlgebraGroup A = algebra_group(ut_algebra(3, 2));
    SupercharacterTheory S = double_orbit_sct(A);
    rep.add("ut(3,2).superclasses", "ut(3,2)", S.num_blocks() == 5,
            std::to_string(S.num_blocks()) + " of 5");
    std::multiset<long long> degrees;
    for (int x = 0; x < S.num_blocks(); ++x) degrees.insert(detail::integer_degree(S, x));
    rep.add("ut(3,2).degrees", "ut(3,2)", degrees == std::multiset<long long>{1, 1, 1, 1, 4},
            "degree multiset {1, 1, 1, 1, 4}");
    return rep;
}

namespace detail {

inline std::vector<CorpusTheories> corpus_subset(const std::vector<CorpusTheories>& corpus,
                                                 const std::set<std::string>& names) {
    std::vector<CorpusTheories> out;
    for (const auto& entry : corpus)
        if (names.count(entry.name)) out.push_back(entry);
    return out;
}

}  // namespace detail

/// Names accepted by run_suite.
inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"axioms", "divisibility", "lattice",
                                                   "nilpotence", "algebra"};
    return names;
}

/// Run one named suite over an explicit corpus. Fixed-instance checks (the
/// worked example, the frozen counts) are part of the builtin overload only.
inline Report run_suite(const std::string& name, const std::vector<CorpusTheories>& corpus,
                        const std::vector<AlgebraCase>& algebras) {
    Report rep(name);
    auto absorb = [&rep](const Report& part) {
        for (const auto& e : part.entries) rep.entries.push_back(e);
    };
    if (name == "axioms") {
        absorb(axiom_suite(corpus));
    } else if (name == "divisibility") {
        absorb(restriction_suite(corpus));
        absorb(orthogonality_suite(corpus));
    } else if (name == "lattice") {
        absorb(lattice_suite(corpus));
    } else if (name == "nilpotence") {
        absorb(p_group_suite(corpus));
        absorb(jordan_holder_suite(corpus));
        absorb(induction_suite(corpus));
    } else if (name == "algebra") {
        absorb(algebra_case_suite(algebras));
    } else {
        fail("InputError", "unknown suite: " + name);
    }
    return rep;
}

/// Run one named suite over the builtin corpus and reference algebras.
inline Report run_suite(const std::string& name) {
    static const std::set<std::string> lattice_names = {"C6", "C8", "D4", "Q8"};
    Report rep(name);
    auto absorb = [&rep](const Report& part) {
        for (const auto& e : part.entries) rep.entries.push_back(e);
    };
    if (name == "axioms") {
        absorb(axiom_suite(corpus_theories()));
        absorb(theory_count_checks());
    } else if (name == "divisibility") {
        absorb(restriction_suite(corpus_theories()));
        absorb(orthogonality_suite(corpus_theories()));
    } else if (name == "lattice") {
        absorb(lattice_suite(detail::corpus_subset(corpus_theories(), lattice_names)));
    } else if (name == "nilpotence") {
        absorb(worked_example_checks());
        absorb(p_group_suite(corpus_theories()));
        absorb(jordan_holder_suite(corpus_theories()));
        absorb(induction_suite(corpus_theories()));
    } else if (name == "algebra") {
        absorb(algebra_case_suite(default_algebra_cases()));
        absorb(algebra_desk_checks());
    } else {
        fail("InputError", "unknown suite: " + name);
    }
    return rep;
}

}  // namespace sct
