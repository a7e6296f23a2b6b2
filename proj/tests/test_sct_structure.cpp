#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sct/builtin_groups.hpp"
#include "sct/sct_structure.hpp"

using sct::ClassFunction;
using sct::CentralSeries;
using sct::Cyclotomic;
using sct::GroupPtr;
using sct::Partition;
using sct::Rational;
using sct::Subgroup;
using sct::SupercharacterTheory;
using sct::TablePtr;

namespace {

bool throws_code(const std::function<void()>& f, const std::string& code) {
    try {
        f();
    } catch (const sct::Error& e) {
        return e.code() == code;
    }
    return false;
}

SupercharacterTheory theory_on(const GroupPtr& G, std::vector<std::vector<int>> blocks) {
    return sct::require_sct(sct::character_table(G),
                            Partition::from_blocks(G->order(), std::move(blocks)));
}

// Cyclic of order six, classes {1}, {x^3}, {x^2, x^4}, {x, x^5}. Element i
// is x^i. Every hand-derived value below refers to this theory.
SupercharacterTheory c6_theory() {
    return theory_on(sct::cyclic_group(6), {{0}, {3}, {2, 5}, {1, 4}});
}

struct GroupTheories {
    std::string name;
    GroupPtr group;
    TablePtr table;
    std::vector<SupercharacterTheory> theories;
};

// Small groups with their complete lists of theories; the property tests
// below quantify over all of them.
const std::vector<GroupTheories>& battery() {
    static const std::vector<GroupTheories> out = [] {
        std::vector<GroupTheories> b;
        for (const char* name : {"cyclic:4", "cyclic:6", "cyclic:8", "dihedral:2", "symmetric:3",
                                 "dihedral:4", "quaternion:8"}) {
            GroupPtr G = *sct::parse_builtin_group(name);
            TablePtr t = sct::character_table(G);
            b.push_back({name, G, t, sct::enumerate_scts(t)});
        }
        return b;
    }();
    return out;
}

std::set<std::vector<int>> member_set(const std::vector<Subgroup>& subs) {
    std::set<std::vector<int>> out;
    for (const Subgroup& H : subs) out.insert(H.members);
    return out;
}

// Every subgroup of a group of order <= 12, as sorted member lists. Three
// generators suffice at these orders.
std::set<std::vector<int>> all_subgroups(const GroupPtr& G) {
    std::set<std::vector<int>> out;
    out.insert(sct::trivial_subgroup(G).members);
    for (int a = 0; a < G->order(); a++)
        for (int b = a; b < G->order(); b++)
            for (int c = b; c < G->order(); c++)
                out.insert(sct::generated_subgroup(G, {a, b, c}).members);
    return out;
}

bool is_power_of(long long m, int p) {
    while (m % p == 0) m /= p;
    return m == 1;
}

long long degree_of(const SupercharacterTheory& S, int x) {
    return S.block_values[static_cast<size_t>(x)][0].rational_part().num();
}

std::vector<int> linear_blocks(const SupercharacterTheory& S) {
    std::vector<int> out;
    for (int x = 0; x < S.num_blocks(); x++)
        if (degree_of(S, x) == 1) out.push_back(x);
    return out;
}

int trivial_block(const SupercharacterTheory& S) {
    for (int x = 0; x < S.num_blocks(); x++) {
        bool all_one = true;
        for (const Cyclotomic& v : S.block_values[static_cast<size_t>(x)])
            if (!(v == Cyclotomic(1))) all_one = false;
        if (all_one) return x;
    }
    FAIL("no trivial supercharacter block");
    return -1;
}

}  // namespace

TEST_CASE("worked example: S-normality, center, commutator, closure") {
    SupercharacterTheory S = c6_theory();
    const GroupPtr& G = S.group();
    Subgroup P = sct::make_subgroup(G, {0, 3});
    Subgroup Q = sct::make_subgroup(G, {0, 2, 4});

    REQUIRE(sct::is_s_normal(S, P));
    REQUIRE_FALSE(sct::is_s_normal(S, Q));
    REQUIRE(sct::sct_center(S).members == std::vector<int>{0, 3});
    REQUIRE(sct::sct_commutator(S).members == std::vector<int>{0, 3});
    REQUIRE(sct::s_closure(S, P).members == P.members);
    REQUIRE(sct::s_closure(S, Q).members == std::vector<int>{0, 1, 2, 3, 4, 5});

    std::vector<Subgroup> normals = sct::s_normal_subgroups(S);
    REQUIRE(normals.size() == 3);
    REQUIRE(normals[0].members == std::vector<int>{0});
    REQUIRE(normals[1].members == std::vector<int>{0, 3});
    REQUIRE(normals[2].members == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("worked example: restriction and quotient are the finest theories") {
    SupercharacterTheory S = c6_theory();
    Subgroup P = sct::make_subgroup(S.group(), {0, 3});

    sct::RestrictedTheory R = sct::restrict_theory(S, P);
    REQUIRE(R.theory.num_blocks() == 2);
    REQUIRE(sct::theories_equal(R.theory, sct::minimal_theory(R.theory.table)));

    sct::DeflatedTheory D = sct::deflate_theory(S, P);
    REQUIRE(D.qm.quotient->order() == 3);
    REQUIRE(D.theory.num_blocks() == 3);
    REQUIRE(sct::theories_equal(D.theory, sct::minimal_theory(D.theory.table)));
}

TEST_CASE("worked example: the degree three supercharacter is induced from below") {
    SupercharacterTheory S = c6_theory();
    const GroupPtr& G = S.group();

    int big = -1;
    for (int x = 0; x < S.num_blocks(); x++)
        if (degree_of(S, x) == 3) big = x;
    REQUIRE(big >= 0);
    REQUIRE(S.block_values[static_cast<size_t>(big)][static_cast<size_t>(S.class_block_of(3))] ==
            Cyclotomic(-3));
    REQUIRE(S.block_values[static_cast<size_t>(big)][static_cast<size_t>(S.class_block_of(2))]
                .is_zero());
    REQUIRE(S.block_values[static_cast<size_t>(big)][static_cast<size_t>(S.class_block_of(1))]
                .is_zero());

    sct::SubgroupGroup P = sct::as_group(sct::make_subgroup(G, {0, 3}));
    TablePtr tP = sct::character_table(P.group);
    for (const ClassFunction& lam : tP->irreducibles()) {
        if (lam.at_element(1) == Cyclotomic(1)) continue;
        REQUIRE(sct::induce_from(lam, P) == S.supercharacter(big));
    }
}

TEST_CASE("worked example: series, nilpotence, and the p-core") {
    SupercharacterTheory S = c6_theory();

    CentralSeries lower = sct::lower_central_series(S);
    REQUIRE(lower.terminates);
    REQUIRE(lower.length() == 2);
    REQUIRE(lower.terms[0].order() == 6);
    REQUIRE(lower.terms[1].members == std::vector<int>{0, 3});
    REQUIRE(lower.terms[2].order() == 1);

    CentralSeries upper = sct::upper_central_series(S);
    REQUIRE(upper.terminates);
    REQUIRE(upper.length() == 2);
    REQUIRE(upper.terms[1].members == std::vector<int>{0, 3});

    sct::ChiefSeries chief = sct::s_chief_series(S);
    REQUIRE(chief.length() == 2);
    REQUIRE(chief.terms[1].members == std::vector<int>{0, 3});
    REQUIRE(chief.factor_orders == std::vector<int>{3, 2});
    REQUIRE(std::all_of(chief.factor_central.begin(), chief.factor_central.end(),
                        [](bool b) { return b; }));
    REQUIRE(std::all_of(chief.factor_minimal.begin(), chief.factor_minimal.end(),
                        [](bool b) { return b; }));

    sct::NilpotenceCertificate cert = sct::s_nilpotence(S);
    REQUIRE(cert.nilpotent);
    REQUIRE(cert.nilpotency_class == 2);

    REQUIRE(sct::s_normal_p_core(S, 2).members == std::vector<int>{0, 3});
    REQUIRE(sct::s_normal_p_core(S, 3).order() == 1);
    REQUIRE(sct::s_normal_p_core(S, 5).order() == 1);
}

TEST_CASE("worked example: column orthogonality sums") {
    SupercharacterTheory S = c6_theory();
    REQUIRE(sct::column_orthogonality_sum(S, 0, 0) == Cyclotomic(6));
    REQUIRE(sct::column_orthogonality_sum(S, 1, 1) == Cyclotomic(3));
    REQUIRE(sct::column_orthogonality_sum(S, 1, 4) == Cyclotomic(3));
    REQUIRE(sct::column_orthogonality_sum(S, 2, 2) == Cyclotomic(3));
    REQUIRE(sct::column_orthogonality_sum(S, 1, 2).is_zero());
    REQUIRE(sct::column_orthogonality_sum(S, 3, 0).is_zero());
}

TEST_CASE("worked example: linear supercharacters act on the character blocks") {
    SupercharacterTheory S = c6_theory();
    std::vector<int> lin = linear_blocks(S);
    REQUIRE(lin.size() == 3);
    int t0 = trivial_block(S);
    int big = -1;
    for (int x = 0; x < S.num_blocks(); x++)
        if (degree_of(S, x) == 3) big = x;

    std::vector<int> others;
    for (int l : lin)
        if (l != t0) others.push_back(l);
    REQUIRE(others.size() == 2);
    int a = others[0], b = others[1];
    REQUIRE(sct::multiply_by_linear(S, a, a) == b);
    REQUIRE(sct::multiply_by_linear(S, b, b) == a);
    REQUIRE(sct::multiply_by_linear(S, a, b) == t0);
    REQUIRE(sct::multiply_by_linear(S, big, a) == big);
    REQUIRE(sct::multiply_by_linear(S, big, b) == big);
    REQUIRE(sct::multiply_by_linear(S, t0, a) == a);
}

TEST_CASE("worked example: every divisibility check passes") {
    SupercharacterTheory S = c6_theory();
    sct::Report rep = sct::divisibility_report(S);
    REQUIRE(rep.all_passed());
    REQUIRE(rep.checks() > 0);

    bool saw_nilpotent = false;
    bool saw_action_ratio = false;
    for (const sct::ReportEntry& e : rep.entries) {
        if (e.id == "nilpotent" && e.witness == "yes") saw_nilpotent = true;
        if (e.id.find(".act.") != std::string::npos && e.witness == "3 | 3")
            saw_action_ratio = true;
    }
    REQUIRE(saw_nilpotent);
    REQUIRE(saw_action_ratio);
}

TEST_CASE("rejections: wrong group, non-S-normal input, bad parameters") {
    SupercharacterTheory S = c6_theory();
    Subgroup Q = sct::make_subgroup(S.group(), {0, 2, 4});
    Subgroup P = sct::make_subgroup(S.group(), {0, 3});
    Subgroup full = sct::full_subgroup(S.group());
    Subgroup other = sct::trivial_subgroup(sct::cyclic_group(4));

    REQUIRE(throws_code([&] { sct::is_s_normal(S, other); }, "GroupMismatch"));
    REQUIRE(throws_code([&] { sct::restrict_theory(S, Q); }, "NotSNormal"));
    REQUIRE(throws_code([&] { sct::deflate_theory(S, Q); }, "NotSNormal"));
    REQUIRE(throws_code([&] { sct::induced_theories_compatible(S, Q, P); }, "NotSNormal"));
    REQUIRE(throws_code([&] { sct::induced_theories_compatible(S, P, full); },
                        "PreconditionFailed"));
    REQUIRE(throws_code([&] { sct::s_normal_p_core(S, 4); }, "PreconditionFailed"));
    REQUIRE(throws_code([&] { sct::s_normal_p_core(S, 1); }, "PreconditionFailed"));
    REQUIRE(throws_code([&] { sct::column_orthogonality_sum(S, -1, 0); }, "PreconditionFailed"));
    REQUIRE(throws_code([&] { sct::column_orthogonality_sum(S, 0, 6); }, "PreconditionFailed"));
    int big = -1;
    for (int x = 0; x < S.num_blocks(); x++)
        if (degree_of(S, x) == 3) big = x;
    REQUIRE(throws_code([&] { sct::multiply_by_linear(S, 0, big); }, "PreconditionFailed"));
}

TEST_CASE("S-normal subgroup enumeration agrees with a brute-force filter") {
    auto check = [](const SupercharacterTheory& S) {
        std::set<std::vector<int>> expected;
        for (const std::vector<int>& members : all_subgroups(S.group()))
            if (sct::is_s_normal(S, sct::make_subgroup(S.group(), members)))
                expected.insert(members);
        REQUIRE(member_set(sct::s_normal_subgroups(S)) == expected);
    };

    check(c6_theory());
    for (const GroupTheories& gt : battery()) {
        if (gt.name != "dihedral:4" && gt.name != "quaternion:8") continue;
        for (const SupercharacterTheory& S : gt.theories) check(S);
    }

    GroupPtr E = sct::elementary_abelian_group(2, 3);
    TablePtr t = sct::character_table(E);
    SupercharacterTheory m = sct::minimal_theory(t);
    REQUIRE(sct::s_normal_subgroups(m).size() == 16);
    check(m);
    check(sct::maximal_theory(t));
}

TEST_CASE("the finest theory recovers the classical center and commutator") {
    for (const auto& [name, G] : sct::corpus_groups()) {
        INFO(name);
        TablePtr t = sct::character_table(G);
        SupercharacterTheory m = sct::minimal_theory(t);
        REQUIRE(sct::subgroup_equal(sct::sct_center(m), sct::group_center(G)));
        REQUIRE(sct::subgroup_equal(sct::sct_commutator(m), sct::commutator_subgroup(G)));
    }
}

TEST_CASE("the coarsest theory has trivial center and a one-step chief series") {
    for (const auto& [name, G] : sct::corpus_groups()) {
        if (G->order() <= 2) continue;
        INFO(name);
        TablePtr t = sct::character_table(G);
        SupercharacterTheory M = sct::maximal_theory(t);
        REQUIRE(sct::sct_center(M).order() == 1);
        REQUIRE(sct::s_normal_subgroups(M).size() == 2);
        sct::ChiefSeries chief = sct::s_chief_series(M);
        REQUIRE(chief.length() == 1);
        REQUIRE(chief.factor_orders == std::vector<int>{G->order()});
        CentralSeries lower = sct::lower_central_series(M);
        REQUIRE_FALSE(lower.terminates);
        REQUIRE(lower.terms.size() == 1);
    }
}

TEST_CASE("central series: construction invariants across all small theories") {
    for (const GroupTheories& gt : battery()) {
        for (size_t ti = 0; ti < gt.theories.size(); ti++) {
            INFO(gt.name << " theory " << ti);
            const SupercharacterTheory& S = gt.theories[ti];
            CentralSeries lower = sct::lower_central_series(S);
            CentralSeries upper = sct::upper_central_series(S);
            REQUIRE(lower.terms[0].order() == gt.group->order());
            REQUIRE(upper.terms.back().order() == 1);
            REQUIRE(lower.terminates == upper.terminates);
            if (lower.terminates) REQUIRE(lower.length() == upper.length());

            sct::NilpotenceCertificate cert = sct::s_nilpotence(S);
            REQUIRE(cert.nilpotent == lower.terminates);
            if (cert.nilpotent) REQUIRE(cert.nilpotency_class == lower.length());
        }
    }
}

TEST_CASE("chief series: canonical choice, determinism, factor invariance") {
    GroupPtr D4 = sct::dihedral_group(4);
    SupercharacterTheory m = sct::minimal_theory(sct::character_table(D4));
    sct::ChiefSeries canonical = sct::s_chief_series(m);
    REQUIRE(canonical.terms[1].members == std::vector<int>{0, 1, 2, 3});
    REQUIRE(canonical.factor_orders == std::vector<int>{2, 2, 2});

    sct::ChiefSeries first = sct::s_chief_series(m, 7);
    sct::ChiefSeries second = sct::s_chief_series(m, 7);
    REQUIRE(first.terms.size() == second.terms.size());
    for (size_t i = 0; i < first.terms.size(); i++)
        REQUIRE(first.terms[i].members == second.terms[i].members);

    for (const GroupTheories& gt : battery()) {
        for (size_t ti = 0; ti < gt.theories.size(); ti++) {
            INFO(gt.name << " theory " << ti);
            const SupercharacterTheory& S = gt.theories[ti];
            std::multiset<int> reference;
            for (unsigned long long seed : {1ULL, 2ULL, 3ULL}) {
                sct::ChiefSeries chief = sct::s_chief_series(S, seed);
                long long product = 1;
                for (int f : chief.factor_orders) product *= f;
                REQUIRE(product == gt.group->order());
                REQUIRE(std::all_of(chief.factor_simple.begin(), chief.factor_simple.end(),
                                    [](bool b) { return b; }));
                std::multiset<int> orders(chief.factor_orders.begin(),
                                          chief.factor_orders.end());
                if (reference.empty()) reference = orders;
                REQUIRE(orders == reference);
            }
        }
    }
}

TEST_CASE("column orthogonality holds in every small theory") {
    for (const GroupTheories& gt : battery()) {
        const int n = gt.group->order();
        for (const SupercharacterTheory& S : gt.theories) {
            for (int g = 0; g < n; g++)
                for (int h = 0; h < n; h++) {
                    Cyclotomic sum = sct::column_orthogonality_sum(S, g, h);
                    if (S.class_block_of(g) != S.class_block_of(h)) {
                        REQUIRE(sum.is_zero());
                    } else {
                        long long size = static_cast<long long>(
                            S.classes.blocks[static_cast<size_t>(S.class_block_of(g))].size());
                        REQUIRE(sum == Cyclotomic(n) / Rational(size));
                    }
                }
        }
    }
}

TEST_CASE("linear supercharacters permute the character blocks") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            int t0 = trivial_block(S);
            std::vector<int> lin = linear_blocks(S);
            for (int lam : lin) {
                std::set<int> image;
                for (int x = 0; x < S.num_blocks(); x++) {
                    int y = sct::multiply_by_linear(S, x, lam);
                    image.insert(y);
                    REQUIRE(degree_of(S, y) == degree_of(S, x));
                    if (lam == t0) REQUIRE(y == x);
                }
                REQUIRE(static_cast<int>(image.size()) == S.num_blocks());
                for (int mu : lin) {
                    int prod = sct::multiply_by_linear(S, mu, lam);
                    REQUIRE(degree_of(S, prod) == 1);
                }
            }
        }
    }
}

TEST_CASE("kernels and centers of supercharacters") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            Subgroup meet = sct::full_subgroup(gt.group);
            for (int x = 0; x < S.num_blocks(); x++) {
                const ClassFunction& chi = S.supercharacter(x);
                Subgroup K = sct::kernel_of(*S.table, chi);
                Subgroup Z = sct::center_of(*S.table, chi);
                REQUIRE(sct::is_s_normal(S, K));
                REQUIRE(sct::is_s_normal(S, Z));
                meet = sct::subgroup_intersection(meet, Z);

                // the restriction to the center is degree times a linear character
                sct::SubgroupGroup ZG = sct::as_group(Z);
                ClassFunction res = sct::restrict_to(chi, ZG);
                ClassFunction theta = res * Rational(1, degree_of(S, x));
                REQUIRE(theta.degree() == Cyclotomic(1));
                REQUIRE(sct::is_character(*sct::character_table(ZG.group), theta));

                // modulo the kernel, the center becomes the center of the theory
                sct::DeflatedTheory D = sct::deflate_theory(S, K);
                Subgroup Zq = sct::quotient_image(D.qm, Z);
                REQUIRE(sct::subgroup_equal(Zq, sct::sct_center(D.theory)));
                sct::SubgroupGroup Zqg = sct::as_group(Zq);
                bool cyclic = false;
                for (int g = 0; g < Zqg.group->order(); g++)
                    if (Zqg.group->element_order(g) == Zqg.group->order()) cyclic = true;
                REQUIRE(cyclic);
            }
            REQUIRE(sct::subgroup_equal(meet, sct::sct_center(S)));
        }
    }
}

TEST_CASE("the commutator is cut out by the linear supercharacters") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            Subgroup from_linear = sct::full_subgroup(gt.group);
            Subgroup from_center = sct::full_subgroup(gt.group);
            for (int x = 0; x < S.num_blocks(); x++) {
                const ClassFunction& chi = S.supercharacter(x);
                if (degree_of(S, x) == 1)
                    from_linear =
                        sct::subgroup_intersection(from_linear, sct::kernel_of(*S.table, chi));
                if (sct::center_of(*S.table, chi).order() == gt.group->order())
                    from_center =
                        sct::subgroup_intersection(from_center, sct::kernel_of(*S.table, chi));
            }
            Subgroup comm = sct::sct_commutator(S);
            REQUIRE(sct::subgroup_equal(from_linear, comm));
            REQUIRE(sct::subgroup_equal(from_center, comm));
        }
    }
}

TEST_CASE("the lower central series is recoverable from restricted characters") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            CentralSeries lower = sct::lower_central_series(S);
            for (size_t i = 0; i + 1 < lower.terms.size(); i++) {
                sct::RestrictedTheory R = sct::restrict_theory(S, lower.terms[i]);
                std::vector<int> acc = lower.terms[i].members;
                for (int x = 0; x < R.theory.num_blocks(); x++) {
                    const ClassFunction& psi = R.theory.supercharacter(x);
                    if (sct::center_of(*R.theory.table, psi).order() != lower.terms[i].order())
                        continue;
                    Subgroup ker = sct::kernel_of(*R.theory.table, psi);
                    std::vector<int> keep;
                    for (int g : acc)
                        if (ker.contains(R.sub.index_of_parent(g))) keep.push_back(g);
                    acc = std::move(keep);
                }
                REQUIRE(acc == lower.terms[i + 1].members);
            }
        }
    }
}

TEST_CASE("induction from an S-normal subgroup sums a family of irreducibles") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            for (const Subgroup& N : sct::s_normal_subgroups(S)) {
                sct::RestrictedTheory R = sct::restrict_theory(S, N);
                for (const ClassFunction& psi : R.theory.supercharacters) {
                    ClassFunction ind = sct::induce_from(psi, R.sub);
                    std::vector<int> family;
                    for (size_t i = 0; i < gt.table->size(); i++) {
                        ClassFunction res =
                            sct::restrict_to(gt.table->irreducibles()[i], R.sub);
                        if (!sct::inner_product(res, psi).is_zero())
                            family.push_back(static_cast<int>(i));
                    }
                    REQUIRE(ind == sct::sigma_character(*gt.table, family));
                }
            }
        }
    }
}

TEST_CASE("the S-normal subgroups form a lattice compatible with commutators") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            std::vector<Subgroup> normals = sct::s_normal_subgroups(S);
            std::set<std::vector<int>> normal_set = member_set(normals);
            std::map<std::vector<int>, bool> restricted_nilpotent;
            for (const Subgroup& N : normals)
                restricted_nilpotent[N.members] =
                    sct::is_s_nilpotent(sct::restrict_theory(S, N).theory);

            for (const Subgroup& H : normals)
                for (const Subgroup& N : normals) {
                    Subgroup inter = sct::subgroup_intersection(H, N);
                    Subgroup prod = sct::subgroup_product(H, N);
                    REQUIRE(sct::is_s_normal(S, inter));
                    REQUIRE(sct::is_s_normal(S, prod));
                    REQUIRE(normal_set.count(prod.members) == 1);

                    Subgroup split = sct::subgroup_product(sct::sct_commutator(S, H),
                                                           sct::sct_commutator(S, N));
                    REQUIRE(sct::subgroup_equal(sct::sct_commutator(S, prod), split));

                    if (restricted_nilpotent[H.members] && restricted_nilpotent[N.members])
                        REQUIRE(restricted_nilpotent[prod.members]);
                }
        }
    }
}

TEST_CASE("quotient centers detect when the commutator fits below") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            Subgroup comm = sct::sct_commutator(S);
            for (const Subgroup& N : sct::s_normal_subgroups(S)) {
                sct::DeflatedTheory D = sct::deflate_theory(S, N);
                bool central_quotient =
                    sct::sct_center(D.theory).order() == D.qm.quotient->order();
                REQUIRE(central_quotient == sct::subgroup_contains(N, comm));
            }
        }
    }
}

TEST_CASE("S-normality above N matches normality in the quotient theory") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            std::vector<Subgroup> normals = sct::s_normal_subgroups(S);
            std::set<std::vector<int>> normal_set = member_set(normals);
            for (const Subgroup& N : normals) {
                sct::DeflatedTheory D = sct::deflate_theory(S, N);
                std::vector<Subgroup> above;
                for (const Subgroup& M : normals)
                    if (sct::subgroup_contains(M, N)) above.push_back(M);
                std::vector<Subgroup> quotient_normals = sct::s_normal_subgroups(D.theory);
                REQUIRE(above.size() == quotient_normals.size());
                for (const Subgroup& M : above) {
                    Subgroup img = sct::quotient_image(D.qm, M);
                    REQUIRE(sct::is_s_normal(D.theory, img));
                }
                for (const Subgroup& Mq : quotient_normals) {
                    Subgroup pre = sct::quotient_preimage(D.qm, Mq);
                    REQUIRE(normal_set.count(pre.members) == 1);
                    REQUIRE(sct::subgroup_contains(pre, N));
                }
            }
        }
    }
}

TEST_CASE("the lower series of a quotient theory is the image of the lower series") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            std::vector<Subgroup> lowS = sct::lower_central_series(S).terms;
            for (const Subgroup& N : sct::s_normal_subgroups(S)) {
                sct::DeflatedTheory D = sct::deflate_theory(S, N);
                std::vector<Subgroup> lowD = sct::lower_central_series(D.theory).terms;
                size_t len = std::max(lowS.size(), lowD.size());
                for (size_t i = 0; i < len; i++) {
                    const Subgroup& gamma = lowS[std::min(i, lowS.size() - 1)];
                    const Subgroup& delta = lowD[std::min(i, lowD.size() - 1)];
                    Subgroup image =
                        sct::quotient_image(D.qm, sct::subgroup_product(gamma, N));
                    REQUIRE(sct::subgroup_equal(image, delta));
                }
            }
        }
    }
}

TEST_CASE("nilpotence is equivalent to nilpotence along every S-normal subgroup") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            bool nilpotent = sct::is_s_nilpotent(S);
            bool everywhere = true;
            for (const Subgroup& N : sct::s_normal_subgroups(S)) {
                if (!sct::is_s_nilpotent(sct::restrict_theory(S, N).theory)) everywhere = false;
                if (!sct::is_s_nilpotent(sct::deflate_theory(S, N).theory)) everywhere = false;
            }
            REQUIRE(nilpotent == everywhere);
        }
    }
}

TEST_CASE("restriction then quotient agrees with quotient then restriction") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            std::vector<Subgroup> normals = sct::s_normal_subgroups(S);
            for (const Subgroup& H : normals)
                for (const Subgroup& N : normals) {
                    if (!sct::subgroup_contains(H, N)) continue;
                    REQUIRE(sct::induced_theories_compatible(S, H, N));
                }
        }
    }
}

TEST_CASE("central elements translate class blocks to class blocks") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            for (int z : sct::sct_center(S).members)
                for (int g = 0; g < gt.group->order(); g++) {
                    std::vector<int> translated;
                    for (int k :
                         S.classes.blocks[static_cast<size_t>(S.class_block_of(g))])
                        translated.push_back(gt.group->mult(z, k));
                    std::sort(translated.begin(), translated.end());
                    std::vector<int> target =
                        S.classes.blocks[static_cast<size_t>(
                            S.class_block_of(gt.group->mult(z, g)))];
                    std::sort(target.begin(), target.end());
                    REQUIRE(translated == target);
                }
        }
    }
}

TEST_CASE("comparable theories have comparable centers and commutators") {
    for (const GroupTheories& gt : battery()) {
        size_t limit = std::min<size_t>(gt.theories.size(), 12);
        for (size_t i = 0; i < limit; i++)
            for (size_t j = 0; j < limit; j++) {
                INFO(gt.name << " pair " << i << "," << j);
                const SupercharacterTheory& S = gt.theories[i];
                const SupercharacterTheory& T = gt.theories[j];
                Subgroup zS = sct::sct_center(S), zT = sct::sct_center(T);
                Subgroup cS = sct::sct_commutator(S), cT = sct::sct_commutator(T);

                if (sct::refines(S, T)) {
                    REQUIRE(sct::subgroup_contains(zS, zT));
                    REQUIRE(sct::subgroup_contains(cT, cS));
                }

                SupercharacterTheory J = sct::join_theories(S, T);
                REQUIRE(sct::subgroup_equal(sct::sct_center(J),
                                            sct::subgroup_intersection(zS, zT)));
                REQUIRE(sct::subgroup_equal(sct::sct_commutator(J),
                                            sct::subgroup_product(cS, cT)));

                SupercharacterTheory M = sct::meet_theories(S, T, gt.theories);
                REQUIRE(sct::subgroup_contains(sct::sct_center(M),
                                               sct::subgroup_product(zS, zT)));
                REQUIRE(sct::subgroup_contains(sct::subgroup_intersection(cS, cT),
                                               sct::sct_commutator(M)));
            }
    }
}

TEST_CASE("for p-groups, nilpotence is a divisibility condition") {
    for (const GroupTheories& gt : battery()) {
        long long n = gt.group->order();
        if (n != 4 && n != 8) continue;
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            bool nilpotent = sct::is_s_nilpotent(S);
            bool degrees_divide = true;
            bool sizes_divide = true;
            for (int x = 0; x < S.num_blocks(); x++) {
                if (n % degree_of(S, x) != 0) degrees_divide = false;
                if (n % static_cast<long long>(S.classes.blocks[static_cast<size_t>(x)].size()) !=
                    0)
                    sizes_divide = false;
            }
            REQUIRE(nilpotent == degrees_divide);
            REQUIRE(nilpotent == sizes_divide);
        }
    }
}

TEST_CASE("the p-core is the product of the p-power-class candidates") {
    for (const GroupTheories& gt : battery()) {
        for (const SupercharacterTheory& S : gt.theories) {
            INFO(gt.name);
            for (int p : {2, 3}) {
                Subgroup expected = sct::trivial_subgroup(gt.group);
                for (const Subgroup& N : sct::s_normal_subgroups(S)) {
                    if (!is_power_of(N.order(), p)) continue;
                    bool p_power_blocks = true;
                    for (const auto& block : S.classes.blocks)
                        if (N.contains(block[0]) &&
                            !is_power_of(static_cast<long long>(block.size()), p))
                            p_power_blocks = false;
                    if (p_power_blocks) expected = sct::subgroup_product(expected, N);
                }
                REQUIRE(sct::subgroup_equal(sct::s_normal_p_core(S, p), expected));
            }
        }
    }
}

TEST_CASE("every divisibility report over the small theories passes") {
    for (const GroupTheories& gt : battery()) {
        for (size_t ti = 0; ti < gt.theories.size(); ti++) {
            INFO(gt.name << " theory " << ti);
            sct::Report rep = sct::divisibility_report(gt.theories[ti]);
            REQUIRE(rep.all_passed());
            REQUIRE(rep.checks() > 0);
        }
    }
}

TEST_CASE("nilpotence transfers to the whole group along a suitable normal subgroup") {
    int triggered = 0;
    for (const auto& [name, G] : sct::corpus_groups()) {
        INFO(name);
        TablePtr t = sct::character_table(G);
        SupercharacterTheory m = sct::minimal_theory(t);
        bool whole_nilpotent = sct::is_s_nilpotent(m);
        for (const Subgroup& N : sct::s_normal_subgroups(m)) {
            bool sub_nilpotent =
                N.order() == 1 || sct::is_s_nilpotent(sct::restrict_theory(m, N).theory);
            bool quot_nilpotent = sct::is_s_nilpotent(sct::deflate_theory(m, N).theory);
            if (!sub_nilpotent || !quot_nilpotent) continue;

            // every element of prime power order inside N must lie in a
            // conjugacy class whose size is a power of the same prime
            bool hypothesis = true;
            for (int g : N.members) {
                int ord = G->element_order(g);
                for (int p = 2; p <= ord; p++) {
                    if (!sct::detail::is_prime_ll(p) || !is_power_of(ord, p)) continue;
                    long long size = G->class_sizes()[static_cast<size_t>(G->class_of(g))];
                    if (!is_power_of(size, p)) hypothesis = false;
                }
            }
            if (!hypothesis) continue;
            triggered++;
            REQUIRE(whole_nilpotent);
        }
    }
    REQUIRE(triggered > 10);
}
