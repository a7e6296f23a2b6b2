#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sct/algebra.hpp"

using sct::AlgebraGroup;
using sct::FiniteField;
using sct::FqVec;
using sct::Ideal;
using sct::NilpotentAlgebra;
using sct::Rational;
using sct::Report;
using sct::Subgroup;
using sct::SupercharacterTheory;

namespace {

bool throws_code(const std::function<void()>& f, const std::string& code) {
    try {
        f();
    } catch (const sct::Error& e) {
        return e.code() == code;
    }
    return false;
}

bool is_power_of(long long n, long long q) {
    if (n < 1) return false;
    while (n % q == 0) n /= q;
    return n == 1;
}

NilpotentAlgebra zero_algebra(long long q, int dim) {
    return sct::build_algebra(sct::field_from_order(q), dim, {});
}

Subgroup one_plus(const AlgebraGroup& A, const Ideal& I) {
    std::vector<int> members;
    for (const FqVec& v : sct::detail::span_elements(A.algebra.field, I.basis,
                                                     static_cast<size_t>(A.algebra.dim)))
        members.push_back(static_cast<int>(A.encode(v)));
    return sct::make_subgroup(A.group, std::move(members));
}

std::multiset<size_t> class_sizes(const SupercharacterTheory& S) {
    std::multiset<size_t> out;
    for (const auto& block : S.classes.blocks) out.insert(block.size());
    return out;
}

std::multiset<long long> degrees(const SupercharacterTheory& S) {
    std::multiset<long long> out;
    for (int x = 0; x < S.num_blocks(); x++) {
        sct::Cyclotomic d = S.supercharacter(x).values()[0];
        REQUIRE(d.is_rational());
        out.insert(d.rational_part().as_integer());
    }
    return out;
}

std::set<std::vector<int>> block_set(const std::vector<std::vector<int>>& blocks) {
    std::set<std::vector<int>> out;
    for (std::vector<int> b : blocks) {
        std::sort(b.begin(), b.end());
        out.insert(std::move(b));
    }
    return out;
}

// The quotient algebra J/I on the non-pivot coordinates of I's basis,
// together with the coordinate projection underlying g -> 1 + (g-1) + I.
struct QuotientSetup {
    NilpotentAlgebra algebra;
    std::vector<int> coords;  // non-pivot columns of I
};

QuotientSetup quotient_algebra(const NilpotentAlgebra& J, const Ideal& I) {
    std::vector<char> pivot(static_cast<size_t>(J.dim), 0);
    for (const FqVec& row : I.basis) {
        size_t col = 0;
        while (row[col] == 0) col++;
        pivot[col] = 1;
    }
    QuotientSetup Q;
    for (int t = 0; t < J.dim; t++)
        if (!pivot[static_cast<size_t>(t)]) Q.coords.push_back(t);
    int qdim = static_cast<int>(Q.coords.size());
    std::vector<std::tuple<int, int, FqVec>> entries;
    for (int a = 0; a < qdim; a++)
        for (int b = 0; b < qdim; b++) {
            FqVec prod = sct::detail::reduce_against(
                J.field, I.basis,
                J.products[static_cast<size_t>(Q.coords[static_cast<size_t>(a)])]
                          [static_cast<size_t>(Q.coords[static_cast<size_t>(b)])]);
            FqVec value(static_cast<size_t>(qdim));
            for (int t = 0; t < qdim; t++)
                value[static_cast<size_t>(t)] =
                    prod[static_cast<size_t>(Q.coords[static_cast<size_t>(t)])];
            entries.emplace_back(a, b, std::move(value));
        }
    Q.algebra = sct::build_algebra(J.field, qdim, entries);
    return Q;
}

}  // namespace

TEST_CASE("finite field arithmetic over the builtin moduli") {
    for (long long q : {2LL, 3LL, 4LL, 5LL, 7LL, 8LL, 9LL}) {
        FiniteField F = sct::field_from_order(q);
        REQUIRE(F.order() == q);
        long long pk = 1;
        for (int i = 0; i < F.k(); i++) pk *= F.p();
        REQUIRE(pk == q);
        for (long long a = 1; a < q; a++) REQUIRE(F.mul(a, F.inv(a)) == 1);
        for (long long a = 0; a < q; a++) {
            REQUIRE(F.from_digits(F.digits(a)) == a);
            for (long long b = 0; b < q; b++)
                REQUIRE((F.trace(F.add(a, b)) + F.p() - (F.trace(a) + F.trace(b)) % F.p()) %
                            F.p() ==
                        0);
        }
        // the trace is onto the prime field, hitting each value q/p times
        std::map<int, int> tally;
        for (long long a = 0; a < q; a++) tally[F.trace(a)]++;
        REQUIRE(static_cast<int>(tally.size()) == F.p());
        for (const auto& [value, count] : tally) REQUIRE(count == q / F.p());
    }

    FiniteField F4 = sct::field_from_order(4);
    REQUIRE(F4.trace(0) == 0);
    REQUIRE(F4.trace(1) == 0);
    REQUIRE(F4.trace(2) == 1);
    REQUIRE(F4.trace(3) == 1);
    REQUIRE(F4.mul(2, 2) == 3);  // X^2 = X + 1
    REQUIRE(F4.scalar(1) == 1);

    FiniteField F2 = sct::field_from_order(2);
    REQUIRE(F2.trace(1) == 1);
}

TEST_CASE("user supplied moduli and field rejections") {
    FiniteField F16 = sct::make_field(2, 4, {1, 1, 0, 0, 1});  // X^4 + X + 1
    REQUIRE(F16.order() == 16);
    for (long long a = 1; a < 16; a++) REQUIRE(F16.mul(a, F16.inv(a)) == 1);
    std::map<int, int> tally;
    for (long long a = 0; a < 16; a++) tally[F16.trace(a)]++;
    REQUIRE(tally[0] == 8);
    REQUIRE(tally[1] == 8);

    CHECK(throws_code([] { sct::make_field(2, 4, {1, 0, 0, 0, 1}); }, "BadField"));  // (X+1)^4
    CHECK(throws_code([] { sct::make_field(4, 1); }, "BadField"));
    CHECK(throws_code([] { sct::make_field(6, 1); }, "BadField"));
    CHECK(throws_code([] { sct::make_field(2, 0); }, "BadField"));
    CHECK(throws_code([] { sct::make_field(2, 2, {1, 1, 0}); }, "BadField"));  // not monic
    CHECK(throws_code([] { sct::make_field(2, 2, {1, 1}); }, "BadField"));     // wrong degree
    CHECK(throws_code([] { sct::field_from_order(12); }, "BadField"));
    CHECK(throws_code([] { sct::field_from_order(25); }, "BadField"));  // no builtin modulus
    CHECK(throws_code([] { sct::field_from_order(131072); }, "BadField"));
}

TEST_CASE("upper triangular algebra group matches matrix multiplication") {
    NilpotentAlgebra J = sct::ut_algebra(3, 2);
    AlgebraGroup A = sct::algebra_group(J);
    REQUIRE(A.group->order() == 8);
    REQUIRE_FALSE(A.group->abelian());
    REQUIRE(A.group->label(0) == "1");
    REQUIRE(A.group->label(1) == "1+(1,0,0)");

    // oracle: 1 + v0 E12 + v1 E13 + v2 E23 as an honest 3x3 matrix over F2
    auto to_matrix = [](const FqVec& v) {
        std::array<std::array<long long, 3>, 3> m{};
        for (int i = 0; i < 3; i++) m[i][i] = 1;
        m[0][1] = v[0];
        m[0][2] = v[1];
        m[1][2] = v[2];
        return m;
    };
    for (int a = 0; a < 8; a++)
        for (int b = 0; b < 8; b++) {
            auto x = to_matrix(A.decode(a));
            auto y = to_matrix(A.decode(b));
            std::array<std::array<long long, 3>, 3> z{};
            for (int i = 0; i < 3; i++)
                for (int j = 0; j < 3; j++)
                    for (int k = 0; k < 3; k++) z[i][j] = (z[i][j] + x[i][k] * y[k][j]) % 2;
            long long code = A.encode({z[0][1], z[0][2], z[1][2]});
            REQUIRE(A.group->mult(a, b) == static_cast<int>(code));
        }
}

TEST_CASE("structure constants and ideal chains of the 3x3 case") {
    NilpotentAlgebra J = sct::ut_algebra(3, 2);
    REQUIRE(J.dim == 3);
    REQUIRE(J.nil_class == 3);
    REQUIRE(J.products[0][2] == FqVec{0, 1, 0});  // E12 E23 = E13
    REQUIRE(J.is_zero(J.products[2][0]));

    std::vector<Ideal> powers = sct::power_ideals(J);
    REQUIRE(powers.size() == 3);
    REQUIRE(powers[0].dim() == 3);
    REQUIRE(powers[1].basis == std::vector<FqVec>{{0, 1, 0}});
    REQUIRE(powers[2].dim() == 0);

    std::vector<Ideal> anns = sct::annihilator_series(J);
    REQUIRE(anns.size() == 3);
    REQUIRE(anns[0].dim() == 0);
    REQUIRE(anns[1].basis == std::vector<FqVec>{{0, 1, 0}});
    REQUIRE(anns[2].dim() == 3);
}

TEST_CASE("double orbit classes match a brute force two-sided orbit oracle") {
    NilpotentAlgebra J = sct::ut_algebra(3, 2);
    AlgebraGroup A = sct::algebra_group(J);
    SupercharacterTheory S = sct::double_orbit_sct(A);

    REQUIRE(S.num_blocks() == 5);
    REQUIRE(S.classes.blocks[0] == std::vector<int>{0});
    REQUIRE(class_sizes(S) == std::multiset<size_t>{1, 1, 2, 2, 2});
    REQUIRE(degrees(S) == std::multiset<long long>{1, 1, 1, 1, 4});

    // orbit of v under x v y for all group elements x = 1+a, y = 1+b
    std::vector<std::vector<int>> oracle;
    std::vector<char> placed(8, 0);
    for (int seed = 0; seed < 8; seed++) {
        if (placed[static_cast<size_t>(seed)]) continue;
        std::set<int> orbit;
        FqVec v = A.decode(seed);
        for (int x = 0; x < 8; x++)
            for (int y = 0; y < 8; y++) {
                FqVec w = J.add(v, J.mul(A.decode(x), v));         // (1+a) v
                w = J.add(w, J.mul(w, A.decode(y)));               // ... (1+b)
                orbit.insert(static_cast<int>(A.encode(w)));
            }
        for (int g : orbit) placed[static_cast<size_t>(g)] = 1;
        oracle.emplace_back(orbit.begin(), orbit.end());
    }
    REQUIRE(block_set(S.classes.blocks) == block_set(oracle));
}

TEST_CASE("central series of the 3x3 theory follow the ideal chains") {
    NilpotentAlgebra J = sct::ut_algebra(3, 2);
    AlgebraGroup A = sct::algebra_group(J);
    SupercharacterTheory S = sct::double_orbit_sct(A);

    Report rep = sct::compare_series(A, S);
    CAPTURE(rep.text());
    REQUIRE(rep.all_passed());

    sct::CentralSeries lower = sct::lower_central_series(S);
    REQUIRE(lower.terms.size() == 3);
    REQUIRE(lower.terms[0].order() == 8);
    REQUIRE(lower.terms[1].order() == 2);
    REQUIRE(lower.terms[2].order() == 1);

    for (const Ideal& I : sct::power_ideals(J)) CHECK(sct::is_s_normal(S, one_plus(A, I)));
    for (const Ideal& I : sct::annihilator_series(J)) CHECK(sct::is_s_normal(S, one_plus(A, I)));

    auto ideals = sct::ideal_subgroups_by_order(A, S);
    REQUIRE(ideals.size() == 4);
    for (size_t m = 0; m < ideals.size(); m++) {
        REQUIRE(ideals[m].first == (1LL << m));
        REQUIRE(ideals[m].second.order() == static_cast<int>(1LL << m));
    }
    REQUIRE(ideals[2].second.members == std::vector<int>{0, 1, 2, 3});  // 1 + <E12, E13>
}

TEST_CASE("3x3 algebra over the field with three elements") {
    NilpotentAlgebra J = sct::ut_algebra(3, 3);
    AlgebraGroup A = sct::algebra_group(J);
    REQUIRE(A.group->order() == 27);

    SupercharacterTheory S = sct::double_orbit_sct(A);
    REQUIRE(S.num_blocks() == 11);
    REQUIRE(class_sizes(S) == std::multiset<size_t>{1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3});
    REQUIRE(degrees(S) == std::multiset<long long>{1, 1, 1, 1, 1, 1, 1, 1, 1, 9, 9});

    Report rep = sct::compare_series(A, S);
    CAPTURE(rep.text());
    REQUIRE(rep.all_passed());

    auto ideals = sct::ideal_subgroups_by_order(A, S);
    REQUIRE(ideals.size() == 4);
    long long expected = 1;
    for (const auto& [order, sub] : ideals) {
        REQUIRE(order == expected);
        REQUIRE(sub.order() == static_cast<int>(expected));
        expected *= 3;
    }
}

TEST_CASE("4x4 case end to end") {
    NilpotentAlgebra J = sct::ut_algebra(4, 2);
    REQUIRE(J.dim == 6);
    REQUIRE(J.nil_class == 4);
    AlgebraGroup A = sct::algebra_group(J);
    REQUIRE(A.group->order() == 64);

    SupercharacterTheory S = sct::double_orbit_sct(A);
    // one superclass per non-attacking rook placement on the strict upper
    // triangle: 1 + 6 + 7 + 1 of them for n = 4
    REQUIRE(S.num_blocks() == 15);

    Report rep = sct::compare_series(A, S);
    CAPTURE(rep.text());
    REQUIRE(rep.all_passed());

    sct::CentralSeries lower = sct::lower_central_series(S);
    std::vector<int> lower_orders;
    for (const Subgroup& H : lower.terms) lower_orders.push_back(H.order());
    REQUIRE(lower_orders == std::vector<int>{64, 8, 2, 1});

    sct::CentralSeries upper = sct::upper_central_series(S);
    std::vector<int> upper_orders;
    for (const Subgroup& H : upper.terms) upper_orders.push_back(H.order());
    REQUIRE(upper_orders == std::vector<int>{64, 8, 2, 1});

    auto ideals = sct::ideal_subgroups_by_order(A, S);
    REQUIRE(ideals.size() == 7);
    for (size_t m = 0; m < ideals.size(); m++)
        REQUIRE(ideals[m].second.order() == static_cast<int>(1LL << m));
}

TEST_CASE("superclass sizes and degrees are powers of the field order") {
    struct Case {
        NilpotentAlgebra J;
        long long q;
    };
    std::vector<Case> cases;
    cases.push_back({sct::ut_algebra(3, 2), 2});
    cases.push_back({sct::ut_algebra(3, 3), 3});
    cases.push_back({sct::ut_algebra(4, 2), 2});
    cases.push_back({sct::build_algebra(sct::field_from_order(4), 2, {{0, 0, {0, 1}}}), 4});

    for (const Case& c : cases) {
        AlgebraGroup A = sct::algebra_group(c.J);
        SupercharacterTheory S = sct::double_orbit_sct(A);
        for (size_t sz : class_sizes(S)) CHECK(is_power_of(static_cast<long long>(sz), c.q));
        for (long long d : degrees(S)) CHECK(is_power_of(d, c.q));
    }
}

TEST_CASE("a commutative square-to-line algebra over the four element field") {
    NilpotentAlgebra J = sct::build_algebra(sct::field_from_order(4), 2, {{0, 0, {0, 1}}});
    REQUIRE(J.nil_class == 3);
    AlgebraGroup A = sct::algebra_group(J);
    REQUIRE(A.group->order() == 16);
    REQUIRE(A.group->abelian());
    REQUIRE(A.group->exponent() == 4);  // (1 + a e0)^2 = 1 + a^2 e1

    SupercharacterTheory S = sct::double_orbit_sct(A);
    REQUIRE(S.num_blocks() == 7);
    REQUIRE(class_sizes(S) == std::multiset<size_t>{1, 1, 1, 1, 4, 4, 4});
    REQUIRE(degrees(S) == std::multiset<long long>{1, 1, 1, 1, 4, 4, 4});

    Report rep = sct::compare_series(A, S);
    CAPTURE(rep.text());
    REQUIRE(rep.all_passed());
    sct::CentralSeries lower = sct::lower_central_series(S);
    REQUIRE(lower.terms.size() == 3);
    REQUIRE(lower.terms[1].order() == 4);
}

TEST_CASE("zero algebras give elementary abelian groups with the finest theory") {
    struct Shape {
        long long q;
        int dim;
    };
    for (Shape shape : {Shape{2, 3}, Shape{3, 2}, Shape{4, 2}, Shape{5, 1}}) {
        NilpotentAlgebra J = zero_algebra(shape.q, shape.dim);
        REQUIRE(J.nil_class == 2);
        AlgebraGroup A = sct::algebra_group(J);
        REQUIRE(A.group->abelian());
        for (int g = 1; g < A.group->order(); g++)
            REQUIRE(A.group->element_order(g) == A.algebra.field.p());

        SupercharacterTheory S = sct::double_orbit_sct(A);
        REQUIRE(sct::theories_equal(S, sct::minimal_theory(sct::character_table(A.group))));
        Report rep = sct::compare_series(A, S);
        REQUIRE(rep.all_passed());
    }

    // 2x2 matrices leave a single strictly upper entry, the same shape
    NilpotentAlgebra line = sct::ut_algebra(2, 5);
    REQUIRE(line.dim == 1);
    REQUIRE(line.nil_class == 2);
    AlgebraGroup A = sct::algebra_group(line);
    SupercharacterTheory S = sct::double_orbit_sct(A);
    REQUIRE(S.num_blocks() == 5);
    REQUIRE(sct::theories_equal(S, sct::minimal_theory(sct::character_table(A.group))));
}

TEST_CASE("deflation by an ideal subgroup matches the quotient algebra") {
    struct Case {
        NilpotentAlgebra J;
        std::vector<FqVec> spanning;
    };
    std::vector<Case> cases;
    NilpotentAlgebra ut32 = sct::ut_algebra(3, 2);
    cases.push_back({ut32, {}});
    cases.push_back({ut32, {{0, 1, 0}}});            // J^2
    cases.push_back({ut32, {{1, 0, 0}, {0, 1, 0}}});  // <E12, E13>
    cases.push_back({ut32, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
    NilpotentAlgebra ut33 = sct::ut_algebra(3, 3);
    cases.push_back({ut33, {{0, 1, 0}}});

    for (const Case& c : cases) {
        const NilpotentAlgebra& J = c.J;
        Ideal I = sct::make_ideal(J, c.spanning);
        AlgebraGroup A = sct::algebra_group(J);
        SupercharacterTheory S = sct::double_orbit_sct(A);

        QuotientSetup Q = quotient_algebra(J, I);
        AlgebraGroup AQ = sct::algebra_group(Q.algebra);
        SupercharacterTheory SQ = sct::double_orbit_sct(AQ);

        // phi realizes g -> 1 + (g-1) + I in quotient coordinates
        std::vector<int> phi(static_cast<size_t>(A.group->order()));
        for (int g = 0; g < A.group->order(); g++) {
            FqVec residue = sct::detail::reduce_against(J.field, I.basis, A.decode(g));
            FqVec projected(Q.coords.size());
            for (size_t t = 0; t < Q.coords.size(); t++)
                projected[t] = residue[static_cast<size_t>(Q.coords[t])];
            phi[static_cast<size_t>(g)] = static_cast<int>(AQ.encode(projected));
        }
        for (int g = 0; g < A.group->order(); g++)
            for (int h = 0; h < A.group->order(); h++)
                REQUIRE(phi[static_cast<size_t>(A.group->mult(g, h))] ==
                        AQ.group->mult(phi[static_cast<size_t>(g)], phi[static_cast<size_t>(h)]));

        sct::DeflatedTheory defl = sct::deflate_theory(S, one_plus(A, I));
        // phi and the coset map share fibers, so quotient elements correspond
        std::vector<int> rep_of(static_cast<size_t>(defl.qm.quotient->order()), -1);
        for (int g = 0; g < A.group->order(); g++) {
            int u = defl.qm.image_of[static_cast<size_t>(g)];
            if (rep_of[static_cast<size_t>(u)] < 0)
                rep_of[static_cast<size_t>(u)] = phi[static_cast<size_t>(g)];
            REQUIRE(rep_of[static_cast<size_t>(u)] == phi[static_cast<size_t>(g)]);
        }
        std::vector<std::vector<int>> transported;
        for (const auto& block : defl.theory.classes.blocks) {
            std::vector<int> image;
            for (int u : block) image.push_back(rep_of[static_cast<size_t>(u)]);
            transported.push_back(std::move(image));
        }
        REQUIRE(block_set(transported) == block_set(SQ.classes.blocks));
        REQUIRE(degrees(defl.theory) == degrees(SQ));
    }
}

TEST_CASE("theory-normal subgroups are one plus a multiplicative subspace") {
    for (auto [n, q] : {std::pair<int, long long>{3, 2}, {3, 3}}) {
        NilpotentAlgebra J = sct::ut_algebra(n, q);
        AlgebraGroup A = sct::algebra_group(J);
        SupercharacterTheory S = sct::double_orbit_sct(A);

        std::vector<Subgroup> normals = sct::s_normal_subgroups(S);
        if (q == 2) REQUIRE(normals.size() == 6);
        for (const Subgroup& H : normals) {
            std::set<long long> M;
            for (int g : H.members) M.insert(static_cast<long long>(g));
            REQUIRE(M.count(0) == 1);
            for (long long u : M)
                for (long long v : M) {
                    FqVec x = A.decode(u);
                    FqVec y = A.decode(v);
                    CHECK(M.count(A.encode(J.add(x, y))) == 1);
                    CHECK(M.count(A.encode(J.mul(x, y))) == 1);
                }
        }
    }
}

TEST_CASE("a summand outside every power still annihilates") {
    // ut(3, 2) plus a zero line: the annihilator grows past the square
    NilpotentAlgebra J = sct::build_algebra(sct::field_from_order(2), 4,
                                            {{0, 2, {0, 1, 0, 0}}});
    REQUIRE(J.nil_class == 3);
    std::vector<Ideal> powers = sct::power_ideals(J);
    std::vector<Ideal> anns = sct::annihilator_series(J);
    REQUIRE(powers[1].dim() == 1);
    REQUIRE(anns[1].dim() == 2);  // E13 and the extra line

    AlgebraGroup A = sct::algebra_group(J);
    SupercharacterTheory S = sct::double_orbit_sct(A);
    Report rep = sct::compare_series(A, S);
    CAPTURE(rep.text());
    REQUIRE(rep.all_passed());
    sct::CentralSeries upper = sct::upper_central_series(S);
    REQUIRE(upper.terms[1].order() == 4);
}

TEST_CASE("construction rejections") {
    FiniteField F2 = sct::field_from_order(2);

    CHECK(throws_code(
        [&] { sct::build_algebra(F2, 2, {{0, 0, {0, 1}}, {0, 1, {1, 0}}}); },
        "NotAssociative"));
    CHECK(throws_code([&] { sct::build_algebra(F2, 1, {{0, 0, {1}}}); }, "NotNilpotent"));
    CHECK(throws_code([&] { sct::build_algebra(F2, 2, {{0, 2, {0, 0}}}); }, "InputError"));
    CHECK(throws_code([&] { sct::build_algebra(F2, 2, {{0, 0, {0, 1, 0}}}); }, "InputError"));
    CHECK(throws_code([&] { sct::build_algebra(F2, 2, {{0, 0, {0, 5}}}); }, "InputError"));
    CHECK(throws_code([] { sct::ut_algebra(1, 2); }, "InputError"));
    CHECK(throws_code([] { sct::ut_algebra(3, 12); }, "UnsupportedField"));
    CHECK(throws_code([] { sct::ut_algebra(3, 25); }, "UnsupportedField"));

    NilpotentAlgebra ut32 = sct::ut_algebra(3, 2);
    CHECK(throws_code([&] { sct::make_ideal(ut32, {{1, 0, 0}}); }, "NotAnIdeal"));

    CHECK(throws_code([] { sct::algebra_group(zero_algebra(2, 14)); }, "OrderCapExceeded"));
    CHECK(throws_code(
        [] { sct::double_orbit_sct(sct::algebra_group(zero_algebra(2, 11))); },
        "OrderCapExceeded"));
}
