#include <catch2/catch_amalgamated.hpp>

#include <sct/suites.hpp>

namespace {

const std::vector<sct::CorpusTheories>& small_corpus() {
    static const std::vector<sct::CorpusTheories> corpus = sct::enumerate_corpus({
        {"C4", sct::cyclic_group(4)},
        {"S3", sct::symmetric_group(3)},
        {"C2xC2", sct::abelian_group({2, 2})},
    });
    return corpus;
}

}  // namespace

TEST_CASE("corpus enumeration carries group, table, and theories") {
    const auto& corpus = small_corpus();
    REQUIRE(corpus.size() == 3);
    CHECK(corpus[0].theories.size() == 3);
    CHECK(corpus[1].theories.size() == 2);
    CHECK(corpus[2].theories.size() == 5);
    for (const auto& entry : corpus) {
        CHECK(entry.table->group() == entry.group);
        for (const auto& S : entry.theories) CHECK(sct::same_group(S.group(), entry.group));
    }
}

TEST_CASE("every criterion suite passes on the small corpus") {
    const auto& corpus = small_corpus();

    sct::Report axioms = sct::axiom_suite(corpus);
    CAPTURE(axioms.text());
    CHECK(axioms.all_passed());
    CHECK(axioms.checks() == 3);

    sct::Report restriction = sct::restriction_suite(corpus);
    CAPTURE(restriction.text());
    CHECK(restriction.all_passed());

    sct::Report orthogonality = sct::orthogonality_suite(corpus);
    CAPTURE(orthogonality.text());
    CHECK(orthogonality.all_passed());

    sct::Report lattice = sct::lattice_suite(corpus);
    CAPTURE(lattice.text());
    CHECK(lattice.all_passed());

    sct::Report pgroup = sct::p_group_suite(corpus);
    CAPTURE(pgroup.text());
    CHECK(pgroup.all_passed());
    CHECK(pgroup.checks() == 2);  // S3 is not of prime power order

    sct::Report chief = sct::jordan_holder_suite(corpus);
    CAPTURE(chief.text());
    CHECK(chief.all_passed());

    sct::Report induction = sct::induction_suite(corpus);
    CAPTURE(induction.text());
    CHECK(induction.all_passed());
}

TEST_CASE("the worked example report passes") {
    sct::Report rep = sct::worked_example_checks();
    CAPTURE(rep.text());
    CHECK(rep.all_passed());
    CHECK(rep.checks() == 7);
}

TEST_CASE("frozen landmark counts hold") {
    sct::Report counts = sct::theory_count_checks();
    CAPTURE(counts.text());
    CHECK(counts.all_passed());

    sct::Report desk = sct::algebra_desk_checks();
    CAPTURE(desk.text());
    CHECK(desk.all_passed());
}

TEST_CASE("the algebra suite covers validation, q-powers, series, and ideals") {
    sct::Report rep = sct::algebra_case_suite({{"ut(3,2)", sct::ut_algebra(3, 2)}});
    CAPTURE(rep.text());
    CHECK(rep.all_passed());
    std::vector<std::string> ids;
    for (const auto& e : rep.entries) ids.push_back(e.id);
    CHECK(ids == std::vector<std::string>{"ut(3,2).validates", "ut(3,2).qpowers",
                                          "ut(3,2).series", "ut(3,2).ideals"});
}

TEST_CASE("run_suite dispatches by name and rejects unknown names") {
    sct::Report axioms = sct::run_suite("axioms", small_corpus(), {});
    CHECK(axioms.title == "axioms");
    CHECK(axioms.checks() == 3);
    CHECK(axioms.all_passed());

    sct::Report algebra = sct::run_suite("algebra", small_corpus(), {});
    CHECK(algebra.checks() == 0);
    CHECK(algebra.all_passed());

    CHECK_THROWS_AS(sct::run_suite("nosuch", small_corpus(), {}), sct::Error);
}

TEST_CASE("the builtin axioms suite includes the frozen counts") {
    sct::Report rep = sct::run_suite("axioms");
    CAPTURE(rep.text());
    CHECK(rep.all_passed());
    bool has_c3 = false;
    for (const auto& e : rep.entries) has_c3 = has_c3 || e.id == "count.cyclic:3";
    CHECK(has_c3);
}
