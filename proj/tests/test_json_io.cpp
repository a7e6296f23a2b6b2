#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <string>
#include <vector>

#include "sct/json_io.hpp"

using sct::Cyclotomic;
using sct::GroupPtr;
using sct::Json;
using sct::Rational;
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

}  // namespace

TEST_CASE("group serialization round trip") {
    GroupPtr G = *sct::parse_builtin_group("dihedral:4");
    Json j = sct::group_to_json(G);
    REQUIRE(j["type"] == "cayley");
    GroupPtr back = sct::group_from_json(j);
    REQUIRE(sct::same_group(G, back));
    REQUIRE(j.dump() == sct::group_to_json(back).dump());
}

TEST_CASE("permutation group input") {
    Json j = sct::parse_json_text(
        R"({"type":"perm","degree":3,"generators":[[1,2,0],[1,0,2]]})");
    GroupPtr G = sct::group_from_json(j);
    REQUIRE(G->order() == 6);
    REQUIRE_FALSE(G->abelian());

    GroupPtr builtin = sct::group_from_spec(Json("symmetric:3"));
    REQUIRE(builtin->order() == G->order());
    REQUIRE(builtin->num_classes() == G->num_classes());
    REQUIRE(builtin->exponent() == G->exponent());
}

TEST_CASE("cyclotomic values survive the round trip") {
    std::vector<Cyclotomic> samples{
        Cyclotomic(0), Cyclotomic(Rational(-7, 3)), Cyclotomic::root_of_unity(5, 2),
        Cyclotomic::root_of_unity(8, 1) + Cyclotomic(Rational(1, 2)),
        Cyclotomic::root_of_unity(12, 7) * Cyclotomic(Rational(3, 4))};
    for (const Cyclotomic& z : samples) {
        Json j = sct::cyclotomic_to_json(z);
        REQUIRE(sct::cyclotomic_from_json(j) == z);
        REQUIRE(sct::cyclotomic_to_json(sct::cyclotomic_from_json(j)).dump() == j.dump());
    }
}

TEST_CASE("theory serialization carries the supercharacter table") {
    GroupPtr G = sct::cyclic_group(6);
    SupercharacterTheory S = sct::require_sct(
        sct::character_table(G),
        sct::Partition::from_blocks(6, {{0}, {3}, {2, 4}, {1, 5}}));
    Json j = sct::theory_to_json(S);
    REQUIRE(j["classes"].size() == 4);
    REQUIRE(j["char_blocks"].size() == 4);
    REQUIRE(j["supercharacter_values"].size() == 4);
    REQUIRE(j["supercharacter_values"][0].size() == 4);

    // the class partition read back reproduces the same theory
    std::vector<std::vector<int>> blocks;
    for (const Json& b : j["classes"]) blocks.push_back(b.get<std::vector<int>>());
    SupercharacterTheory back = sct::require_sct(
        S.table, sct::Partition::from_blocks(6, std::move(blocks)));
    REQUIRE(sct::theories_equal(S, back));
    REQUIRE(sct::theory_to_json(back).dump() == j.dump());

    Json t = sct::table_to_json(*S.table);
    REQUIRE(t["conductor"] == 6);
    REQUIRE(t["irreducibles"].size() == 6);
    REQUIRE(t["class_sizes"].size() == 6);
}

TEST_CASE("algebra serialization round trip") {
    sct::NilpotentAlgebra J = sct::ut_algebra(3, 4);
    Json j = sct::algebra_to_json(J);
    REQUIRE(j["p"] == 2);
    REQUIRE(j["k"] == 2);
    REQUIRE(j["dim"] == 3);
    REQUIRE(j["sc"].size() == 1);  // only E12 E23 = E13 is nonzero

    sct::NilpotentAlgebra back = sct::algebra_from_json(j);
    REQUIRE(back.dim == J.dim);
    REQUIRE(back.nil_class == J.nil_class);
    REQUIRE(back.products == J.products);
    REQUIRE(sct::algebra_to_json(back).dump() == j.dump());

    Json zero = sct::parse_json_text(R"({"p":3,"k":1,"modulus":[0,1],"dim":2,"sc":[]})");
    REQUIRE(sct::algebra_from_json(zero).nil_class == 2);
}

TEST_CASE("report serialization is byte stable") {
    sct::Report empty;
    REQUIRE(sct::report_to_json(empty).dump() == R"({"entries":[],"failures":0})");

    sct::Report rep;
    rep.add("a.1", "first check", true, "3 | 6");
    rep.add("a.2", "second check", false);
    rep.note("a.3", "context");
    Json j = sct::report_to_json(rep);
    REQUIRE(j["failures"] == 1);
    REQUIRE(j["entries"][0]["status"] == "pass");
    REQUIRE(j["entries"][1]["status"] == "fail");
    REQUIRE(j["entries"][2]["status"] == "info");
    REQUIRE(j.dump() == sct::report_to_json(rep).dump());
}

TEST_CASE("input rejections") {
    CHECK(throws_code([] { sct::parse_json_text("{nope"); }, "InputError"));
    CHECK(throws_code([] { sct::group_from_json(sct::parse_json_text(R"({"table":[[0]]})")); },
                      "InputError"));
    CHECK(throws_code(
        [] { sct::group_from_json(sct::parse_json_text(R"({"type":"magic","table":[[0]]})")); },
        "InputError"));
    CHECK(throws_code(
        [] { sct::group_from_json(sct::parse_json_text(R"({"type":"cayley","table":[[0,1],[1,1]]})")); },
        "NoInverse"));
    CHECK(throws_code([] { sct::group_from_spec(Json("cyclic:")); }, "InputError"));
    CHECK(throws_code([] { sct::rational_from_json(sct::parse_json_text("[1,0]")); },
                      "InputError"));
    CHECK(throws_code(
        [] { sct::cyclotomic_from_json(sct::parse_json_text(R"({"conductor":0,"coeffs":[]})")); },
        "InputError"));
    CHECK(throws_code(
        [] { sct::algebra_from_json(sct::parse_json_text(R"({"p":2,"k":1,"dim":1})")); },
        "InputError"));
}
