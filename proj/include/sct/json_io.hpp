#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sct/algebra.hpp"
#include "sct/builtin_groups.hpp"
#include "sct/char_table.hpp"
#include "sct/error.hpp"
#include "sct/group.hpp"
#include "sct/report.hpp"
#include "sct/sct.hpp"

namespace sct {

/// Key order is insertion order, so serialized output is byte-deterministic.
using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    require(!j.is_discarded(), "InputError", "malformed JSON input");
    return j;
}

namespace detail {

inline const Json& expect_member(const Json& j, const char* key) {
    require(j.is_object() && j.contains(key), "InputError",
            std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline long long int_value(const Json& j, const char* what) {
    require(j.is_number_integer(), "InputError", std::string(what) + " must be an integer");
    return j.get<long long>();
}

inline std::vector<int> int_list(const Json& j, const char* what) {
    require(j.is_array(), "InputError", std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const Json& v : j) out.push_back(static_cast<int>(int_value(v, what)));
    return out;
}

inline std::vector<std::vector<int>> int_matrix(const Json& j, const char* what) {
    require(j.is_array(), "InputError", std::string(what) + " must be an array of arrays");
    std::vector<std::vector<int>> out;
    out.reserve(j.size());
    for (const Json& row : j) out.push_back(int_list(row, what));
    return out;
}

}  // namespace detail

inline Json rational_to_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

inline Rational rational_from_json(const Json& j) {
    require(j.is_array() && j.size() == 2, "InputError",
            "a rational is a [numerator, denominator] pair");
    long long num = detail::int_value(j[0], "numerator");
    long long den = detail::int_value(j[1], "denominator");
    require(den != 0, "InputError", "rational with zero denominator");
    return Rational(num, den);
}

inline Json cyclotomic_to_json(const Cyclotomic& z) {
    Json coeffs = Json::array();
    for (const Rational& c : z.coeffs()) coeffs.push_back(rational_to_json(c));
    Json out;
    out["conductor"] = z.conductor();
    out["coeffs"] = std::move(coeffs);
    return out;
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
    long long e = detail::int_value(detail::expect_member(j, "conductor"), "conductor");
    require(e >= 1, "InputError", "conductor must be positive");
    const Json& coeffs = detail::expect_member(j, "coeffs");
    require(coeffs.is_array() && coeffs.size() <= static_cast<size_t>(e), "InputError",
            "coefficient list longer than the conductor");
    std::vector<Rational> by_power;
    by_power.reserve(coeffs.size());
    for (const Json& c : coeffs) by_power.push_back(rational_from_json(c));
    return Cyclotomic::from_root_combination(e, std::move(by_power));
}

inline Json group_to_json(const GroupPtr& G) {
    require(G != nullptr, "PreconditionFailed", "group_to_json needs a group");
    Json table = Json::array();
    for (int a = 0; a < G->order(); a++) {
        Json row = Json::array();
        for (int b = 0; b < G->order(); b++) row.push_back(G->mult(a, b));
        table.push_back(std::move(row));
    }
    Json out;
    out["type"] = "cayley";
    out["table"] = std::move(table);
    return out;
}

inline GroupPtr group_from_json(const Json& j, int cap = kDefaultOrderCap) {
    const Json& type = detail::expect_member(j, "type");
    require(type.is_string(), "InputError", "group type must be a string");
    std::string kind = type.get<std::string>();
    if (kind == "cayley")
        return build_group_from_cayley(
            detail::int_matrix(detail::expect_member(j, "table"), "multiplication table"), {}, cap);
    if (kind == "perm")
        return build_group_from_permutations(
            static_cast<int>(detail::int_value(detail::expect_member(j, "degree"), "degree")),
            detail::int_matrix(detail::expect_member(j, "generators"), "generators"), cap);
    fail("InputError", "unknown group type \"" + kind + "\"");
}

/// A group given either as a builtin name ("cyclic:6") or as a group object.
inline GroupPtr group_from_spec(const Json& j, int cap = kDefaultOrderCap) {
    if (j.is_string()) {
        std::optional<GroupPtr> G = parse_builtin_group(j.get<std::string>());
        require(G.has_value(), "InputError",
                "unknown builtin group \"" + j.get<std::string>() + "\"");
        return *G;
    }
    return group_from_json(j, cap);
}

inline Json blocks_to_json(const std::vector<std::vector<int>>& blocks) {
    Json out = Json::array();
    for (const auto& block : blocks) {
        Json b = Json::array();
        for (int x : block) b.push_back(x);
        out.push_back(std::move(b));
    }
    return out;
}

inline Json theory_to_json(const SupercharacterTheory& S) {
    Json values = Json::array();
    for (const auto& row : S.block_values) {
        Json r = Json::array();
        for (const Cyclotomic& z : row) r.push_back(cyclotomic_to_json(z));
        values.push_back(std::move(r));
    }
    Json out;
    out["classes"] = blocks_to_json(S.classes.blocks);
    out["char_blocks"] = blocks_to_json(S.char_blocks.blocks);
    out["supercharacter_values"] = std::move(values);
    return out;
}

inline Json table_to_json(const CharacterTable& table) {
    long long conductor = 1;
    for (const ClassFunction& chi : table.irreducibles())
        for (const Cyclotomic& z : chi.values()) conductor = std::lcm(conductor, z.conductor());
    Json irreducibles = Json::array();
    for (const ClassFunction& chi : table.irreducibles()) {
        Json row = Json::array();
        for (const Cyclotomic& z : chi.values()) row.push_back(cyclotomic_to_json(z));
        irreducibles.push_back(std::move(row));
    }
    const GroupPtr& G = table.group();
    Json out;
    out["conductor"] = conductor;
    out["irreducibles"] = std::move(irreducibles);
    out["class_sizes"] = G->class_sizes();
    out["class_reps"] = G->class_reps();
    return out;
}

inline Json algebra_to_json(const NilpotentAlgebra& J) {
    Json sc = Json::array();
    for (int i = 0; i < J.dim; i++)
        for (int j = 0; j < J.dim; j++) {
            const FqVec& prod = J.products[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (J.is_zero(prod)) continue;
            sc.push_back(Json::array({i, j, prod}));
        }
    Json out;
    out["p"] = J.field.p();
    out["k"] = J.field.k();
    out["modulus"] = J.field.modulus();
    out["dim"] = J.dim;
    out["sc"] = std::move(sc);
    return out;
}

inline NilpotentAlgebra algebra_from_json(const Json& j) {
    int p = static_cast<int>(detail::int_value(detail::expect_member(j, "p"), "p"));
    int k = static_cast<int>(detail::int_value(detail::expect_member(j, "k"), "k"));
    std::vector<int> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null())
        modulus = detail::int_list(j.at("modulus"), "modulus");
    FiniteField F = make_field(p, k, std::move(modulus));

    int dim = static_cast<int>(detail::int_value(detail::expect_member(j, "dim"), "dim"));
    std::vector<std::tuple<int, int, FqVec>> entries;
    const Json& sc = detail::expect_member(j, "sc");
    require(sc.is_array(), "InputError", "sc must be an array of [i, j, coeffs] triples");
    for (const Json& entry : sc) {
        require(entry.is_array() && entry.size() == 3, "InputError",
                "each sc entry is an [i, j, coeffs] triple");
        FqVec value;
        for (int c : detail::int_list(entry[2], "structure constants"))
            value.push_back(static_cast<long long>(c));
        entries.emplace_back(static_cast<int>(detail::int_value(entry[0], "sc row")),
                             static_cast<int>(detail::int_value(entry[1], "sc column")),
                             std::move(value));
    }
    return build_algebra(std::move(F), dim, entries);
}

inline Json subgroup_to_json(const Subgroup& H) {
    Json out = Json::array();
    for (int g : H.members) out.push_back(g);
    return out;
}

inline Json report_to_json(const Report& rep) {
    Json entries = Json::array();
    int failures = 0;
    for (const ReportEntry& e : rep.entries) {
        Json entry;
        entry["id"] = e.id;
        entry["anchor"] = e.anchor;
        entry["status"] = e.status == CheckStatus::pass   ? "pass"
                          : e.status == CheckStatus::fail ? "fail"
                                                          : "info";
        entry["witness"] = e.witness;
        entries.push_back(std::move(entry));
        if (e.status == CheckStatus::fail) failures++;
    }
    Json out;
    out["entries"] = std::move(entries);
    out["failures"] = failures;
    return out;
}

}  // namespace sct
