#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "sct/json_io.hpp"
#include "sct/suites.hpp"

namespace sct {

namespace cli_detail {

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("InputError", "cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

/// Resolve a group token: a builtin name like "cyclic:6" or a JSON file path.
inline GroupPtr group_from_token(const std::string& token, int cap) {
    if (auto builtin = parse_builtin_group(token)) return *builtin;
    return group_from_spec(load_json_file(token), cap);
}

/// Resolve an algebra token: "ut:n:q" or a JSON file path.
inline NilpotentAlgebra algebra_from_token(const std::string& token) {
    if (token.rfind("ut:", 0) == 0) {
        std::istringstream in(token.substr(3));
        int n = 0, q = 0;
        char sep = 0;
        if (!(in >> n >> sep >> q) || sep != ':' || !in.eof())
            fail("InputError", "malformed builtin algebra name: " + token);
        return ut_algebra(n, q);
    }
    return algebra_from_json(load_json_file(token));
}

inline Partition partition_from_json(const Json& j, int n, const char* what) {
    return Partition::from_blocks(n, detail::int_matrix(j, what));
}

struct TheoryInput {
    GroupPtr group;
    TablePtr table;
    SupercharacterTheory theory;
};

/// Load {"group": <spec>, "classes": [[...], ...]} and certify the theory.
inline TheoryInput theory_from_envelope(const Json& j, int cap) {
    TheoryInput in;
    in.group = group_from_spec(detail::expect_member(j, "group"), cap);
    in.table = character_table(in.group);
    Partition classes =
        partition_from_json(detail::expect_member(j, "classes"), in.group->order(), "classes");
    in.theory = require_sct(in.table, classes);
    return in;
}

inline std::string json_scalar_text(const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

inline void collect_table_rows(const Json& j, const std::string& prefix,
                               std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            collect_table_rows(value, prefix.empty() ? key : prefix + "." + key, rows);
        return;
    }
    if (j.is_array()) {
        bool flat = std::all_of(j.begin(), j.end(),
                                [](const Json& v) { return !v.is_structured(); });
        if (flat) {
            std::string line;
            for (const Json& v : j) {
                if (!line.empty()) line += " ";
                line += json_scalar_text(v);
            }
            rows.emplace_back(prefix, line);
            return;
        }
        for (size_t i = 0; i < j.size(); ++i)
            collect_table_rows(j[i], prefix + "[" + std::to_string(i) + "]", rows);
        return;
    }
    rows.emplace_back(prefix, json_scalar_text(j));
}

inline void emit_json(const Json& j, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << j.dump() << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    collect_table_rows(j, "", rows);
    size_t width = 0;
    for (const auto& [key, value] : rows) width = std::max(width, key.size());
    for (const auto& [key, value] : rows)
        out << key << std::string(width - key.size() + 2, ' ') << value << "\n";
}

inline std::string format_blocks(const std::vector<std::vector<int>>& blocks) {
    std::string text;
    for (const auto& blk : blocks) {
        if (!text.empty()) text += " ";
        text += "{";
        for (size_t i = 0; i < blk.size(); ++i)
            text += (i ? "," : "") + std::to_string(blk[i]);
        text += "}";
    }
    return text;
}

inline void emit_theory(const SupercharacterTheory& S, const std::string& format,
                        std::ostream& out) {
    if (format == "json") {
        out << theory_to_json(S).dump() << "\n";
        return;
    }
    out << "classes      " << format_blocks(S.classes.blocks) << "\n";
    out << "char_blocks  " << format_blocks(S.char_blocks.blocks) << "\n";
    const int b = S.num_blocks();
    std::vector<std::vector<std::string>> cells(static_cast<size_t>(b));
    std::vector<size_t> widths(static_cast<size_t>(b), 0);
    for (int x = 0; x < b; ++x) {
        cells[static_cast<size_t>(x)].reserve(static_cast<size_t>(b));
        for (int k = 0; k < b; ++k) {
            std::string cell = S.block_values[static_cast<size_t>(x)][static_cast<size_t>(k)].str();
            widths[static_cast<size_t>(k)] = std::max(widths[static_cast<size_t>(k)], cell.size());
            cells[static_cast<size_t>(x)].push_back(std::move(cell));
        }
    }
    for (int x = 0; x < b; ++x) {
        out << "sigma " << x << "  ";
        for (int k = 0; k < b; ++k) {
            const std::string& cell = cells[static_cast<size_t>(x)][static_cast<size_t>(k)];
            out << cell << std::string(widths[static_cast<size_t>(k)] - cell.size() + 2, ' ');
        }
        out << "\n";
    }
}

inline void emit_report(const Report& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << report_to_json(r).dump() << "\n";
        return;
    }
    std::vector<ReportEntry> entries = r.entries;
    std::sort(entries.begin(), entries.end(),
              [](const ReportEntry& a, const ReportEntry& b) { return a.id < b.id; });
    auto status_text = [](CheckStatus s) {
        return s == CheckStatus::pass ? "pass" : s == CheckStatus::fail ? "fail" : "info";
    };
    size_t id_width = 0, anchor_width = 0;
    for (const auto& e : entries) {
        id_width = std::max(id_width, e.id.size());
        anchor_width = std::max(anchor_width, e.anchor.size());
    }
    for (const auto& e : entries) {
        out << status_text(e.status) << "  " << e.id << std::string(id_width - e.id.size() + 2, ' ')
            << e.anchor << std::string(anchor_width - e.anchor.size() + 2, ' ') << e.witness
            << "\n";
    }
    out << r.checks() << " checks, " << r.failures() << " failures\n";
}

inline Json subgroup_members_json(const Subgroup& H) {
    Json j = Json::object();
    j["order"] = H.order();
    j["members"] = H.members;
    return j;
}

/// Expand suite corpus tokens: directories become their *.json files, sorted.
inline std::vector<std::string> expand_corpus_tokens(const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    for (const std::string& token : tokens) {
        std::error_code ec;
        if (std::filesystem::is_directory(token, ec)) {
            std::vector<std::string> found;
            for (const auto& entry : std::filesystem::directory_iterator(token)) {
                if (entry.path().extension() == ".json") found.push_back(entry.path().string());
            }
            std::sort(found.begin(), found.end());
            out.insert(out.end(), found.begin(), found.end());
        } else {
            out.push_back(token);
        }
    }
    return out;
}

}  // namespace cli_detail

/// Run the toolkit CLI on the given arguments (without the program name).
/// Returns the process exit code: 0 success, 1 check failures, 2 usage or
/// input errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using cli_detail::emit_json;
    using cli_detail::emit_report;
    using cli_detail::emit_theory;

    int code = 0;
    std::string format = "json";
    std::string input;
    std::string kind = "chief";
    std::string suite_name;
    std::string family;
    std::vector<std::string> corpus_tokens;
    unsigned long long seed = 0;
    int cap = 0;
    int prime = 0;
    int ut_n = 0, ut_q = 0;

    CLI::App app{"exact computations with supercharacter theories of finite groups"};
    app.name("sctk");
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
    };
    auto order_cap = [&] { return cap > 0 ? cap : kDefaultOrderCap; };
    auto enum_cap = [&] { return cap > 0 ? cap : kDefaultEnumerationCap; };

    auto* group_cmd = app.add_subcommand("group", "structural queries on finite groups");
    group_cmd->require_subcommand(1);
    {
        auto* info = group_cmd->add_subcommand("info", "order, classes, and center");
        info->add_option("input", input, "group file or builtin name")->required();
        info->add_option("--cap", cap, "largest allowed group order");
        add_format(info);
        info->callback([&] {
            GroupPtr G = cli_detail::group_from_token(input, order_cap());
            std::vector<int> center;
            for (int g = 0; g < G->order(); ++g) {
                bool central = true;
                for (int h = 0; central && h < G->order(); ++h)
                    central = G->mult(g, h) == G->mult(h, g);
                if (central) center.push_back(g);
            }
            Json j = Json::object();
            j["order"] = G->order();
            j["abelian"] = G->abelian();
            j["exponent"] = G->exponent();
            j["num_classes"] = G->num_classes();
            j["class_sizes"] = G->class_sizes();
            j["class_reps"] = G->class_reps();
            j["center"] = center;
            emit_json(j, format, out);
        });
    }

    auto* sct_cmd = app.add_subcommand("sct", "supercharacter theory computations");
    sct_cmd->require_subcommand(1);

    auto theory_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "theory envelope file")->required();
        cmd->add_option("--cap", cap, "largest allowed group order");
        add_format(cmd);
    };
    auto load_theory = [&] {
        return cli_detail::theory_from_envelope(cli_detail::load_json_file(input), order_cap());
    };

    {
        auto* enumerate = sct_cmd->add_subcommand("enumerate", "all theories of a group");
        enumerate->add_option("input", input, "group file or builtin name")->required();
        enumerate->add_option("--cap", cap, "largest allowed number of non-identity classes");
        add_format(enumerate);
        enumerate->callback([&] {
            GroupPtr G = cli_detail::group_from_token(input, kDefaultOrderCap);
            std::vector<SupercharacterTheory> theories =
                enumerate_scts(character_table(G), enum_cap());
            Json j = Json::object();
            j["count"] = theories.size();
            j["theories"] = Json::array();
            for (const auto& S : theories) j["theories"].push_back(theory_to_json(S));
            if (format == "json") {
                out << j.dump() << "\n";
            } else {
                out << "count  " << theories.size() << "\n";
                for (size_t t = 0; t < theories.size(); ++t)
                    out << "theory " << t << "  "
                        << cli_detail::format_blocks(theories[t].classes.blocks) << "\n";
            }
        });

        auto* validate = sct_cmd->add_subcommand("validate", "check a class partition");
        theory_input(validate);
        validate->callback([&] {
            Json j = cli_detail::load_json_file(input);
            GroupPtr G = group_from_spec(detail::expect_member(j, "group"), order_cap());
            Partition classes = cli_detail::partition_from_json(
                detail::expect_member(j, "classes"), G->order(), "classes");
            ValidationOutcome outcome = validate_sct(character_table(G), classes);
            Json result = Json::object();
            result["valid"] = outcome.valid;
            if (outcome.valid)
                result["theory"] = theory_to_json(*outcome.theory);
            else
                result["reason"] = outcome.reason;
            emit_json(result, format, out);
            if (!outcome.valid) code = 1;
        });

        auto* join = sct_cmd->add_subcommand("join", "finest common coarsening");
        auto* meet = sct_cmd->add_subcommand("meet", "coarsest common refinement");
        for (CLI::App* cmd : {join, meet}) {
            cmd->add_option("input", input, "envelope with group, first, second")->required();
            cmd->add_option("--cap", cap, "enumeration cap for the meet search");
            add_format(cmd);
        }
        auto lattice_op = [&](bool is_join) {
            Json j = cli_detail::load_json_file(input);
            GroupPtr G = group_from_spec(detail::expect_member(j, "group"), kDefaultOrderCap);
            TablePtr table = character_table(G);
            SupercharacterTheory S = require_sct(
                table, cli_detail::partition_from_json(detail::expect_member(j, "first"),
                                                       G->order(), "first"));
            SupercharacterTheory T = require_sct(
                table, cli_detail::partition_from_json(detail::expect_member(j, "second"),
                                                       G->order(), "second"));
            emit_theory(is_join ? join_theories(S, T) : meet_theories(S, T, enum_cap()), format,
                        out);
        };
        join->callback([&, lattice_op] { lattice_op(true); });
        meet->callback([&, lattice_op] { lattice_op(false); });

        auto* center = sct_cmd->add_subcommand("center", "largest S-central subgroup");
        theory_input(center);
        center->callback([&] {
            emit_json(cli_detail::subgroup_members_json(sct_center(load_theory().theory)), format,
                      out);
        });

        auto* commutator = sct_cmd->add_subcommand("commutator", "S-commutator subgroup");
        theory_input(commutator);
        commutator->callback([&] {
            Json j = cli_detail::load_json_file(input);
            cli_detail::TheoryInput in = cli_detail::theory_from_envelope(j, order_cap());
            Subgroup result = j.contains("subgroup")
                                  ? sct_commutator(in.theory,
                                                   make_subgroup(in.group,
                                                                 detail::int_list(j["subgroup"],
                                                                                  "subgroup")))
                                  : sct_commutator(in.theory);
            emit_json(cli_detail::subgroup_members_json(result), format, out);
        });

        auto* series = sct_cmd->add_subcommand("series", "lower, upper, or chief series");
        theory_input(series);
        series->add_option("--kind", kind, "series kind")
            ->check(CLI::IsMember({"lower", "upper", "chief"}));
        auto* seed_opt = series->add_option("--seed", seed, "seed for chief series choices");
        series->callback([&, seed_opt] {
            SupercharacterTheory S = load_theory().theory;
            Json j = Json::object();
            j["kind"] = kind;
            auto terms_json = [](const std::vector<Subgroup>& terms) {
                Json arr = Json::array();
                for (const auto& t : terms) arr.push_back(t.members);
                return arr;
            };
            if (kind == "chief") {
                ChiefSeries series_out = s_chief_series(
                    S, seed_opt->count() ? std::optional<unsigned long long>(seed) : std::nullopt);
                j["terms"] = terms_json(series_out.terms);
                j["factor_orders"] = series_out.factor_orders;
                j["factor_simple"] = series_out.factor_simple;
                j["factor_central"] = series_out.factor_central;
                j["factor_minimal"] = series_out.factor_minimal;
            } else {
                CentralSeries series_out =
                    kind == "lower" ? lower_central_series(S) : upper_central_series(S);
                j["terminates"] = series_out.terminates;
                j["terms"] = terms_json(series_out.terms);
            }
            emit_json(j, format, out);
        });

        auto* nilpotent = sct_cmd->add_subcommand("nilpotent", "S-nilpotence certificate");
        theory_input(nilpotent);
        nilpotent->callback([&] {
            NilpotenceCertificate cert = s_nilpotence(load_theory().theory);
            Json j = Json::object();
            j["nilpotent"] = cert.nilpotent;
            j["nilpotency_class"] = cert.nilpotency_class;
            j["lower_terminates"] = cert.lower_terminates;
            j["upper_terminates"] = cert.upper_terminates;
            j["chief_factors_prime"] = cert.chief_factors_prime;
            j["chief_factors_minimal"] = cert.chief_factors_minimal;
            j["chief_is_central"] = cert.chief_is_central;
            emit_json(j, format, out);
        });

        auto* pcore = sct_cmd->add_subcommand("pcore", "largest S-normal p-subgroup");
        theory_input(pcore);
        pcore->add_option("--prime,-p", prime, "the prime p")->required();
        pcore->callback([&] {
            Subgroup H = s_normal_p_core(load_theory().theory, prime);
            Json j = cli_detail::subgroup_members_json(H);
            j["prime"] = prime;
            emit_json(j, format, out);
        });

        auto* report = sct_cmd->add_subcommand("report", "divisibility report for a theory");
        theory_input(report);
        report->callback([&] {
            Report rep = divisibility_report(load_theory().theory);
            emit_report(rep, format, out);
            if (rep.failures() > 0) code = 1;
        });
    }

    auto* alg_cmd = app.add_subcommand("alg", "nilpotent algebra computations");
    alg_cmd->require_subcommand(1);
    {
        auto alg_input = [&](CLI::App* cmd) {
            cmd->add_option("input", input, "algebra file or builtin name like ut:3:2")
                ->required();
            add_format(cmd);
        };

        auto* build = alg_cmd->add_subcommand("build", "validate an algebra");
        alg_input(build);
        build->callback([&] {
            NilpotentAlgebra A = cli_detail::algebra_from_token(input);
            long long order = 1;
            for (int i = 0; i < A.dim; ++i) order *= A.field.order();
            Json j = Json::object();
            j["algebra"] = algebra_to_json(A);
            j["nil_class"] = A.nil_class;
            j["group_order"] = order;
            emit_json(j, format, out);
        });

        auto* group = alg_cmd->add_subcommand("group", "Cayley table of 1 + J");
        alg_input(group);
        group->callback([&] {
            AlgebraGroup AG = algebra_group(cli_detail::algebra_from_token(input));
            emit_json(group_to_json(AG.group), format, out);
        });

        auto* sct_sub = alg_cmd->add_subcommand("sct", "double-orbit theory of 1 + J");
        alg_input(sct_sub);
        sct_sub->callback([&] {
            AlgebraGroup AG = algebra_group(cli_detail::algebra_from_token(input));
            emit_theory(double_orbit_sct(AG), format, out);
        });

        auto* series = alg_cmd->add_subcommand("series", "central series vs ideal chains");
        alg_input(series);
        series->callback([&] {
            AlgebraGroup AG = algebra_group(cli_detail::algebra_from_token(input));
            Report rep = compare_series(AG, double_orbit_sct(AG));
            emit_report(rep, format, out);
            if (rep.failures() > 0) code = 1;
        });

        auto* ideals = alg_cmd->add_subcommand("ideals", "ideal subgroups, one per order");
        alg_input(ideals);
        ideals->callback([&] {
            AlgebraGroup AG = algebra_group(cli_detail::algebra_from_token(input));
            SupercharacterTheory S = double_orbit_sct(AG);
            Json arr = Json::array();
            for (const auto& [order, H] : ideal_subgroups_by_order(AG, S)) {
                Json entry = Json::object();
                entry["order"] = order;
                entry["members"] = H.members;
                arr.push_back(std::move(entry));
            }
            Json j = Json::object();
            j["ideals"] = std::move(arr);
            emit_json(j, format, out);
        });

        auto* builtin = alg_cmd->add_subcommand("builtin", "emit a builtin algebra");
        builtin->add_option("family", family, "algebra family (ut)")->required();
        builtin->add_option("--n", ut_n, "matrix size")->required();
        builtin->add_option("--q", ut_q, "field order")->required();
        add_format(builtin);
        builtin->callback([&] {
            require(family == "ut", "InputError", "unknown algebra family: " + family);
            emit_json(algebra_to_json(ut_algebra(ut_n, ut_q)), format, out);
        });
    }

    auto* suite_cmd = app.add_subcommand("suite", "verification suites");
    suite_cmd->require_subcommand(1);
    {
        auto* run = suite_cmd->add_subcommand("run", "run one named suite");
        run->add_option("name", suite_name, "suite name")
            ->required()
            ->check(CLI::IsMember(suite_names()));
        run->add_option("corpus", corpus_tokens,
                        "group or algebra inputs; directories are scanned for *.json");
        run->add_option("--cap", cap, "enumeration cap per group");
        add_format(run);
        run->callback([&] {
            Report rep(suite_name);
            if (corpus_tokens.empty()) {
                rep = run_suite(suite_name);
            } else {
                std::vector<std::string> tokens = cli_detail::expand_corpus_tokens(corpus_tokens);
                std::vector<CorpusTheories> corpus;
                std::vector<AlgebraCase> algebras;
                for (const std::string& token : tokens) {
                    try {
                        if (suite_name == "algebra") {
                            algebras.push_back({token, cli_detail::algebra_from_token(token)});
                        } else {
                            GroupPtr G = cli_detail::group_from_token(token, kDefaultOrderCap);
                            CorpusTheories entry;
                            entry.name = token;
                            entry.group = G;
                            entry.table = character_table(G);
                            entry.theories = enumerate_scts(entry.table, enum_cap());
                            corpus.push_back(std::move(entry));
                        }
                    } catch (const Error& e) {
                        rep.add("input." + token, "plumbing", false, e.what());
                    }
                }
                Report body = run_suite(suite_name, corpus, algebras);
                for (const auto& e : body.entries) rep.entries.push_back(e);
            }
            emit_report(rep, format, out);
            if (rep.failures() > 0) code = 1;
        });
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}

}  // namespace sct
