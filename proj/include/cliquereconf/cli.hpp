#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cliquereconf/families.hpp"
#include "cliquereconf/feasibility.hpp"
#include "cliquereconf/graph6.hpp"
#include "cliquereconf/iso.hpp"
#include "cliquereconf/reconfig.hpp"
#include "cliquereconf/search.hpp"
#include "cliquereconf/suite.hpp"
#include "cliquereconf/witness.hpp"

namespace cliquereconf {

namespace detail {

// Accepts either a raw graph6 string or "family:DESC".
inline Graph parse_graph_argument(const std::string& text) {
    if (text.starts_with("family:")) return generate_family(FamilyDescriptor::parse(text.substr(7)));
    return decode_graph6(text);
}

inline FamilyDescriptor parse_family_argument(const std::string& text) {
    return FamilyDescriptor::parse(text.starts_with("family:") ? text.substr(7) : text);
}

}  // namespace detail

// Exit codes: 0 success / isomorphic; 1 negative result (not isomorphic,
// infeasible, unclassified, all-exhausted); 2 usage or input error;
// 3 internal check failure or theorem conflict.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"clique reconfiguration graphs under token sliding and token jumping"};
    app.require_subcommand(1);

    std::string rule_text = "ts";
    int level = 1;
    std::string host_text, out_format = "json";
    auto* build = app.add_subcommand("build", "build a reconfiguration graph");
    build->add_option("--rule", rule_text, "ts or tj")->required();
    build->add_option("--k", level, "clique size k")->required()->check(CLI::PositiveNumber);
    build->add_option("--host", host_text, "host graph (graph6 or family:DESC)")->required();
    build->add_option("--out", out_format, "graph6 | dot | json")
        ->check(CLI::IsMember({"graph6", "dot", "json"}));

    std::string iso_a, iso_b;
    auto* iso = app.add_subcommand("iso", "test two graphs for isomorphism");
    iso->add_option("first", iso_a, "graph6")->required();
    iso->add_option("second", iso_b, "graph6")->required();

    std::string oracle_rule = "ts", oracle_target;
    auto* oracle = app.add_subcommand("oracle", "closed-form feasibility set of a family");
    oracle->add_option("--rule", oracle_rule, "ts or tj")->required();
    oracle->add_option("family", oracle_target, "family:DESC")->required();

    std::string witness_rule = "ts", witness_target;
    int witness_k = 1;
    auto* witness_cmd = app.add_subcommand("witness", "catalogued host realizing a family");
    witness_cmd->add_option("--rule", witness_rule, "ts or tj")->required();
    witness_cmd->add_option("--k", witness_k, "clique size k")->required()->check(CLI::PositiveNumber);
    witness_cmd->add_option("family", witness_target, "family:DESC")->required();

    std::string suite_name = "all";
    SuiteOptions suite_opt;
    auto* verify = app.add_subcommand("verify", "run structural checks");
    verify->add_option("--suite", suite_name, "all or one check name");
    verify->add_option("--max-n", suite_opt.host_max_n, "host vertex bound")
        ->check(CLI::Range(1, 8));
    verify->add_option("--k-max", suite_opt.k_max, "largest level")->check(CLI::PositiveNumber);
    verify->add_option("--johnson-n", suite_opt.johnson_max_n, "largest Johnson n")
        ->check(CLI::Range(2, 12));
    verify->add_option("--johnson-r", suite_opt.johnson_max_r, "largest Johnson r")
        ->check(CLI::PositiveNumber);

    std::string search_rule = "ts", search_target;
    SearchOptions search_opt;
    int k_max = 1;
    bool no_prune = false, timing = false;
    auto* search = app.add_subcommand("search", "exhaustive bounded witness search");
    search->add_option("--rule", search_rule, "ts or tj")->required();
    search->add_option("--target", search_target, "target graph (graph6 or family:DESC)")->required();
    search->add_option("--k-max", k_max, "scan levels 1..k_max")->required()->check(CLI::PositiveNumber);
    search->add_option("--max-n", search_opt.max_n, "host vertex bound")->check(CLI::Range(1, 8));
    search->add_option("--jobs", search_opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    search->add_flag("--no-prune", no_prune, "disable the clique-count prune (testing)");
    search->add_flag("--timing", timing, "include elapsed seconds in reports");

    std::string family_text, family_out = "graph6";
    auto* family = app.add_subcommand("family", "generate a named family");
    family->add_option("descriptor", family_text, "e.g. johnson(7,3), complement(path(6))")
        ->required();
    family->add_option("--out", family_out, "graph6 | dot | json")
        ->check(CLI::IsMember({"graph6", "dot", "json"}));

    std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*build) {
            Graph host = detail::parse_graph_argument(host_text);
            ReconfigGraph rg = reconfig_graph(host, parse_rule(rule_text), level);
            if (out_format == "graph6") {
                out << encode_graph6(rg.graph) << "\n";
            } else if (out_format == "dot") {
                std::vector<std::string> labels;
                for (const auto& m : rg.labels.members) labels.push_back(m.to_string());
                out << export_dot(rg.graph, labels);
            } else {
                nlohmann::json j;
                j["graph6"] = encode_graph6(rg.graph);
                j["rule"] = rule_name(rg.rule);
                j["k"] = rg.k;
                j["host"] = encode_graph6(rg.host);
                nlohmann::json labels = nlohmann::json::array();
                for (const auto& m : rg.labels.members) labels.push_back(m.to_vector());
                j["labels"] = labels;
                out << j.dump() << "\n";
            }
            return 0;
        }
        if (*iso) {
            Graph a = decode_graph6(iso_a), b = decode_graph6(iso_b);
            auto map = are_isomorphic(a, b);
            if (!map) {
                out << "not isomorphic\n";
                return 1;
            }
            out << nlohmann::json(*map).dump() << "\n";
            return 0;
        }
        if (*oracle) {
            auto set = feasibility_closed(parse_rule(oracle_rule),
                                          detail::parse_family_argument(oracle_target));
            if (!set) {
                out << nlohmann::json{{"unclassified", true}}.dump() << "\n";
                return 1;
            }
            out << set->to_json().dump() << "\n";
            return 0;
        }
        if (*witness_cmd) {
            try {
                WitnessRecipe recipe = witness(parse_rule(witness_rule),
                                               detail::parse_family_argument(witness_target),
                                               witness_k);
                nlohmann::json j;
                j["target"] = recipe.target.to_string();
                j["rule"] = rule_name(recipe.rule);
                j["k"] = recipe.k;
                j["host"] = encode_graph6(recipe.host);
                j["host_vertices"] = recipe.host.vertex_count();
                j["provenance"] = recipe.provenance;
                out << j.dump() << "\n";
                return 0;
            } catch (const witness_error& e) {
                err << "error: " << e.what() << "\n";
                return 1;
            }
        }
        if (*verify) {
            HostEnumeration hosts = enumerate_hosts(suite_opt.host_max_n);
            bool all_pass = true;
            for (const CheckReport& r : run_check_suite(suite_name, suite_opt, hosts)) {
                out << r.to_json().dump() << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? 0 : 3;
        }
        if (*search) {
            search_opt.prune_by_clique_count = !no_prune;
            Graph target = detail::parse_graph_argument(search_target);
            if (search_target.starts_with("family:"))
                search_opt.oracle = feasibility_closed(
                    parse_rule(search_rule), detail::parse_family_argument(search_target));
            HostEnumeration hosts = enumerate_hosts(search_opt.max_n);
            bool any_witness = false, any_conflict = false;
            for (const SearchReport& r :
                 feasibility_scan(target, parse_rule(search_rule), k_max, hosts, search_opt)) {
                out << r.to_json(timing).dump() << "\n";
                any_witness = any_witness || r.witness_found;
                any_conflict = any_conflict || r.theorem_conflict;
            }
            if (any_conflict) return 3;
            return any_witness ? 0 : 1;
        }
        if (*family) {
            Graph g = generate_family(detail::parse_family_argument(family_text));
            if (family_out == "graph6") {
                out << encode_graph6(g) << "\n";
            } else if (family_out == "dot") {
                out << export_dot(g);
            } else {
                nlohmann::json j;
                j["graph6"] = encode_graph6(g);
                j["vertices"] = g.vertex_count();
                j["edges"] = g.edge_count();
                out << j.dump() << "\n";
            }
            return 0;
        }
    } catch (const graph6_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace cliquereconf
