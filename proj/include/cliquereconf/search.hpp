#pragma once

#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "cliquereconf/feasibility.hpp"
#include "cliquereconf/graph6.hpp"
#include "cliquereconf/host_enum.hpp"
#include "cliquereconf/iso.hpp"
#include "cliquereconf/reconfig.hpp"

namespace cliquereconf {

// Result of a bounded witness hunt for one (target, rule, k). "Exhausted" is
// a bounded statement: every isomorphism class of hosts with at most max_n
// vertices was tested, which corroborates but does not prove infeasibility.
struct SearchReport {
    std::string target;  // graph6
    Rule rule = Rule::TS;
    int k = 1;
    bool witness_found = false;
    std::string witness;  // graph6 of the host, canonical labeling
    int max_n = 0;
    long long hosts_examined = 0;
    double elapsed_seconds = 0.0;
    std::optional<bool> oracle_feasible;
    bool theorem_conflict = false;

    nlohmann::json to_json(bool include_elapsed = false) const {
        nlohmann::json j;
        j["target"] = target;
        j["rule"] = rule_name(rule);
        j["k"] = k;
        j["outcome"] = witness_found ? "witness" : "exhausted";
        j["witness"] = witness_found ? nlohmann::json(witness) : nlohmann::json(nullptr);
        j["max_n"] = max_n;
        j["hosts_examined"] = hosts_examined;
        if (oracle_feasible) j["oracle_feasible"] = *oracle_feasible;
        if (theorem_conflict) j["theorem_conflict"] = true;
        if (include_elapsed) j["elapsed_seconds"] = elapsed_seconds;
        return j;
    }
};

struct SearchOptions {
    int max_n = 7;
    int jobs = 1;
    bool prune_by_clique_count = true;
    std::optional<FeasibilitySet> oracle;  // closed-form set of the target, when classified
};

namespace detail {

inline bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

inline bool host_matches(const Graph& host, const Graph& target, Rule rule, int k, bool prune) {
    // Fast path: for k >= 2, isolated vertices lie in no k-clique, so this
    // host's reconfiguration graph equals that of the host minus isolates,
    // which has fewer vertices and was already tested earlier in order.
    // Edgeless hosts stay: their core would be the 0-vertex graph, which the
    // enumeration never visits.
    if (k >= 2 && host.edge_count() > 0 && has_isolated_vertex(host)) return false;
    if (prune && count_t_cliques(host, k) != target.vertex_count()) return false;
    ReconfigGraph rg = reconfig_graph(host, rule, k);
    if (rg.graph.vertex_count() != target.vertex_count()) return false;
    if (rg.graph.edge_count() != target.edge_count()) return false;
    return are_isomorphic(rg.graph, target).has_value();
}

}  // namespace detail

// First host in enumeration order (fewest vertices, then canonical code)
// whose reconfiguration graph at level k is isomorphic to the target. The
// winner is re-verified by a fresh rebuild before being reported.
inline SearchReport search_witness(const Graph& target, Rule rule, int k,
                                   const HostEnumeration& hosts, const SearchOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("search level k must be >= 1");
    auto start = std::chrono::steady_clock::now();

    std::vector<const Graph*> flat;
    for (int n = 1; n <= opt.max_n && n <= hosts.max_n; ++n)
        for (const Graph& g : hosts.by_n[static_cast<size_t>(n)]) flat.push_back(&g);

    size_t total = flat.size();
    std::atomic<size_t> next{0};
    std::atomic<size_t> best{SIZE_MAX};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= total) break;
            if (i >= best.load()) continue;
            if (detail::host_matches(*flat[i], target, rule, k, opt.prune_by_clique_count)) {
                size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    if (opt.jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < opt.jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SearchReport report;
    report.target = encode_graph6(target);
    report.rule = rule;
    report.k = k;
    report.max_n = std::min(opt.max_n, hosts.max_n);
    size_t found = best.load();
    if (found != SIZE_MAX) {
        // independent re-verification of the winner
        ReconfigGraph rg = reconfig_graph(*flat[found], rule, k);
        if (!are_isomorphic(rg.graph, target))
            throw std::logic_error("witness failed re-verification");
        report.witness_found = true;
        report.witness = encode_graph6(*flat[found]);
        report.hosts_examined = static_cast<long long>(found) + 1;
    } else {
        report.hosts_examined = static_cast<long long>(total);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// One report per level k = 1..k_max, cross-checked against the closed-form
// oracle when one is supplied. A witness at an oracle-infeasible level is
// re-verified and, if it survives, flagged as a theorem conflict.
inline std::vector<SearchReport> feasibility_scan(const Graph& target, Rule rule, int k_max,
                                                  const HostEnumeration& hosts,
                                                  const SearchOptions& opt = {}) {
    std::vector<SearchReport> reports;
    for (int k = 1; k <= k_max; ++k) {
        SearchReport r = search_witness(target, rule, k, hosts, opt);
        if (opt.oracle) {
            r.oracle_feasible = opt.oracle->contains(k);
            if (r.witness_found && !*r.oracle_feasible) {
                ReconfigGraph rg = reconfig_graph(decode_graph6(r.witness), rule, k);
                if (are_isomorphic(rg.graph, target)) r.theorem_conflict = true;
            }
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace cliquereconf
