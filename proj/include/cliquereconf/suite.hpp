#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cliquereconf/checks.hpp"
#include "cliquereconf/host_enum.hpp"

namespace cliquereconf {

struct SuiteOptions {
    int host_max_n = 6;
    int k_min = 2;
    int k_max = 6;
    int johnson_max_n = 8;
    int johnson_max_r = 4;
};

namespace detail {

// Folds per-instance reports into one line per check, keeping the first
// counterexample.
struct SuiteFold {
    CheckReport merged;
    long long checked = 0;
    long long applicable = 0;

    explicit SuiteFold(std::string check, std::string range) {
        merged.check = std::move(check);
        merged.range = std::move(range);
    }

    void add(const CheckReport& r) {
        ++checked;
        if (r.applicable) ++applicable;
        if (!r.pass && merged.pass) {
            merged.pass = false;
            merged.counterexample = r.counterexample;
        }
    }

    CheckReport finish() {
        merged.note = std::to_string(applicable) + " applicable of " + std::to_string(checked) +
                      " instances";
        return merged;
    }
};

template <typename F>
CheckReport fold_hosts_k(const std::string& check, const HostEnumeration& hosts,
                         const SuiteOptions& opt, F&& f) {
    SuiteFold fold(check, "hosts n<=" + std::to_string(opt.host_max_n) + ", k in [" +
                              std::to_string(opt.k_min) + "," + std::to_string(opt.k_max) + "]");
    for (int n = 1; n <= opt.host_max_n; ++n)
        for (const Graph& h : hosts.by_n[static_cast<size_t>(n)])
            for (int k = opt.k_min; k <= opt.k_max; ++k) {
                fold.add(f(h, k));
                if (!fold.merged.pass) return fold.finish();
            }
    return fold.finish();
}

template <typename F>
CheckReport fold_hosts(const std::string& check, const HostEnumeration& hosts,
                       const SuiteOptions& opt, F&& f) {
    SuiteFold fold(check, "hosts n<=" + std::to_string(opt.host_max_n));
    for (int n = 1; n <= opt.host_max_n; ++n)
        for (const Graph& h : hosts.by_n[static_cast<size_t>(n)]) {
            fold.add(f(h));
            if (!fold.merged.pass) return fold.finish();
        }
    return fold.finish();
}

template <typename F>
CheckReport fold_johnson(const std::string& check, const SuiteOptions& opt, F&& f) {
    SuiteFold fold(check, "johnson n<=" + std::to_string(opt.johnson_max_n) +
                              ", r<=" + std::to_string(opt.johnson_max_r));
    for (int n = 2; n <= opt.johnson_max_n; ++n)
        for (int r = 1; r <= std::min(opt.johnson_max_r, n - 1); ++r) {
            fold.add(f(n, r));
            if (!fold.merged.pass) return fold.finish();
        }
    return fold.finish();
}

// Star/top classification is total on every clique of size >= 3 of every
// reconfiguration graph in range.
inline CheckReport classify_totality(const HostEnumeration& hosts, const SuiteOptions& opt) {
    SuiteFold fold("classify-total", "hosts n<=" + std::to_string(opt.host_max_n) + ", k in [" +
                                         std::to_string(opt.k_min) + "," +
                                         std::to_string(opt.k_max) + "], both rules");
    for (int n = 1; n <= opt.host_max_n; ++n)
        for (const Graph& h : hosts.by_n[static_cast<size_t>(n)])
            for (int k = opt.k_min; k <= opt.k_max; ++k)
                for (Rule rule : {Rule::TS, Rule::TJ}) {
                    ReconfigGraph rg = reconfig_graph(h, rule, k);
                    CheckReport inst = detail::pass_report("classify-total", "");
                    for (const auto& clique : detail::cliques_of_size_at_least_3(rg.graph)) {
                        std::vector<VertexSet> members;
                        clique.for_each([&](int i) {
                            members.push_back(rg.labels.members[static_cast<size_t>(i)]);
                        });
                        if (!classify_clique(h, k, rule, members)) {
                            inst = detail::fail_report("classify-total", "",
                                                       {{"host", encode_graph6(h)},
                                                        {"k", k},
                                                        {"rule", rule_name(rule)},
                                                        {"clique", clique.to_string()}});
                            break;
                        }
                    }
                    fold.add(inst);
                    if (!fold.merged.pass) return fold.finish();
                }
    return fold.finish();
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "clique-number-formula",   "ts-degree-formula",
        "ts-max-clique-counts",    "ts2-prism",
        "tj-star-bound",           "tj-maximal-classification",
        "classify-total",          "johnson-neighborhood",
        "johnson-max-cliques",     "johnson-local-counts",
        "rook-max-cliques",
    };
    return names;
}

// Runs one named check (or all of them) over its stated parameter range and
// returns one aggregated report per check.
inline std::vector<CheckReport> run_check_suite(const std::string& name, const SuiteOptions& opt,
                                                const HostEnumeration& hosts) {
    std::vector<CheckReport> out;
    auto want = [&](const std::string& n) { return name == "all" || name == n; };

    if (want("clique-number-formula"))
        out.push_back(detail::fold_hosts_k("clique-number-formula", hosts, opt,
                                           [](const Graph& h, int k) {
                                               return check_clique_number_formula(h, k);
                                           }));
    if (want("ts-degree-formula"))
        out.push_back(detail::fold_hosts_k(
            "ts-degree-formula", hosts, opt,
            [](const Graph& h, int k) { return check_ts_degree_formula(h, k); }));
    if (want("ts-max-clique-counts"))
        out.push_back(detail::fold_hosts_k(
            "ts-max-clique-counts", hosts, opt,
            [](const Graph& h, int k) { return check_ts_max_clique_counts(h, k); }));
    if (want("ts2-prism"))
        out.push_back(detail::fold_hosts("ts2-prism", hosts, opt,
                                         [](const Graph& h) { return check_ts2_prism(h); }));
    if (want("tj-star-bound"))
        out.push_back(detail::fold_hosts_k(
            "tj-star-bound", hosts, opt,
            [](const Graph& h, int k) { return check_tj_star_bound(h, k); }));
    if (want("tj-maximal-classification"))
        out.push_back(detail::fold_hosts_k(
            "tj-maximal-classification", hosts, opt,
            [](const Graph& h, int k) { return check_tj_maximal_classification(h, k); }));
    if (want("classify-total")) out.push_back(detail::classify_totality(hosts, opt));
    if (want("johnson-neighborhood"))
        out.push_back(detail::fold_johnson("johnson-neighborhood", opt, [](int n, int r) {
            return check_johnson_neighborhood(n, r);
        }));
    if (want("johnson-max-cliques"))
        out.push_back(detail::fold_johnson("johnson-max-cliques", opt, [](int n, int r) {
            return check_johnson_max_cliques(n, r);
        }));
    if (want("johnson-local-counts"))
        out.push_back(detail::fold_johnson("johnson-local-counts", opt, [](int n, int r) {
            return check_johnson_local_counts(n, r);
        }));
    if (want("rook-max-cliques")) {
        detail::SuiteFold fold("rook-max-cliques",
                               "r in [2," + std::to_string(opt.johnson_max_r) + "]");
        for (int r = 2; r <= opt.johnson_max_r; ++r) fold.add(check_rook_max_cliques(r));
        out.push_back(fold.finish());
    }
    if (out.empty()) throw std::invalid_argument("unknown check suite '" + name + "'");
    return out;
}

}  // namespace cliquereconf
