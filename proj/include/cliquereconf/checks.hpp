#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cliquereconf/cliques.hpp"
#include "cliquereconf/families.hpp"
#include "cliquereconf/graph6.hpp"
#include "cliquereconf/iso.hpp"
#include "cliquereconf/reconfig.hpp"

namespace cliquereconf {

// Outcome of one structural check. A failing report carries a counterexample
// (host graph6, level, offending location) that can be re-checked on its own.
struct CheckReport {
    std::string check;
    std::string range;
    bool pass = true;
    bool applicable = true;
    std::string note;
    nlohmann::json counterexample;  // null unless pass == false

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["check"] = check;
        j["range"] = range;
        j["pass"] = pass;
        j["applicable"] = applicable;
        j["note"] = note;
        j["counterexample"] = pass ? nlohmann::json(nullptr) : counterexample;
        return j;
    }
};

namespace detail {

inline CheckReport pass_report(std::string check, std::string range, std::string note = "") {
    CheckReport r;
    r.check = std::move(check);
    r.range = std::move(range);
    r.note = std::move(note);
    return r;
}

inline CheckReport skip_report(std::string check, std::string range, std::string note) {
    CheckReport r = pass_report(std::move(check), std::move(range), std::move(note));
    r.applicable = false;
    return r;
}

inline CheckReport fail_report(std::string check, std::string range, nlohmann::json counterexample) {
    CheckReport r;
    r.check = std::move(check);
    r.range = std::move(range);
    r.pass = false;
    r.counterexample = std::move(counterexample);
    return r;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

// All cliques of size >= 3 of a graph, as vertex sets.
inline std::vector<VertexSet> cliques_of_size_at_least_3(const Graph& g) {
    std::vector<VertexSet> out;
    int w = clique_number(g);
    for (int q = 3; q <= w; ++q)
        for (auto& c : enumerate_k_cliques(g, q).members) out.push_back(c);
    return out;
}

}  // namespace detail

// Star/top classification of a clique of reconfiguration-graph vertices,
// given as the k-cliques of the host they are labeled with. Exactly one of
// the two shapes applies to cliques of size >= 3; size 1 and 2 are left
// unclassified. A nullopt return on size >= 3 would falsify the structure
// theorems and is reported as a violation by the callers.
struct CliqueClassification {
    enum class Kind { Star, Top } kind;
    VertexSet witness;  // Star: the (k-1) core; Top: the (k+1) union
};

inline std::optional<CliqueClassification> classify_clique(const Graph& host, int k, Rule rule,
                                                           const std::vector<VertexSet>& members) {
    (void)rule;  // both rules share the star/top dichotomy
    if (members.size() < 3)
        throw std::invalid_argument("classify_clique requires at least 3 member cliques");
    VertexSet inter = members.front();
    VertexSet uni = members.front();
    for (const auto& m : members) {
        inter &= m;
        uni |= m;
    }
    if (inter.count() == k - 1 && is_clique(host, inter))
        return CliqueClassification{CliqueClassification::Kind::Star, inter};
    if (uni.count() == k + 1 && is_clique(host, uni))
        return CliqueClassification{CliqueClassification::Kind::Top, uni};
    return std::nullopt;
}

// omega(TS_k(H)): no vertices above omega(H), no edges at omega(H), and the
// max{k+1, omega(H)-k+1} formula below it.
inline CheckReport check_clique_number_formula(const Graph& host, int k) {
    std::string range = "host=" + encode_graph6(host) + " k=" + std::to_string(k);
    int w = clique_number(host);
    ReconfigGraph rg = ts_graph(host, k);
    if (k > w) {
        if (rg.graph.vertex_count() != 0)
            return detail::fail_report("clique-number-formula", range,
                                       {{"host", encode_graph6(host)},
                                        {"k", k},
                                        {"detail", "expected no vertices above the clique number"}});
        return detail::pass_report("clique-number-formula", range, "k > omega: no vertices");
    }
    if (k == w) {
        if (rg.graph.edge_count() != 0)
            return detail::fail_report("clique-number-formula", range,
                                       {{"host", encode_graph6(host)},
                                        {"k", k},
                                        {"detail", "expected no edges at the clique number"}});
        return detail::pass_report("clique-number-formula", range, "k = omega: no edges");
    }
    int expected = std::max(k + 1, w - k + 1);
    int got = clique_number(rg.graph);
    if (got != expected)
        return detail::fail_report("clique-number-formula", range,
                                   {{"host", encode_graph6(host)},
                                    {"k", k},
                                    {"expected", expected},
                                    {"got", got}});
    return detail::pass_report("clique-number-formula", range);
}

// deg(A) = k * (number of (k+1)-cliques of the host containing A).
inline CheckReport check_ts_degree_formula(const Graph& host, int k) {
    std::string range = "host=" + encode_graph6(host) + " k=" + std::to_string(k);
    if (k < 2) return detail::skip_report("ts-degree-formula", range, "requires k >= 2");
    ReconfigGraph rg = ts_graph(host, k);
    CliqueFamily above = enumerate_k_cliques(host, k + 1);
    for (int i = 0; i < rg.labels.size(); ++i) {
        const VertexSet& a = rg.labels.members[static_cast<size_t>(i)];
        int t = 0;
        for (const auto& c : above.members)
            if (c.contains_all(a)) ++t;
        if (rg.graph.degree(i) != k * t)
            return detail::fail_report("ts-degree-formula", range,
                                       {{"host", encode_graph6(host)},
                                        {"k", k},
                                        {"vertex", i},
                                        {"degree", rg.graph.degree(i)},
                                        {"expected", k * t}});
    }
    return detail::pass_report("ts-degree-formula", range);
}

// c_q(TS_j(H)) = C(q+j-1, j-1) * c_{q+j-1}(H) whenever q = omega(TS_j(H)) >= j+2.
inline CheckReport check_ts_max_clique_counts(const Graph& host, int j) {
    std::string range = "host=" + encode_graph6(host) + " j=" + std::to_string(j);
    if (j < 2) return detail::skip_report("ts-max-clique-counts", range, "requires j >= 2");
    ReconfigGraph rg = ts_graph(host, j);
    int q = clique_number(rg.graph);
    if (q < j + 2)
        return detail::skip_report("ts-max-clique-counts", range,
                                   "not applicable: omega(TS_j) = " + std::to_string(q) + " < j+2");
    long long lhs = count_t_cliques(rg.graph, q);
    long long rhs = detail::binomial(q + j - 1, j - 1) * count_t_cliques(host, q + j - 1);
    if (lhs != rhs)
        return detail::fail_report("ts-max-clique-counts", range,
                                   {{"host", encode_graph6(host)},
                                    {"j", j},
                                    {"q", q},
                                    {"lhs", lhs},
                                    {"rhs", rhs}});
    return detail::pass_report("ts-max-clique-counts", range, "q=" + std::to_string(q));
}

// Every vertex neighborhood of J(n,r) is the line graph of K_{r,n-r}.
inline CheckReport check_johnson_neighborhood(int n, int r) {
    std::string range = "J(" + std::to_string(n) + "," + std::to_string(r) + ")";
    Graph j = johnson_graph(n, r);
    Graph expected = line_graph(generate_family({Family::CompleteBipartite, {r, n - r}, false}));
    for (int v = 0; v < j.vertex_count(); ++v) {
        Graph nb = induced_subgraph(j, j.neighbors(v));
        if (!are_isomorphic(nb, expected))
            return detail::fail_report("johnson-neighborhood", range,
                                       {{"n", n}, {"r", r}, {"vertex", v}});
    }
    return detail::pass_report("johnson-neighborhood", range);
}

// Maximum-clique census of J(n,r): stars only (size n-s+1, r per vertex) away
// from the boundary, stars and tops (size s+1, 2s per vertex) at n = 2s; for
// r = 2, n >= 5 additionally the pairwise single-vertex intersections.
inline CheckReport check_johnson_max_cliques(int n, int r) {
    std::string range = "J(" + std::to_string(n) + "," + std::to_string(r) + ")";
    int s = std::min(r, n - r);
    if (n < 3 || (s == 1 && n == 2))
        return detail::skip_report("johnson-max-cliques", range, "degenerate parameters");

    Graph j = johnson_graph(n, r);
    auto subsets = subsets_of_size(n, r);
    auto fail = [&](const std::string& what) {
        return detail::fail_report("johnson-max-cliques", range,
                                   {{"n", n}, {"r", r}, {"detail", what}});
    };

    // predicted maximum cliques, as sets of vertex indices
    auto star_cliques = [&]() {
        std::vector<VertexSet> stars;
        for (const auto& core : subsets_of_size(n, r - 1)) {
            VertexSet clique(j.vertex_count());
            for (size_t i = 0; i < subsets.size(); ++i)
                if (subsets[i].contains_all(core)) clique.set(static_cast<int>(i));
            stars.push_back(clique);
        }
        return stars;
    };
    auto top_cliques = [&]() {
        std::vector<VertexSet> tops;
        for (const auto& u : subsets_of_size(n, r + 1)) {
            VertexSet clique(j.vertex_count());
            for (size_t i = 0; i < subsets.size(); ++i)
                if (u.contains_all(subsets[i])) clique.set(static_cast<int>(i));
            tops.push_back(clique);
        }
        return tops;
    };

    std::vector<VertexSet> predicted;
    int expected_size, expected_incidence;
    if (n == 2 * s) {
        predicted = star_cliques();
        for (auto& t : top_cliques()) predicted.push_back(t);
        expected_size = s + 1;
        expected_incidence = 2 * s;
    } else if (r < n - r) {
        predicted = star_cliques();
        expected_size = n - r + 1;
        expected_incidence = r;
    } else {
        predicted = top_cliques();
        expected_size = r + 1;
        expected_incidence = n - r;
    }
    std::sort(predicted.begin(), predicted.end());

    std::vector<VertexSet> maximum;
    int w = 0;
    for (const auto& c : maximal_cliques(j)) w = std::max(w, c.count());
    for (const auto& c : maximal_cliques(j))
        if (c.count() == w) maximum.push_back(c);
    std::sort(maximum.begin(), maximum.end());

    if (w != expected_size) return fail("maximum clique size " + std::to_string(w));
    if (!(maximum == predicted)) return fail("maximum cliques differ from the star/top census");

    std::vector<int> incidence(static_cast<size_t>(j.vertex_count()), 0);
    for (const auto& c : maximum)
        c.for_each([&](int v) { ++incidence[static_cast<size_t>(v)]; });
    for (int v = 0; v < j.vertex_count(); ++v)
        if (incidence[static_cast<size_t>(v)] != expected_incidence)
            return fail("vertex " + std::to_string(v) + " lies in " +
                        std::to_string(incidence[static_cast<size_t>(v)]) + " maximum cliques");

    if (s == 2 && r == 2 && n >= 5) {
        // rank-2 stars intersect pairwise in exactly the one shared pair
        for (size_t a = 0; a < maximum.size(); ++a)
            for (size_t b = a + 1; b < maximum.size(); ++b)
                if (maximum[a].intersection_count(maximum[b]) != 1)
                    return fail("rank-2 stars with intersection != 1");
    }
    return detail::pass_report("johnson-max-cliques", range,
                               std::to_string(maximum.size()) + " maximum cliques of size " +
                                   std::to_string(expected_size));
}

// Local counts in the stable range n > 2r >= 4: adjacent pairs have n-2
// common neighbors, triples inside one maximum clique have n-r-2.
inline CheckReport check_johnson_local_counts(int n, int r) {
    std::string range = "J(" + std::to_string(n) + "," + std::to_string(r) + ")";
    if (!(n > 2 * r && r >= 2))
        return detail::skip_report("johnson-local-counts", range, "requires n > 2r >= 4");
    Graph j = johnson_graph(n, r);
    for (auto [a, b] : j.edges())
        if (j.neighbors(a).intersection_count(j.neighbors(b)) != n - 2)
            return detail::fail_report("johnson-local-counts", range,
                                       {{"n", n}, {"r", r}, {"edge", {a, b}}});
    auto subsets = subsets_of_size(n, r);
    for (const auto& core : subsets_of_size(n, r - 1)) {
        std::vector<int> star;
        for (size_t i = 0; i < subsets.size(); ++i)
            if (subsets[i].contains_all(core)) star.push_back(static_cast<int>(i));
        for (size_t x = 0; x < star.size(); ++x)
            for (size_t y = x + 1; y < star.size(); ++y)
                for (size_t z = y + 1; z < star.size(); ++z) {
                    VertexSet common = j.neighbors(star[x]);
                    common &= j.neighbors(star[y]);
                    common &= j.neighbors(star[z]);
                    if (common.count() != n - r - 2)
                        return detail::fail_report(
                            "johnson-local-counts", range,
                            {{"n", n}, {"r", r}, {"triple", {star[x], star[y], star[z]}}});
                }
    }
    return detail::pass_report("johnson-local-counts", range);
}

// The r x r rook graph has exactly 2r maximum cliques (rows and columns) of
// size r, each meeting exactly r others.
inline CheckReport check_rook_max_cliques(int r) {
    std::string range = "rook(" + std::to_string(r) + "," + std::to_string(r) + ")";
    if (r < 2) return detail::skip_report("rook-max-cliques", range, "requires r >= 2");
    Graph g = rook_graph(r, r);
    std::vector<VertexSet> maximum;
    int w = 0;
    for (const auto& c : maximal_cliques(g)) w = std::max(w, c.count());
    for (const auto& c : maximal_cliques(g))
        if (c.count() == w) maximum.push_back(c);
    auto fail = [&](const std::string& what) {
        return detail::fail_report("rook-max-cliques", range, {{"r", r}, {"detail", what}});
    };
    if (w != r) return fail("clique number " + std::to_string(w));
    if (static_cast<int>(maximum.size()) != 2 * r)
        return fail(std::to_string(maximum.size()) + " maximum cliques");
    for (size_t a = 0; a < maximum.size(); ++a) {
        int meets = 0;
        for (size_t b = 0; b < maximum.size(); ++b)
            if (a != b && maximum[a].intersects(maximum[b])) ++meets;
        if (meets != r) return fail("a maximum clique meets " + std::to_string(meets) + " others");
    }
    return detail::pass_report("rook-max-cliques", range);
}

// Neighborhood of an edge vertex in TS_2(H): two copies of H[N(u) cap N(v)]
// joined by a perfect matching whose edges lie in no triangle.
inline CheckReport check_ts2_prism(const Graph& host) {
    std::string range = "host=" + encode_graph6(host);
    ReconfigGraph rg = ts_graph(host, 2);
    for (int i = 0; i < rg.labels.size(); ++i) {
        const VertexSet& e = rg.labels.members[static_cast<size_t>(i)];
        auto ev = e.to_vector();
        int u = ev[0], v = ev[1];
        VertexSet s = host.neighbors(u) & host.neighbors(v);
        auto fail = [&](const std::string& what) {
            return detail::fail_report("ts2-prism", range,
                                       {{"host", encode_graph6(host)},
                                        {"edge", {u, v}},
                                        {"detail", what}});
        };
        // expected vertex set and adjacency, checked against the built graph
        std::vector<int> svec = s.to_vector();
        VertexSet expected_nb(rg.graph.vertex_count());
        std::vector<int> copy_u, copy_v;
        for (int w : svec) {
            VertexSet eu(host.vertex_count()), evx(host.vertex_count());
            eu.set(u);
            eu.set(w);
            evx.set(v);
            evx.set(w);
            int iu = rg.labels.index_of(eu), iv = rg.labels.index_of(evx);
            if (iu < 0 || iv < 0) return fail("missing expected neighbor");
            copy_u.push_back(iu);
            copy_v.push_back(iv);
            expected_nb.set(iu);
            expected_nb.set(iv);
        }
        if (!(rg.graph.neighbors(i) == expected_nb)) return fail("neighborhood vertex set differs");
        for (size_t a = 0; a < svec.size(); ++a)
            for (size_t b = 0; b < svec.size(); ++b) {
                if (a < b) {
                    bool base = host.adjacent(svec[a], svec[b]);
                    if (rg.graph.adjacent(copy_u[a], copy_u[b]) != base) return fail("u-copy differs");
                    if (rg.graph.adjacent(copy_v[a], copy_v[b]) != base) return fail("v-copy differs");
                }
                bool cross = rg.graph.adjacent(copy_u[a], copy_v[b]);
                if (cross != (a == b)) return fail("cross adjacency differs from the matching");
            }
        // matching edges in no triangle of the neighborhood
        for (size_t a = 0; a < svec.size(); ++a) {
            VertexSet common = rg.graph.neighbors(copy_u[a]) & rg.graph.neighbors(copy_v[a]);
            common &= expected_nb;
            if (!common.empty()) return fail("matching edge lies in a triangle");
        }
    }
    return detail::pass_report("ts2-prism", range);
}

// Every vertex of TJ_k(H) lies in at most k distinct star cliques.
inline CheckReport check_tj_star_bound(const Graph& host, int k) {
    std::string range = "host=" + encode_graph6(host) + " k=" + std::to_string(k);
    if (k < 2) return detail::skip_report("tj-star-bound", range, "requires k >= 2");
    ReconfigGraph rg = tj_graph(host, k);
    for (int i = 0; i < rg.labels.size(); ++i) {
        const VertexSet& a = rg.labels.members[static_cast<size_t>(i)];
        std::set<std::vector<int>> stars;
        a.for_each([&](int drop) {
            VertexSet core = a;
            core.reset(drop);
            CliqueFamily star = star_clique(host, k, core);
            std::vector<int> ids;
            for (const auto& m : star.members) ids.push_back(rg.labels.index_of(m));
            stars.insert(ids);
        });
        if (static_cast<int>(stars.size()) > k)
            return detail::fail_report("tj-star-bound", range,
                                       {{"host", encode_graph6(host)},
                                        {"k", k},
                                        {"vertex", i},
                                        {"stars", stars.size()}});
    }
    return detail::pass_report("tj-star-bound", range);
}

// Every maximal clique of TJ_k(H) is a full star clique or a full top clique;
// top-type maximal cliques have size exactly k+1; and distinct star cliques
// share at most one vertex.
inline CheckReport check_tj_maximal_classification(const Graph& host, int k) {
    std::string range = "host=" + encode_graph6(host) + " k=" + std::to_string(k);
    if (k < 2) return detail::skip_report("tj-maximal-classification", range, "requires k >= 2");
    ReconfigGraph rg = tj_graph(host, k);
    auto fail = [&](int size, const std::string& what) {
        return detail::fail_report("tj-maximal-classification", range,
                                   {{"host", encode_graph6(host)},
                                    {"k", k},
                                    {"maximal_clique_size", size},
                                    {"detail", what}});
    };

    auto star_ids = [&](const VertexSet& core) {
        CliqueFamily star = star_clique(host, k, core);
        VertexSet ids(rg.graph.vertex_count());
        for (const auto& m : star.members) ids.set(rg.labels.index_of(m));
        return ids;
    };

    for (const auto& mc : maximal_cliques(rg.graph)) {
        std::vector<VertexSet> members;
        mc.for_each([&](int i) { members.push_back(rg.labels.members[static_cast<size_t>(i)]); });
        int q = static_cast<int>(members.size());
        if (q == 1) {
            bool ok = false;
            members[0].for_each([&](int drop) {
                VertexSet core = members[0];
                core.reset(drop);
                if (star_clique(host, k, core).size() == 1) ok = true;
            });
            if (!ok) return fail(q, "isolated vertex is not a full star clique");
            continue;
        }
        if (q == 2) {
            VertexSet core = members[0] & members[1];
            if (star_ids(core) == mc) continue;
            return fail(q, "size-2 maximal clique is not a full star clique");
        }
        auto cls = classify_clique(host, k, Rule::TJ, members);
        if (!cls) return fail(q, "members match neither the star nor the top shape");
        if (cls->kind == CliqueClassification::Kind::Star) {
            if (!(star_ids(cls->witness) == mc)) return fail(q, "star clique not maximal-equal");
        } else {
            if (q != k + 1) return fail(q, "top-type maximal clique of size != k+1");
            CliqueFamily top = top_clique(host, cls->witness);
            VertexSet ids(rg.graph.vertex_count());
            for (const auto& m : top.members) ids.set(rg.labels.index_of(m));
            if (!(ids == mc)) return fail(q, "top clique not maximal-equal");
        }
    }

    // distinct star cliques share no edge
    std::vector<VertexSet> stars;
    if (k >= 2)
        for (const auto& core : enumerate_k_cliques(host, k - 1).members)
            stars.push_back(star_ids(core));
    for (size_t a = 0; a < stars.size(); ++a)
        for (size_t b = a + 1; b < stars.size(); ++b)
            if (stars[a].intersection_count(stars[b]) > 1)
                return fail(0, "two distinct star cliques share an edge");

    return detail::pass_report("tj-maximal-classification", range);
}

}  // namespace cliquereconf
