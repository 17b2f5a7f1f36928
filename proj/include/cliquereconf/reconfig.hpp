#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquereconf/cliques.hpp"
#include "cliquereconf/graph.hpp"

namespace cliquereconf {

enum class Rule { TS, TJ };

inline const char* rule_name(Rule r) { return r == Rule::TS ? "ts" : "tj"; }

inline Rule parse_rule(const std::string& s) {
    if (s == "ts" || s == "TS") return Rule::TS;
    if (s == "tj" || s == "TJ") return Rule::TJ;
    throw std::invalid_argument("unknown rule '" + s + "' (expected ts or tj)");
}

// Reconfiguration graph of the k-cliques of a host. Vertex i carries the
// i-th clique of the sorted family. Adjacency is the intersection test
// |A cap B| = k-1; token sliding additionally requires the swapped pair of
// host vertices to be adjacent.
struct ReconfigGraph {
    Graph graph;
    Rule rule = Rule::TS;
    int k = 1;
    Graph host;
    CliqueFamily labels;
};

inline ReconfigGraph reconfig_graph(const Graph& host, Rule rule, int k) {
    if (k < 1) throw std::invalid_argument("reconfiguration level k must be >= 1");
    ReconfigGraph rg;
    rg.rule = rule;
    rg.k = k;
    rg.host = host;
    rg.labels = enumerate_k_cliques(host, k);
    int m = rg.labels.size();
    rg.graph = Graph(m);
    for (int i = 0; i < m; ++i) {
        const VertexSet& a = rg.labels.members[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j) {
            const VertexSet& b = rg.labels.members[static_cast<size_t>(j)];
            if (a.intersection_count(b) != k - 1) continue;
            if (rule == Rule::TS) {
                int u = (a - b).lowest();
                int v = (b - a).lowest();
                if (!host.adjacent(u, v)) continue;
            }
            rg.graph.add_edge(i, j);
        }
    }
    return rg;
}

inline ReconfigGraph ts_graph(const Graph& host, int k) { return reconfig_graph(host, Rule::TS, k); }
inline ReconfigGraph tj_graph(const Graph& host, int k) { return reconfig_graph(host, Rule::TJ, k); }

// Layered description of the neighborhood of a k-clique Q in ts_graph(H,k):
// j = k disjoint copies of X = H[S] (S = common neighborhood of Q), plus one
// transversal clique through the copies of each s in S. Vertex (i,t) of the
// reassembled graph is layer i, t-th member of S; layer i collects the
// cliques Q - a_i + s over s in S, where a_i is the i-th member of Q.
struct LayerModel {
    VertexSet clique;          // Q
    VertexSet common;          // S
    int layers = 0;            // j = k
    Graph base;                // H[S], vertices renumbered by ascending member
    std::vector<int> base_vertices;

    Graph reassemble() const {
        int s = static_cast<int>(base_vertices.size());
        Graph g(layers * s);
        for (int i = 0; i < layers; ++i)
            for (auto [a, b] : base.edges()) g.add_edge(i * s + a, i * s + b);
        for (int t = 0; t < s; ++t)
            for (int i = 0; i < layers; ++i)
                for (int i2 = i + 1; i2 < layers; ++i2) g.add_edge(i * s + t, i2 * s + t);
        return g;
    }
};

inline LayerModel ts_layer_model(const Graph& host, int k, const VertexSet& q) {
    if (k < 2) throw std::invalid_argument("layer model requires k >= 2");
    if (q.count() != k || !is_clique(host, q))
        throw std::invalid_argument("Q must be a k-clique of the host");
    LayerModel model;
    model.clique = q;
    model.layers = k;
    VertexSet s = VertexSet::full(host.vertex_count());
    q.for_each([&](int a) { s &= host.neighbors(a); });
    model.common = s;
    model.base_vertices = s.to_vector();
    model.base = induced_subgraph(host, model.base_vertices);
    return model;
}

// Bipartite graph B_A on parts (A, X_A) with a ~ x iff A - a + x is a
// k-clique; the line graph of B_A is the neighborhood of A in tj_graph(H,k).
struct BipartiteModel {
    Graph graph;                  // left part first, then right part
    std::vector<int> left;        // members of A, ascending
    std::vector<int> right;       // members of X_A, ascending
};

inline BipartiteModel tj_base_bipartite(const Graph& host, int k, const VertexSet& a) {
    if (k < 2) throw std::invalid_argument("bipartite model requires k >= 2");
    if (a.count() != k || !is_clique(host, a))
        throw std::invalid_argument("A must be a k-clique of the host");
    BipartiteModel model;
    model.left = a.to_vector();

    int n = host.vertex_count();
    std::vector<std::pair<int, int>> pairs;  // (left index, host vertex x)
    for (int x = 0; x < n; ++x) {
        if (a.test(x)) continue;
        int misses = 0, missed = -1;
        for (size_t i = 0; i < model.left.size(); ++i)
            if (!host.adjacent(model.left[i], x)) {
                ++misses;
                missed = static_cast<int>(i);
            }
        if (misses == 0) {
            // x extends every A - a_i: one edge per left vertex
            for (size_t i = 0; i < model.left.size(); ++i)
                pairs.emplace_back(static_cast<int>(i), x);
            model.right.push_back(x);
        } else if (misses == 1) {
            pairs.emplace_back(missed, x);
            model.right.push_back(x);
        }
    }

    model.graph = Graph(static_cast<int>(model.left.size() + model.right.size()));
    for (auto [li, x] : pairs) {
        int ri = static_cast<int>(std::lower_bound(model.right.begin(), model.right.end(), x) -
                                  model.right.begin());
        model.graph.add_edge(li, static_cast<int>(model.left.size()) + ri);
    }
    return model;
}

}  // namespace cliquereconf
