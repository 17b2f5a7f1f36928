#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliquereconf/vertex_set.hpp"

namespace cliquereconf {

// Finite simple undirected graph on vertices 0..n-1 with bit-set adjacency
// rows. Rows stay symmetric and irreflexive by construction; values are
// treated as immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        adj_.assign(static_cast<size_t>(n), VertexSet(n));
    }

    int vertex_count() const { return n_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }

    const VertexSet& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n_));
        if (u == v)
            throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
        adj_[static_cast<size_t>(u)].set(v);
        adj_[static_cast<size_t>(v)].set(u);
    }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            adj_[static_cast<size_t>(u)].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) d[static_cast<size_t>(v)] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    VertexSet vertex_set() const { return VertexSet::full(n_); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

// Vertices of h are shifted by |V(g)|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph u(ng + nh);
    for (auto [a, b] : g.edges()) u.add_edge(a, b);
    for (auto [a, b] : h.edges()) u.add_edge(ng + a, ng + b);
    return u;
}

inline Graph join(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph j = disjoint_union(g, h);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) j.add_edge(a, ng + b);
    return j;
}

// One vertex per edge of g, in lexicographic order of endpoint pairs;
// adjacency iff the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    Graph l(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[static_cast<size_t>(i)];
            auto [c, d] = es[static_cast<size_t>(j)];
            if (a == c || a == d || b == c || b == d) l.add_edge(i, j);
        }
    return l;
}

// Subgraph induced on the given vertices, renumbered 0..k-1 in list order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    int k = static_cast<int>(vertices.size());
    Graph s(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(j)]))
                s.add_edge(i, j);
    return s;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    return induced_subgraph(g, vertices.to_vector());
}

inline Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size does not match vertex count");
    Graph h(n);
    for (auto [u, v] : g.edges())
        h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return h;
}

}  // namespace cliquereconf
