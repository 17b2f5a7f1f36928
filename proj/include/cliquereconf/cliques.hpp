#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cliquereconf/graph.hpp"

namespace cliquereconf {

inline bool is_clique(const Graph& g, const VertexSet& s) {
    auto vs = s.to_vector();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

// All k-cliques of one host, sorted by bit pattern so that reconfiguration
// graph vertex order is reproducible.
struct CliqueFamily {
    int k = 0;
    std::vector<VertexSet> members;

    int size() const { return static_cast<int>(members.size()); }

    int index_of(const VertexSet& s) const {
        auto it = std::lower_bound(members.begin(), members.end(), s);
        if (it == members.end() || !(*it == s)) return -1;
        return static_cast<int>(it - members.begin());
    }
};

namespace detail {

// Ordered vertex extension over neighbor bit rows: candidates after picking v
// shrink to the later neighbors of v.
template <typename Sink>
void extend_cliques(const Graph& g, VertexSet& cur, VertexSet cand, int remaining, Sink&& sink) {
    if (remaining == 0) {
        sink(cur);
        return;
    }
    if (cand.count() < remaining) return;
    for (int v : cand.to_vector()) {
        cand.reset(v);
        cur.set(v);
        extend_cliques(g, cur, cand & g.neighbors(v), remaining - 1, sink);
        cur.reset(v);
    }
}

}  // namespace detail

inline CliqueFamily enumerate_k_cliques(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("clique size k must be >= 1");
    CliqueFamily fam;
    fam.k = k;
    VertexSet cur(g.vertex_count());
    detail::extend_cliques(g, cur, g.vertex_set(), k,
                           [&](const VertexSet& s) { fam.members.push_back(s); });
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

inline long long count_t_cliques(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("clique size t must be >= 1");
    long long n = 0;
    VertexSet cur(g.vertex_count());
    detail::extend_cliques(g, cur, g.vertex_set(), t, [&](const VertexSet&) { ++n; });
    return n;
}

// Bron-Kerbosch with pivoting; results sorted by bit pattern.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.vertex_count() == 0) return out;

    std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p,
                                                                  VertexSet x) {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        (p | x).for_each([&](int u) {
            int c = p.intersection_count(g.neighbors(u));
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        VertexSet ext = p - g.neighbors(pivot);
        for (int v : ext.to_vector()) {
            VertexSet r2 = r;
            r2.set(v);
            bk(std::move(r2), p & g.neighbors(v), x & g.neighbors(v));
            p.reset(v);
            x.set(v);
        }
    };
    bk(VertexSet(g.vertex_count()), g.vertex_set(), VertexSet(g.vertex_count()));
    std::sort(out.begin(), out.end());
    return out;
}

inline int clique_number(const Graph& g) {
    int w = 0;
    for (const auto& c : maximal_cliques(g)) w = std::max(w, c.count());
    return w;
}

// All k-cliques containing the (k-1)-clique core.
inline CliqueFamily star_clique(const Graph& g, int k, const VertexSet& core) {
    if (k < 1) throw std::invalid_argument("clique size k must be >= 1");
    if (core.count() != k - 1)
        throw std::invalid_argument("star core must have exactly k-1 vertices");
    if (!is_clique(g, core)) throw std::invalid_argument("star core is not a clique");
    VertexSet cand = g.vertex_set();
    core.for_each([&](int s) { cand &= g.neighbors(s); });
    cand -= core;
    CliqueFamily fam;
    fam.k = k;
    cand.for_each([&](int c) {
        VertexSet member = core;
        member.set(c);
        fam.members.push_back(member);
    });
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

// The |U| subcliques of size |U|-1 of a clique U.
inline CliqueFamily top_clique(const Graph& g, const VertexSet& u) {
    if (u.empty()) throw std::invalid_argument("top clique requires a nonempty set");
    if (!is_clique(g, u)) throw std::invalid_argument("top set is not a clique");
    CliqueFamily fam;
    fam.k = u.count() - 1;
    u.for_each([&](int v) {
        VertexSet member = u;
        member.reset(v);
        fam.members.push_back(member);
    });
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

}  // namespace cliquereconf
