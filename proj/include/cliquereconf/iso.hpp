#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquereconf/graph.hpp"
#include "cliquereconf/graph6.hpp"

namespace cliquereconf {

namespace detail {

using Partition = std::vector<std::vector<int>>;

// Initial label-invariant coloring: (degree, triangle count per vertex).
// Cells come out ordered by the key, vertices ascending within each cell.
inline Partition initial_partition(const Graph& g) {
    int n = g.vertex_count();
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        int tri = 0;
        g.neighbors(v).for_each(
            [&](int u) { tri += g.neighbors(v).intersection_count(g.neighbors(u)); });
        groups[{g.degree(v), tri}].push_back(v);
    }
    Partition cells;
    for (auto& [key, vs] : groups) cells.push_back(std::move(vs));
    return cells;
}

inline std::vector<std::pair<int, int>> partition_keys(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> keys;
    for (int v = 0; v < n; ++v) {
        int tri = 0;
        g.neighbors(v).for_each(
            [&](int u) { tri += g.neighbors(v).intersection_count(g.neighbors(u)); });
        keys.emplace_back(g.degree(v), tri);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

// Iterated splitting by neighbor counts per cell until equitable. Subcells
// replace their parent ordered by signature, which keeps the cell order a
// label-invariant of the colored graph.
inline void refine_partition(const Graph& g, Partition& cells) {
    int n = g.vertex_count();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<VertexSet> masks;
        masks.reserve(cells.size());
        for (const auto& c : cells) {
            VertexSet m(n);
            for (int v : c) m.set(v);
            masks.push_back(std::move(m));
        }
        Partition next;
        next.reserve(cells.size());
        for (const auto& c : cells) {
            if (c.size() <= 1) {
                next.push_back(c);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : c) {
                std::vector<int> sig(cells.size());
                for (size_t i = 0; i < cells.size(); ++i)
                    sig[i] = g.neighbors(v).intersection_count(masks[i]);
                split[sig].push_back(v);
            }
            if (split.size() > 1) changed = true;
            for (auto& [sig, vs] : split) next.push_back(std::move(vs));
        }
        cells = std::move(next);
    }
}

// Structural summary of an equitable partition: per cell, its size and the
// neighbor counts of a representative into every cell. Two isomorphic colored
// graphs refine to partitions with identical profiles.
inline std::vector<std::vector<int>> partition_profile(const Graph& g, const Partition& cells) {
    int n = g.vertex_count();
    std::vector<VertexSet> masks;
    masks.reserve(cells.size());
    for (const auto& c : cells) {
        VertexSet m(n);
        for (int v : c) m.set(v);
        masks.push_back(std::move(m));
    }
    std::vector<std::vector<int>> profile;
    profile.reserve(cells.size());
    for (const auto& c : cells) {
        std::vector<int> row;
        row.push_back(static_cast<int>(c.size()));
        for (const auto& m : masks) row.push_back(g.neighbors(c.front()).intersection_count(m));
        profile.push_back(std::move(row));
    }
    return profile;
}

// True when adjacency is constant on every cell pair (each cell internally
// complete or empty, each cross pair complete or empty). Then the graph is
// invariant under all within-cell permutations, so any within-cell order
// yields the same canonical code.
inline bool partition_homogeneous(const Graph& g, const Partition& cells) {
    int n = g.vertex_count();
    std::vector<VertexSet> masks;
    masks.reserve(cells.size());
    for (const auto& c : cells) {
        VertexSet m(n);
        for (int v : c) m.set(v);
        masks.push_back(std::move(m));
    }
    for (size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].size() <= 1) continue;
        int self = g.neighbors(cells[i].front()).intersection_count(masks[i]);
        if (self != 0 && self != static_cast<int>(cells[i].size()) - 1) return false;
        for (size_t j = 0; j < cells.size(); ++j) {
            if (i == j) continue;
            int cross = g.neighbors(cells[i].front()).intersection_count(masks[j]);
            if (cross != 0 && cross != static_cast<int>(cells[j].size())) return false;
        }
    }
    return true;
}

inline std::vector<int> positions_in_order(const Partition& cells, int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    int pos = 0;
    for (const auto& c : cells)
        for (int v : c) perm[static_cast<size_t>(v)] = pos++;
    return perm;
}

inline int pick_target_cell(const Partition& cells) {
    int target = -1;
    size_t best = SIZE_MAX;
    for (size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() > 1 && cells[i].size() < best) {
            best = cells[i].size();
            target = static_cast<int>(i);
        }
    return target;
}

inline Partition individualize(const Partition& cells, int cell_index, int v) {
    Partition out;
    out.reserve(cells.size() + 1);
    for (size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) != cell_index) {
            out.push_back(cells[i]);
            continue;
        }
        out.push_back({v});
        std::vector<int> rest;
        for (int u : cells[i])
            if (u != v) rest.push_back(u);
        out.push_back(std::move(rest));
    }
    return out;
}

inline bool mapping_preserves_adjacency(const Graph& g, const Graph& h,
                                        const std::vector<int>& map) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) !=
                h.adjacent(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]))
                return false;
    return true;
}

}  // namespace detail

struct CanonicalForm {
    std::string code;        // graph6 of the canonically relabeled graph
    std::vector<int> perm;   // perm[v] = canonical position of vertex v
};

// Individualization-refinement canonical labeling: the lexicographically
// least graph6 code over the search tree, branching on the first smallest
// non-singleton cell with lowest vertex index first.
inline CanonicalForm canonical_form(const Graph& g, int max_n = 64) {
    int n = g.vertex_count();
    if (n > max_n)
        throw std::invalid_argument("canonical_form size bound exceeded: " + std::to_string(n) +
                                    " > " + std::to_string(max_n));
    CanonicalForm best;
    std::function<void(detail::Partition)> visit = [&](detail::Partition cells) {
        detail::refine_partition(g, cells);
        int target = detail::pick_target_cell(cells);
        if (target >= 0 && detail::partition_homogeneous(g, cells)) target = -1;
        if (target < 0) {
            std::vector<int> perm = detail::positions_in_order(cells, n);
            std::string code = encode_graph6(apply_permutation(g, perm));
            if (best.code.empty() || code < best.code) {
                best.code = code;
                best.perm = std::move(perm);
            }
            return;
        }
        for (int v : cells[static_cast<size_t>(target)])
            visit(detail::individualize(cells, target, v));
    };
    visit(detail::initial_partition(g));
    if (best.code.empty()) {
        best.code = encode_graph6(g);  // n == 0
        best.perm = {};
    }
    return best;
}

// Refinement-backtracking isomorphism test. Returns a witness bijection
// (image of each vertex of g in h), verified edge-by-edge before return.
inline std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h,
                                                      int max_n = 256) {
    int n = g.vertex_count();
    if (n != h.vertex_count()) return std::nullopt;
    if (n > max_n)
        throw std::invalid_argument("are_isomorphic size bound exceeded: " + std::to_string(n) +
                                    " > " + std::to_string(max_n));
    if (n == 0) return std::vector<int>{};
    if (g.edge_count() != h.edge_count()) return std::nullopt;
    if (detail::partition_keys(g) != detail::partition_keys(h)) return std::nullopt;

    std::optional<std::vector<int>> result;
    std::function<bool(detail::Partition, detail::Partition)> visit =
        [&](detail::Partition cg, detail::Partition ch) {
            detail::refine_partition(g, cg);
            detail::refine_partition(h, ch);
            if (detail::partition_profile(g, cg) != detail::partition_profile(h, ch)) return false;
            int target = detail::pick_target_cell(cg);
            if (target >= 0 && detail::partition_homogeneous(g, cg) &&
                detail::partition_homogeneous(h, ch))
                target = -1;
            if (target < 0) {
                std::vector<int> pg = detail::positions_in_order(cg, n);
                std::vector<int> ph = detail::positions_in_order(ch, n);
                std::vector<int> inv(static_cast<size_t>(n));
                for (int v = 0; v < n; ++v) inv[static_cast<size_t>(ph[static_cast<size_t>(v)])] = v;
                std::vector<int> map(static_cast<size_t>(n));
                for (int v = 0; v < n; ++v)
                    map[static_cast<size_t>(v)] = inv[static_cast<size_t>(pg[static_cast<size_t>(v)])];
                if (!detail::mapping_preserves_adjacency(g, h, map)) return false;
                result = std::move(map);
                return true;
            }
            int v = cg[static_cast<size_t>(target)][0];
            for (int u : ch[static_cast<size_t>(target)])
                if (visit(detail::individualize(cg, target, v),
                          detail::individualize(ch, target, u)))
                    return true;
            return false;
        };

    detail::Partition cg = detail::initial_partition(g);
    detail::Partition ch = detail::initial_partition(h);
    if (cg.size() != ch.size()) return std::nullopt;
    visit(std::move(cg), std::move(ch));
    return result;
}

}  // namespace cliquereconf
