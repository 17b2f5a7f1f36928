#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquereconf/graph.hpp"
#include "cliquereconf/iso.hpp"

namespace cliquereconf {

// Known counts of isomorphism classes of simple graphs on n labeled-free
// vertices; enumeration refuses to hand out a list that disagrees.
inline constexpr std::array<long long, 9> kGraphClassCounts = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};

// All isomorphism classes of graphs on 1..max_n vertices, each stored as its
// canonically labeled representative, listed in canonical-code order.
struct HostEnumeration {
    int max_n = 0;
    std::vector<std::vector<Graph>> by_n;  // by_n[n] = classes with exactly n vertices

    long long total() const {
        long long t = 0;
        for (const auto& v : by_n) t += static_cast<long long>(v.size());
        return t;
    }
};

// Builds the classes on n vertices by attaching a new vertex to every class
// on n-1 vertices with every possible neighborhood, deduplicating through
// canonical codes. Every n-vertex graph minus a vertex is an (n-1)-vertex
// graph, so the sweep is exhaustive.
inline HostEnumeration enumerate_hosts(int max_n) {
    if (max_n < 1 || max_n > 8)
        throw std::invalid_argument("host enumeration supports 1 <= max_n <= 8");
    HostEnumeration hosts;
    hosts.max_n = max_n;
    hosts.by_n.resize(static_cast<size_t>(max_n) + 1);
    hosts.by_n[1].push_back(Graph(1));
    for (int n = 2; n <= max_n; ++n) {
        std::map<std::string, Graph> classes;
        for (const Graph& g : hosts.by_n[static_cast<size_t>(n - 1)]) {
            for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                Graph h(n);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int v = 0; v < n - 1; ++v)
                    if ((mask >> v) & 1) h.add_edge(v, n - 1);
                CanonicalForm cf = canonical_form(h);
                if (!classes.contains(cf.code)) classes.emplace(cf.code, apply_permutation(h, cf.perm));
            }
        }
        for (auto& [code, g] : classes) hosts.by_n[static_cast<size_t>(n)].push_back(std::move(g));
        if (static_cast<long long>(hosts.by_n[static_cast<size_t>(n)].size()) !=
            kGraphClassCounts[static_cast<size_t>(n)])
            throw std::logic_error("host census mismatch at n=" + std::to_string(n) + ": got " +
                                   std::to_string(hosts.by_n[static_cast<size_t>(n)].size()));
    }
    return hosts;
}

}  // namespace cliquereconf
