#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquereconf/feasibility.hpp"
#include "cliquereconf/iso.hpp"
#include "cliquereconf/reconfig.hpp"

namespace cliquereconf {

struct witness_error : std::runtime_error {
    enum class Kind { Infeasible, Unclassified, NoRecipe };
    witness_error(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
};

// A concrete host realizing a target family at level k under one rule,
// verified by isomorphism at construction time.
struct WitnessRecipe {
    FamilyDescriptor target;
    Rule rule = Rule::TS;
    int k = 1;
    Graph host;
    std::string provenance;
};

// The complement-of-subset bijection between J(n,r) and J(n,n-r), returned as
// the image of each vertex index and verified edge-by-edge.
inline std::vector<int> johnson_dual_map(int n, int r) {
    if (n < 2 || r < 1 || r > n - 1) throw std::invalid_argument("johnson_dual_map needs 1 <= r <= n-1");
    auto from = subsets_of_size(n, r);
    auto to = subsets_of_size(n, n - r);
    std::vector<int> map(from.size());
    VertexSet universe = VertexSet::full(n);
    for (size_t i = 0; i < from.size(); ++i) {
        VertexSet c = universe - from[i];
        auto it = std::lower_bound(to.begin(), to.end(), c);
        map[i] = static_cast<int>(it - to.begin());
    }
    Graph a = johnson_graph(n, r), b = johnson_graph(n, n - r);
    if (!detail::mapping_preserves_adjacency(a, b, map))
        throw std::logic_error("johnson duality map failed verification");
    return map;
}

namespace detail {

inline Graph complete_graph(int n) { return generate_family({Family::Complete, {n}, false}); }

// Complete multipartite host with k-1 singleton classes and one class of
// size n; its k-cliques are the n choices from the big class, pairwise
// adjacent under token jumping.
inline Graph tj_complete_gadget(int n, int k) {
    std::vector<int> parts(static_cast<size_t>(k - 1), 1);
    parts.push_back(n);
    return generate_family({Family::CompleteMultipartite, parts, false});
}

// K_{k-2} joined to a triangle-free graph X; the k-cliques are the edges of
// X plus the core, so the level-k graph is the line graph of X.
inline Graph tj_line_lift(const Graph& x, int k) {
    if (k == 2) return x;
    return join(complete_graph(k - 2), x);
}

// Core k-clique Q plus leaves x_1..x_n, x_i adjacent to all of Q except q_i.
inline Graph tj_star_gadget(int n, int k) {
    Graph g(k + n);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) g.add_edge(a, b);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < k; ++a)
            if (a != i) g.add_edge(k + i, a);
    return g;
}

// Core k-clique plus p pendant pairs w_{i,1}, w_{i,2}, each adjacent exactly
// to the core minus its i-th vertex.
inline Graph tj_friendship_gadget(int p, int k) {
    Graph g(k + 2 * p);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) g.add_edge(a, b);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < 2; ++j)
            for (int a = 0; a < k; ++a)
                if (a != i) g.add_edge(k + 2 * i + j, a);
    return g;
}

inline void verify_recipe(const WitnessRecipe& recipe, const Graph& target_graph) {
    ReconfigGraph rg = reconfig_graph(recipe.host, recipe.rule, recipe.k);
    if (rg.graph == target_graph) return;
    auto reject = [&]() {
        throw std::logic_error("witness recipe failed verification for " +
                               recipe.target.to_string() + " at k=" + std::to_string(recipe.k));
    };
    // Johnson targets realized on complete hosts at the dual level: the
    // subset-complement bijection is the isomorphism, checked edge-by-edge.
    // This works at any size, past the generic matcher's bound.
    if (recipe.target.family == Family::Johnson && !recipe.target.complemented) {
        int n = recipe.target.params[0], r = recipe.target.params[1];
        if (recipe.k == n - r && rg.graph == johnson_graph(n, recipe.k)) {
            if (!mapping_preserves_adjacency(rg.graph, target_graph,
                                             johnson_dual_map(n, recipe.k)))
                reject();
            return;
        }
    }
    if (!are_isomorphic(rg.graph, target_graph)) reject();
}

}  // namespace detail

inline WitnessRecipe ts_witness(const FamilyDescriptor& target, int k) {
    auto oracle = kts_closed(target);
    if (!oracle)
        throw witness_error(witness_error::Kind::Unclassified,
                            "no token sliding classification for " + target.to_string());
    if (!oracle->contains(k))
        throw witness_error(witness_error::Kind::Infeasible,
                            "k=" + std::to_string(k) + " is not feasible for " + target.to_string());

    FamilyDescriptor d = canonical_descriptor(target);
    Graph target_graph = generate_family(target);
    WitnessRecipe recipe;
    recipe.target = target;
    recipe.rule = Rule::TS;
    recipe.k = k;

    if (k == 1) {
        recipe.host = target_graph;
        recipe.provenance = "identity host: the level-1 graph of any host is the host itself";
    } else if (!d.complemented && d.family == Family::Complete && d.params[0] == 1) {
        recipe.host = detail::complete_graph(k);
        recipe.provenance = "complete host K_" + std::to_string(k) + ": a single k-clique";
    } else if (!d.complemented && d.family == Family::Complete && k == d.params[0] - 1) {
        recipe.host = detail::complete_graph(d.params[0]);
        recipe.provenance = "complete host: level n-1 of K_n is the Johnson graph J(n,n-1) = K_n";
    } else if (!d.complemented && d.family == Family::Friendship && k == 2) {
        recipe.host = generate_family({Family::Book, {d.params[0]}, false});
        recipe.provenance = "book host: sliding the edges of B_p gives p triangles sharing the spine";
    } else if (!d.complemented && d.family == Family::Johnson) {
        recipe.host = detail::complete_graph(d.params[0]);
        recipe.provenance = "complete host: level k of K_n is J(n,k), dual to J(n,n-k)";
    } else if (!d.complemented && d.family == Family::CliqueUnion) {
        Graph host(0);
        for (int size : d.params)
            host = disjoint_union(host, detail::complete_graph(size == 1 ? k : k + 1));
        recipe.host = host;
        recipe.provenance =
            "clique union host: K_k blocks give isolated vertices, K_{k+1} blocks give K_{k+1} components";
    } else if (d.complemented && d.family == Family::Friendship && d.params[0] == 3 && k == 2) {
        recipe.host = disjoint_union(detail::complete_graph(2), detail::complete_graph(4));
        recipe.provenance = "host K_2 + K_4: an isolated vertex plus the octahedron L(K_4)";
    } else {
        throw witness_error(witness_error::Kind::NoRecipe,
                            "no catalogued host for " + target.to_string() +
                                " at k=" + std::to_string(k));
    }

    detail::verify_recipe(recipe, target_graph);
    return recipe;
}

inline WitnessRecipe tj_witness(const FamilyDescriptor& target, int k) {
    auto oracle = ktj_closed(target);
    if (!oracle)
        throw witness_error(witness_error::Kind::Unclassified,
                            "no token jumping classification for " + target.to_string());
    if (!oracle->contains(k))
        throw witness_error(witness_error::Kind::Infeasible,
                            "k=" + std::to_string(k) + " is not feasible for " + target.to_string());

    FamilyDescriptor d = canonical_descriptor(target);
    Graph target_graph = generate_family(target);
    WitnessRecipe recipe;
    recipe.target = target;
    recipe.rule = Rule::TJ;
    recipe.k = k;

    auto line_lift_of = [&](const FamilyDescriptor& x, const std::string& what) {
        recipe.host = detail::tj_line_lift(generate_family(x), k);
        recipe.provenance = "line lift host: level k of K_{k-2} joined to " + what +
                            " is the line graph of " + what;
    };

    if (k == 1) {
        recipe.host = target_graph;
        recipe.provenance = "complete host: the level-1 graph of any host is complete";
    } else if (!d.complemented && d.family == Family::Complete) {
        recipe.host = detail::tj_complete_gadget(d.params[0], k);
        recipe.provenance =
            "complete multipartite host: k-1 singleton classes and one class of size n";
    } else if (!d.complemented && d.family == Family::Path) {
        line_lift_of({Family::Path, {d.params[0] + 1}, false}, "the path on n+1 vertices");
    } else if (!d.complemented && d.family == Family::Cycle) {
        line_lift_of({Family::Cycle, {d.params[0]}, false}, "the cycle C_n");
    } else if (!d.complemented && d.family == Family::Star) {
        recipe.host = detail::tj_star_gadget(d.params[0], k);
        recipe.provenance = "star gadget host: core k-clique plus n leaves each missing one core vertex";
    } else if (!d.complemented && d.family == Family::Book && d.params[0] == 2 && k == 2) {
        recipe.host = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
        recipe.provenance = "paw host: the line graph of a triangle with a pendant edge is the diamond";
    } else if (!d.complemented && d.family == Family::Friendship) {
        recipe.host = detail::tj_friendship_gadget(d.params[0], k);
        recipe.provenance =
            "friendship gadget host: core k-clique plus p pendant pairs sharing core subcliques";
    } else if (!d.complemented && d.family == Family::Johnson) {
        recipe.host = detail::complete_graph(d.params[0]);
        recipe.provenance = "complete host: level k of K_n is J(n,k), dual to J(n,n-k)";
    } else if (!d.complemented && d.family == Family::CliqueUnion) {
        Graph host(0);
        for (int size : d.params) host = disjoint_union(host, detail::tj_complete_gadget(size, k));
        recipe.host = host;
        recipe.provenance = "component-wise host: one complete multipartite gadget per block";
    } else if (d.complemented && d.family == Family::Path && d.params[0] == 5) {
        Graph r5 = make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}});
        recipe.host = detail::tj_line_lift(r5, k);
        recipe.provenance =
            "line lift host: the 5-edge bipartite graph on {u,v} x {x,y,z} has line graph co-P_5";
    } else if (d.complemented && d.family == Family::Cycle && d.params[0] == 6) {
        recipe.host =
            detail::tj_line_lift(generate_family({Family::CompleteBipartite, {3, 2}, false}), k);
        recipe.provenance = "line lift host: the line graph of K_{3,2} is the triangular prism co-C_6";
    } else if (d.complemented && d.family == Family::Friendship && d.params[0] == 2) {
        recipe.host = disjoint_union(
            detail::complete_graph(k),
            detail::tj_line_lift(generate_family({Family::Cycle, {4}, false}), k));
        recipe.provenance = "host K_k + lifted C_4: an isolated vertex plus the 4-cycle L(C_4)";
    } else if (d.complemented && d.family == Family::Friendship && d.params[0] == 3 && k == 2) {
        recipe.host = disjoint_union(detail::complete_graph(2), detail::complete_graph(4));
        recipe.provenance = "host K_2 + K_4: an isolated vertex plus the octahedron L(K_4)";
    } else {
        throw witness_error(witness_error::Kind::NoRecipe,
                            "no catalogued host for " + target.to_string() +
                                " at k=" + std::to_string(k));
    }

    detail::verify_recipe(recipe, target_graph);
    return recipe;
}

inline WitnessRecipe witness(Rule rule, const FamilyDescriptor& target, int k) {
    return rule == Rule::TS ? ts_witness(target, k) : tj_witness(target, k);
}

}  // namespace cliquereconf
