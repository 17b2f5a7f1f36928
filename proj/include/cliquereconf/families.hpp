#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliquereconf/graph.hpp"

namespace cliquereconf {

// Named graph families with fixed vertex numberings:
//   complete(n)              0..n-1
//   path(n)                  0-1-...-(n-1)
//   cycle(n)                 0-1-...-(n-1)-0, n >= 3
//   completebipartite(m,n)   parts 0..m-1 and m..m+n-1
//   star(n)                  center 0, leaves 1..n (= K_{1,n})
//   completemultipartite(s1,s2,...)  parts as consecutive blocks
//   book(p)                  spine 0,1; pages 2..p+1
//   friendship(p)            hub 0; triangle i uses 2i+1, 2i+2
//   cocktailparty(p)         2p vertices, partner pairs (2i,2i+1) nonadjacent
//   johnson(n,r)             r-subsets of {1..n} in colexicographic order,
//                            adjacent when the subsets meet in r-1 elements
//   rook(m,n)                cell (i,j) -> i*n+j, adjacency within row/column
//   cliqueunion(s1,s2,...)   disjoint complete blocks
//   complement(DESC)         complement of the inner family, nesting depth <= 1
enum class Family {
    Complete,
    Path,
    Cycle,
    CompleteBipartite,
    Star,
    CompleteMultipartite,
    Book,
    Friendship,
    CocktailParty,
    Johnson,
    Rook,
    CliqueUnion,
};

struct FamilyDescriptor {
    Family family = Family::Complete;
    std::vector<int> params;
    bool complemented = false;

    void validate() const;
    std::string to_string() const;
    static FamilyDescriptor parse(std::string_view text);

    friend bool operator==(const FamilyDescriptor& a, const FamilyDescriptor& b) {
        return a.family == b.family && a.params == b.params && a.complemented == b.complemented;
    }
};

namespace detail {

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Complete: return "complete";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::CompleteBipartite: return "completebipartite";
        case Family::Star: return "star";
        case Family::CompleteMultipartite: return "completemultipartite";
        case Family::Book: return "book";
        case Family::Friendship: return "friendship";
        case Family::CocktailParty: return "cocktailparty";
        case Family::Johnson: return "johnson";
        case Family::Rook: return "rook";
        case Family::CliqueUnion: return "cliqueunion";
    }
    return "?";
}

inline int param_arity(Family f) {
    switch (f) {
        case Family::CompleteBipartite:
        case Family::Johnson:
        case Family::Rook: return 2;
        case Family::CompleteMultipartite:
        case Family::CliqueUnion: return -1;  // one or more
        default: return 1;
    }
}

}  // namespace detail

inline void FamilyDescriptor::validate() const {
    int arity = detail::param_arity(family);
    if (arity >= 0 && static_cast<int>(params.size()) != arity)
        throw std::invalid_argument(std::string(detail::family_name(family)) + " expects " +
                                    std::to_string(arity) + " parameter(s)");
    if (arity < 0 && params.empty())
        throw std::invalid_argument(std::string(detail::family_name(family)) +
                                    " expects at least one parameter");
    for (int p : params)
        if (p < 1) throw std::invalid_argument("family size parameters must be >= 1");
    if (family == Family::Cycle && params[0] < 3)
        throw std::invalid_argument("cycle requires n >= 3");
    if (family == Family::Johnson) {
        int n = params[0], r = params[1];
        if (r < 1 || r > n - 1) throw std::invalid_argument("johnson requires 1 <= r <= n-1");
        if (n > 16) throw std::invalid_argument("johnson generator limited to n <= 16");
    }
}

inline std::string FamilyDescriptor::to_string() const {
    std::string inner = detail::family_name(family);
    inner += '(';
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) inner += ',';
        inner += std::to_string(params[i]);
    }
    inner += ')';
    return complemented ? "complement(" + inner + ")" : inner;
}

inline FamilyDescriptor FamilyDescriptor::parse(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    std::string_view s = compact;
    bool complemented = false;
    while (s.starts_with("complement(")) {
        if (!s.ends_with(")")) throw std::invalid_argument("unbalanced parentheses in '" + compact + "'");
        s = s.substr(11, s.size() - 12);
        complemented = !complemented;
    }

    size_t open = s.find('(');
    if (open == std::string_view::npos || !s.ends_with(")"))
        throw std::invalid_argument("expected NAME(args) in '" + compact + "'");
    std::string_view name = s.substr(0, open);
    std::string_view args = s.substr(open + 1, s.size() - open - 2);

    FamilyDescriptor d;
    d.complemented = complemented;
    bool found = false;
    for (Family f : {Family::Complete, Family::Path, Family::Cycle, Family::CompleteBipartite,
                     Family::Star, Family::CompleteMultipartite, Family::Book, Family::Friendship,
                     Family::CocktailParty, Family::Johnson, Family::Rook, Family::CliqueUnion})
        if (name == detail::family_name(f)) {
            d.family = f;
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("unknown family '" + std::string(name) + "'");

    size_t start = 0;
    while (start <= args.size()) {
        size_t comma = args.find(',', start);
        std::string_view tok = args.substr(start, comma == std::string_view::npos ? args.size() - start
                                                                                  : comma - start);
        if (tok.empty()) throw std::invalid_argument("empty parameter in '" + compact + "'");
        int value = 0;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("non-numeric parameter '" + std::string(tok) + "'");
            value = value * 10 + (c - '0');
            if (value > 1000000) throw std::invalid_argument("parameter too large");
        }
        d.params.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    d.validate();
    return d;
}

// All r-subsets of {0..n-1} in colexicographic order (= ascending bitmask).
inline std::vector<VertexSet> subsets_of_size(int n, int r) {
    std::vector<VertexSet> out;
    std::function<void(VertexSet&, int, int)> rec = [&](VertexSet& cur, int next, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - left; ++v) {
            cur.set(v);
            rec(cur, v + 1, left - 1);
            cur.reset(v);
        }
    };
    VertexSet cur(n);
    rec(cur, 0, r);
    std::sort(out.begin(), out.end());
    return out;
}

// Johnson graph builder; accepts the degenerate levels r=0 and r=n (both K_1)
// so that complete-host reconfiguration levels can be compared at every k.
inline Graph johnson_graph(int n, int r) {
    if (n < 1 || r < 0 || r > n) throw std::invalid_argument("johnson_graph requires 0 <= r <= n");
    auto subsets = subsets_of_size(n, r);
    int m = static_cast<int>(subsets.size());
    Graph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (subsets[static_cast<size_t>(i)].intersection_count(subsets[static_cast<size_t>(j)]) == r - 1)
                g.add_edge(i, j);
    return g;
}

inline Graph rook_graph(int m, int n) {
    Graph g(m * n);
    auto id = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            for (int j2 = j + 1; j2 < n; ++j2) g.add_edge(id(i, j), id(i, j2));
            for (int i2 = i + 1; i2 < m; ++i2) g.add_edge(id(i, j), id(i2, j));
        }
    return g;
}

inline Graph generate_family(const FamilyDescriptor& d) {
    d.validate();
    const auto& p = d.params;
    Graph g;
    switch (d.family) {
        case Family::Complete: {
            g = Graph(p[0]);
            for (int u = 0; u < p[0]; ++u)
                for (int v = u + 1; v < p[0]; ++v) g.add_edge(u, v);
            break;
        }
        case Family::Path: {
            g = Graph(p[0]);
            for (int v = 0; v + 1 < p[0]; ++v) g.add_edge(v, v + 1);
            break;
        }
        case Family::Cycle: {
            g = Graph(p[0]);
            for (int v = 0; v + 1 < p[0]; ++v) g.add_edge(v, v + 1);
            g.add_edge(p[0] - 1, 0);
            break;
        }
        case Family::CompleteBipartite: {
            g = Graph(p[0] + p[1]);
            for (int a = 0; a < p[0]; ++a)
                for (int b = 0; b < p[1]; ++b) g.add_edge(a, p[0] + b);
            break;
        }
        case Family::Star: {
            g = Graph(p[0] + 1);
            for (int v = 1; v <= p[0]; ++v) g.add_edge(0, v);
            break;
        }
        case Family::CompleteMultipartite: {
            int n = std::accumulate(p.begin(), p.end(), 0);
            g = Graph(n);
            std::vector<int> part(static_cast<size_t>(n));
            int v = 0;
            for (size_t i = 0; i < p.size(); ++i)
                for (int t = 0; t < p[i]; ++t) part[static_cast<size_t>(v++)] = static_cast<int>(i);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (part[static_cast<size_t>(a)] != part[static_cast<size_t>(b)]) g.add_edge(a, b);
            break;
        }
        case Family::Book: {
            g = Graph(p[0] + 2);
            g.add_edge(0, 1);
            for (int w = 2; w < p[0] + 2; ++w) {
                g.add_edge(0, w);
                g.add_edge(1, w);
            }
            break;
        }
        case Family::Friendship: {
            g = Graph(2 * p[0] + 1);
            for (int i = 0; i < p[0]; ++i) {
                g.add_edge(0, 2 * i + 1);
                g.add_edge(0, 2 * i + 2);
                g.add_edge(2 * i + 1, 2 * i + 2);
            }
            break;
        }
        case Family::CocktailParty: {
            int n = 2 * p[0];
            g = Graph(n);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (!(a / 2 == b / 2)) g.add_edge(a, b);
            break;
        }
        case Family::Johnson:
            g = johnson_graph(p[0], p[1]);
            break;
        case Family::Rook:
            g = rook_graph(p[0], p[1]);
            break;
        case Family::CliqueUnion: {
            int n = std::accumulate(p.begin(), p.end(), 0);
            g = Graph(n);
            int base = 0;
            for (int size : p) {
                for (int a = 0; a < size; ++a)
                    for (int b = a + 1; b < size; ++b) g.add_edge(base + a, base + b);
                base += size;
            }
            break;
        }
    }
    return d.complemented ? complement(g) : g;
}

// Rewrites a descriptor into the canonical representative used by the
// feasibility oracles and witness catalogue, so that coinciding families
// (K_{1,n} = star, K_{2,2} = C_4, B_1 = F_1 = K_3, J(n,1) = K_n, ...) are
// looked up once. generate_family never canonicalizes: vertex numberings
// follow the descriptor as written.
inline FamilyDescriptor canonical_descriptor(FamilyDescriptor d) {
    d.validate();
    auto make = [](Family f, std::vector<int> params, bool comp) {
        FamilyDescriptor r;
        r.family = f;
        r.params = std::move(params);
        r.complemented = comp;
        return r;
    };

    for (int round = 0; round < 8; ++round) {
        FamilyDescriptor before = d;
        auto& p = d.params;
        switch (d.family) {
            case Family::Path:
                if (p[0] <= 2) d = make(Family::Complete, {p[0]}, d.complemented);
                break;
            case Family::Cycle:
                if (p[0] == 3) d = make(Family::Complete, {3}, d.complemented);
                break;
            case Family::Star:
                if (p[0] == 1) d = make(Family::Complete, {2}, d.complemented);
                else if (p[0] == 2) d = make(Family::Path, {3}, d.complemented);
                break;
            case Family::CompleteBipartite: {
                int m = std::min(p[0], p[1]), n = std::max(p[0], p[1]);
                if (m == 1) d = make(Family::Star, {n}, d.complemented);
                else if (m == 2 && n == 2) d = make(Family::Cycle, {4}, d.complemented);
                else d = make(Family::CompleteBipartite, {m, n}, d.complemented);
                break;
            }
            case Family::CompleteMultipartite: {
                std::sort(p.begin(), p.end(), std::greater<>());
                if (p.size() == 1) {
                    // one part = edgeless graph
                    d = make(Family::CliqueUnion, std::vector<int>(static_cast<size_t>(p[0]), 1),
                             d.complemented);
                } else if (p.front() == 1) {
                    d = make(Family::Complete, {static_cast<int>(p.size())}, d.complemented);
                } else if (p.size() == 2) {
                    d = make(Family::CompleteBipartite, {p[0], p[1]}, d.complemented);
                } else if (p.front() == 2 && p.back() == 2) {
                    d = make(Family::CocktailParty, {static_cast<int>(p.size())}, d.complemented);
                }
                break;
            }
            case Family::Book:
                if (p[0] == 1) d = make(Family::Complete, {3}, d.complemented);
                break;
            case Family::Friendship:
                if (p[0] == 1) d = make(Family::Complete, {3}, d.complemented);
                break;
            case Family::CocktailParty:
                if (p[0] == 1) d = make(Family::CliqueUnion, {1, 1}, d.complemented);
                else if (p[0] == 2) d = make(Family::Cycle, {4}, d.complemented);
                else if (p[0] == 3) d = make(Family::Johnson, {4, 2}, d.complemented);
                break;
            case Family::Johnson:
                if (p[1] == 1 || p[1] == p[0] - 1) d = make(Family::Complete, {p[0]}, d.complemented);
                break;
            case Family::Rook: {
                int m = std::min(p[0], p[1]), n = std::max(p[0], p[1]);
                if (m == 1) d = make(Family::Complete, {n}, d.complemented);
                else if (m == 2 && n == 2) d = make(Family::Cycle, {4}, d.complemented);
                else d = make(Family::Rook, {m, n}, d.complemented);
                break;
            }
            case Family::CliqueUnion:
                std::sort(p.begin(), p.end(), std::greater<>());
                if (p.size() == 1) d = make(Family::Complete, {p[0]}, d.complemented);
                break;
            case Family::Complete:
                if (p[0] == 1 && d.complemented) d.complemented = false;
                break;
        }
        if (d.complemented) {
            auto& q = d.params;
            switch (d.family) {
                case Family::Complete:
                    d = make(Family::CliqueUnion, std::vector<int>(static_cast<size_t>(q[0]), 1), false);
                    break;
                case Family::Star: {
                    d = make(Family::CliqueUnion, {q[0], 1}, false);
                    break;
                }
                case Family::CompleteBipartite:
                    d = make(Family::CliqueUnion, {q[1], q[0]}, false);
                    break;
                case Family::CompleteMultipartite:
                    d = make(Family::CliqueUnion, q, false);
                    break;
                case Family::Book:
                    d = make(Family::CliqueUnion, {q[0], 1, 1}, false);
                    break;
                case Family::CocktailParty:
                    d = make(Family::CliqueUnion, std::vector<int>(static_cast<size_t>(q[0]), 2), false);
                    break;
                case Family::CliqueUnion:
                    d = make(Family::CompleteMultipartite, q, false);
                    break;
                case Family::Path:
                    if (q[0] == 3) d = make(Family::CliqueUnion, {2, 1}, false);
                    else if (q[0] == 4) d = make(Family::Path, {4}, false);
                    break;
                case Family::Cycle:
                    if (q[0] == 4) d = make(Family::CliqueUnion, {2, 2}, false);
                    else if (q[0] == 5) d = make(Family::Cycle, {5}, false);
                    break;
                default:
                    break;
            }
        }
        if (d == before) break;
    }
    return d;
}

}  // namespace cliquereconf
