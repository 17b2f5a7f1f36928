#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cliquereconf/families.hpp"
#include "cliquereconf/reconfig.hpp"

namespace cliquereconf {

// Exact feasibility set: a finite part plus an optional cofinite tail
// "all k >= t". Normal form keeps every finite element below the tail and
// absorbs elements adjacent to it, so equal sets have equal representations.
struct FeasibilitySet {
    std::vector<int> finite;
    std::optional<int> tail;

    static FeasibilitySet none() { return {}; }

    static FeasibilitySet of(std::initializer_list<int> ks) {
        FeasibilitySet s;
        s.finite.assign(ks);
        s.normalize();
        return s;
    }

    static FeasibilitySet all_from(int t) {
        FeasibilitySet s;
        s.tail = t;
        s.normalize();
        return s;
    }

    void normalize() {
        std::set<int> uniq(finite.begin(), finite.end());
        if (tail) {
            while (!uniq.empty() && *uniq.rbegin() >= *tail) uniq.erase(std::prev(uniq.end()));
            while (!uniq.empty() && *uniq.rbegin() == *tail - 1) {
                uniq.erase(std::prev(uniq.end()));
                --*tail;
            }
        }
        finite.assign(uniq.begin(), uniq.end());
    }

    bool contains(int k) const {
        if (tail && k >= *tail) return true;
        return std::binary_search(finite.begin(), finite.end(), k);
    }

    bool empty() const { return finite.empty() && !tail; }

    friend bool operator==(const FeasibilitySet& a, const FeasibilitySet& b) {
        return a.finite == b.finite && a.tail == b.tail;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["finite"] = finite;
        j["tail"] = tail ? nlohmann::json(*tail) : nlohmann::json(nullptr);
        return j;
    }

    static FeasibilitySet from_json(const nlohmann::json& j) {
        FeasibilitySet s;
        s.finite = j.at("finite").get<std::vector<int>>();
        if (!j.at("tail").is_null()) s.tail = j.at("tail").get<int>();
        s.normalize();
        return s;
    }

    std::string to_string() const {
        if (empty()) return "{}";
        std::string out;
        if (!finite.empty()) {
            out = "{";
            for (size_t i = 0; i < finite.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(finite[i]);
            }
            out += "}";
        }
        if (tail) {
            if (!out.empty()) out += " u ";
            out += "{k >= " + std::to_string(*tail) + "}";
        }
        return out;
    }
};

namespace detail {

// Disjoint unions of cliques under token sliding: besides the trivial level,
// a level k >= 2 works exactly when every block size is 1 or k+1.
inline FeasibilitySet kts_clique_union(const std::vector<int>& sizes) {
    std::set<int> big;
    for (int s : sizes)
        if (s > 1) big.insert(s);
    if (big.empty()) return FeasibilitySet::all_from(1);
    if (big.size() == 1 && *big.begin() >= 3) return FeasibilitySet::of({1, *big.begin() - 1});
    return FeasibilitySet::of({1});
}

inline FeasibilitySet kts_johnson(int n, int r) {
    int s = std::min(r, n - r);
    if (n == 2) return FeasibilitySet::of({1});
    if (s == 1) return FeasibilitySet::of({1, n - 1});
    if (n == 2 * s) return FeasibilitySet::of({1, s});
    return FeasibilitySet::of({1, s, n - s});
}

inline FeasibilitySet ktj_johnson(int n, int r) {
    int s = std::min(r, n - r);
    if (s == 1) return FeasibilitySet::all_from(1);
    if (n == 2 * s) return FeasibilitySet::of({s});
    return FeasibilitySet::of({s, n - s});
}

}  // namespace detail

// Closed-form token sliding feasibility oracle. Returns nullopt for
// descriptors outside the classified families.
inline std::optional<FeasibilitySet> kts_closed(const FamilyDescriptor& input) {
    FamilyDescriptor d = canonical_descriptor(input);
    const auto& p = d.params;
    if (!d.complemented) {
        switch (d.family) {
            case Family::Complete:
                if (p[0] == 1) return FeasibilitySet::all_from(1);
                if (p[0] == 2) return FeasibilitySet::of({1});
                return FeasibilitySet::of({1, p[0] - 1});
            case Family::Path:
            case Family::Cycle:
            case Family::Star:
            case Family::CompleteBipartite:
                return FeasibilitySet::of({1});
            case Family::Book:
                return FeasibilitySet::of({1});  // p >= 2 after canonicalization
            case Family::Friendship:
                return FeasibilitySet::of({1, 2});
            case Family::Johnson:
                return detail::kts_johnson(p[0], p[1]);
            case Family::CliqueUnion:
                return detail::kts_clique_union(p);
            default:
                return std::nullopt;
        }
    }
    switch (d.family) {
        case Family::Path:
        case Family::Cycle:
            return FeasibilitySet::of({1});  // n >= 5 / n >= 6 after canonicalization
        case Family::Friendship:
            if (p[0] == 3) return FeasibilitySet::of({1, 2});
            return FeasibilitySet::of({1});  // p = 2 or p >= 4
        default:
            return std::nullopt;
    }
}

// Closed-form token jumping feasibility oracle.
inline std::optional<FeasibilitySet> ktj_closed(const FamilyDescriptor& input) {
    FamilyDescriptor d = canonical_descriptor(input);
    const auto& p = d.params;
    if (!d.complemented) {
        switch (d.family) {
            case Family::Complete:
                return FeasibilitySet::all_from(1);
            case Family::Path:
            case Family::Cycle:
                return FeasibilitySet::all_from(2);
            case Family::Star:
                return FeasibilitySet::all_from(p[0]);  // n >= 3 after canonicalization
            case Family::CompleteBipartite:
                return FeasibilitySet::none();  // 2 <= m <= n, n >= 3 after canonicalization
            case Family::Book:
                if (p[0] == 2) return FeasibilitySet::of({2});
                return FeasibilitySet::none();
            case Family::Friendship:
                return FeasibilitySet::all_from(p[0]);  // p >= 2 after canonicalization
            case Family::Johnson:
                return detail::ktj_johnson(p[0], p[1]);
            case Family::CliqueUnion:
                return FeasibilitySet::all_from(2);  // >= 2 blocks after canonicalization
            default:
                return std::nullopt;
        }
    }
    switch (d.family) {
        case Family::Path:
            if (p[0] == 5) return FeasibilitySet::all_from(2);
            return FeasibilitySet::none();  // n >= 6
        case Family::Cycle:
            if (p[0] == 6) return FeasibilitySet::all_from(2);
            return FeasibilitySet::none();  // n >= 7
        case Family::Friendship:
            if (p[0] == 2) return FeasibilitySet::all_from(2);
            if (p[0] == 3) return FeasibilitySet::of({2});
            return FeasibilitySet::none();  // p >= 4
        default:
            return std::nullopt;
    }
}

inline std::optional<FeasibilitySet> feasibility_closed(Rule rule, const FamilyDescriptor& d) {
    return rule == Rule::TS ? kts_closed(d) : ktj_closed(d);
}

}  // namespace cliquereconf
