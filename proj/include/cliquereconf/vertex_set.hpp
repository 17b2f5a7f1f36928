#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliquereconf {

// Set of vertex indices drawn from a fixed universe 0..universe-1, stored as
// 64-bit words. The comparison order is the numeric value of the bit pattern,
// which for sets of equal size is colexicographic order on the members.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe), words_(static_cast<size_t>((universe + 63) / 64), 0) {}

    static VertexSet single(int universe, int v) {
        VertexSet s(universe);
        s.set(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~0ull;
        s.trim();
        return s;
    }

    int universe() const { return universe_; }

    bool test(int v) const {
        if (v < 0 || v >= universe_) return false;
        return (words_[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check_index(v);
        words_[static_cast<size_t>(v >> 6)] |= 1ull << (v & 63);
    }

    void reset(int v) {
        check_index(v);
        words_[static_cast<size_t>(v >> 6)] &= ~(1ull << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    // First member, or -1 if empty.
    int lowest() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool contains_all(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int intersection_count(const VertexSet& o) const {
        check_universe(o);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    template <typename F>
    void for_each(F f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int v = static_cast<int>(i * 64) + std::countr_zero(w);
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    // Numeric value of the bit pattern (colex on equal-size sets).
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
        for (size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ',';
            first = false;
            s += std::to_string(v);
        });
        s += '}';
        return s;
    }

private:
    void check_index(int v) const {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("vertex index " + std::to_string(v) +
                                    " outside universe of size " + std::to_string(universe_));
    }

    void check_universe(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw std::logic_error("vertex sets over different universes");
    }

    void trim() {
        int extra = static_cast<int>(words_.size()) * 64 - universe_;
        if (extra > 0 && !words_.empty()) words_.back() &= ~0ull >> extra;
    }

    int universe_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace cliquereconf
