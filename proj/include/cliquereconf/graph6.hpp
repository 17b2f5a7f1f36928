#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliquereconf/graph.hpp"

namespace cliquereconf {

struct graph6_error : std::runtime_error {
    graph6_error(size_t pos, const std::string& what)
        : std::runtime_error("graph6 decode error at byte " + std::to_string(pos) + ": " + what),
          position(pos) {}
    size_t position;
};

// Standard graph6: size field (63+n for n<=62, '~'-prefixed for larger n),
// then the upper-triangle bits x(0,1),x(0,2),x(1,2),x(0,3),... packed
// big-endian into 6-bit groups, each offset by 63.
inline std::string encode_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        out += static_cast<char>(63 + ((n >> 12) & 63));
        out += static_cast<char>(63 + ((n >> 6) & 63));
        out += static_cast<char>(63 + (n & 63));
    } else if (n <= 68719476735LL) {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(63 + ((n >> shift) & 63));
    } else {
        throw std::invalid_argument("graph too large for graph6");
    }
    int group = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(63 + group);
                group = 0;
                bits = 0;
            }
        }
    if (bits > 0) out += static_cast<char>(63 + (group << (6 - bits)));
    return out;
}

inline Graph decode_graph6(std::string_view text) {
    auto byte_at = [&](size_t pos) -> int {
        if (pos >= text.size()) throw graph6_error(pos, "unexpected end of input");
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw graph6_error(pos, "byte outside printable graph6 range [63,126]");
        return c - 63;
    };

    size_t pos = 0;
    long long n;
    if (byte_at(0) == 63 && text[0] == '~') {
        if (byte_at(1) == 63 && text[1] == '~') {
            n = 0;
            for (size_t i = 2; i < 8; ++i) n = (n << 6) | byte_at(i);
            pos = 8;
        } else {
            n = 0;
            for (size_t i = 1; i < 4; ++i) n = (n << 6) | byte_at(i);
            pos = 4;
        }
    } else {
        n = byte_at(0);
        pos = 1;
    }
    if (n > (1 << 20)) throw graph6_error(0, "declared vertex count too large");

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(text.size()) != static_cast<long long>(pos) + nbytes)
        throw graph6_error(text.size(), "length does not match declared vertex count");

    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte_at(pos + static_cast<size_t>(bit / 6));
            if ((b >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    // padding bits must be zero
    if (nbits % 6 != 0) {
        int last = byte_at(text.size() - 1);
        int pad = static_cast<int>(6 - nbits % 6);
        if (last & ((1 << pad) - 1))
            throw graph6_error(text.size() - 1, "nonzero trailing padding bits");
    }
    return g;
}

// Undirected DOT output with stable vertex order. Labels, when given, must
// have one entry per vertex and are emitted verbatim (quotes escaped).
inline std::string export_dot(const Graph& g,
                              const std::optional<std::vector<std::string>>& labels = std::nullopt) {
    if (labels && static_cast<int>(labels->size()) != g.vertex_count())
        throw std::invalid_argument("label count does not match vertex count");
    auto escape = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out;
    };
    std::string dot = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        dot += "  " + std::to_string(v);
        if (labels) dot += " [label=\"" + escape((*labels)[static_cast<size_t>(v)]) + "\"]";
        dot += ";\n";
    }
    for (auto [u, v] : g.edges())
        dot += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    dot += "}\n";
    return dot;
}

}  // namespace cliquereconf
