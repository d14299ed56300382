#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sudoku_chroma/graph.hpp"

namespace sudoku_chroma {

// Colors are 1-based; palettes are {1..k}.  Palette sizes are capped so that
// candidate lists fit in a 32-bit mask.
constexpr int kMaxPalette = 30;

// Small set of colors drawn from {1..kMaxPalette}.
struct ColorSet {
    std::uint32_t bits = 0;

    static ColorSet full(int k) { return ColorSet{(k >= 32 ? ~0u : (1u << k) - 1u)}; }
    static ColorSet single(int c) { return ColorSet{1u << (c - 1)}; }

    bool contains(int c) const { return (bits >> (c - 1)) & 1u; }
    void add(int c) { bits |= 1u << (c - 1); }
    void remove(int c) { bits &= ~(1u << (c - 1)); }
    int size() const { return __builtin_popcount(bits); }
    bool empty() const { return bits == 0; }

    // Smallest member, 0 when empty.
    int lowest() const { return bits ? __builtin_ctz(bits) + 1 : 0; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int c = 1; c <= 32; ++c)
            if (contains(c)) out.push_back(c);
        return out;
    }

    bool operator==(const ColorSet& o) const { return bits == o.bits; }
};

// Partial proper coloring: an assignment vertex -> color for a subset of
// vertices, together with the palette size k.
struct PartialColoring {
    int palette_size = 0;
    std::map<int, int> assignments;

    bool assigned(int v) const { return assignments.count(v) != 0; }

    int color_or_zero(int v) const {
        auto it = assignments.find(v);
        return it == assignments.end() ? 0 : it->second;
    }

    int domain_size() const { return static_cast<int>(assignments.size()); }

    bool operator==(const PartialColoring& o) const {
        return palette_size == o.palette_size && assignments == o.assignments;
    }
};

// Candidate colors per uncolored vertex.
struct ColorListMap {
    std::map<int, ColorSet> lists;
};

// Result of counting extensions with an early-exit cap: exact when not
// saturated, and "at least cap" when saturated.
struct ExtensionCount {
    std::uint64_t count = 0;
    std::uint64_t cap = 0;
    bool saturated = false;
};

// Throws unless c assigns in-range vertices colors from {1..k} and no edge of
// g joins two equal assigned colors.
inline void validate_coloring(const Graph& g, const PartialColoring& c) {
    if (c.palette_size < 1) throw ImproperColoringError("palette size must be at least 1");
    if (c.palette_size > kMaxPalette)
        throw ImproperColoringError("palette size exceeds supported maximum of " +
                                    std::to_string(kMaxPalette));
    for (const auto& [v, color] : c.assignments) {
        if (v < 0 || v >= g.order())
            throw ImproperColoringError("colored vertex " + std::to_string(v) + " out of range");
        if (color < 1 || color > c.palette_size)
            throw ImproperColoringError("color " + std::to_string(color) + " of vertex " +
                                        std::to_string(v) + " outside palette 1.." +
                                        std::to_string(c.palette_size));
    }
    for (const auto& [u, v] : g.edges()) {
        int cu = c.color_or_zero(u), cv = c.color_or_zero(v);
        if (cu != 0 && cu == cv)
            throw ImproperColoringError("adjacent vertices " + std::to_string(u) + " and " +
                                        std::to_string(v) + " share color " + std::to_string(cu));
    }
}

namespace detail {

// Dense view: colors[v] in 1..k, 0 = uncolored.  Assumes c validated.
inline std::vector<int> to_dense(const Graph& g, const PartialColoring& c) {
    std::vector<int> colors(g.order(), 0);
    for (const auto& [v, color] : c.assignments) colors[v] = color;
    return colors;
}

inline PartialColoring from_dense(const std::vector<int>& colors, int k) {
    PartialColoring c;
    c.palette_size = k;
    for (int v = 0; v < static_cast<int>(colors.size()); ++v)
        if (colors[v] != 0) c.assignments[v] = colors[v];
    return c;
}

}  // namespace detail

// Coloring file format: optional first line "k <palette>", then one "vertex
// color" pair per line (0-based vertex, 1-based color).  '#' starts a comment.
// A palette passed out-of-band must agree with the file's own "k" line.
inline PartialColoring parse_coloring(std::string_view text, int palette_override = 0) {
    PartialColoring c;
    int file_palette = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool saw_assignment = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (first == "k") {
            if (saw_assignment || file_palette != 0)
                throw ParseError("palette line must come first and appear once", line_no);
            if (!(fields >> file_palette) || file_palette < 1)
                throw ParseError("expected 'k <positive palette size>'", line_no);
        } else {
            int v = 0, color = 0;
            try {
                v = std::stoi(first);
            } catch (const std::exception&) {
                throw ParseError("expected '<vertex> <color>'", line_no);
            }
            if (!(fields >> color)) throw ParseError("expected '<vertex> <color>'", line_no);
            if (v < 0) throw ParseError("vertex id must be non-negative", line_no);
            if (color < 1) throw ParseError("colors are 1-based", line_no);
            if (c.assignments.count(v))
                throw ParseError("vertex " + std::to_string(v) + " colored twice", line_no);
            c.assignments[v] = color;
            saw_assignment = true;
        }
        std::string extra;
        if (fields >> extra) throw ParseError("unexpected trailing field '" + extra + "'", line_no);
    }
    if (file_palette != 0 && palette_override != 0 && file_palette != palette_override)
        throw ParseError("palette size " + std::to_string(palette_override) +
                         " contradicts the file's k " + std::to_string(file_palette));
    c.palette_size = file_palette != 0 ? file_palette : palette_override;
    if (c.palette_size == 0)
        throw ParseError("palette size missing: add a 'k <int>' line or pass it explicitly");
    return c;
}

inline std::string serialize_coloring(const PartialColoring& c) {
    std::string out = "k " + std::to_string(c.palette_size) + "\n";
    for (const auto& [v, color] : c.assignments)
        out += std::to_string(v) + " " + std::to_string(color) + "\n";
    return out;
}

}  // namespace sudoku_chroma
