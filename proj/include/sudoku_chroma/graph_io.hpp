#pragma once

#include <array>
#include <sstream>
#include <string>
#include <string_view>

#include "sudoku_chroma/coloring.hpp"
#include "sudoku_chroma/graph.hpp"

namespace sudoku_chroma {

// Graph file format: first significant line is the order n, every following
// significant line is an edge "u v" with 0 <= u < v < n, no duplicates.
// '#' starts a comment; blank lines are ignored.
inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int order = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        long long a = 0, b = 0;
        if (order < 0) {
            if (!(fields >> a)) continue;
            if (a < 1) throw ParseError("graph order must be at least 1", line_no);
            order = static_cast<int>(a);
        } else {
            if (!(fields >> a)) continue;
            if (!(fields >> b)) throw ParseError("expected an edge '<u> <v>'", line_no);
            if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
            if (a > b) throw ParseError("edges must be written with u < v", line_no);
            if (a < 0 || b >= order)
                throw ParseError("edge endpoint outside 0.." + std::to_string(order - 1), line_no);
            Edge e{static_cast<int>(a), static_cast<int>(b)};
            if (std::find(edges.begin(), edges.end(), e) != edges.end())
                throw ParseError("duplicate edge " + std::to_string(a) + " " + std::to_string(b),
                                 line_no);
            edges.push_back(e);
        }
        std::string extra;
        if (fields >> extra) throw ParseError("unexpected trailing field '" + extra + "'", line_no);
    }
    if (order < 0) throw ParseError("missing order line");
    return Graph(order, std::move(edges));
}

// Canonical form: order line, then edges in sorted order, LF line endings.
inline std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// Graphviz export.  Vertices keep their numeric ids (stable ordering); a
// coloring, when given, fills nodes and appends the color to the label.
inline std::string to_dot(const Graph& g, const PartialColoring* coloring = nullptr) {
    static constexpr std::array<const char*, 9> palette = {
        "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
        "#ffff33", "#a65628", "#f781bf", "#999999"};
    if (coloring) {
        for (const auto& [v, c] : coloring->assignments) {
            if (v < 0 || v >= g.order())
                throw Error("coloring refers to vertex " + std::to_string(v) +
                            ", but the graph has order " + std::to_string(g.order()));
            (void)c;
        }
    }
    std::string out = "graph g {\n  node [shape=circle, style=filled, fillcolor=white];\n";
    for (int v = 0; v < g.order(); ++v) {
        std::string name = g.label(v).empty() ? std::to_string(v) : g.label(v);
        int c = coloring ? coloring->color_or_zero(v) : 0;
        out += "  " + std::to_string(v) + " [label=\"" + name;
        if (c != 0) out += " (" + std::to_string(c) + ")";
        out += "\"";
        if (c != 0) out += std::string(", fillcolor=\"") + palette[(c - 1) % palette.size()] + "\"";
        out += "];\n";
    }
    for (const auto& [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace sudoku_chroma
