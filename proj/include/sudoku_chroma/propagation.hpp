#pragma once

#include <cstdint>
#include <vector>

#include "sudoku_chroma/coloring.hpp"
#include "sudoku_chroma/graph.hpp"

namespace sudoku_chroma {

enum class Verdict { NotUnique, Inconclusive };

inline const char* to_string(Verdict v) {
    return v == Verdict::NotUnique ? "NotUnique" : "Inconclusive";
}

// Fixpoint of singleton-list forcing on top of c0.  Every assignment added
// here is present in every extension of c0, so the result can be used in
// place of c0 by any downstream exact routine.
struct PropagationResult {
    PartialColoring coloring;
    ColorListMap lists;            // remaining candidates per uncolored vertex
    bool contradiction = false;    // some list became empty: c0 has no extension
    int empty_vertex = -1;
};

namespace detail {

// colors[v] in 0..k, 0 = uncolored.  On return, lists[v] holds the candidate
// set of every still-uncolored v.  Returns false on contradiction.
inline bool propagate_dense(const Graph& g, int k, std::vector<int>& colors,
                            std::vector<ColorSet>& lists, int* empty_vertex = nullptr) {
    const int n = g.order();
    lists.assign(n, ColorSet{});
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        if (colors[v] != 0) continue;
        ColorSet list = ColorSet::full(k);
        for (int u : g.neighbors(v))
            if (colors[u] != 0) list.remove(colors[u]);
        lists[v] = list;
        if (list.empty()) {
            if (empty_vertex) *empty_vertex = v;
            return false;
        }
        if (list.size() == 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (colors[v] != 0) continue;
        int c = lists[v].lowest();
        colors[v] = c;
        lists[v] = ColorSet{};
        for (int u : g.neighbors(v)) {
            if (colors[u] != 0 || !lists[u].contains(c)) continue;
            lists[u].remove(c);
            if (lists[u].empty()) {
                if (empty_vertex) *empty_vertex = u;
                return false;
            }
            if (lists[u].size() == 1) queue.push_back(u);
        }
    }
    return true;
}

// Component scan shared by the two residual oracles.  Calls `examine` with
// (component vertices, edge count within the component, max degree within).
template <class Examine>
inline bool scan_uncolored_components(const Graph& g, const std::vector<int>& colors,
                                      Examine&& examine) {
    const int n = g.order();
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (colors[start] != 0 || seen[start]) continue;
        std::vector<int> component{start};
        seen[start] = true;
        for (std::size_t i = 0; i < component.size(); ++i)
            for (int u : g.neighbors(component[i]))
                if (colors[u] == 0 && !seen[u]) {
                    seen[u] = true;
                    component.push_back(u);
                }
        int edge_count = 0, max_degree = 0;
        for (int v : component) {
            int d = 0;
            for (int u : g.neighbors(v))
                if (colors[u] == 0) ++d;
            edge_count += d;
            max_degree = std::max(max_degree, d);
        }
        edge_count /= 2;
        if (examine(component, edge_count, max_degree)) return true;
    }
    return false;
}

// A residual component that is a path with every candidate list of size >= 2
// admits at least two list colorings, so the overall extension count is not 1.
inline bool residual_paths_not_unique(const Graph& g, const std::vector<int>& colors,
                                      const std::vector<ColorSet>& lists) {
    return scan_uncolored_components(
        g, colors, [&](const std::vector<int>& comp, int edges, int max_deg) {
            if (edges != static_cast<int>(comp.size()) - 1 || max_deg > 2) return false;
            for (int v : comp)
                if (lists[v].size() < 2) return false;
            return true;
        });
}

// Same conclusion for a residual cycle whose lists all have size >= 2 and
// jointly fit inside a 3-color subset of the palette.
inline bool residual_cycles_not_unique(const Graph& g, const std::vector<int>& colors,
                                       const std::vector<ColorSet>& lists) {
    return scan_uncolored_components(
        g, colors, [&](const std::vector<int>& comp, int edges, int max_deg) {
            if (comp.size() < 3 || edges != static_cast<int>(comp.size()) || max_deg != 2)
                return false;
            ColorSet joint;
            for (int v : comp) {
                if (lists[v].size() < 2) return false;
                joint.bits |= lists[v].bits;
            }
            return joint.size() <= 3;
        });
}

}  // namespace detail

inline PropagationResult propagate(const Graph& g, const PartialColoring& c0) {
    validate_coloring(g, c0);
    std::vector<int> colors = detail::to_dense(g, c0);
    std::vector<ColorSet> lists;
    PropagationResult result;
    int empty_vertex = -1;
    bool ok = detail::propagate_dense(g, c0.palette_size, colors, lists, &empty_vertex);
    result.coloring = detail::from_dense(colors, c0.palette_size);
    if (!ok) {
        result.contradiction = true;
        result.empty_vertex = empty_vertex;
        return result;
    }
    for (int v = 0; v < g.order(); ++v)
        if (colors[v] == 0) result.lists.lists[v] = lists[v];
    return result;
}

namespace detail {

inline std::vector<ColorSet> lists_to_dense(const Graph& g, const PartialColoring& c0,
                                            const ColorListMap& lists) {
    std::vector<ColorSet> dense(g.order());
    for (const auto& [v, list] : lists.lists) {
        if (v < 0 || v >= g.order()) throw Error("list vertex out of range");
        if (c0.assigned(v)) throw Error("vertex " + std::to_string(v) + " is colored but has a list");
        dense[v] = list;
    }
    return dense;
}

}  // namespace detail

// The two oracles expect `lists` to already fold in every colored neighbor of
// an uncolored vertex, which is exactly what propagate() returns.
inline Verdict residual_path_check(const Graph& g, const PartialColoring& c0,
                                   const ColorListMap& lists) {
    validate_coloring(g, c0);
    std::vector<int> colors = detail::to_dense(g, c0);
    return detail::residual_paths_not_unique(g, colors, detail::lists_to_dense(g, c0, lists))
               ? Verdict::NotUnique
               : Verdict::Inconclusive;
}

inline Verdict residual_cycle_check(const Graph& g, const PartialColoring& c0,
                                    const ColorListMap& lists) {
    validate_coloring(g, c0);
    std::vector<int> colors = detail::to_dense(g, c0);
    return detail::residual_cycles_not_unique(g, colors, detail::lists_to_dense(g, c0, lists))
               ? Verdict::NotUnique
               : Verdict::Inconclusive;
}

}  // namespace sudoku_chroma
