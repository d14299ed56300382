#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sudoku_chroma/coloring.hpp"
#include "sudoku_chroma/graph.hpp"

namespace sudoku_chroma {

// Greedy clique, retried from every seed vertex.  Lower bound on chi.
inline int greedy_clique_bound(const Graph& g) {
    int best = 1;
    for (int seed = 0; seed < g.order(); ++seed) {
        std::vector<int> clique{seed};
        std::vector<int> candidates = g.neighbors(seed);
        while (!candidates.empty()) {
            // Extend by the candidate of largest degree within the candidate set.
            int pick = candidates[0], pick_score = -1;
            for (int u : candidates) {
                int score = 0;
                for (int w : candidates)
                    if (w != u && g.adjacent(u, w)) ++score;
                if (score > pick_score) {
                    pick = u;
                    pick_score = score;
                }
            }
            clique.push_back(pick);
            std::vector<int> next;
            for (int u : candidates)
                if (u != pick && g.adjacent(u, pick)) next.push_back(u);
            candidates = std::move(next);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

// DSATUR greedy coloring.  Upper bound on chi.
inline int dsatur_upper_bound(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, 0);
    std::vector<ColorSet> neighbor_colors(n);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != 0) continue;
            int sat = neighbor_colors[v].size();
            if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = g.degree(v);
            }
        }
        int c = 1;
        while (neighbor_colors[pick].contains(c)) ++c;
        color[pick] = c;
        used = std::max(used, c);
        for (int u : g.neighbors(pick)) neighbor_colors[u].add(c);
    }
    return used;
}

namespace detail {

// Backtracking k-coloring search: most-saturated vertex first (ties by lower
// id), colors tried ascending, and a fresh color is allowed only when it is
// the lowest unused one (first-use symmetry breaking).
class KColoringSearch {
public:
    KColoringSearch(const Graph& g, int k) : g_(g), k_(k), color_(g.order(), 0) {}

    bool run() {
        if (k_ < 1) return false;
        return place(0, 0);
    }

    const std::vector<int>& coloring() const { return color_; }

private:
    bool place(int colored, int max_used) {
        if (colored == g_.order()) return true;
        int pick = -1, pick_options = kMaxPalette + 2;
        ColorSet pick_allowed;
        for (int v = 0; v < g_.order(); ++v) {
            if (color_[v] != 0) continue;
            ColorSet allowed = ColorSet::full(std::min(k_, max_used + 1));
            for (int u : g_.neighbors(v))
                if (color_[u] != 0) allowed.remove(color_[u]);
            if (allowed.size() < pick_options) {
                pick = v;
                pick_options = allowed.size();
                pick_allowed = allowed;
                if (pick_options == 0) return false;
            }
        }
        for (int c = 1; c <= std::min(k_, max_used + 1); ++c) {
            if (!pick_allowed.contains(c)) continue;
            color_[pick] = c;
            if (place(colored + 1, std::max(max_used, c))) return true;
            color_[pick] = 0;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
};

}  // namespace detail

inline bool k_colorable(const Graph& g, int k) {
    return detail::KColoringSearch(g, k).run();
}

// A proper k-coloring (1-based colors), or an empty vector when none exists.
// The result is deterministic for a given graph.
inline std::vector<int> find_k_coloring(const Graph& g, int k) {
    detail::KColoringSearch search(g, k);
    if (!search.run()) return {};
    return search.coloring();
}

// Exact chromatic number by branch and bound between the clique lower bound
// and the DSATUR upper bound.
inline int chromatic_number(const Graph& g) {
    int lo = greedy_clique_bound(g);
    int hi = dsatur_upper_bound(g);
    for (int k = lo; k < hi; ++k)
        if (k_colorable(g, k)) return k;
    return hi;
}

}  // namespace sudoku_chroma
