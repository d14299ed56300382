#pragma once

// Independent reference implementations for the test suite.  These share no
// search or pruning logic with the library: everything is plain odometer
// enumeration plus edge checks, so agreement is meaningful evidence.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sudoku_chroma/coloring.hpp"
#include "sudoku_chroma/graph.hpp"

namespace test_support {

using sudoku_chroma::Edge;
using sudoku_chroma::Graph;
using sudoku_chroma::PartialColoring;

// Counts proper completions of c0 by enumerating every assignment of every
// uncolored vertex and checking every edge.
inline std::uint64_t naive_count_extensions(const Graph& g, const PartialColoring& c0) {
    std::vector<int> colors(g.order(), 0);
    for (const auto& [v, c] : c0.assignments) colors[v] = c;
    std::vector<int> free_vertices;
    for (int v = 0; v < g.order(); ++v)
        if (colors[v] == 0) free_vertices.push_back(v);
    const int k = c0.palette_size;
    std::vector<int> digits(free_vertices.size(), 1);
    std::uint64_t count = 0;
    while (true) {
        for (std::size_t i = 0; i < free_vertices.size(); ++i) colors[free_vertices[i]] = digits[i];
        bool proper = true;
        for (const auto& [u, v] : g.edges())
            if (colors[u] == colors[v]) {
                proper = false;
                break;
            }
        if (proper) ++count;
        std::size_t pos = 0;
        while (pos < digits.size() && digits[pos] == k) digits[pos++] = 1;
        if (pos == digits.size()) break;
        ++digits[pos];
    }
    return count;
}

// Counts proper colorings where vertex v may only use lists[v].
inline std::uint64_t naive_count_list_colorings(const Graph& g,
                                                const std::vector<std::vector<int>>& lists) {
    std::vector<std::size_t> choice(g.order(), 0);
    std::vector<int> colors(g.order(), 0);
    std::uint64_t count = 0;
    while (true) {
        for (int v = 0; v < g.order(); ++v) colors[v] = lists[v][choice[v]];
        bool proper = true;
        for (const auto& [u, v] : g.edges())
            if (colors[u] == colors[v]) {
                proper = false;
                break;
            }
        if (proper) ++count;
        int pos = 0;
        while (pos < g.order() && choice[pos] + 1 == lists[pos].size()) choice[pos++] = 0;
        if (pos == g.order()) break;
        ++choice[pos];
    }
    return count;
}

// Random connected graph: a random spanning tree plus random extra edges.
inline Graph random_connected_graph(std::mt19937& rng, int min_order, int max_order) {
    const int n = std::uniform_int_distribution<int>(min_order, max_order)(rng);
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    for (int v = 1; v < n; ++v) {
        const int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
        edges.emplace_back(parent, v);
        present[parent][v] = true;
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double density = coin(rng) * 0.5;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present[u][v] && coin(rng) < density) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// Random proper partial coloring over {1..k}: visits vertices in random
// order, keeps each with some probability, and only assigns colors free among
// already-assigned neighbors.
inline PartialColoring random_partial_coloring(std::mt19937& rng, const Graph& g, int k) {
    PartialColoring c;
    c.palette_size = k;
    std::vector<int> order(g.order());
    for (int v = 0; v < g.order(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double keep = coin(rng);
    for (int v : order) {
        if (coin(rng) > keep) continue;
        std::vector<int> viable;
        for (int color = 1; color <= k; ++color) {
            bool clashes = false;
            for (int u : g.neighbors(v))
                if (c.color_or_zero(u) == color) {
                    clashes = true;
                    break;
                }
            if (!clashes) viable.push_back(color);
        }
        if (viable.empty()) continue;
        c.assignments[v] =
            viable[std::uniform_int_distribution<std::size_t>(0, viable.size() - 1)(rng)];
    }
    return c;
}

}  // namespace test_support
