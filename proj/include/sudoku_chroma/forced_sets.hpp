#pragma once

#include <algorithm>
#include <vector>

#include "sudoku_chroma/graph.hpp"

namespace sudoku_chroma {

// Clue-set obligations that hold for every Sudoku coloring when chi >= 3:
//   - every vertex of degree <= k-2 must be a clue (its color could otherwise
//     be traded for a spare palette color), which covers pendants;
//   - for an edge whose endpoints both have degree <= k-1, at least one
//     endpoint must be a clue.
// lower_bound combines |must_include| with a hitting-set bound over the edge
// constraints that must_include does not already hit.
struct ForcedSets {
    std::vector<int> must_include;              // sorted vertex ids
    std::vector<Edge> edge_constraints;         // both endpoints outside must_include
    int lower_bound = 0;
};

namespace detail {

// Exact minimum vertex cover of a small edge set by branching on an
// uncovered edge.  Constraints are 2-element sets, so this is the exact
// minimum hitting set.
inline void min_cover_branch(const std::vector<Edge>& edges, std::vector<bool>& covered_by,
                             int chosen, int& best) {
    if (chosen >= best) return;
    const Edge* open = nullptr;
    for (const auto& e : edges)
        if (!covered_by[e.first] && !covered_by[e.second]) {
            open = &e;
            break;
        }
    if (!open) {
        best = chosen;
        return;
    }
    for (int endpoint : {open->first, open->second}) {
        covered_by[endpoint] = true;
        min_cover_branch(edges, covered_by, chosen + 1, best);
        covered_by[endpoint] = false;
    }
}

inline int exact_hitting_bound(const std::vector<Edge>& edges, int order) {
    std::vector<bool> covered(order, false);
    int best = static_cast<int>(edges.size());
    min_cover_branch(edges, covered, 0, best);
    return best;
}

// Greedy maximal matching: pairwise disjoint constraints each need their own
// clue, giving a valid (possibly weaker) lower bound for large inputs.
inline int matching_hitting_bound(const std::vector<Edge>& edges, int order) {
    std::vector<bool> used(order, false);
    int size = 0;
    for (const auto& [u, v] : edges)
        if (!used[u] && !used[v]) {
            used[u] = used[v] = true;
            ++size;
        }
    return size;
}

}  // namespace detail

constexpr int kExactHittingLimit = 20;

inline ForcedSets forced_sets(const Graph& g, int k) {
    ForcedSets fs;
    if (k < 3) return fs;  // the degree arguments need a 3-color palette
    std::vector<bool> must(g.order(), false);
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) <= k - 2) {
            must[v] = true;
            fs.must_include.push_back(v);
        }
    for (const auto& [u, v] : g.edges())
        if (!must[u] && !must[v] && g.degree(u) <= k - 1 && g.degree(v) <= k - 1)
            fs.edge_constraints.emplace_back(u, v);
    int hitting = static_cast<int>(fs.edge_constraints.size()) <= kExactHittingLimit
                      ? detail::exact_hitting_bound(fs.edge_constraints, g.order())
                      : detail::matching_hitting_bound(fs.edge_constraints, g.order());
    fs.lower_bound = static_cast<int>(fs.must_include.size()) + hitting;
    return fs;
}

}  // namespace sudoku_chroma
