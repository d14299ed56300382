#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sudoku_chroma/errors.hpp"

namespace sudoku_chroma {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on dense vertex ids 0..order-1.
// Edges are stored sorted with u < v.  Labels are display metadata only;
// structural equality ignores them.
class Graph {
public:
    explicit Graph(int order, std::vector<Edge> edges = {}, std::vector<std::string> labels = {})
        : order_(order), labels_(std::move(labels)) {
        if (order_ < 1) throw Error("graph order must be at least 1");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != order_)
            throw Error("label vector size does not match graph order");
        if (labels_.empty()) labels_.resize(order_);

        for (auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= order_ || v >= order_)
                throw Error("edge endpoint out of range");
            if (u == v) throw Error("self-loops are not allowed");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw Error("duplicate edge");
        edges_ = std::move(edges);

        adj_.resize(order_);
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& row : adj_) std::sort(row.begin(), row.end());
    }

    int order() const { return order_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }

    bool adjacent(int u, int v) const {
        const auto& row = adj_[check(u)];
        return std::binary_search(row.begin(), row.end(), check(v));
    }

    // Sorted lexicographically, each pair with u < v.  This order also fixes
    // the vertex numbering of the line graph.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::string& label(int v) const { return labels_[check(v)]; }

    bool operator==(const Graph& other) const {
        return order_ == other.order_ && edges_ == other.edges_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int check(int v) const {
        if (v < 0 || v >= order_) throw Error("vertex id " + std::to_string(v) + " out of range");
        return v;
    }

    int order_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

// New graph with vertex v renamed to perm[v].  perm must be a bijection on 0..order-1.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw Error("relabel permutation has wrong size");
    std::vector<bool> seen(g.order(), false);
    for (int image : perm) {
        if (image < 0 || image >= g.order() || seen[image])
            throw Error("relabel argument is not a bijection on vertex ids");
        seen[image] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    std::vector<std::string> labels(g.order());
    for (int v = 0; v < g.order(); ++v) labels[perm[v]] = g.label(v);
    return Graph(g.order(), std::move(edges), std::move(labels));
}

inline bool is_connected(const Graph& g) {
    std::vector<bool> seen(g.order(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == g.order();
}

}  // namespace sudoku_chroma
