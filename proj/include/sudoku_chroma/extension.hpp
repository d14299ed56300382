#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "sudoku_chroma/coloring.hpp"
#include "sudoku_chroma/graph.hpp"
#include "sudoku_chroma/propagation.hpp"

namespace sudoku_chroma {

constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

namespace detail {

// Backtracking extension counter over candidate lists, always branching on a
// smallest-list vertex (ties by lower id).  Counts every labeled proper
// completion, stopping once `cap` is reached.
class ExtensionCounter {
public:
    ExtensionCounter(const Graph& g, int k) : g_(g), k_(k) {}

    std::uint64_t count(std::vector<int> colors, std::uint64_t cap,
                        std::vector<int>* first_extension = nullptr) {
        colors_ = std::move(colors);
        cap_ = cap;
        count_ = 0;
        trail_.clear();
        first_extension_ = first_extension;
        if (cap_ == 0) return 0;
        lists_.assign(g_.order(), ColorSet{});
        uncolored_ = 0;
        for (int v = 0; v < g_.order(); ++v) {
            if (colors_[v] != 0) continue;
            ++uncolored_;
            ColorSet list = ColorSet::full(k_);
            for (int u : g_.neighbors(v))
                if (colors_[u] != 0) list.remove(colors_[u]);
            if (list.empty()) return 0;
            lists_[v] = list;
        }
        descend();
        return count_;
    }

private:
    // Returns true when the cap was reached and the search should unwind.
    bool descend() {
        if (uncolored_ == 0) {
            ++count_;
            if (first_extension_ && count_ == 1) *first_extension_ = colors_;
            return count_ >= cap_;
        }
        int pick = -1, pick_size = kMaxPalette + 2;
        for (int v = 0; v < g_.order(); ++v) {
            if (colors_[v] != 0) continue;
            if (lists_[v].size() < pick_size) {
                pick = v;
                pick_size = lists_[v].size();
                if (pick_size <= 1) break;
            }
        }
        const ColorSet options = lists_[pick];
        --uncolored_;
        for (int c = 1; c <= k_; ++c) {
            if (!options.contains(c)) continue;
            colors_[pick] = c;
            bool dead_end = false;
            const std::size_t mark = trail_.size();
            for (int u : g_.neighbors(pick)) {
                if (colors_[u] != 0 || !lists_[u].contains(c)) continue;
                lists_[u].remove(c);
                trail_.push_back(u);
                if (lists_[u].empty()) dead_end = true;
            }
            bool stop = !dead_end && descend();
            while (trail_.size() > mark) {
                lists_[trail_.back()].add(c);
                trail_.pop_back();
            }
            colors_[pick] = 0;
            if (stop) {
                ++uncolored_;
                return true;
            }
        }
        ++uncolored_;
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> colors_;
    std::vector<ColorSet> lists_;
    std::vector<int> trail_;
    std::uint64_t cap_ = 0;
    std::uint64_t count_ = 0;
    int uncolored_ = 0;
    std::vector<int>* first_extension_ = nullptr;
};

inline std::uint64_t count_dense(const Graph& g, int k, std::vector<int> colors,
                                 std::uint64_t cap, std::vector<int>* first_extension = nullptr) {
    return ExtensionCounter(g, k).count(std::move(colors), cap, first_extension);
}

// Uniqueness of the extension, accelerated by propagation and the residual
// path/cycle oracles before falling back to counting with cap 2.
inline bool unique_dense(const Graph& g, int k, std::vector<int> colors,
                         std::uint64_t* fallback_counts = nullptr) {
    std::vector<ColorSet> lists;
    if (!propagate_dense(g, k, colors, lists)) return false;
    bool total = true;
    for (int v = 0; v < g.order(); ++v)
        if (colors[v] == 0) {
            total = false;
            break;
        }
    // Propagation only makes assignments shared by every extension, and the
    // propagated coloring is itself proper, so a total result means count 1.
    if (total) return true;
    if (residual_paths_not_unique(g, colors, lists)) return false;
    if (residual_cycles_not_unique(g, colors, lists)) return false;
    if (fallback_counts) ++*fallback_counts;
    return count_dense(g, k, std::move(colors), 2) == 1;
}

}  // namespace detail

// Number of proper colorings of all of g that agree with c0, counted exactly
// up to `cap`.  Color permutations count as distinct extensions.  When
// `first_extension` is given it receives the first completion found, if any.
inline ExtensionCount count_extensions(const Graph& g, const PartialColoring& c0,
                                       std::uint64_t cap,
                                       PartialColoring* first_extension = nullptr) {
    validate_coloring(g, c0);
    ExtensionCount result;
    result.cap = cap;
    std::vector<int> first;
    result.count = detail::count_dense(g, c0.palette_size, detail::to_dense(g, c0), cap,
                                       first_extension ? &first : nullptr);
    result.saturated = cap != kNoCap && result.count >= cap;
    if (first_extension && !first.empty())
        *first_extension = detail::from_dense(first, c0.palette_size);
    return result;
}

inline bool is_uniquely_extendable(const Graph& g, const PartialColoring& c0) {
    validate_coloring(g, c0);
    return detail::unique_dense(g, c0.palette_size, detail::to_dense(g, c0));
}

// True when every extension of c0 gives the uncolored vertex v the same
// color.  Throws when c0 has no extension at all.
inline bool is_uce(const Graph& g, const PartialColoring& c0, int v) {
    validate_coloring(g, c0);
    if (v < 0 || v >= g.order()) throw Error("vertex id out of range");
    if (c0.assigned(v)) throw Error("vertex " + std::to_string(v) + " is already colored");
    std::vector<int> colors = detail::to_dense(g, c0);
    if (detail::count_dense(g, c0.palette_size, colors, 1) == 0)
        throw Error("coloring has no extension, so no vertex is forced");
    int viable = 0;
    for (int c = 1; c <= c0.palette_size && viable < 2; ++c) {
        bool clashes = false;
        for (int u : g.neighbors(v))
            if (colors[u] == c) {
                clashes = true;
                break;
            }
        if (clashes) continue;
        colors[v] = c;
        if (detail::count_dense(g, c0.palette_size, colors, 1) > 0) ++viable;
        colors[v] = 0;
    }
    return viable == 1;
}

}  // namespace sudoku_chroma
