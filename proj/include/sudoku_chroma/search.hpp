#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sudoku_chroma/chromatic.hpp"
#include "sudoku_chroma/extension.hpp"
#include "sudoku_chroma/forced_sets.hpp"
#include "sudoku_chroma/graph.hpp"

namespace sudoku_chroma {

struct SearchOptions {
    int order_cap = 16;           // refuse exhaustive search above this order
    double budget_seconds = 300;  // wall-clock limit; <= 0 disables it
    int threads = 0;              // 0: SUDOKU_CHROMA_THREADS, then hardware
    bool canonical_colors = true; // color symmetry breaking (off only for tests)
};

struct SearchCertificate {
    int chi = 0;
    int start_size = 0;  // forced lower bound; every size in [start_size, sn) was exhausted
    std::uint64_t subsets_tried = 0;
    std::uint64_t colorings_tried = 0;
    std::uint64_t extension_calls = 0;
};

struct SudokuWitness {
    int sn = 0;
    std::vector<int> clue_set;
    PartialColoring clue_coloring;
    SearchCertificate certificate;
};

struct CoronaBounds {
    int lower = 0;
    int upper = 0;
    int sn_g = 0;  // exact Sudoku number of the left factor
};

inline int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SUDOKU_CHROMA_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace detail {

using Clock = std::chrono::steady_clock;

// Candidate clue sets of size s: supersets of `must` that hit every edge
// constraint, listed in lexicographic order of the full sorted set.  Merging
// the fixed `must` into lexicographically ordered combinations of the free
// vertices preserves that order.
inline std::vector<std::vector<int>> candidate_subsets(const Graph& g, const ForcedSets& fs,
                                                       int s) {
    std::vector<std::vector<int>> out;
    const int need = s - static_cast<int>(fs.must_include.size());
    if (need < 0) return out;
    std::vector<bool> is_must(g.order(), false);
    for (int v : fs.must_include) is_must[v] = true;
    std::vector<int> free_vertices;
    for (int v = 0; v < g.order(); ++v)
        if (!is_must[v]) free_vertices.push_back(v);
    if (need > static_cast<int>(free_vertices.size())) return out;

    std::vector<int> pick(need);
    std::vector<bool> chosen(g.order(), false);
    auto emit = [&]() {
        for (const auto& [u, v] : fs.edge_constraints)
            if (!chosen[u] && !chosen[v]) return;
        std::vector<int> subset = fs.must_include;
        for (int v : pick) subset.push_back(v);
        std::sort(subset.begin(), subset.end());
        out.push_back(std::move(subset));
    };
    auto choose = [&](auto&& self, int slot, int from) -> void {
        if (slot == need) {
            emit();
            return;
        }
        for (int i = from; i <= static_cast<int>(free_vertices.size()) - (need - slot); ++i) {
            pick[slot] = free_vertices[i];
            chosen[free_vertices[i]] = true;
            self(self, slot + 1, i + 1);
            chosen[free_vertices[i]] = false;
        }
    };
    choose(choose, 0, 0);
    return out;
}

struct SubsetOutcome {
    bool found = false;
    std::vector<int> clue_colors;  // colors of the subset vertices, in subset order
    std::uint64_t colorings = 0;
    std::uint64_t extension_calls = 0;
};

// Try every proper coloring of g[subset] over {1..k} in lexicographic order
// and return the first one whose extension is unique.  With canonical
// enumeration the i-th newly used color may be at most one above the current
// maximum; unique extendability is invariant under palette permutations, so
// scanning one orbit representative decides the whole orbit, and the
// representative found first is the lexicographically least Sudoku coloring
// on the subset.
inline SubsetOutcome try_subset(const Graph& g, int k, const std::vector<int>& subset,
                                bool canonical) {
    SubsetOutcome outcome;
    const int t = static_cast<int>(subset.size());
    std::vector<int> colors(g.order(), 0);
    std::vector<int> assigned(t, 0);
    auto dfs = [&](auto&& self, int pos, int max_used) -> bool {
        if (pos == t) {
            ++outcome.colorings;
            if (unique_dense(g, k, colors, &outcome.extension_calls)) {
                outcome.found = true;
                outcome.clue_colors.assign(assigned.begin(), assigned.end());
                return true;
            }
            return false;
        }
        const int v = subset[pos];
        const int limit = canonical ? std::min(k, max_used + 1) : k;
        for (int c = 1; c <= limit; ++c) {
            bool clashes = false;
            for (int u : g.neighbors(v))
                if (colors[u] == c) {
                    clashes = true;
                    break;
                }
            if (clashes) continue;
            colors[v] = c;
            assigned[pos] = c;
            if (self(self, pos + 1, std::max(max_used, c))) return true;
            colors[v] = 0;
        }
        return false;
    };
    dfs(dfs, 0, 0);
    return outcome;
}

}  // namespace detail

// Exact Sudoku number of a connected graph by size-ascending exhaustive
// search over clue sets, restricted to candidates compatible with
// forced_sets().  Ties break toward the lexicographically smallest clue set
// and then the lexicographically smallest clue coloring, independent of the
// number of worker threads.
inline SudokuWitness sudoku_number(const Graph& g, const SearchOptions& options = {}) {
    if (!is_connected(g))
        throw UnsupportedGraphError("exhaustive search requires a connected graph");
    if (g.order() > options.order_cap)
        throw BudgetError("order " + std::to_string(g.order()) + " exceeds the search cap of " +
                          std::to_string(options.order_cap));

    const int chi = chromatic_number(g);
    const ForcedSets fs = forced_sets(g, chi);
    const int threads = worker_count(options.threads);
    const auto deadline = options.budget_seconds > 0
                              ? std::optional(detail::Clock::now() +
                                              std::chrono::duration_cast<detail::Clock::duration>(
                                                  std::chrono::duration<double>(options.budget_seconds)))
                              : std::nullopt;

    SudokuWitness witness;
    witness.certificate.chi = chi;
    witness.certificate.start_size = fs.lower_bound;

    // Fixed block size keeps the processed prefix, and with it every
    // certificate counter, identical for every thread count.
    constexpr std::size_t kBlock = 128;

    for (int s = fs.lower_bound; s <= g.order(); ++s) {
        const auto candidates = detail::candidate_subsets(g, fs, s);
        std::size_t next = 0;
        while (next < candidates.size()) {
            if (deadline && detail::Clock::now() > *deadline)
                throw BudgetError("wall-clock budget exhausted at clue size " + std::to_string(s));
            const std::size_t block_end = std::min(candidates.size(), next + kBlock);
            std::vector<detail::SubsetOutcome> outcomes(block_end - next);
            auto work = [&](std::size_t worker) {
                for (std::size_t i = next + worker; i < block_end; i += threads)
                    outcomes[i - next] =
                        detail::try_subset(g, chi, candidates[i], options.canonical_colors);
            };
            if (threads <= 1 || block_end - next <= 1) {
                for (std::size_t i = next; i < block_end; ++i)
                    outcomes[i - next] =
                        detail::try_subset(g, chi, candidates[i], options.canonical_colors);
            } else {
                std::vector<std::thread> pool;
                for (int w = 1; w < threads; ++w) pool.emplace_back(work, w);
                work(0);
                for (auto& th : pool) th.join();
            }
            witness.certificate.subsets_tried += block_end - next;
            std::size_t hit = block_end;
            for (std::size_t i = next; i < block_end; ++i) {
                witness.certificate.colorings_tried += outcomes[i - next].colorings;
                witness.certificate.extension_calls += outcomes[i - next].extension_calls;
                if (hit == block_end && outcomes[i - next].found) hit = i;
            }
            if (hit != block_end) {
                witness.sn = s;
                witness.clue_set = candidates[hit];
                witness.clue_coloring.palette_size = chi;
                const auto& colors = outcomes[hit - next].clue_colors;
                for (std::size_t j = 0; j < witness.clue_set.size(); ++j)
                    witness.clue_coloring.assignments[witness.clue_set[j]] = colors[j];
                return witness;
            }
            next = block_end;
        }
    }
    // Unreachable: the full vertex set always admits a proper chi-coloring,
    // which is trivially a Sudoku coloring.
    throw Error("exhaustive search failed to terminate");
}

// Checks a claimed clue set without searching: the clue must use the palette
// {1..chi(g)} and extend uniquely.  Establishes sn(g) <= |clue|.
inline bool sudoku_number_upper(const Graph& g, const PartialColoring& clue) {
    const int chi = chromatic_number(g);
    if (clue.palette_size != chi)
        throw ImproperColoringError("clue palette " + std::to_string(clue.palette_size) +
                                    " differs from chi = " + std::to_string(chi));
    validate_coloring(g, clue);
    return is_uniquely_extendable(g, clue);
}

// Sandwich bounds for the corona product g o h under the hypothesis
// chi(g) >= 3 and |V(h)| <= chi(g) - 2:
//   n(g)*n(h)  <=  sn(g o h)  <=  n(g)*n(h) + sn(g).
inline CoronaBounds corona_bounds(const Graph& g, const Graph& h,
                                  const SearchOptions& options = {}) {
    const int chi = chromatic_number(g);
    if (chi < 3 || h.order() > chi - 2)
        throw HypothesisError("bounds need chi(g) >= 3 and order(h) <= chi(g) - 2, got chi = " +
                              std::to_string(chi) + ", order(h) = " + std::to_string(h.order()));
    CoronaBounds bounds;
    bounds.sn_g = sudoku_number(g, options).sn;
    bounds.lower = g.order() * h.order();
    bounds.upper = bounds.lower + bounds.sn_g;
    return bounds;
}

// Cheap uniquely-extendable clue for graphs too large to search: start from a
// full proper chi-coloring and greedily drop clues while the extension stays
// unique.  Deterministic; the result size is an upper bound on sn(g).
inline PartialColoring greedy_unique_clue(const Graph& g) {
    const int chi = chromatic_number(g);
    std::vector<int> full = find_k_coloring(g, chi);
    PartialColoring clue = detail::from_dense(full, chi);
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (int v = 0; v < g.order(); ++v) {
            auto it = clue.assignments.find(v);
            if (it == clue.assignments.end()) continue;
            int saved = it->second;
            clue.assignments.erase(it);
            if (is_uniquely_extendable(g, clue)) {
                shrunk = true;
            } else {
                clue.assignments[v] = saved;
            }
        }
    }
    return clue;
}

}  // namespace sudoku_chroma
