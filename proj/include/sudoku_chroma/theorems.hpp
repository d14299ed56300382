#pragma once

#include <string>
#include <vector>

#include "sudoku_chroma/chromatic.hpp"
#include "sudoku_chroma/coloring.hpp"
#include "sudoku_chroma/families.hpp"
#include "sudoku_chroma/graph.hpp"

namespace sudoku_chroma {

// Catalog of closed-form Sudoku-number results shipped with the tool.  Each
// entry builds the target graph together with the clue coloring that attains
// the formula; verification (uniqueness, forced lower bounds, exhaustive
// search where feasible) is always done by the engine, never assumed.
enum class TheoremId { T21L, T21U, T22, T23, T24, T25, T26 };

inline const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T21L: return "T21L";
        case TheoremId::T21U: return "T21U";
        case TheoremId::T22: return "T22";
        case TheoremId::T23: return "T23";
        case TheoremId::T24: return "T24";
        case TheoremId::T25: return "T25";
        case TheoremId::T26: return "T26";
    }
    return "?";
}

inline TheoremId theorem_from_string(const std::string& s) {
    if (s == "T21L") return TheoremId::T21L;
    if (s == "T21U") return TheoremId::T21U;
    if (s == "T22") return TheoremId::T22;
    if (s == "T23") return TheoremId::T23;
    if (s == "T24") return TheoremId::T24;
    if (s == "T25") return TheoremId::T25;
    if (s == "T26") return TheoremId::T26;
    throw Error("unknown theorem id '" + s + "' (expected T21L, T21U, or T22..T26)");
}

struct TheoremInstance {
    TheoremId id;
    int n = 0;
    int m = 0;             // 0 when the result has a single parameter
    std::string branch;    // which construction case applied
    Graph graph;
    PartialColoring clue;
    int formula_sn = 0;
};

namespace detail {

// Repeating pattern used by the cycle-flavored constructions: position j
// (1-based) gets color 1/2/3 as j = 1/2/0 mod 3.  When `bump_last` is set the
// final position is overridden to color 2.
inline int cyclic_pattern(int j, int n, bool bump_last) {
    if (bump_last && j == n) return 2;
    switch (j % 3) {
        case 1: return 1;
        case 2: return 2;
        default: return 3;
    }
}

}  // namespace detail

// sn(C_n o K_1) = 1 for even n, n+1 for odd n.  Rim ids 0..n-1, pendant of
// rim vertex i at n+i.
inline TheoremInstance thm22_instance(int n) {
    if (n < 3) throw InvalidSpecError("cycle corona needs n >= 3");
    TheoremInstance inst{TheoremId::T22, n, 0, "", corona(generate({Family::Cycle, n}),
                                                        generate({Family::Complete, 1})), {}, 0};
    if (n % 2 == 0) {
        inst.branch = "even";
        inst.clue.palette_size = 2;
        inst.clue.assignments[0] = 1;
        inst.formula_sn = 1;
        return inst;
    }
    const bool bump = ((n - 1) / 2) % 3 == 0;
    inst.branch = bump ? "odd, half multiple of 3" : "odd";
    inst.clue.palette_size = 3;
    inst.clue.assignments[0] = 3;
    for (int j = 1; j <= n; ++j)
        inst.clue.assignments[n + (j - 1)] = detail::cyclic_pattern(j, n, bump);
    inst.formula_sn = n + 1;
    return inst;
}

// sn(W_n o K_1) = n+1 for even n, n+3 for odd n.  Rim ids 0..n-1, hub n,
// pendant of vertex i at (n+1)+i.
inline TheoremInstance thm23_instance(int n) {
    if (n < 3) throw InvalidSpecError("wheel corona needs n >= 3 rim vertices");
    TheoremInstance inst{TheoremId::T23, n, 0, "", corona(generate({Family::Wheel, n}),
                                                         generate({Family::Complete, 1})), {}, 0};
    const int hub = n;
    const int hub_pendant = 2 * n + 1;
    auto rim_pendant = [n](int j) { return (n + 1) + (j - 1); };
    if (n % 2 == 0) {
        inst.branch = "even";
        inst.clue.palette_size = 3;
        inst.clue.assignments[hub_pendant] = 1;
        inst.clue.assignments[rim_pendant(1)] = 1;
        for (int j = 2; j <= n; ++j) inst.clue.assignments[rim_pendant(j)] = 2;
        inst.formula_sn = n + 1;
        return inst;
    }
    const bool bump = ((n - 1) / 2) % 3 == 0;
    inst.branch = bump ? "odd, half multiple of 3" : "odd";
    inst.clue.palette_size = 4;
    inst.clue.assignments[hub] = 4;
    inst.clue.assignments[0] = 3;  // rim v_1
    inst.clue.assignments[hub_pendant] = 1;
    for (int j = 1; j <= n; ++j)
        inst.clue.assignments[rim_pendant(j)] = detail::cyclic_pattern(j, n, bump);
    inst.formula_sn = n + 3;
    return inst;
}

// sn(W_n o K_2) = n+2 for even n, 2(n+1) for odd n.  The copy owned by
// vertex i sits at (n+1)+2i and (n+1)+2i+1; the second copy vertex plays the
// primed role of the construction.
inline TheoremInstance thm24_instance(int n) {
    if (n < 4) throw InvalidSpecError("this construction needs n >= 4 rim vertices");
    TheoremInstance inst{TheoremId::T24, n, 0, "", corona(generate({Family::Wheel, n}),
                                                         generate({Family::Complete, 2})), {}, 0};
    const int hub = n;
    auto copy_first = [n](int owner) { return (n + 1) + 2 * owner; };
    const int u = copy_first(hub), u_prime = u + 1;
    if (n % 2 == 0) {
        inst.branch = "even";
        inst.clue.palette_size = 3;
        inst.clue.assignments[hub] = 3;
        inst.clue.assignments[u_prime] = 1;
        inst.clue.assignments[copy_first(0) + 1] = 1;  // primed vertex of rim v_1
        for (int j = 2; j <= n; ++j) inst.clue.assignments[copy_first(j - 1) + 1] = 3;
        inst.formula_sn = n + 2;
        return inst;
    }
    inst.branch = "odd";
    inst.clue.palette_size = 4;
    inst.clue.assignments[u] = 1;
    inst.clue.assignments[u_prime] = 4;
    inst.clue.assignments[copy_first(0)] = 1;
    for (int j = 2; j <= n; ++j) inst.clue.assignments[copy_first(j - 1)] = 2;
    for (int j = 1; j <= n - 1; ++j) inst.clue.assignments[copy_first(j - 1) + 1] = 4;
    inst.clue.assignments[copy_first(n - 1) + 1] = 1;
    inst.formula_sn = 2 * (n + 1);
    return inst;
}

// sn(K_n o K_m) = nm+n-m-1 when m <= n-2, and n(m-1)+1 when m >= n-1.
// Copy i (1-based) occupies ids n+(i-1)m .. n+im-1.  Where a case leaves a
// choice, allowed colors are assigned in ascending order to ascending ids.
inline TheoremInstance thm25_instance(int n, int m) {
    if (n < 3) throw InvalidSpecError("complete-graph corona needs n >= 3");
    if (m < 1) throw InvalidSpecError("copy size must be at least 1");
    TheoremInstance inst{TheoremId::T25, n, m, "", corona(generate({Family::Complete, n}),
                                                         generate({Family::Complete, m})), {}, 0};
    auto copy_base = [n, m](int i) { return n + (i - 1) * m; };
    if (m <= n - 2) {
        inst.branch = "m <= n-2";
        inst.clue.palette_size = n;
        for (int i = m + 2; i <= n; ++i) inst.clue.assignments[i - 1] = i;
        for (int i = 1; i <= n; ++i) {
            ColorSet allowed = ColorSet::full(n);
            allowed.remove(i);
            for (int c = m + 2; c <= n; ++c) allowed.remove(c);
            int slot = copy_base(i);
            for (int c : allowed.to_vector()) {
                if (slot >= copy_base(i) + m) break;
                inst.clue.assignments[slot++] = c;
            }
        }
        inst.formula_sn = n * m + n - m - 1;
        return inst;
    }
    inst.branch = "m >= n-1";
    inst.clue.palette_size = m + 1;
    for (int j = 0; j < m; ++j) inst.clue.assignments[copy_base(1) + j] = j + 2;
    for (int i = 2; i <= n; ++i) {
        ColorSet allowed = ColorSet::full(m + 1);
        allowed.remove(1);
        allowed.remove(i);
        int slot = copy_base(i);
        for (int c : allowed.to_vector()) inst.clue.assignments[slot++] = c;  // m-1 colors
    }
    inst.formula_sn = n * (m - 1) + 1;
    return inst;
}

// sn(C_n o P_m) = n+1 for n >= 3, m >= 2.  Path copy of rim vertex i
// occupies n+(i-1)m .. n+im-1 in path order.
inline TheoremInstance thm26_instance(int n, int m) {
    if (n < 3) throw InvalidSpecError("cycle corona needs n >= 3");
    if (m < 2) throw InvalidSpecError("path copies need m >= 2");
    TheoremInstance inst{TheoremId::T26, n, m, "", corona(generate({Family::Cycle, n}),
                                                         generate({Family::Path, m})), {}, 0};
    inst.clue.palette_size = 3;
    auto path_vertex = [n, m](int i, int j) { return n + (i - 1) * m + (j - 1); };
    inst.clue.assignments[path_vertex(1, 2)] = 2;
    if (n % 2 == 0) {
        inst.branch = "even";
        for (int i = 1; i <= n; ++i) inst.clue.assignments[path_vertex(i, 1)] = 1;
    } else {
        inst.branch = "odd";
        inst.clue.assignments[path_vertex(n, 1)] = 2;
        for (int i = 1; i <= n - 1; ++i) inst.clue.assignments[path_vertex(i, 1)] = 1;
    }
    inst.formula_sn = n + 1;
    return inst;
}

// Family with sn(G o K_1) = n(G): take G = line(C_n o K_1), a cycle c_1..c_n
// with an ear e_j glued across {c_{j-1}, c_j}, and clue only the corona
// pendants, giving the pendant of c_j and of e_j the same patterned color.
inline TheoremInstance thm21_lower_instance(int n) {
    if (n < 3) throw InvalidSpecError("line corona family needs n >= 3");
    const Graph base = corona(generate({Family::Cycle, n}), generate({Family::Complete, 1}));
    const Graph g = line_graph(base);
    TheoremInstance inst{TheoremId::T21L, n, 0, "", corona(g, generate({Family::Complete, 1})), {}, 0};
    const bool bump = n % 3 == 1;
    inst.branch = bump ? "n = 1 mod 3" : "n = 0,2 mod 3";
    inst.clue.palette_size = 3;
    auto pendant_of = [&g](int v) { return g.order() + v; };
    for (int j = 1; j <= n; ++j) {
        const int cycle_j = edge_index(base, j - 1, j % n);      // rim edge {v_j, v_j+1}
        const int ear_j = edge_index(base, j - 1, n + (j - 1));  // pendant edge at v_j
        const int color = detail::cyclic_pattern(j, n, bump);
        inst.clue.assignments[pendant_of(cycle_j)] = color;
        inst.clue.assignments[pendant_of(ear_j)] = color;
    }
    inst.formula_sn = 2 * n;
    return inst;
}

// Pendant augmentation used by the matching upper family: every vertex of g
// gains chi(g)-1 pendants, and the clue colors the pendants of v with the
// chi-1 colors different from v's color in a fixed proper chi-coloring.
// That forces all of g, so sn(augmented) = n(g) * (chi-1) once the pendant
// lower bound is checked.
struct PendantAugmented {
    Graph graph;
    PartialColoring clue;
    int formula_sn = 0;
    std::vector<int> base_coloring;  // the fixed proper coloring of g
};

inline PendantAugmented pendant_augmented(const Graph& g) {
    const int chi = chromatic_number(g);
    if (chi < 4)
        throw HypothesisError("pendant augmentation family needs chi(g) >= 4, got " +
                              std::to_string(chi));
    const int n = g.order();
    std::vector<int> base = find_k_coloring(g, chi);
    std::vector<Edge> edges(g.edges());
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back(detail::label_or_id(g, v));
    for (int v = 0; v < n; ++v)
        for (int p = 0; p < chi - 1; ++p) {
            edges.emplace_back(v, n + v * (chi - 1) + p);
            labels.push_back(detail::label_or_id(g, v) + "p" + std::to_string(p + 1));
        }
    PendantAugmented out{Graph(n * chi, std::move(edges), std::move(labels)), {}, n * (chi - 1),
                         base};
    out.clue.palette_size = chi;
    for (int v = 0; v < n; ++v) {
        ColorSet others = ColorSet::full(chi);
        others.remove(base[v]);
        int slot = n + v * (chi - 1);
        for (int c : others.to_vector()) out.clue.assignments[slot++] = c;
    }
    return out;
}

// Family meeting the corona upper bound with equality:
// sn(G' o K_1) = n(G') + sn(G') = n(g)*chi + n(g)*(chi-1) for G' the pendant
// augmentation of g.  The clue keeps G's pendant clues and colors each corona
// pendant with the smallest color its owner does not take.
inline TheoremInstance thm21_upper_instance(const Graph& g) {
    PendantAugmented aug = pendant_augmented(g);
    const int chi = aug.clue.palette_size;
    const int n = g.order();
    const int order_aug = aug.graph.order();
    TheoremInstance inst{TheoremId::T21U, n, 0, "chi=" + std::to_string(chi),
                         corona(aug.graph, generate({Family::Complete, 1})), {}, 0};
    inst.clue = aug.clue;

    // Intended extension of the pendant clue inside the augmented graph.
    std::vector<int> intended(order_aug, 0);
    for (int v = 0; v < n; ++v) intended[v] = aug.base_coloring[v];
    for (const auto& [v, c] : aug.clue.assignments) intended[v] = c;

    for (int w = 0; w < order_aug; ++w) {
        ColorSet others = ColorSet::full(chi);
        others.remove(intended[w]);
        inst.clue.assignments[order_aug + w] = others.lowest();
    }
    inst.formula_sn = n * chi + n * (chi - 1);
    return inst;
}

}  // namespace sudoku_chroma
