#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sudoku_chroma/chromatic.hpp"
#include "sudoku_chroma/extension.hpp"
#include "sudoku_chroma/forced_sets.hpp"
#include "sudoku_chroma/graph_io.hpp"
#include "sudoku_chroma/search.hpp"
#include "sudoku_chroma/theorems.hpp"

namespace sudoku_chroma {

// Outcome of checking one constructed instance against its formula.
//   Exact:     sn was certified (exhaustive search, or lower bound == clue size)
//              and equals the formula.
//   UpperOnly: the clue was verified uniquely extendable at the formula size,
//              but no matching lower-bound certificate was obtained.
//   Mismatch:  some machine check contradicted the formula or the clue.
//   Skipped:   parameters below the construction's minimum.
enum class MatchResult { Exact, UpperOnly, Mismatch, Skipped };

inline const char* to_string(MatchResult m) {
    switch (m) {
        case MatchResult::Exact: return "exact";
        case MatchResult::UpperOnly: return "upper-only";
        case MatchResult::Mismatch: return "mismatch";
        case MatchResult::Skipped: return "skipped";
    }
    return "?";
}

struct TheoremReport {
    TheoremId id = TheoremId::T22;
    int n = 0;
    int m = 0;
    std::string branch;
    int order = 0;
    int size = 0;
    int chi = 0;
    int formula_sn = 0;
    int clue_size = 0;
    bool verified_unique = false;
    int forced_lower_bound = 0;
    int exact_sn = -1;             // -1 when no exact certificate was obtained
    std::string exact_method;      // "search", "bounds", or empty
    MatchResult match = MatchResult::Mismatch;
    std::string note;
    double wall_ms = 0.0;
    SearchCertificate certificate;
    bool searched = false;
};

inline std::string instance_tag(const TheoremInstance& inst) {
    std::string tag = std::string(to_string(inst.id)) + "-n" + std::to_string(inst.n);
    if (inst.id == TheoremId::T25 || inst.id == TheoremId::T26)
        tag += "-m" + std::to_string(inst.m);
    return tag;
}

inline TheoremReport verify_instance(const TheoremInstance& inst, const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    TheoremReport rep;
    rep.id = inst.id;
    rep.n = inst.n;
    rep.m = inst.m;
    rep.branch = inst.branch;
    rep.order = inst.graph.order();
    rep.size = inst.graph.size();
    rep.formula_sn = inst.formula_sn;
    rep.clue_size = inst.clue.domain_size();
    auto finish = [&start, &rep]() -> TheoremReport& {
        rep.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        return rep;
    };

    rep.chi = chromatic_number(inst.graph);
    if (rep.chi != inst.clue.palette_size) {
        rep.note = "chromatic number " + std::to_string(rep.chi) + " differs from clue palette " +
                   std::to_string(inst.clue.palette_size);
        return finish();
    }
    if (rep.clue_size != inst.formula_sn) {
        rep.note = "clue has " + std::to_string(rep.clue_size) + " entries but formula gives " +
                   std::to_string(inst.formula_sn);
        return finish();
    }

    try {
        validate_coloring(inst.graph, inst.clue);
    } catch (const ImproperColoringError& e) {
        rep.note = std::string("clue is not a proper partial coloring: ") + e.what();
        return finish();
    }
    rep.verified_unique = is_uniquely_extendable(inst.graph, inst.clue);
    if (!rep.verified_unique) {
        rep.note = "clue does not extend uniquely";
        return finish();
    }

    rep.forced_lower_bound = forced_sets(inst.graph, rep.chi).lower_bound;
    if (rep.forced_lower_bound > inst.formula_sn) {
        rep.note = "forced lower bound " + std::to_string(rep.forced_lower_bound) +
                   " exceeds formula " + std::to_string(inst.formula_sn);
        return finish();
    }
    if (rep.forced_lower_bound == inst.formula_sn) {
        rep.exact_sn = inst.formula_sn;
        rep.exact_method = "bounds";
        rep.match = MatchResult::Exact;
        rep.note = "forced lower bound meets the verified clue size";
        return finish();
    }

    if (inst.graph.order() > options.order_cap) {
        rep.match = MatchResult::UpperOnly;
        rep.note = "order " + std::to_string(inst.graph.order()) + " above exact-search cap " +
                   std::to_string(options.order_cap);
        return finish();
    }
    try {
        SudokuWitness witness = sudoku_number(inst.graph, options);
        rep.searched = true;
        rep.certificate = witness.certificate;
        rep.exact_sn = witness.sn;
        rep.exact_method = "search";
        if (witness.sn == inst.formula_sn) {
            rep.match = MatchResult::Exact;
        } else {
            rep.match = MatchResult::Mismatch;
            rep.note = "exhaustive search found sn = " + std::to_string(witness.sn) +
                       " but formula gives " + std::to_string(inst.formula_sn);
        }
    } catch (const BudgetError& e) {
        rep.match = MatchResult::UpperOnly;
        rep.note = std::string("exact search abandoned: ") + e.what();
    }
    return finish();
}

namespace detail {

template <typename Make>
inline void sweep_one(std::vector<TheoremReport>& out, const SearchOptions& options, Make make) {
    try {
        out.push_back(verify_instance(make(), options));
    } catch (const InvalidSpecError& e) {
        TheoremReport rep;
        rep.match = MatchResult::Skipped;
        rep.note = e.what();
        out.push_back(rep);
    }
}

}  // namespace detail

struct SweepRange {
    int lo = 0;
    int hi = 0;
};

// Runs a theorem over parameter ranges.  The m range only matters for T25 and
// T26; T21U verifies the single instance built from `base`.  Parameters below
// a construction's minimum produce Skipped rows rather than aborting the run.
inline std::vector<TheoremReport> verify_sweep(TheoremId id, SweepRange n_range,
                                               SweepRange m_range, const Graph* base,
                                               const SearchOptions& options) {
    std::vector<TheoremReport> out;
    auto fix_skip = [](TheoremReport& rep, TheoremId tid, int n, int m) {
        if (rep.match == MatchResult::Skipped) {
            rep.id = tid;
            rep.n = n;
            rep.m = m;
        }
    };
    switch (id) {
        case TheoremId::T21U:
            if (base == nullptr) throw Error("T21U needs a base graph");
            detail::sweep_one(out, options, [&] { return thm21_upper_instance(*base); });
            fix_skip(out.back(), id, base->order(), 0);
            return out;
        case TheoremId::T25:
        case TheoremId::T26:
            for (int n = n_range.lo; n <= n_range.hi; ++n)
                for (int m = m_range.lo; m <= m_range.hi; ++m) {
                    detail::sweep_one(out, options, [&] {
                        return id == TheoremId::T25 ? thm25_instance(n, m)
                                                    : thm26_instance(n, m);
                    });
                    fix_skip(out.back(), id, n, m);
                }
            return out;
        default:
            for (int n = n_range.lo; n <= n_range.hi; ++n) {
                detail::sweep_one(out, options, [&] {
                    switch (id) {
                        case TheoremId::T21L: return thm21_lower_instance(n);
                        case TheoremId::T22: return thm22_instance(n);
                        case TheoremId::T23: return thm23_instance(n);
                        default: return thm24_instance(n);
                    }
                });
                fix_skip(out.back(), id, n, 0);
            }
            return out;
    }
}

inline nlohmann::ordered_json report_json(const TheoremReport& rep, bool include_timing) {
    nlohmann::ordered_json j;
    j["theorem"] = to_string(rep.id);
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["branch"] = rep.branch;
    j["order"] = rep.order;
    j["size"] = rep.size;
    j["chi"] = rep.chi;
    j["formula_sn"] = rep.formula_sn;
    j["clue_size"] = rep.clue_size;
    j["verified_unique"] = rep.verified_unique;
    j["forced_lower_bound"] = rep.forced_lower_bound;
    if (rep.exact_sn >= 0) {
        j["exact_sn"] = rep.exact_sn;
        j["exact_method"] = rep.exact_method;
    } else {
        j["exact_sn"] = nullptr;
    }
    j["match"] = to_string(rep.match);
    j["note"] = rep.note;
    if (rep.searched) {
        j["certificate"] = {{"start_size", rep.certificate.start_size},
                            {"subsets_tried", rep.certificate.subsets_tried},
                            {"colorings_tried", rep.certificate.colorings_tried},
                            {"extension_calls", rep.certificate.extension_calls}};
    }
    if (include_timing) j["wall_ms"] = rep.wall_ms;
    return j;
}

inline nlohmann::ordered_json reports_json(const std::vector<TheoremReport>& reps,
                                           bool include_timing) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reps) arr.push_back(report_json(rep, include_timing));
    return arr;
}

inline std::string reports_csv(const std::vector<TheoremReport>& reps, bool include_timing) {
    std::string out =
        "theorem,n,m,branch,order,size,chi,formula_sn,clue_size,verified_unique,"
        "forced_lower_bound,exact_sn,exact_method,match,note";
    if (include_timing) out += ",wall_ms";
    out += "\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    for (const auto& rep : reps) {
        out += std::string(to_string(rep.id)) + "," + std::to_string(rep.n) + "," +
               std::to_string(rep.m) + "," + quote(rep.branch) + "," + std::to_string(rep.order) +
               "," + std::to_string(rep.size) + "," + std::to_string(rep.chi) + "," +
               std::to_string(rep.formula_sn) + "," + std::to_string(rep.clue_size) + "," +
               (rep.verified_unique ? "true" : "false") + "," +
               std::to_string(rep.forced_lower_bound) + "," +
               (rep.exact_sn >= 0 ? std::to_string(rep.exact_sn) : "") + "," + rep.exact_method +
               "," + to_string(rep.match) + "," + quote(rep.note);
        if (include_timing) out += "," + std::to_string(rep.wall_ms);
        out += "\n";
    }
    return out;
}

// Writes <tag>.graph and <tag>.clues for an instance into `dir`.
inline void write_instance_files(const TheoremInstance& inst, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    const std::string tag = instance_tag(inst);
    std::ofstream gf(fs::path(dir) / (tag + ".graph"));
    if (!gf) throw Error("cannot write instance files under '" + dir + "'");
    gf << serialize_graph(inst.graph);
    std::ofstream cf(fs::path(dir) / (tag + ".clues"));
    cf << serialize_coloring(inst.clue);
}

}  // namespace sudoku_chroma
