#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sudoku_chroma/extension.hpp"
#include "sudoku_chroma/families.hpp"
#include "sudoku_chroma/graph_io.hpp"
#include "sudoku_chroma/search.hpp"
#include "sudoku_chroma/verify.hpp"

namespace sc = sudoku_chroma;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sc::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sc::Error("cannot write '" + path + "'");
    out << content;
}

sc::Graph load_graph(const std::string& path) { return sc::parse_graph(read_file(path)); }

int parse_int_strict(const std::string& text) {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
}

sc::SweepRange parse_range(const std::string& text) {
    try {
        const auto pos = text.find("..");
        if (pos == std::string::npos) {
            const int v = parse_int_strict(text);
            return {v, v};
        }
        const int lo = parse_int_strict(text.substr(0, pos));
        const int hi = parse_int_strict(text.substr(pos + 2));
        if (hi < lo) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw sc::Error("bad range '" + text + "' (expected N or LO..HI)");
    }
}

struct CommonSearchFlags {
    int cap = 16;
    double budget = 300.0;
    int threads = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--cap", cap, "largest order accepted by exhaustive search")
            ->capture_default_str();
        cmd->add_option("--budget", budget, "wall-clock budget in seconds, <= 0 for none")
            ->capture_default_str();
        cmd->add_option("--threads", threads,
                        "worker threads (0: SUDOKU_CHROMA_THREADS, then hardware)");
    }

    sc::SearchOptions options() const {
        sc::SearchOptions opt;
        opt.order_cap = cap;
        opt.budget_seconds = budget;
        opt.threads = threads;
        return opt;
    }
};

std::string describe_clues(const sc::PartialColoring& clue) {
    std::string out;
    for (const auto& [v, c] : clue.assignments) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v) + "->" + std::to_string(c);
    }
    return out;
}

int run_gen(const std::string& expr, const std::string& out_path) {
    const sc::Graph g = sc::parse_family_expression(expr);
    const std::string text = sc::serialize_graph(g);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    std::cerr << "order " << g.order() << " size " << g.size() << "\n";
    return 0;
}

int run_chi(const std::string& graph_path) {
    const sc::Graph g = load_graph(graph_path);
    std::cout << sc::chromatic_number(g) << "\n";
    return 0;
}

int run_sn(const std::string& graph_path, bool bounds_only, const CommonSearchFlags& flags,
           const std::string& out_path, bool no_timing) {
    const sc::Graph g = load_graph(graph_path);
    const int chi = sc::chromatic_number(g);
    std::cout << "order " << g.order() << " size " << g.size() << " chi " << chi << "\n";
    if (bounds_only) {
        const sc::ForcedSets fs = sc::forced_sets(g, chi);
        const sc::PartialColoring clue = sc::greedy_unique_clue(g);
        std::cout << "forced lower bound " << fs.lower_bound << "\n";
        std::cout << "verified upper bound " << clue.domain_size() << " (greedy clue)\n";
        if (!out_path.empty()) write_file(out_path, sc::serialize_coloring(clue));
        return 0;
    }
    const auto start = std::chrono::steady_clock::now();
    const sc::SudokuWitness witness = sc::sudoku_number(g, flags.options());
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    std::cout << "sn = " << witness.sn << "\n";
    std::cout << "clue coloring: " << describe_clues(witness.clue_coloring) << "\n";
    std::cout << "sizes exhausted from " << witness.certificate.start_size << ", subsets "
              << witness.certificate.subsets_tried << ", colorings "
              << witness.certificate.colorings_tried << ", extension checks "
              << witness.certificate.extension_calls << "\n";
    if (!no_timing) std::cout << "wall " << ms << " ms\n";
    if (!out_path.empty()) write_file(out_path, sc::serialize_coloring(witness.clue_coloring));
    return 0;
}

int run_extend(const std::string& graph_path, const std::string& clues_path, std::uint64_t cap,
               const std::string& out_path) {
    const sc::Graph g = load_graph(graph_path);
    const sc::PartialColoring clue = sc::parse_coloring(read_file(clues_path));
    sc::PartialColoring extension;
    const sc::ExtensionCount result =
        sc::count_extensions(g, clue, cap == 0 ? sc::kNoCap : cap, &extension);
    if (result.saturated)
        std::cout << "extensions >= " << result.count << " (cap reached)\n";
    else
        std::cout << "extensions = " << result.count << "\n";
    if (result.count == 0)
        std::cout << "verdict: no extension\n";
    else if (result.count == 1 && !result.saturated)
        std::cout << "verdict: unique\n";
    else
        std::cout << "verdict: multiple\n";
    if (!out_path.empty() && result.count == 1 && !result.saturated)
        write_file(out_path, sc::serialize_coloring(extension));
    return 0;
}

int run_verify(const std::string& theorem, const std::string& n_text, const std::string& m_text,
               const std::string& base_expr, const std::string& out_dir, bool emit_instances,
               const CommonSearchFlags& flags, bool no_timing) {
    const sc::TheoremId id = sc::theorem_from_string(theorem);
    const bool needs_m = id == sc::TheoremId::T25 || id == sc::TheoremId::T26;
    if (needs_m && m_text.empty()) throw sc::Error(theorem + " needs --m");
    if (id != sc::TheoremId::T21U && n_text.empty()) throw sc::Error(theorem + " needs --n");
    const sc::SweepRange n_range = n_text.empty() ? sc::SweepRange{0, 0} : parse_range(n_text);
    const sc::SweepRange m_range = m_text.empty() ? sc::SweepRange{0, 0} : parse_range(m_text);
    std::optional<sc::Graph> base;
    if (id == sc::TheoremId::T21U) base = sc::parse_family_expression(base_expr);

    const auto reports = sc::verify_sweep(id, n_range, m_range, base ? &*base : nullptr,
                                          flags.options());
    bool any_mismatch = false;
    for (const auto& rep : reports) {
        if (rep.match == sc::MatchResult::Mismatch) any_mismatch = true;
        std::cout << sc::to_string(rep.id) << " n=" << rep.n;
        if (needs_m) std::cout << " m=" << rep.m;
        std::cout << " order=" << rep.order << " chi=" << rep.chi
                  << " formula=" << rep.formula_sn << " match=" << sc::to_string(rep.match);
        if (rep.exact_sn >= 0) std::cout << " exact=" << rep.exact_sn;
        if (!rep.note.empty()) std::cout << "  [" << rep.note << "]";
        std::cout << "\n";
    }
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_file((std::filesystem::path(out_dir) / "report.json").string(),
                   sc::reports_json(reports, !no_timing).dump(2) + "\n");
        write_file((std::filesystem::path(out_dir) / "report.csv").string(),
                   sc::reports_csv(reports, !no_timing));
        if (emit_instances) {
            auto emit = [&](const sc::TheoremInstance& inst) {
                sc::write_instance_files(inst, out_dir);
            };
            if (id == sc::TheoremId::T21U) {
                emit(sc::thm21_upper_instance(*base));
            } else {
                for (const auto& rep : reports) {
                    if (rep.match == sc::MatchResult::Skipped) continue;
                    switch (id) {
                        case sc::TheoremId::T21L: emit(sc::thm21_lower_instance(rep.n)); break;
                        case sc::TheoremId::T22: emit(sc::thm22_instance(rep.n)); break;
                        case sc::TheoremId::T23: emit(sc::thm23_instance(rep.n)); break;
                        case sc::TheoremId::T24: emit(sc::thm24_instance(rep.n)); break;
                        case sc::TheoremId::T25: emit(sc::thm25_instance(rep.n, rep.m)); break;
                        case sc::TheoremId::T26: emit(sc::thm26_instance(rep.n, rep.m)); break;
                        default: break;
                    }
                }
            }
        }
    }
    return any_mismatch ? 1 : 0;
}

int run_dot(const std::string& graph_path, const std::string& clues_path,
            const std::string& out_path) {
    const sc::Graph g = load_graph(graph_path);
    std::string text;
    if (clues_path.empty()) {
        text = sc::to_dot(g, nullptr);
    } else {
        const sc::PartialColoring clue = sc::parse_coloring(read_file(clues_path));
        text = sc::to_dot(g, &clue);
    }
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Sudoku-number toolkit for vertex colorings of graphs"};
    app.require_subcommand(1);

    std::string expr, graph_path, clues_path, out_path;
    std::string theorem, n_text, m_text, base_expr = "complete:4", out_dir;
    bool bounds_only = false, no_timing = false, emit_instances = false;
    std::uint64_t extend_cap = 1000000;
    CommonSearchFlags flags;
    int exit_code = 0;

    auto* gen = app.add_subcommand("gen", "generate a graph from a family expression");
    gen->add_option("expr", expr,
                    "e.g. path:4, cycle:5, complete:4, wheel:6, star:3, "
                    "corona(wheel:4,complete:2), line(cycle:5)")
        ->required();
    gen->add_option("-o,--out", out_path, "output graph file (stdout when absent)");
    gen->callback([&] { exit_code = run_gen(expr, out_path); });

    auto* chi = app.add_subcommand("chi", "exact chromatic number of a graph file");
    chi->add_option("graph", graph_path, "graph file")->required();
    chi->callback([&] { exit_code = run_chi(graph_path); });

    auto* sn = app.add_subcommand("sn", "exact Sudoku number by exhaustive search");
    sn->add_option("graph", graph_path, "graph file")->required();
    sn->add_flag("--bounds-only", bounds_only,
                 "skip the search; report the forced lower bound and a greedy upper bound");
    flags.attach(sn);
    sn->add_option("-o,--out", out_path, "write the witness clue coloring here");
    sn->add_flag("--no-timing", no_timing, "omit wall-clock output");
    sn->callback([&] { exit_code = run_sn(graph_path, bounds_only, flags, out_path, no_timing); });

    auto* extend = app.add_subcommand("extend", "count proper completions of a partial coloring");
    extend->add_option("graph", graph_path, "graph file")->required();
    extend->add_option("clues", clues_path, "partial coloring file")->required();
    extend->add_option("--count-cap", extend_cap, "stop counting at this many (0: no cap)")
        ->capture_default_str();
    extend->add_option("-o,--out", out_path, "write the extension here when it is unique");
    extend->callback([&] { exit_code = run_extend(graph_path, clues_path, extend_cap, out_path); });

    auto* verify = app.add_subcommand("verify", "check catalog formulas against the engine");
    verify->add_option("--theorem", theorem, "one of T22 T23 T24 T25 T26 T21L T21U")->required();
    verify->add_option("--n", n_text, "parameter n, a single value or LO..HI");
    verify->add_option("--m", m_text, "parameter m for T25/T26, a single value or LO..HI");
    verify->add_option("--base", base_expr, "base graph expression for T21U")
        ->capture_default_str();
    verify->add_option("--out", out_dir, "directory for report.json and report.csv");
    verify->add_flag("--emit-instances", emit_instances,
                     "also write each instance's graph and clue files to --out");
    flags.attach(verify);
    verify->add_flag("--no-timing", no_timing, "omit wall_ms from reports");
    verify->callback([&] {
        exit_code = run_verify(theorem, n_text, m_text, base_expr, out_dir, emit_instances,
                               flags, no_timing);
    });

    auto* dot = app.add_subcommand("dot", "export a graph (optionally colored) as DOT");
    dot->add_option("graph", graph_path, "graph file")->required();
    dot->add_option("--clues", clues_path, "partial coloring file");
    dot->add_option("-o,--out", out_path, "output DOT file (stdout when absent)");
    dot->callback([&] { exit_code = run_dot(graph_path, clues_path, out_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
