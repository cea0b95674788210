// cprefix: generate, solve, reduce, and analyze Common Prefix instances on
// trees and their bipartite counterparts.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 size guard exceeded.
// Results go to stdout, diagnostics and timings to stderr, so stdout is a
// pure function of (input bytes, flags, seed).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cprefix/analysis.hpp"
#include "cprefix/exact.hpp"
#include "cprefix/generate.hpp"
#include "cprefix/instance.hpp"
#include "cprefix/layered.hpp"
#include "cprefix/nn.hpp"

namespace {

using namespace cprefix;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

struct SolveOptions {
    std::string file;
    bool exact = false;
    bool oracle = false;
    bool approx = false;
    int root = 0;
    std::optional<int> levels;
    std::optional<double> epsilon;
    ExactGuard guard;
};

void run_solve(const SolveOptions& opt) {
    if (int(opt.exact) + int(opt.oracle) + int(opt.approx) != 1)
        throw ValidationError("choose exactly one of --exact, --oracle, --approx");

    CPInstance inst = parse_cp(read_input(opt.file));
    if (opt.exact) {
        ExactResult res = solve_exact(inst, opt.guard);
        std::cout << serialize_assignment(inst, res.assignment);
        return;
    }
    if (opt.oracle) {
        std::cout << "value " << oracle_solve(inst) << "\n";
        return;
    }

    if (opt.levels && opt.epsilon)
        throw ValidationError("--L and --epsilon are mutually exclusive");
    int levels;
    if (opt.levels)
        levels = *opt.levels;
    else if (opt.epsilon)
        levels = choose_block_height(inst.vertex_count(), opt.epsilon);
    else
        levels =
            inst.vertex_count() >= 2 ? choose_block_height(inst.vertex_count()) : 2;
    ApproxResult res = solve_approx(inst, opt.root, levels, opt.guard);
    std::cout << "# layer_value " << res.layer_value << "\n";
    std::cout << "# L " << res.levels << "\n";
    std::cout << "# class " << res.best_class << "\n";
    std::cout << serialize_assignment(inst, res.stitched);
}

void run_analyze_subtrees(const std::string& file, int root) {
    CPInstance inst = parse_cp(read_input(file));
    SubtreeCountReport report = count_subtrees(inst, root);
    std::cout << "height=" << report.height << "\n";
    std::cout << "total=" << report.total.str() << "\n";
    if (report.bound)
        std::cout << "bound=" << report.bound->str() << "\n";
    else
        std::cout << "bound=2^" << report.bound_exponent.str() << "\n";
    std::cout << "within_bound=" << (report.within_bound ? "true" : "false") << "\n";
}

void run_analyze_ratio(const std::string& file) {
    NNInstance g = parse_nn(read_input(file));
    RatioReport r = ratio_experiment(g);
    std::cout << "ebcs=" << r.ebcs << "\n";
    std::cout << "nn=" << r.nn << "\n";
    std::cout << "ratio=" << format_rational(r.ratio) << "\n";
    std::cout << "harmonic=" << format_rational(r.h_bound) << "\n";
    std::cout << "sandwich_ok=" << (r.sandwich_ok ? "true" : "false") << "\n";
}

void run_bench(const std::string& suite) {
    if (suite != "approx-sweep")
        throw ValidationError("unknown bench suite: '" + suite + "'");

    std::cout << "suite=approx-sweep\n";
    for (int n : {64, 256, 1024}) {
        CPInstance inst = gen_binary_tree(n, {8, 1, 3}, 1000 + n);

        std::optional<long long> exact;
        auto t0 = std::chrono::steady_clock::now();
        std::string exact_note = "guard";
        try {
            exact = solve_exact(inst).value;
            exact_note = std::to_string(*exact);
        } catch (const SizeGuardError&) {
        }
        double exact_ms = elapsed_ms(t0);

        for (int levels : {2, 3, 4}) {
            auto t1 = std::chrono::steady_clock::now();
            ApproxResult res = solve_approx(inst, 0, levels);
            double approx_ms = elapsed_ms(t1);

            std::string guarantee = "n/a";
            if (exact) {
                res.record_exact(*exact);
                guarantee = *res.guarantee_holds ? "ok" : "violated";
            }
            std::cout << "n=" << n << " L=" << levels << " exact=" << exact_note
                      << " layer_value=" << res.layer_value
                      << " realized=" << res.realized_value << " guarantee=" << guarantee
                      << "\n";
            std::cerr << "# n=" << n << " L=" << levels << " exact_ms=" << exact_ms
                      << " approx_ms=" << approx_ms << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Common Prefix on trees: solvers, reductions, reports"};
    app.require_subcommand(1);

    // --- gen -------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate an instance on stdout");
    gen->require_subcommand(1);

    int gn = 8, gnu = 4, gnv = 4;
    double gp = 0.5;
    std::uint64_t seed = 0;
    LabelParams lp;

    auto add_label_opts = [&](CLI::App* cmd) {
        cmd->add_option("--universe", lp.universe, "distinct label tokens")
            ->capture_default_str();
        cmd->add_option("--labels-min", lp.labels_min, "smallest per-vertex set")
            ->capture_default_str();
        cmd->add_option("--labels-max", lp.labels_max, "largest per-vertex set")
            ->capture_default_str();
        cmd->add_option("--seed", seed, "generator seed")->capture_default_str();
    };

    auto* gen_tree = gen->add_subcommand("binary-tree", "random binary tree");
    gen_tree->add_option("--n", gn, "vertex count")->required();
    add_label_opts(gen_tree);
    gen_tree->callback([&] { std::cout << serialize_cp(gen_binary_tree(gn, lp, seed)); });

    auto* gen_star_cmd = gen->add_subcommand("star", "random star (center 0)");
    gen_star_cmd->add_option("--n", gn, "vertex count, center included")->required();
    add_label_opts(gen_star_cmd);
    gen_star_cmd->callback([&] { std::cout << serialize_cp(gen_star(gn, lp, seed)); });

    auto* gen_bip = gen->add_subcommand("bipartite", "random bipartite graph");
    gen_bip->add_option("--nu", gnu, "U side size")->required();
    gen_bip->add_option("--nv", gnv, "V side size")->required();
    gen_bip->add_option("--p", gp, "edge probability")->capture_default_str();
    gen_bip->add_option("--seed", seed, "generator seed")->capture_default_str();
    gen_bip->callback(
        [&] { std::cout << serialize_nn(gen_bipartite(gnu, gnv, gp, seed)); });

    auto* gen_tight = gen->add_subcommand("tight-family", "harmonic-ratio family");
    gen_tight->add_option("--n", gn, "side size")->required();
    gen_tight->callback([&] { std::cout << serialize_nn(tight_family(gn)); });

    // --- solve -----------------------------------------------------------
    SolveOptions sopt;
    int slevels = 0;
    double seps = 0.0;
    auto* solve = app.add_subcommand("solve", "solve a tree instance");
    solve->add_option("file", sopt.file, "instance path, or - for stdin")->required();
    solve->add_flag("--exact", sopt.exact, "memoized recursion, optimal");
    solve->add_flag("--oracle", sopt.oracle, "exhaustive enumeration, optimal");
    solve->add_flag("--approx", sopt.approx, "layered decomposition");
    auto* lopt = solve->add_option("--L", slevels, "class count for --approx");
    auto* eopt = solve->add_option("--epsilon", seps, "quality target for --approx");
    solve->add_option("--root", sopt.root, "root vertex for --approx")
        ->capture_default_str();
    solve->add_option("--max-entries", sopt.guard.max_memo_entries,
                      "memo guard override");
    solve->add_option("--max-work", sopt.guard.max_work_units, "work guard override");
    solve->callback([&] {
        if (lopt->count()) sopt.levels = slevels;
        if (eopt->count()) sopt.epsilon = seps;
        run_solve(sopt);
    });

    // --- reduce ------------------------------------------------------------
    auto* reduce = app.add_subcommand("reduce", "translate between formulations");
    reduce->require_subcommand(1);
    std::string rfile;
    int center = 0;

    auto* to_star = reduce->add_subcommand("nn-to-star", "bipartite file to star file");
    to_star->add_option("file", rfile, "instance path, or - for stdin")->required();
    to_star->callback(
        [&] { std::cout << serialize_cp(nn_to_star(parse_nn(read_input(rfile)))); });

    auto* to_nn = reduce->add_subcommand("star-to-nn", "star file to bipartite file");
    to_nn->add_option("file", rfile, "instance path, or - for stdin")->required();
    to_nn->add_option("--center", center, "center vertex")->capture_default_str();
    to_nn->callback([&] {
        std::cout << serialize_nn(star_to_nn(parse_cp(read_input(rfile)), center));
    });

    // --- analyze -----------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "structure reports");
    analyze->require_subcommand(1);
    std::string afile;
    int aroot = 0;

    auto* subtrees = analyze->add_subcommand("subtrees", "connected-subtree counts");
    subtrees->add_option("file", afile, "instance path, or - for stdin")->required();
    subtrees->add_option("--root", aroot, "root vertex")->capture_default_str();
    subtrees->callback([&] { run_analyze_subtrees(afile, aroot); });

    auto* ratio = analyze->add_subcommand("ratio", "biclique vs chain optimum");
    ratio->add_option("file", afile, "instance path, or - for stdin")->required();
    ratio->callback([&] { run_analyze_ratio(afile); });

    // --- bench -------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "built-in generator sweeps");
    std::string suite;
    bench->add_option("suite", suite, "suite name (approx-sweep)")->required();
    bench->callback([&] { run_bench(suite); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
