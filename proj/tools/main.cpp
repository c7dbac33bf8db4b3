#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kbst/errors.hpp"
#include "kbst/exact.hpp"
#include "kbst/generate.hpp"
#include "kbst/io.hpp"
#include "kbst/solver.hpp"
#include "kbst/svg.hpp"

namespace {

using namespace kbst;

constexpr double kRatioSlack = 1e-9;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

SolveReport run_method(const Instance& inst, const std::string& method) {
    return method == "bisect" ? solve_bisect(inst) : solve_sweep(inst);
}

int cmd_solve(const std::string& file, const std::string& method,
              const std::string& svg_path, bool json) {
    const Instance inst = load_instance(file);
    const SolveReport report = run_method(inst, method);
    if (json) {
        std::cout << format_json_report(inst, report, method);
    } else {
        std::cout << format_solve_output(report);
    }
    if (!svg_path.empty()) write_file(svg_path, render_svg(inst, report.tree));
    return 0;
}

int cmd_exact(const std::string& file, double work_bound) {
    const Instance inst = load_instance(file);
    const ExactResult result = solve_exact(inst, work_bound);
    std::cout << "optimum " << format_double(result.optimum_bottleneck) << "\n";
    std::cout << "subsets " << result.subsets_examined << "\n";
    std::cout << "steiners";
    for (VertexId s : result.witness.chosen_steiners) {
        std::cout << " " << vertex_label(inst, s);
    }
    std::cout << "\n";
    for (const WeightedEdge& e : result.witness.edges) {
        std::cout << "edge " << vertex_label(inst, e.u) << " " << vertex_label(inst, e.v)
                  << " " << format_double(e.length) << "\n";
    }
    return 0;
}

int cmd_compare(const std::string& file) {
    const Instance inst = load_instance(file);
    const SolveReport sweep = solve_sweep(inst);
    const SolveReport bisect = solve_bisect(inst);
    const ExactResult exact = solve_exact(inst);
    const double r = ratio(sweep, exact);

    std::cout << "approx " << format_double(sweep.tree.bottleneck) << "\n";
    std::cout << "exact " << format_double(exact.optimum_bottleneck) << "\n";
    std::cout << "ratio " << format_double(r) << "\n";

    std::vector<std::string> violations;
    if (auto err = check_tree(inst, sweep.tree, inst.budget)) {
        violations.push_back("sweep tree: " + *err);
    }
    if (auto err = check_tree(inst, bisect.tree, inst.budget)) {
        violations.push_back("bisect tree: " + *err);
    }
    if (auto err = check_tree(inst, exact.witness, inst.budget)) {
        violations.push_back("exact witness: " + *err);
    }
    if (sweep.threshold_index != bisect.threshold_index || !(sweep.tree == bisect.tree)) {
        violations.push_back("sweep and bisect disagree");
    }
    if (r > 2.0 + kRatioSlack || r < 1.0 - kRatioSlack) {
        violations.push_back("ratio " + format_double(r) + " outside [1, 2]");
    }
    if (exact.optimum_bottleneck < sweep.tree.threshold_used) {
        violations.push_back("exact optimum below the accepting threshold");
    }
    for (const std::string& v : violations) {
        std::cerr << "violation: " << v << "\n";
    }
    return violations.empty() ? 0 : 4;
}

int cmd_gen(const GenSpec& spec, const std::string& out_path) {
    write_file(out_path, generate(spec));
    return 0;
}

int cmd_bench(const std::vector<int>& sizes, const std::vector<std::uint64_t>& seeds,
              const std::string& method) {
    std::cout << "size n m k median_ms\n";
    for (int size : sizes) {
        const int n = std::max(2, size / 4);
        const int m = std::max(0, size - n);
        const int k = std::max(0, n / 5);
        std::vector<double> times_ms;
        for (std::uint64_t seed : seeds) {
            const Instance inst = generate_instance({n, m, k, seed, 100.0, PointFamily::kUniform});
            const auto start = std::chrono::steady_clock::now();
            const SolveReport report = run_method(inst, method);
            (void)report;
            times_ms.push_back(
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count());
        }
        std::sort(times_ms.begin(), times_ms.end());
        const double median = times_ms[times_ms.size() / 2];
        std::printf("%d %d %d %d %.3f\n", size, n, m, k, median);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-bottleneck Steiner tree solver"};
    app.require_subcommand(1);

    std::string file;
    std::string method = "sweep";
    std::string svg_path;
    bool json = false;

    auto* solve = app.add_subcommand("solve", "approximate solve (bottleneck <= 2x optimal)");
    solve->add_option("file", file, "instance file")->required();
    solve->add_option("--method", method, "sweep or bisect")
        ->check(CLI::IsMember({"sweep", "bisect"}));
    solve->add_option("--svg", svg_path, "write an SVG rendering here");
    solve->add_flag("--json", json, "print a JSON report instead of plain text");

    double work_bound = kDefaultWorkBound;
    auto* exact_cmd = app.add_subcommand("exact", "exhaustive optimum for small instances");
    exact_cmd->add_option("file", file, "instance file")->required();
    exact_cmd->add_option("--work-bound", work_bound, "cap on C(m,k)*(n+k)^2");

    auto* compare = app.add_subcommand("compare", "run solver and oracle, check the guarantee");
    compare->add_option("file", file, "instance file")->required();

    GenSpec spec;
    std::string family = "uniform";
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "write a seeded random instance");
    gen->add_option("--n", spec.n, "terminals")->required();
    gen->add_option("--m", spec.m, "Steiner candidates")->required();
    gen->add_option("--k", spec.k, "budget")->required();
    gen->add_option("--seed", spec.seed, "RNG seed")->required();
    gen->add_option("--family", family, "uniform, clustered or grid");
    gen->add_option("--region", spec.region, "square side (default 100)");
    gen->add_option("-o,--out", out_path, "output file")->required();

    std::vector<int> sizes;
    std::vector<std::uint64_t> seeds;
    auto* bench = app.add_subcommand("bench", "median solve time per size (n = size/4)");
    bench->add_option("--sizes", sizes, "total point counts n+m")->required()->delimiter(',');
    bench->add_option("--seeds", seeds, "one run per seed")->required()->delimiter(',');
    bench->add_option("--method", method, "sweep or bisect")
        ->check(CLI::IsMember({"sweep", "bisect"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(file, method, svg_path, json);
        if (exact_cmd->parsed()) return cmd_exact(file, work_bound);
        if (compare->parsed()) return cmd_compare(file);
        if (gen->parsed()) {
            spec.family = parse_family(family);
            return cmd_gen(spec, out_path);
        }
        if (bench->parsed()) return cmd_bench(sizes, seeds, method);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const WorkBoundError& e) {
        std::cerr << "work bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
