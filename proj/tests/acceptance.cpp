// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Run directly or through ctest.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kbst/exact.hpp"
#include "kbst/generate.hpp"
#include "kbst/io.hpp"
#include "kbst/solver.hpp"
#include "kbst/svg.hpp"
#include "oracles.hpp"
#include "test_fixtures.hpp"

namespace {

using namespace kbst;
using Clock = std::chrono::steady_clock;

constexpr double kSlack = 1e-9;
constexpr int kSuiteSize = 300;

struct SuiteCase {
    Instance inst;
    SolveReport sweep;
    SolveReport bisect;
    ExactResult exact;
};

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
};

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return values[values.size() / 2];
}

double bisect_seconds(int n, int m, int k, std::uint64_t seed) {
    const Instance inst = generate_instance({n, m, k, seed, 100.0, PointFamily::kUniform});
    const auto start = Clock::now();
    const SolveReport report = solve_bisect(inst);
    (void)report;
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double value) { return format_double(value); }

}  // namespace

int main() {
    // Shared suite for criteria 1, 2, 5 and 6.
    const auto suite_start = Clock::now();
    std::vector<SuiteCase> suite;
    suite.reserve(kSuiteSize);
    for (std::uint64_t seed = 1; seed <= kSuiteSize; ++seed) {
        SuiteCase c{oracles::random_instance(seed), {}, {}, {}};
        c.sweep = solve_sweep(c.inst);
        c.bisect = solve_bisect(c.inst);
        c.exact = solve_exact(c.inst);
        suite.push_back(std::move(c));
    }
    const double suite_seconds =
        std::chrono::duration<double>(Clock::now() - suite_start).count();

    std::vector<Criterion> criteria;

    criteria.push_back({1, "approximation guarantee (ratio in [1, 2] over the suite)",
                        [&](std::string& detail) {
                            double lo = 10.0, hi = 0.0;
                            bool ok = true;
                            for (const SuiteCase& c : suite) {
                                const double r = ratio(c.sweep, c.exact);
                                lo = std::min(lo, r);
                                hi = std::max(hi, r);
                                ok = ok && r >= 1.0 - kSlack && r <= 2.0 + kSlack;
                            }
                            ok = ok && suite_seconds < 60.0;
                            detail = std::to_string(suite.size()) + " instances, ratios [" +
                                     fmt(lo) + ", " + fmt(hi) + "], " + fmt(suite_seconds) +
                                     " s";
                            return ok;
                        }});

    criteria.push_back({2, "accepting threshold never exceeds the exact optimum",
                        [&](std::string& detail) {
                            int violations = 0;
                            for (const SuiteCase& c : suite) {
                                if (c.exact.optimum_bottleneck < c.sweep.tree.threshold_used) {
                                    ++violations;
                                }
                            }
                            detail = std::to_string(violations) + " violations";
                            return violations == 0;
                        }});

    criteria.push_back({3, "tight instance: approx 10, exact 5, ratio exactly 2",
                        [&](std::string& detail) {
                            const SolveReport approx = solve_sweep(fixtures::instance_a());
                            const ExactResult exact = solve_exact(fixtures::instance_a());
                            const double r = ratio(approx, exact);
                            detail = "approx " + fmt(approx.tree.bottleneck) + ", exact " +
                                     fmt(exact.optimum_bottleneck) + ", ratio " + fmt(r);
                            return approx.tree.bottleneck == 10.0 &&
                                   exact.optimum_bottleneck == 5.0 && r == 2.0;
                        }});

    criteria.push_back({4, "tree weights 3,2,3 normalize to cost 3",
                        [&](std::string& detail) {
                            PathTable table;
                            table.terminal_count = 4;
                            const int inf = kInfiniteWeight;
                            table.weight = {{0, 3, 9, inf},
                                            {3, 0, 3, 9},
                                            {9, 3, 0, 2},
                                            {inf, 9, 2, 0}};
                            const TerminalTree tree = terminal_mst(table);
                            detail = "normalized cost " +
                                     std::to_string(tree.normalized_cost);
                            return tree.connected && tree.normalized_cost == 3;
                        }});

    criteria.push_back({5, "sweep and bisect return identical trees and thresholds",
                        [&](std::string& detail) {
                            int mismatches = 0;
                            for (const SuiteCase& c : suite) {
                                if (c.sweep.threshold_index != c.bisect.threshold_index ||
                                    !(c.sweep.tree == c.bisect.tree)) {
                                    ++mismatches;
                                }
                            }
                            detail = std::to_string(mismatches) + " mismatches";
                            return mismatches == 0;
                        }});

    criteria.push_back({6, "every output tree satisfies the feasibility invariants",
                        [&](std::string& detail) {
                            int violations = 0;
                            std::string first;
                            for (const SuiteCase& c : suite) {
                                for (const SteinerTree* tree :
                                     {&c.sweep.tree, &c.bisect.tree, &c.exact.witness}) {
                                    if (auto err = check_tree(c.inst, *tree, c.inst.budget)) {
                                        ++violations;
                                        if (first.empty()) first = *err;
                                    }
                                }
                            }
                            detail = violations == 0
                                         ? std::to_string(3 * suite.size()) + " trees checked"
                                         : first;
                            return violations == 0;
                        }});

    criteria.push_back({7, "path weights match exhaustive enumeration (n+m <= 8)",
                        [&](std::string& detail) {
                            int checked = 0;
                            int wrong = 0;
                            for (std::uint64_t seed = 1; seed <= 100; ++seed) {
                                const Instance inst =
                                    oracles::random_instance(seed, {2, 4, 1, 4, 3});
                                const EdgeList edges = build_edge_list(inst);
                                for (double threshold : edges.distinct_lengths) {
                                    const PathTable table = all_pairs_steiner_paths(
                                        build_threshold_graph(inst, edges, threshold), inst);
                                    for (VertexId p = 0; p < inst.terminal_count(); ++p) {
                                        for (VertexId q = p + 1; q < inst.terminal_count();
                                             ++q) {
                                            ++checked;
                                            if (table.weight[p][q] !=
                                                oracles::min_interior_steiners(inst, threshold,
                                                                               p, q)) {
                                                ++wrong;
                                            }
                                        }
                                    }
                                }
                            }
                            detail = std::to_string(checked) + " pairs checked, " +
                                     std::to_string(wrong) + " wrong";
                            return wrong == 0;
                        }});

    criteria.push_back({8, "polynomial scaling: n=50,m=150 under 10 s; log-log slope < 6",
                        [&](std::string& detail) {
                            std::vector<double> big;
                            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                                big.push_back(bisect_seconds(50, 150, 10, seed));
                            }
                            const double big_median = median_of(big);

                            const int sizes[] = {50, 100, 200};
                            double medians[3];
                            for (int i = 0; i < 3; ++i) {
                                const int n = std::max(2, sizes[i] / 4);
                                const int m = sizes[i] - n;
                                const int k = std::max(0, n / 5);
                                std::vector<double> times;
                                for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                                    times.push_back(bisect_seconds(n, m, k, seed));
                                }
                                medians[i] = std::max(median_of(times), 1e-6);
                            }
                            double max_slope = 0.0;
                            for (int i = 1; i < 3; ++i) {
                                const double slope =
                                    std::log(medians[i] / medians[i - 1]) /
                                    std::log(static_cast<double>(sizes[i]) / sizes[i - 1]);
                                max_slope = std::max(max_slope, slope);
                            }
                            detail = "median " + fmt(big_median) + " s at n+m=200, max slope " +
                                     fmt(max_slope);
                            return big_median < 10.0 && max_slope < 6.0;
                        }});

    criteria.push_back({9, "solve, gen and the renderer are byte-identical across runs",
                        [&](std::string& detail) {
                            bool ok = true;
                            for (std::uint64_t seed : {1u, 2u, 3u}) {
                                const GenSpec spec{6, 6, 3, seed, 100.0,
                                                   PointFamily::kUniform};
                                ok = ok && generate(spec) == generate(spec);
                                const Instance inst = generate_instance(spec);
                                const SolveReport first = solve_sweep(inst);
                                const SolveReport second = solve_sweep(inst);
                                ok = ok && first.tree == second.tree;
                                ok = ok && format_solve_output(first) ==
                                               format_solve_output(second);
                                ok = ok && render_svg(inst, first.tree) ==
                                               render_svg(inst, second.tree);
                            }
                            detail = "3 seeds, solve + gen + svg";
                            return ok;
                        }});

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  %d  %s%s%s\n", ok ? "PASS" : "FAIL", criterion.id, criterion.name,
                    detail.empty() ? "" : " | ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
