#include "kbst/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "kbst/errors.hpp"
#include "kbst/union_find.hpp"

namespace kbst {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SolveReport single_terminal_report(Clock::time_point start) {
    // Nothing to connect and nothing to probe.
    SolveReport report;
    report.elapsed_seconds = seconds_since(start);
    return report;
}

}  // namespace

InfeasibleError::InfeasibleError(int final_cost)
    : std::runtime_error("no feasible threshold: normalized cost at the largest "
                         "threshold is " +
                         (final_cost == kInfiniteWeight ? std::string("inf")
                                                        : std::to_string(final_cost))),
      final_cost_(final_cost) {}

ThresholdProbe probe_threshold(const Instance& inst, const EdgeList& edges,
                               double threshold) {
    ThresholdProbe probe;
    probe.graph = build_threshold_graph(inst, edges, threshold);
    probe.paths = all_pairs_steiner_paths(probe.graph, inst);
    probe.mst = terminal_mst(probe.paths);
    return probe;
}

bool probe_feasible(const ThresholdProbe& probe, int budget) {
    return probe.mst.connected && probe.mst.normalized_cost <= budget;
}

SteinerTree construct_k_st(const Instance& inst, const TerminalTree& tree,
                           const PathTable& paths, double threshold) {
    assert(tree.connected && tree.normalized_cost <= inst.budget);

    std::set<VertexId> chosen;
    std::map<std::pair<VertexId, VertexId>, double> candidates;
    auto add_candidate = [&](VertexId a, VertexId b) {
        const auto key = std::minmax(a, b);
        candidates.emplace(key, distance(inst.point(key.first), inst.point(key.second)));
    };

    for (const TerminalTreeEdge& e : tree.edges) {
        const std::vector<VertexId> path = paths.path(e.p, e.q);
        assert(!path.empty());
        const int interior = static_cast<int>(path.size()) - 2;

        std::vector<VertexId> chain;
        chain.push_back(e.p);
        for (int j = 2; j <= interior; j += 2) {
            chain.push_back(path[j]);
            chosen.insert(path[j]);
        }
        chain.push_back(e.q);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            add_candidate(chain[i], chain[i + 1]);
        }
    }

    // Shared points can close cycles; keep the shortest edges that still
    // span everything (equivalently, drop the longest edge of every cycle).
    std::vector<WeightedEdge> sorted;
    sorted.reserve(candidates.size());
    for (const auto& [key, len] : candidates) {
        sorted.push_back({key.first, key.second, len});
    }
    std::sort(sorted.begin(), sorted.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::tie(a.length, a.u, a.v) < std::tie(b.length, b.u, b.v);
    });

    SteinerTree out;
    out.threshold_used = threshold;
    out.chosen_steiners.assign(chosen.begin(), chosen.end());
    UnionFind uf(inst.vertex_count());
    for (const WeightedEdge& e : sorted) {
        if (uf.unite(e.u, e.v)) {
            out.edges.push_back(e);
            out.bottleneck = std::max(out.bottleneck, e.length);
        }
    }
    assert(static_cast<int>(out.edges.size()) ==
           inst.terminal_count() + static_cast<int>(out.chosen_steiners.size()) - 1);
    return out;
}

SolveReport solve_sweep(const Instance& inst) {
    validate_instance(inst);
    const auto start = Clock::now();
    if (inst.terminal_count() == 1) return single_terminal_report(start);

    const EdgeList edges = build_edge_list(inst);
    SolveReport report;
    int last_cost = kInfiniteWeight;
    for (std::size_t i = 0; i < edges.distinct_lengths.size(); ++i) {
        const double threshold = edges.distinct_lengths[i];
        const ThresholdProbe probe = probe_threshold(inst, edges, threshold);
        ++report.probes;
        last_cost = probe.mst.normalized_cost;
        if (probe_feasible(probe, inst.budget)) {
            report.tree = construct_k_st(inst, probe.mst, probe.paths, threshold);
            report.threshold_index = i;
            report.elapsed_seconds = seconds_since(start);
            return report;
        }
    }
    throw InfeasibleError(last_cost);
}

SolveReport solve_bisect(const Instance& inst) {
    validate_instance(inst);
    const auto start = Clock::now();
    if (inst.terminal_count() == 1) return single_terminal_report(start);

    const EdgeList edges = build_edge_list(inst);
    SolveReport report;

    // The feasibility predicate flips from false to true exactly once along
    // the distinct lengths (weights only shrink as the threshold grows).
    std::size_t lo = 0;
    std::size_t hi = edges.distinct_lengths.size() - 1;
    std::size_t best_index = edges.distinct_lengths.size();
    ThresholdProbe best;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        ThresholdProbe probe = probe_threshold(inst, edges, edges.distinct_lengths[mid]);
        ++report.probes;
        if (probe_feasible(probe, inst.budget)) {
            hi = mid;
            best_index = mid;
            best = std::move(probe);
        } else {
            lo = mid + 1;
        }
    }
    if (best_index != lo) {
        best = probe_threshold(inst, edges, edges.distinct_lengths[lo]);
        ++report.probes;
        if (!probe_feasible(best, inst.budget)) {
            throw InfeasibleError(best.mst.normalized_cost);
        }
    }
    report.tree = construct_k_st(inst, best.mst, best.paths, edges.distinct_lengths[lo]);
    report.threshold_index = lo;
    report.elapsed_seconds = seconds_since(start);
    return report;
}

std::optional<std::string> check_tree(const Instance& inst, const SteinerTree& tree,
                                      int budget) {
    const int n = inst.terminal_count();
    const int total = inst.vertex_count();

    if (static_cast<int>(tree.chosen_steiners.size()) > budget) {
        return "more Steiner points than the budget allows";
    }
    std::set<VertexId> vertex_set;
    for (VertexId v = 0; v < n; ++v) vertex_set.insert(v);
    VertexId prev = -1;
    for (VertexId s : tree.chosen_steiners) {
        if (s < n || s >= total) return "chosen_steiners contains a non-Steiner id";
        if (s <= prev) return "chosen_steiners not strictly ascending";
        prev = s;
        vertex_set.insert(s);
    }

    const std::size_t expected_edges = vertex_set.size() - 1;
    if (tree.edges.size() != expected_edges) {
        return "edge count does not match vertex count";
    }

    UnionFind uf(total);
    double longest = 0.0;
    for (const WeightedEdge& e : tree.edges) {
        if (!vertex_set.count(e.u) || !vertex_set.count(e.v)) {
            return "edge endpoint outside terminals + chosen Steiner points";
        }
        if (e.u >= e.v) return "edge endpoints not normalized (u < v)";
        if (e.length != distance(inst.point(e.u), inst.point(e.v))) {
            return "edge length does not match the point distance";
        }
        if (!uf.unite(e.u, e.v)) return "edges contain a cycle";
        longest = std::max(longest, e.length);
    }
    const int root = uf.find(*vertex_set.begin());
    for (VertexId v : vertex_set) {
        if (uf.find(v) != root) return "tree does not span all terminals and chosen points";
    }
    if (tree.bottleneck != longest) return "bottleneck is not the longest edge";
    if (tree.bottleneck > ulps_above(2.0 * tree.threshold_used, 4)) {
        return "bottleneck exceeds twice the accepting threshold";
    }
    return std::nullopt;
}

}  // namespace kbst
