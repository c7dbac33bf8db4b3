#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "kbst/terminal_mst.hpp"

namespace kbst {

struct WeightedEdge {
    VertexId u = 0;  // u < v
    VertexId v = 0;
    double length = 0.0;

    bool operator==(const WeightedEdge&) const = default;
};

// Solver output: a tree spanning all terminals plus the chosen Steiner
// points, with bottleneck (longest edge) at most twice the accepting
// threshold.
struct SteinerTree {
    std::vector<VertexId> chosen_steiners;  // ascending, size <= budget
    std::vector<WeightedEdge> edges;        // ascending (length, u, v)
    double bottleneck = 0.0;                // 0 for a single-vertex tree
    double threshold_used = 0.0;

    bool operator==(const SteinerTree&) const = default;
};

struct SolveReport {
    SteinerTree tree;
    std::size_t threshold_index = 0;  // position in EdgeList.distinct_lengths
    int probes = 0;                   // thresholds evaluated (0 for n == 1)
    double elapsed_seconds = 0.0;
};

// Everything derived from one length threshold.
struct ThresholdProbe {
    ThresholdGraph graph;
    PathTable paths;
    TerminalTree mst;
};

ThresholdProbe probe_threshold(const Instance& inst, const EdgeList& edges,
                               double threshold);

bool probe_feasible(const ThresholdProbe& probe, int budget);

// For each terminal tree edge (p,q) with reconstructed path p, s1, ..., sw, q,
// keeps every second interior point counted from p (s2, s4, ...) and chains
// the survivors with direct edges. Each direct edge shortcuts at most two
// graph edges, so its length is at most 2 * threshold. Points shared between
// tree edges are merged; if merging closes a cycle the longest edge on it is
// dropped.
//
// Pre: tree.connected and tree.normalized_cost <= inst.budget.
SteinerTree construct_k_st(const Instance& inst, const TerminalTree& tree,
                           const PathTable& paths, double threshold);

// Walks distinct edge lengths in ascending order and accepts the first
// threshold whose terminal MST has normalized cost within the budget.
// Throws InfeasibleError when no threshold qualifies.
SolveReport solve_sweep(const Instance& inst);

// Binary search over distinct lengths for the same accepting threshold;
// returns an identical tree and threshold_index in O(log l) probes.
SolveReport solve_bisect(const Instance& inst);

// Checks every SteinerTree invariant: spanning, acyclic, vertex set exactly
// terminals + chosen, budget respected, bottleneck equals the longest edge
// and is at most 2 * threshold_used (within 4 ulps). Returns a description
// of the first violation, or nullopt when the tree is valid.
std::optional<std::string> check_tree(const Instance& inst, const SteinerTree& tree,
                                      int budget);

}  // namespace kbst
