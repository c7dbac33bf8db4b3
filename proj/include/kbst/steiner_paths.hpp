#pragma once

#include "kbst/geometry.hpp"

namespace kbst {

// Complete graph on the instance vertices restricted to edges of length
// <= threshold. Adjacency lists are sorted ascending by vertex id.
struct ThresholdGraph {
    double threshold = 0.0;
    std::vector<std::vector<VertexId>> adjacency;

    bool has_edge(VertexId u, VertexId v) const;
};

ThresholdGraph build_threshold_graph(const Instance& inst, const EdgeList& edges,
                                     double threshold);

// Per terminal pair: the minimum number of interior Steiner points over all
// paths whose interior vertices are Steiner candidates only (paths never run
// through other terminals). weight[p][q] == 0 iff (p,q) is itself an edge.
//
// via[p][v] is the predecessor of v on a minimum-weight path from terminal p,
// chosen as the smallest-id vertex among all tight predecessors, so
// reconstruction is deterministic. -1 where undefined.
struct PathTable {
    int terminal_count = 0;
    std::vector<std::vector<int>> weight;      // n x n, kInfiniteWeight = no path
    std::vector<std::vector<VertexId>> via;    // n x (n+m)

    // Vertex sequence p, s_1, ..., s_w, q. {p} when p == q, empty when
    // unreachable.
    std::vector<VertexId> path(VertexId p, VertexId q) const;
};

// One search per source terminal: breadth-first over the source and the
// Steiner vertices, where stepping onto a Steiner vertex costs 1 and
// terminals are absorbing. Runs in O(V + E) per source.
PathTable all_pairs_steiner_paths(const ThresholdGraph& g, const Instance& inst);

}  // namespace kbst
