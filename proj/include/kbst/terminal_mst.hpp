#pragma once

#include "kbst/steiner_paths.hpp"

namespace kbst {

struct TerminalTreeEdge {
    VertexId p = 0;  // p < q, both terminals
    VertexId q = 0;
    int weight = 0;

    bool operator==(const TerminalTreeEdge&) const = default;
};

// Minimum spanning tree of the complete terminal graph under path-table
// weights. normalized_cost = sum of floor(w/2) over tree edges, or
// kInfiniteWeight when the finite-weight edges do not span the terminals.
struct TerminalTree {
    std::vector<TerminalTreeEdge> edges;  // in Kruskal acceptance order
    int normalized_cost = 0;
    bool connected = false;
};

// Kruskal over finite-weight terminal pairs, ties broken by (w, p, q) so
// repeated runs produce identical trees.
TerminalTree terminal_mst(const PathTable& weights);

}  // namespace kbst
