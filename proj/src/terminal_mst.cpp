#include "kbst/terminal_mst.hpp"

#include <algorithm>
#include <tuple>

#include "kbst/union_find.hpp"

namespace kbst {

TerminalTree terminal_mst(const PathTable& weights) {
    const int n = weights.terminal_count;

    std::vector<TerminalTreeEdge> candidates;
    for (VertexId p = 0; p < n; ++p) {
        for (VertexId q = p + 1; q < n; ++q) {
            const int w = weights.weight[p][q];
            if (w != kInfiniteWeight) candidates.push_back({p, q, w});
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const TerminalTreeEdge& a, const TerminalTreeEdge& b) {
                  return std::tie(a.weight, a.p, a.q) < std::tie(b.weight, b.p, b.q);
              });

    TerminalTree tree;
    UnionFind uf(n);
    for (const TerminalTreeEdge& e : candidates) {
        if (uf.unite(e.p, e.q)) tree.edges.push_back(e);
    }
    tree.connected = static_cast<int>(tree.edges.size()) == n - 1;
    if (tree.connected) {
        int cost = 0;
        for (const TerminalTreeEdge& e : tree.edges) cost += e.weight / 2;
        tree.normalized_cost = cost;
    } else {
        tree.normalized_cost = kInfiniteWeight;
    }
    return tree;
}

}  // namespace kbst
