#include "kbst/steiner_paths.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace kbst {

bool ThresholdGraph::has_edge(VertexId u, VertexId v) const {
    const auto& nbrs = adjacency[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

ThresholdGraph build_threshold_graph(const Instance& inst, const EdgeList& edges,
                                     double threshold) {
    ThresholdGraph g;
    g.threshold = threshold;
    g.adjacency.assign(inst.vertex_count(), {});
    for (const Edge& e : edges.edges) {
        if (e.length > threshold) break;  // edges are sorted by length
        g.adjacency[e.u].push_back(e.v);
        g.adjacency[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adjacency) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    return g;
}

PathTable all_pairs_steiner_paths(const ThresholdGraph& g, const Instance& inst) {
    const int n = inst.terminal_count();
    const int total = inst.vertex_count();

    PathTable table;
    table.terminal_count = n;
    table.weight.assign(n, std::vector<int>(n, kInfiniteWeight));
    table.via.assign(n, std::vector<VertexId>(total, -1));

    std::vector<int> dist(total);
    for (VertexId src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), kInfiniteWeight);
        dist[src] = 0;

        // Breadth-first over {src} + Steiner vertices. Every expansion step
        // enters a Steiner vertex (cost 1), so BFS depth equals the interior
        // count; terminals only absorb.
        std::queue<VertexId> frontier;
        frontier.push(src);
        while (!frontier.empty()) {
            const VertexId u = frontier.front();
            frontier.pop();
            for (VertexId v : g.adjacency[u]) {
                if (inst.is_terminal(v)) {
                    if (v != src && dist[u] < dist[v]) dist[v] = dist[u];
                } else if (dist[v] == kInfiniteWeight) {
                    dist[v] = dist[u] + 1;
                    frontier.push(v);
                }
            }
        }

        // Deterministic predecessors: the smallest-id traversable neighbor
        // on a tight edge. Adjacency is sorted, so the first hit wins.
        for (VertexId v = 0; v < total; ++v) {
            if (v == src || dist[v] == kInfiniteWeight) continue;
            const int need = inst.is_terminal(v) ? dist[v] : dist[v] - 1;
            for (VertexId u : g.adjacency[v]) {
                if (u != src && inst.is_terminal(u)) continue;
                if (dist[u] == need) {
                    table.via[src][v] = u;
                    break;
                }
            }
            assert(table.via[src][v] != -1);
        }

        for (VertexId q = 0; q < n; ++q) {
            table.weight[src][q] = (q == src) ? 0 : dist[q];
        }
    }
    return table;
}

std::vector<VertexId> PathTable::path(VertexId p, VertexId q) const {
    if (p == q) return {p};
    if (weight[p][q] == kInfiniteWeight) return {};
    std::vector<VertexId> rev;
    for (VertexId cur = q; cur != -1; cur = via[p][cur]) {
        rev.push_back(cur);
    }
    assert(rev.back() == p);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

}  // namespace kbst
