#include "kbst/exact.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <tuple>

#include "kbst/errors.hpp"
#include "kbst/union_find.hpp"

namespace kbst {

namespace {

// C(m, k) in double precision; saturates long before overflow matters here.
double binomial(int m, int k) {
    double result = 1.0;
    for (int i = 1; i <= k; ++i) {
        result *= static_cast<double>(m - k + i) / static_cast<double>(i);
        if (result > 1e18) return 1e18;
    }
    return result;
}

// Kruskal threshold: length of the edge that first puts all terminals in one
// component, restricted to vertices with usable[v]. 0 when n == 1.
double connect_threshold(const Instance& inst, const EdgeList& edges,
                         const std::vector<char>& usable) {
    const int n = inst.terminal_count();
    if (n == 1) return 0.0;
    UnionFind uf(inst.vertex_count());
    std::vector<int> terminal_load(inst.vertex_count(), 0);
    for (VertexId t = 0; t < n; ++t) terminal_load[t] = 1;
    int terminal_components = n;
    for (const Edge& e : edges.edges) {
        if (!usable[e.u] || !usable[e.v]) continue;
        const int ru = uf.find(e.u);
        const int rv = uf.find(e.v);
        if (ru == rv) continue;
        if (terminal_load[ru] > 0 && terminal_load[rv] > 0) --terminal_components;
        uf.unite(ru, rv);
        terminal_load[uf.find(ru)] = terminal_load[ru] + terminal_load[rv];
        if (terminal_components == 1) return e.length;
    }
    assert(false && "complete graph always connects the terminals");
    return edges.edges.empty() ? 0.0 : edges.edges.back().length;
}

// Re-runs the winning subset recording the union edges, then prunes Steiner
// leaves until only terminal-terminal paths remain.
SteinerTree extract_witness(const Instance& inst, const EdgeList& edges,
                            const std::vector<char>& usable, double optimum) {
    const int n = inst.terminal_count();
    const int total = inst.vertex_count();

    std::vector<WeightedEdge> forest;
    if (n > 1) {
        UnionFind uf(total);
        std::vector<int> terminal_load(total, 0);
        for (VertexId t = 0; t < n; ++t) terminal_load[t] = 1;
        int terminal_components = n;
        for (const Edge& e : edges.edges) {
            if (!usable[e.u] || !usable[e.v]) continue;
            const int ru = uf.find(e.u);
            const int rv = uf.find(e.v);
            if (ru == rv) continue;
            if (terminal_load[ru] > 0 && terminal_load[rv] > 0) --terminal_components;
            uf.unite(ru, rv);
            terminal_load[uf.find(ru)] = terminal_load[ru] + terminal_load[rv];
            forest.push_back({e.u, e.v, e.length});
            if (terminal_components == 1) break;
        }
    }

    // Iteratively strip Steiner leaves; Steiner-only components dissolve
    // entirely, what remains is the tree induced by the terminals.
    std::vector<std::vector<int>> incident(total);  // indices into forest
    std::vector<int> degree(total, 0);
    for (std::size_t i = 0; i < forest.size(); ++i) {
        incident[forest[i].u].push_back(static_cast<int>(i));
        incident[forest[i].v].push_back(static_cast<int>(i));
        ++degree[forest[i].u];
        ++degree[forest[i].v];
    }
    std::vector<char> edge_alive(forest.size(), 1);
    std::vector<char> vertex_alive(total, 0);
    for (const WeightedEdge& e : forest) {
        vertex_alive[e.u] = 1;
        vertex_alive[e.v] = 1;
    }
    std::vector<VertexId> stack;
    for (VertexId v = n; v < total; ++v) {
        if (vertex_alive[v] && degree[v] <= 1) stack.push_back(v);
    }
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        vertex_alive[v] = 0;
        for (int ei : incident[v]) {
            if (!edge_alive[ei]) continue;
            edge_alive[ei] = 0;
            const VertexId other = forest[ei].u == v ? forest[ei].v : forest[ei].u;
            if (--degree[other] <= 1 && !inst.is_terminal(other) && vertex_alive[other]) {
                stack.push_back(other);
            }
        }
    }

    SteinerTree witness;
    witness.threshold_used = optimum;
    for (std::size_t i = 0; i < forest.size(); ++i) {
        if (!edge_alive[i]) continue;
        witness.edges.push_back(forest[i]);
        witness.bottleneck = std::max(witness.bottleneck, forest[i].length);
    }
    std::sort(witness.edges.begin(), witness.edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                  return std::tie(a.length, a.u, a.v) < std::tie(b.length, b.u, b.v);
              });
    for (VertexId v = n; v < total; ++v) {
        if (vertex_alive[v]) witness.chosen_steiners.push_back(v);
    }
    return witness;
}

}  // namespace

WorkBoundError::WorkBoundError(double estimated, double bound)
    : std::runtime_error("exhaustive search too large: estimated work " +
                         std::to_string(estimated) + " exceeds bound " +
                         std::to_string(bound)),
      estimated_(estimated),
      bound_(bound) {}

ExactResult solve_exact(const Instance& inst, double work_bound) {
    validate_instance(inst);
    const int n = inst.terminal_count();
    const int m = inst.steiner_count();
    const int k = std::min(inst.budget, m);

    const double estimate = binomial(m, k) * static_cast<double>(n + k) * (n + k);
    if (estimate > work_bound) throw WorkBoundError(estimate, work_bound);

    const EdgeList edges = build_edge_list(inst);

    ExactResult result;
    std::vector<char> usable(inst.vertex_count(), 0);
    for (VertexId t = 0; t < n; ++t) usable[t] = 1;
    std::vector<char> best_usable;
    double best = std::numeric_limits<double>::infinity();

    // Lexicographic enumeration of k-subsets; strict improvement keeps the
    // lexicographically smallest minimizer.
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        for (int j : subset) usable[n + j] = 1;
        ++result.subsets_examined;
        const double threshold = connect_threshold(inst, edges, usable);
        if (threshold < best) {
            best = threshold;
            best_usable = usable;
        }
        for (int j : subset) usable[n + j] = 0;

        // next combination
        int i = k - 1;
        while (i >= 0 && subset[i] == m - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }

    result.optimum_bottleneck = best;
    result.witness = extract_witness(inst, edges, best_usable, best);
    assert(result.witness.bottleneck == result.optimum_bottleneck);
    return result;
}

double ratio(const SolveReport& approx, const ExactResult& exact) {
    if (approx.tree.bottleneck == 0.0 && exact.optimum_bottleneck == 0.0) return 1.0;
    return approx.tree.bottleneck / exact.optimum_bottleneck;
}

}  // namespace kbst
