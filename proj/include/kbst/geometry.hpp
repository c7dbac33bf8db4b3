#pragma once

#include <limits>
#include <vector>

namespace kbst {

// Terminals occupy ids 0..n-1, Steiner candidates n..n+m-1.
using VertexId = int;

// Sentinel for infinite path weights and normalized costs. Strictly greater
// than any finite weight; never used in arithmetic.
inline constexpr int kInfiniteWeight = std::numeric_limits<int>::max();

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

bool finite(const Point& p);

/// Euclidean distance sqrt(dx^2 + dy^2).
double distance(const Point& a, const Point& b);

/// value moved n ulps towards +infinity.
double ulps_above(double value, int ulps);

struct Instance {
    std::vector<Point> terminals;
    std::vector<Point> steiners;
    int budget = 0;  // at most this many Steiner candidates may be used

    int terminal_count() const { return static_cast<int>(terminals.size()); }
    int steiner_count() const { return static_cast<int>(steiners.size()); }
    int vertex_count() const { return terminal_count() + steiner_count(); }
    bool is_terminal(VertexId v) const { return v < terminal_count(); }
    const Point& point(VertexId v) const;
};

// Throws std::invalid_argument unless n >= 1, coordinates are finite and
// 0 <= budget <= m. Duplicate coordinates are fine.
void validate_instance(const Instance& inst);

struct Edge {
    VertexId u = 0;  // u < v
    VertexId v = 0;
    double length = 0.0;

    bool operator==(const Edge&) const = default;
};

// All unordered pairs over the instance vertices, ascending by
// (length, u, v). Zero-length edges from duplicate points sort first.
struct EdgeList {
    std::vector<Edge> edges;
    std::vector<double> distinct_lengths;  // deduplicated with exact equality
};

EdgeList build_edge_list(const Instance& inst);

}  // namespace kbst
