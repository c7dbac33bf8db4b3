#include "kbst/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace kbst {

bool finite(const Point& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

double distance(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

double ulps_above(double value, int ulps) {
    for (int i = 0; i < ulps; ++i) {
        value = std::nextafter(value, std::numeric_limits<double>::infinity());
    }
    return value;
}

const Point& Instance::point(VertexId v) const {
    return is_terminal(v) ? terminals[v] : steiners[v - terminal_count()];
}

void validate_instance(const Instance& inst) {
    if (inst.terminals.empty()) {
        throw std::invalid_argument("instance needs at least one terminal");
    }
    if (inst.budget < 0) {
        throw std::invalid_argument("budget must be non-negative");
    }
    if (inst.budget > inst.steiner_count()) {
        throw std::invalid_argument("budget exceeds the number of Steiner candidates");
    }
    for (const Point& p : inst.terminals) {
        if (!finite(p)) throw std::invalid_argument("non-finite terminal coordinate");
    }
    for (const Point& p : inst.steiners) {
        if (!finite(p)) throw std::invalid_argument("non-finite Steiner coordinate");
    }
}

EdgeList build_edge_list(const Instance& inst) {
    const int total = inst.vertex_count();
    EdgeList list;
    list.edges.reserve(static_cast<std::size_t>(total) * (total - 1) / 2);
    for (VertexId u = 0; u < total; ++u) {
        for (VertexId v = u + 1; v < total; ++v) {
            list.edges.push_back({u, v, distance(inst.point(u), inst.point(v))});
        }
    }
    std::sort(list.edges.begin(), list.edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.length, a.u, a.v) < std::tie(b.length, b.u, b.v);
    });
    for (const Edge& e : list.edges) {
        if (list.distinct_lengths.empty() || list.distinct_lengths.back() != e.length) {
            list.distinct_lengths.push_back(e.length);
        }
    }
    return list;
}

}  // namespace kbst
