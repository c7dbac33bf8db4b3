#include "kbst/generate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "kbst/io.hpp"

namespace kbst {

namespace {

constexpr double kTwoPi = 6.283185307179586;

// Uniform in [0, 1) from the top 53 bits; avoids the unspecified behaviour
// of std::uniform_real_distribution across standard libraries.
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate_spec(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("gen: n must be at least 1");
    if (spec.m < 0) throw std::invalid_argument("gen: m must be non-negative");
    if (spec.k < 0 || spec.k > spec.m) throw std::invalid_argument("gen: need 0 <= k <= m");
    if (!(spec.region > 0.0) || !std::isfinite(spec.region)) {
        throw std::invalid_argument("gen: region must be positive and finite");
    }
}

std::vector<Point> draw_points(const GenSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    const int count = spec.n + spec.m;
    std::vector<Point> points;
    points.reserve(count);

    switch (spec.family) {
        case PointFamily::kUniform: {
            for (int i = 0; i < count; ++i) {
                const double x = unit_double(rng) * spec.region;
                const double y = unit_double(rng) * spec.region;
                points.push_back({x, y});
            }
            break;
        }
        case PointFamily::kClustered: {
            const int centers = (spec.n + 3) / 4;
            std::vector<Point> hubs;
            hubs.reserve(centers);
            for (int i = 0; i < centers; ++i) {
                hubs.push_back({unit_double(rng) * spec.region,
                                unit_double(rng) * spec.region});
            }
            const double radius = spec.region / 10.0;
            for (int i = 0; i < count; ++i) {
                const Point& hub = hubs[rng() % centers];
                const double angle = unit_double(rng) * kTwoPi;
                const double r = radius * std::sqrt(unit_double(rng));
                points.push_back({hub.x + r * std::cos(angle),
                                  hub.y + r * std::sin(angle)});
            }
            break;
        }
        case PointFamily::kGrid: {
            const int cells = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count))));
            const double spacing = spec.region / cells;
            for (int i = 0; i < count; ++i) {
                const double x = unit_double(rng) * spec.region;
                const double y = unit_double(rng) * spec.region;
                points.push_back({std::round(x / spacing) * spacing,
                                  std::round(y / spacing) * spacing});
            }
            break;
        }
    }
    return points;
}

}  // namespace

std::string generate(const GenSpec& spec) {
    validate_spec(spec);
    const std::vector<Point> points = draw_points(spec);

    std::string out = "# gen n=" + std::to_string(spec.n) + " m=" + std::to_string(spec.m) +
                      " k=" + std::to_string(spec.k) + " seed=" + std::to_string(spec.seed) +
                      " region=" + format_double(spec.region) +
                      " family=" + family_name(spec.family) + "\n";
    out += "k " + std::to_string(spec.k) + "\n";
    for (int i = 0; i < spec.n; ++i) {
        out += "T " + format_double(points[i].x) + " " + format_double(points[i].y) + "\n";
    }
    for (int i = spec.n; i < spec.n + spec.m; ++i) {
        out += "S " + format_double(points[i].x) + " " + format_double(points[i].y) + "\n";
    }
    return out;
}

Instance generate_instance(const GenSpec& spec) {
    return parse_instance_text(generate(spec));
}

PointFamily parse_family(const std::string& name) {
    if (name == "uniform") return PointFamily::kUniform;
    if (name == "clustered") return PointFamily::kClustered;
    if (name == "grid") return PointFamily::kGrid;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_name(PointFamily family) {
    switch (family) {
        case PointFamily::kUniform: return "uniform";
        case PointFamily::kClustered: return "clustered";
        case PointFamily::kGrid: return "grid";
    }
    return "uniform";
}

}  // namespace kbst
