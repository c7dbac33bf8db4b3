#pragma once

#include <cstdint>
#include <string>

#include "kbst/geometry.hpp"

namespace kbst {

enum class PointFamily { kUniform, kClustered, kGrid };

// Seeded instance generator. Same spec -> byte-identical file.
struct GenSpec {
    int n = 1;
    int m = 0;
    int k = 0;
    std::uint64_t seed = 0;
    double region = 100.0;  // square side
    PointFamily family = PointFamily::kUniform;
};

// Instance file text. uniform: i.i.d. points in the region square.
// clustered: ceil(n/4) cluster centers, points uniform in disks of radius
// region/10 around them. grid: uniform points snapped to the nearest point
// of a lattice with spacing region / ceil(sqrt(n+m)).
// Throws std::invalid_argument on a bad spec.
std::string generate(const GenSpec& spec);

// generate + parse in one step.
Instance generate_instance(const GenSpec& spec);

PointFamily parse_family(const std::string& name);  // throws invalid_argument
std::string family_name(PointFamily family);

}  // namespace kbst
