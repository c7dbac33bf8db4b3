#pragma once

#include <cstdint>

#include "kbst/solver.hpp"

namespace kbst {

// Default cap on C(m,k) * (n+k)^2 for the exhaustive solver.
inline constexpr double kDefaultWorkBound = 1e8;

struct ExactResult {
    double optimum_bottleneck = 0.0;
    SteinerTree witness;  // achieves the optimum
    std::uint64_t subsets_examined = 0;
};

// Exhaustive ground truth: minimum over all Steiner subsets of size
// min(k, m) of the connectivity threshold of the complete graph on the
// terminals plus the subset (edges added in ascending length order until
// all terminals share a component). Larger subsets never help, so fixing
// the size is exact. Deliberately simple rather than fast.
//
// Throws WorkBoundError when C(m,k) * (n+k)^2 exceeds work_bound.
// Ties between minimizing subsets resolve to the lexicographically
// smallest one.
ExactResult solve_exact(const Instance& inst, double work_bound = kDefaultWorkBound);

// approx bottleneck / exact optimum; 1.0 when both are zero.
double ratio(const SolveReport& approx, const ExactResult& exact);

}  // namespace kbst
