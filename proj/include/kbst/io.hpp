#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "kbst/solver.hpp"

namespace kbst {

// Instance file format, one record per line:
//   k <int>      budget (exactly once)
//   T <x> <y>    terminal
//   S <x> <y>    Steiner candidate
// '#' starts a comment, blank lines are ignored. Coordinates are decimal
// literals parsed to the nearest 64-bit float. Vertex ids follow file order,
// terminals first.

Instance parse_instance(std::istream& in);
Instance parse_instance_text(std::string_view text);
Instance load_instance(const std::string& path);

// Canonical text form; parse(write_instance(inst)) reproduces coordinates
// bit-for-bit.
std::string write_instance(const Instance& inst);

// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

// "T3" / "S0" style label for CLI and report output.
std::string vertex_label(const Instance& inst, VertexId v);

// The three-line `solve` output: bottleneck, threshold, steiners.
std::string format_solve_output(const SolveReport& report);

// JSON report mirroring SolveReport (see README for the schema).
std::string format_json_report(const Instance& inst, const SolveReport& report,
                               const std::string& method);

}  // namespace kbst
