#pragma once

#include <stdexcept>
#include <string>

namespace kbst {

// Instance file rejected. line is 1-based; 0 means the file as a whole.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// No length threshold admits a spanning terminal tree within the budget.
// Carries the normalized cost observed at the largest threshold probed.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(int final_cost);

    int final_cost() const { return final_cost_; }

private:
    int final_cost_;
};

// Exhaustive search would exceed the configured work bound.
class WorkBoundError : public std::runtime_error {
public:
    WorkBoundError(double estimated, double bound);

    double estimated() const { return estimated_; }
    double bound() const { return bound_; }

private:
    double estimated_;
    double bound_;
};

}  // namespace kbst
