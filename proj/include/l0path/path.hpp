#pragma once

#include <string>
#include <vector>

#include "l0path/support.hpp"

namespace l0path {

enum class Producer { sbr, csbr, l0pd, oracle };

const char* to_string(Producer p) noexcept;

/// Piecewise-constant approximate solution path.
///
/// Segment j holds `supports[j]` on (lambdas[j], upper(j)] where
/// upper(0) = +inf and upper(j) = lambdas[j-1]. In other words lambdas[j]
/// is the breakpoint lambda_{j+1} below segment j, and supports[0] is the
/// empty support. `continuous[j]` describes the breakpoint lambdas[j]
/// between segments j and j+1 (size = supports.size() - 1).
struct PathResult {
    Producer producer = Producer::csbr;
    std::vector<double> lambdas;
    std::vector<Support> supports;
    std::vector<double> errors;
    std::vector<bool> continuous;
    /// Breakpoints where a non-decreasing lambda had to be clamped.
    std::vector<bool> clamped;

    std::size_t segments() const noexcept { return supports.size(); }
    double upper(std::size_t j) const { return j == 0 ? infinity : lambdas[j - 1]; }

    /// Index of the segment covering lambda (> 0). Throws OutOfRange when
    /// lambda <= the last computed breakpoint and that breakpoint is > 0.
    std::size_t segment_at(double lambda) const;

    /// Cost E(S_j) + lambda |S_j| of the segment covering lambda.
    double cost_at(double lambda) const;
};

const Support& solution_at(const PathResult& path, double lambda);

}  // namespace l0path
