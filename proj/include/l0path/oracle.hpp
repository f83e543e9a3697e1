#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "l0path/dictionary.hpp"
#include "l0path/path.hpp"
#include "l0path/polygon.hpp"

namespace l0path {

/// Ground truth from exhaustive enumeration of supports.
///
/// Errors come from a dense QR solve per subset, independently of the
/// Cholesky machinery used by the solvers. Two supports tie when their
/// costs differ by at most `tol` = 1e-9 (1 + ||y||^2).
struct ExactPaths {
    struct Subset {
        Support support;
        double error;
    };

    std::vector<Subset> subsets;
    double tol = 0.0;
    /// Errors closer than 1e-12 (1 + ||y||^2) are equal for the constrained
    /// sets; curve edges shorter than that are merged into a neighbour.
    double err_tol = 0.0;

    /// constrained[k]: minimizers of E(S) subject to |S| <= k (all ties).
    std::vector<std::vector<Support>> constrained;
    std::vector<double> constrained_error;

    /// The exact l0-curve; its vertices are the breakpoints lambda*_i.
    ConcavePolygon curve;
    /// Penalized solution set on each open interval (one per curve edge).
    std::vector<std::vector<Support>> interval_sets;
    /// Penalized solution set at each finite positive breakpoint
    /// curve.breakpoints()[1 .. I].
    std::vector<std::vector<Support>> breakpoint_sets;

    /// Brute-force minimizers of E(S) + lambda |S|.
    std::vector<Support> solution_set(double lambda) const { return solution_set(lambda, tol); }
    std::vector<Support> solution_set(double lambda, double tie_tol) const;
    double curve_value(double lambda) const { return curve.evaluate(lambda).first; }
};

/// Throws TooLarge when n > 14 without a cardinality cap, or when the capped
/// enumeration would still exceed 2^22 subsets.
ExactPaths exact_paths(const Problem& problem, std::size_t max_card = 0);

struct OracleReport {
    std::vector<std::string> violations;
    /// Constrained solution sets that never appear on the penalized path
    /// (non-supported Pareto points).
    std::size_t non_supported = 0;
    bool ok() const noexcept { return violations.empty(); }
};

/// Piecewise constancy of the penalized solution sets on `grid_per_interval`
/// points inside each interval, plus the breakpoint inclusions.
OracleReport check_theorem1(const ExactPaths& paths, std::size_t grid_per_interval = 9);

/// Every interval's solution set equals some constrained set S*_C(k).
OracleReport check_theorem2(const ExactPaths& paths);

/// min over the probe lambdas of (approximate cost - exact l0-curve). The
/// probes are the breakpoints of both curves, midpoints between them, and a
/// log grid spanning them.
double dominance_gap(const ExactPaths& paths, const PathResult& path);

}  // namespace l0path
