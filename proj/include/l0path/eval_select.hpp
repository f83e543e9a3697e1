#pragma once

#include <cstddef>
#include <vector>

#include "l0path/path.hpp"
#include "l0path/problems.hpp"

namespace l0path {

/// Decreasing, log-spaced lambda values.
struct LambdaGrid {
    std::vector<double> values;
    std::size_t n_points() const noexcept { return values.size(); }
};

inline constexpr std::size_t default_grid_points = 11;
inline constexpr double default_grid_decades = 4.0;
/// Noise-free data keep improving far below lambda_1, so their grids go deeper.
inline constexpr double noise_free_grid_decades = 8.0;

/// n points from `top` down to top * 10^-decades. Throws InvalidArgument
/// unless top > 0, decades > 0 and n >= 2.
LambdaGrid log_grid(double top, double decades = default_grid_decades, std::size_t n = default_grid_points);

/// log_grid anchored at the first breakpoint max_i <y,a_i>^2 / ||a_i||^2.
/// Throws EmptyGrid for y = 0 (no positive anchor).
LambdaGrid default_grid(const Problem& problem, std::size_t n = default_grid_points,
                        double decades = default_grid_decades);

/// Errors below 1e-16 ||y||^2 count as an exact fit.
bool is_zero_error(double error, double norm_sq) noexcept;

/// log E + log(m) (|S| + 1) / (m - |S| - 2).
double mdlc_criterion(double error, std::size_t card, std::size_t m);

/// Segment of `path` minimizing the MDLc criterion; ties go to the smaller
/// support. Segments with |S| > m - 3 are ineligible. When some eligible
/// segment fits exactly, the sparsest such segment is returned instead.
/// Throws NoEligibleSegment.
std::size_t mdlc_select(const PathResult& path, std::size_t m);

enum class IcRule { aic, mdl, hannan_quinn };

const char* to_string(IcRule rule) noexcept;
/// 2, log m, 2 log log m.
double ic_alpha(IcRule rule, std::size_t m);

/// Segment minimizing m log E + alpha |S| (ties: smaller |S|), with the same
/// exact-fit rule as mdlc_select. Throws NoEligibleSegment.
std::size_t ic_select(const PathResult& path, std::size_t m, double alpha);
std::size_t ic_select(const PathResult& path, std::size_t m, IcRule rule);

struct SupportScore {
    std::size_t se = 0;
    std::size_t tp = 0;
};

/// se = |S* \ S| + |S \ S*|, tp = |S* n S|.
SupportScore support_error(const Support& truth, const Support& estimate);

struct TrialScores {
    std::size_t se = 0;
    std::size_t tp = 0;
    std::size_t order = 0;
    /// Grid value where se is attained (largest on ties).
    double lambda_opt = 0.0;
    std::size_t mdlc_se = 0;
    std::size_t mdlc_tp = 0;
    std::size_t mdlc_order = 0;
    /// Penalized cost at every grid point; NaN where the path stops short.
    std::vector<double> j_grid;
    std::size_t skipped_grid = 0;
};

/// Scores a path on a grid: the best grid solution by support error, plus
/// the MDLc selection over all segments. Grid points at or below the last
/// computed breakpoint are skipped and counted. Throws EmptyGrid when no grid
/// point falls inside the computed range.
TrialScores score_trial(const Support& truth, const PathResult& path, const LambdaGrid& grid, std::size_t m);

/// Same protocol for one support per grid point (independent solves).
/// MDLc chooses among the grid solutions; norm_sq = ||y||^2 sets the
/// exact-fit threshold.
TrialScores score_grid_solutions(const Support& truth, const std::vector<Support>& supports,
                                 const std::vector<double>& errors, const LambdaGrid& grid, std::size_t m,
                                 double norm_sq);

}  // namespace l0path
