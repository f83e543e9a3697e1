#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "l0path/eval_select.hpp"
#include "l0path/l0pd.hpp"
#include "l0path/problems.hpp"

namespace l0path {

enum class Algo { csbr, l0pd, sbr_grid };

const char* to_string(Algo algo) noexcept;
/// "csbr", "l0pd" or "sbr"; throws InvalidArgument otherwise.
Algo parse_algo(const std::string& name);

/// Early-stopping threshold relative to the smallest grid value: 1 for
/// CSBR, 0.5 (m <= 500) or 0.8 (m > 500) for l0-PD, unused by per-grid SBR.
double lambda_stop_factor(Algo algo, std::size_t m);

struct BenchConfig {
    Scenario scenario;
    std::vector<Algo> algos{Algo::l0pd};
    std::size_t trials = 30;
    /// First trial index; trial t uses the stream (scenario.seed, first_trial + t).
    std::uint64_t first_trial = 0;
    std::size_t grid_points = default_grid_points;
    /// Grid span below lambda_1; 0 picks grid_decades_for(scenario).
    double grid_decades = 0.0;
    /// 0: L0PATH_THREADS, else hardware concurrency.
    std::size_t threads = 0;
    /// Verify l0-PD polygon invariants after every exploration.
    bool check_invariants = false;
    bool keep_paths = false;
};

struct AlgoTrial {
    Algo algo = Algo::l0pd;
    TrialScores scores;
    std::size_t segments = 0;
    /// l0-PD only.
    std::size_t explorations = 0;
    std::string invariant_violation;
    /// Solver failure message; scores are meaningless when set.
    std::string error;
    double cpu_seconds = 0.0;
    std::optional<PathResult> path;
    std::optional<ConcavePolygon> polygon;
};

struct TrialRecord {
    std::uint64_t trial = 0;
    Support support_star;
    double sigma_n_sq = 0.0;
    LambdaGrid grid;
    std::vector<AlgoTrial> runs;
};

struct AlgoSummary {
    Algo algo = Algo::l0pd;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double se = 0.0, tp = 0.0, order = 0.0;
    double mdlc_se = 0.0, mdlc_tp = 0.0, mdlc_order = 0.0;
    /// Mean over trials of J at grid index i (trials without a value skipped).
    std::vector<double> mean_j;
    /// Mean CPU time per trial, and the same divided by the grid size.
    double cpu_seconds = 0.0;
    double cpu_seconds_per_grid = 0.0;
};

struct BenchResult {
    BenchConfig config;
    std::vector<TrialRecord> trials;
    std::vector<AlgoSummary> summaries;
};

/// Trials run concurrently; results are merged in trial order so the output
/// is independent of the thread count (timings aside).
BenchResult run_benchmark(const BenchConfig& config);

/// 4 decades for noisy scenarios, 8 for noise-free ones.
double grid_decades_for(const Scenario& scenario);

/// Solves one trial with one algorithm.
AlgoTrial run_algo(Algo algo, const Instance& inst, const LambdaGrid& grid, bool check_invariants,
                   bool keep_path);

std::size_t bench_threads(std::size_t requested);

}  // namespace l0path
