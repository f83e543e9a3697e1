#include "l0path/bench.hpp"

#include <time.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

#include "l0path/csbr.hpp"
#include "l0path/errors.hpp"
#include "l0path/sbr.hpp"

namespace l0path {

const char* to_string(Algo algo) noexcept {
    switch (algo) {
        case Algo::csbr: return "csbr";
        case Algo::l0pd: return "l0pd";
        case Algo::sbr_grid: return "sbr";
    }
    return "?";
}

Algo parse_algo(const std::string& name) {
    if (name == "csbr") return Algo::csbr;
    if (name == "l0pd") return Algo::l0pd;
    if (name == "sbr") return Algo::sbr_grid;
    throw Error(ErrorCode::invalid_argument, "unknown algorithm '" + name + "'");
}

double lambda_stop_factor(Algo algo, std::size_t m) {
    switch (algo) {
        case Algo::csbr: return 1.0;
        case Algo::l0pd: return m <= 500 ? 0.5 : 0.8;
        case Algo::sbr_grid: return 0.0;
    }
    return 0.0;
}

std::size_t bench_threads(std::size_t requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("L0PATH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

double thread_cpu_seconds() {
    timespec ts{};
    clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

}  // namespace

AlgoTrial run_algo(Algo algo, const Instance& inst, const LambdaGrid& grid, bool check_invariants,
                   bool keep_path) {
    AlgoTrial out;
    out.algo = algo;
    const ProblemPtr problem = inst.problem();
    const std::size_t m = static_cast<std::size_t>(inst.dict->rows());
    StoppingRule stop;
    stop.lambda_stop = lambda_stop_factor(algo, m) * grid.values.back();

    const double t0 = thread_cpu_seconds();
    try {
        switch (algo) {
            case Algo::csbr: {
                PathResult path = csbr(problem, stop);
                out.cpu_seconds = thread_cpu_seconds() - t0;
                out.segments = path.segments();
                out.scores = score_trial(inst.support_star, path, grid, m);
                if (keep_path) out.path = std::move(path);
                break;
            }
            case Algo::l0pd: {
                L0pdConfig cfg;
                cfg.stop = stop;
                cfg.check_invariants = false;
                L0pdResult res = l0pd(problem, cfg);
                out.cpu_seconds = thread_cpu_seconds() - t0;
                out.segments = res.path.segments();
                out.explorations = res.explorations;
                if (check_invariants) out.invariant_violation = res.polygon.check_invariants();
                out.scores = score_trial(inst.support_star, res.path, grid, m);
                if (keep_path) {
                    out.path = std::move(res.path);
                    out.polygon = std::move(res.polygon);
                }
                break;
            }
            case Algo::sbr_grid: {
                std::vector<Support> supports;
                std::vector<double> errors;
                for (double lambda : grid.values) {
                    SbrOutcome r = sbr(problem, lambda);
                    supports.push_back(r.state.support());
                    errors.push_back(r.state.error());
                }
                out.cpu_seconds = thread_cpu_seconds() - t0;
                out.segments = supports.size();
                out.scores = score_grid_solutions(inst.support_star, supports, errors, grid, m,
                                                  problem->obs().norm_sq);
                break;
            }
        }
    } catch (const std::exception& e) {
        out.cpu_seconds = thread_cpu_seconds() - t0;
        out.error = e.what();
    }
    return out;
}

double grid_decades_for(const Scenario& scenario) {
    return std::isinf(scenario.snr_db) ? noise_free_grid_decades : default_grid_decades;
}

BenchResult run_benchmark(const BenchConfig& config) {
    if (config.algos.empty()) throw Error(ErrorCode::invalid_argument, "no algorithm selected");
    BenchResult result;
    result.config = config;
    result.trials.resize(config.trials);
    const DictionaryPtr dict = scenario_dictionary(config.scenario);
    const double decades = config.grid_decades > 0.0 ? config.grid_decades : grid_decades_for(config.scenario);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= config.trials || failed.load()) return;
            try {
                TrialRecord& rec = result.trials[t];
                rec.trial = config.first_trial + t;
                const Instance inst = draw_instance(config.scenario, dict, rec.trial);
                rec.support_star = inst.support_star;
                rec.sigma_n_sq = inst.sigma_n_sq;
                rec.grid = default_grid(*inst.problem(), config.grid_points, decades);
                for (Algo a : config.algos) {
                    rec.runs.push_back(run_algo(a, inst, rec.grid, config.check_invariants, config.keep_paths));
                }
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    const std::size_t nthreads = std::min(bench_threads(config.threads), std::max<std::size_t>(config.trials, 1));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t a = 0; a < config.algos.size(); ++a) {
        AlgoSummary s;
        s.algo = config.algos[a];
        s.mean_j.assign(config.grid_points, 0.0);
        std::vector<std::size_t> j_count(config.grid_points, 0);
        for (const TrialRecord& rec : result.trials) {
            const AlgoTrial& run = rec.runs[a];
            s.cpu_seconds += run.cpu_seconds;
            if (!run.error.empty()) {
                ++s.failures;
                continue;
            }
            ++s.trials;
            s.se += static_cast<double>(run.scores.se);
            s.tp += static_cast<double>(run.scores.tp);
            s.order += static_cast<double>(run.scores.order);
            s.mdlc_se += static_cast<double>(run.scores.mdlc_se);
            s.mdlc_tp += static_cast<double>(run.scores.mdlc_tp);
            s.mdlc_order += static_cast<double>(run.scores.mdlc_order);
            for (std::size_t i = 0; i < run.scores.j_grid.size() && i < config.grid_points; ++i) {
                if (std::isnan(run.scores.j_grid[i])) continue;
                s.mean_j[i] += run.scores.j_grid[i];
                ++j_count[i];
            }
        }
        if (s.trials) {
            const double t = static_cast<double>(s.trials);
            s.se /= t;
            s.tp /= t;
            s.order /= t;
            s.mdlc_se /= t;
            s.mdlc_tp /= t;
            s.mdlc_order /= t;
        }
        for (std::size_t i = 0; i < config.grid_points; ++i) {
            s.mean_j[i] = j_count[i] ? s.mean_j[i] / static_cast<double>(j_count[i])
                                     : std::numeric_limits<double>::quiet_NaN();
        }
        const double total = static_cast<double>(std::max<std::size_t>(config.trials, 1));
        s.cpu_seconds /= total;
        s.cpu_seconds_per_grid = s.cpu_seconds / static_cast<double>(config.grid_points);
        result.summaries.push_back(std::move(s));
    }
    return result;
}

}  // namespace l0path
