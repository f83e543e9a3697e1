#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "l0path/bench.hpp"
#include "l0path/csbr.hpp"
#include "l0path/errors.hpp"
#include "l0path/eval_select.hpp"
#include "l0path/io.hpp"
#include "l0path/l0pd.hpp"
#include "l0path/oracle.hpp"
#include "l0path/problems.hpp"
#include "l0path/sbr.hpp"

using namespace l0path;
namespace fs = std::filesystem;

namespace {

enum Exit { exit_ok = 0, exit_usage = 2, exit_solver = 3, exit_verification = 4 };

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse_error:
        case ErrorCode::invalid_argument:
        case ErrorCode::too_large:
        case ErrorCode::bad_dims:
        case ErrorCode::dimension_mismatch:
        case ErrorCode::zero_column:
            return exit_usage;
        default:
            return exit_solver;
    }
}

class Stopwatch {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void write_json(const std::string& path, const json& j) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << '\n';
    } else {
        write_text(path, j.dump(2) + "\n");
    }
}

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void print_segments(const PathResult& path, std::ostream& os) {
    os << "segment  lambda_lo     lambda_hi     card  error\n";
    for (std::size_t j = 0; j < path.segments(); ++j) {
        char line[160];
        std::snprintf(line, sizeof line, "%-8zu %-13s %-13s %-5zu %s\n", j, fmt(path.lambdas[j]).c_str(),
                      fmt(path.upper(j)).c_str(), path.supports[j].size(), fmt(path.errors[j]).c_str());
        os << line;
    }
}

Scenario load_scenario(const std::string& name, const std::string& json_file, std::uint64_t seed,
                       bool seed_given) {
    Scenario s;
    if (!json_file.empty()) {
        json j;
        try {
            j = json::parse(read_text(json_file));
        } catch (const json::exception& e) {
            throw Error(ErrorCode::parse_error, json_file + ": " + e.what());
        }
        s = scenario_from_json(j);
    } else {
        s = scenario_preset(name);
    }
    if (seed_given) s.seed = seed;
    return s;
}

// gen -----------------------------------------------------------------------

struct GenArgs {
    std::string scenario = "A";
    std::string scenario_json;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::string out = ".";
};

int cmd_gen(const GenArgs& a, bool seed_given) {
    Stopwatch sw;
    const Scenario s = load_scenario(a.scenario, a.scenario_json, a.seed, seed_given);
    const Instance inst = draw_instance(s, a.trial);
    const double t_gen = sw.lap();
    fs::create_directories(a.out);
    const fs::path dir(a.out);
    write_csv_matrix((dir / "A.csv").string(), inst.dict->matrix());
    write_csv_vector((dir / "y.csv").string(), inst.y);
    write_csv_vector((dir / "xstar.csv").string(), inst.x_star);
    json meta = {{"manifest", run_manifest("gen", {{"scenario", to_json(s)}, {"trial", a.trial}},
                                           {{"generate", t_gen}, {"write", sw.lap()}})},
                 {"scenario", to_json(s)},
                 {"trial", a.trial},
                 {"support_star", to_json(inst.support_star)},
                 {"sigma_n_sq", number(inst.sigma_n_sq)}};
    write_json((dir / "meta.json").string(), meta);
    std::cout << "wrote " << inst.dict->rows() << "x" << inst.dict->cols() << " instance to " << a.out << '\n';
    return exit_ok;
}

// solve ---------------------------------------------------------------------

struct SolveArgs {
    std::string algo = "csbr";
    std::string a_file, y_file;
    std::string out;
    double lambda = -1.0;
    std::string trace;
    double lambda_stop = 0.0;
    double lambda_stop_rel = 0.0;
    std::size_t k_stop = 0;
    double eps_stop = -1.0;
    std::size_t iter_cap = 0;
    bool no_skip = false;
    bool quiet = false;
};

int cmd_solve(const SolveArgs& a) {
    Stopwatch sw;
    const ProblemPtr problem = make_problem(build_dictionary(read_csv_matrix(a.a_file)), read_csv_vector(a.y_file));
    std::map<std::string, double> phases{{"load", sw.lap()}};

    StoppingRule stop;
    stop.lambda_stop = a.lambda_stop;
    if (a.lambda_stop_rel > 0.0) stop.lambda_stop = a.lambda_stop_rel * problem->first_breakpoint().first;
    stop.k_stop = a.k_stop;
    stop.eps_stop = a.eps_stop;
    stop.iter_cap = a.iter_cap;

    json params = {{"algo", a.algo}, {"A", a.a_file}, {"y", a.y_file}};
    json out;
    if (a.algo == "sbr") {
        if (a.lambda < 0.0) throw Error(ErrorCode::invalid_argument, "solve --algo sbr needs --lambda >= 0");
        params["lambda"] = a.lambda;
        SbrOptions opts;
        opts.record_trace = !a.trace.empty();
        const SbrOutcome r = sbr(problem, a.lambda, Support{}, opts);
        phases["solve"] = sw.lap();
        if (!a.trace.empty()) {
            std::ostringstream os;
            for (const SbrMove& mv : r.trace) os << to_json(mv).dump() << '\n';
            write_text(a.trace, os.str());
        }
        out = {{"manifest", run_manifest("solve", params, phases)},
               {"lambda", a.lambda},
               {"support", to_json(r.state.support())},
               {"card", r.state.size()},
               {"error", number(r.state.error())},
               {"cost", number(r.cost(a.lambda))},
               {"delta_e_add", number(r.delta_e_add)},
               {"ell_add", r.ell_add == no_atom ? json(nullptr) : json(r.ell_add)},
               {"replacements", r.replacements}};
        if (!a.quiet) {
            std::cout << "lambda " << fmt(a.lambda) << "  card " << r.state.size() << "  error "
                      << fmt(r.state.error()) << "  cost " << fmt(r.cost(a.lambda)) << '\n';
        }
    } else {
        params["stop"] = to_json(stop);
        PathResult path;
        if (a.algo == "csbr") {
            path = csbr(problem, stop);
            phases["solve"] = sw.lap();
            out = {{"manifest", run_manifest("solve", params, phases)}, {"path", to_json(path)}};
        } else if (a.algo == "l0pd") {
            L0pdConfig cfg;
            cfg.stop = stop;
            cfg.use_skip_tests = !a.no_skip;
            L0pdResult res = l0pd(problem, cfg);
            phases["solve"] = sw.lap();
            path = res.path;
            out = {{"manifest", run_manifest("solve", params, phases)},
                   {"path", to_json(path)},
                   {"polygon", to_json(res.polygon)},
                   {"explorations", res.explorations},
                   {"skipped", res.skipped}};
        } else {
            throw Error(ErrorCode::invalid_argument, "unknown algorithm '" + a.algo + "'");
        }
        if (!a.quiet) print_segments(path, std::cout);
    }
    write_json(a.out, out);
    return exit_ok;
}

// oracle --------------------------------------------------------------------

struct OracleArgs {
    std::string check = "all";
    Index n = 8;
    Index m = 10;
    std::size_t k = 3;
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    std::string dump_dir = ".";
    std::string replay;
    std::string out;
};

struct OracleInstance {
    std::uint64_t seed = 0, trial = 0;
    Eigen::MatrixXd a;
    Eigen::VectorXd y;
};

OracleInstance random_oracle_instance(Index m, Index n, std::size_t k, std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> g(0.0, 1.0);
    OracleInstance inst{seed, trial, Eigen::MatrixXd(m, n), Eigen::VectorXd::Zero(m)};
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < m; ++i) inst.a(i, j) = g(rng);
    std::vector<Index> idx(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t q = 0; q < std::min<std::size_t>(k, idx.size()); ++q) inst.y += g(rng) * inst.a.col(idx[q]);
    for (Index i = 0; i < m; ++i) inst.y(i) += 0.1 * g(rng);
    return inst;
}

json instance_to_json(const OracleInstance& inst) {
    json rows = json::array();
    for (Index i = 0; i < inst.a.rows(); ++i) {
        json r = json::array();
        for (Index j = 0; j < inst.a.cols(); ++j) r.push_back(inst.a(i, j));
        rows.push_back(std::move(r));
    }
    json y = json::array();
    for (Index i = 0; i < inst.y.size(); ++i) y.push_back(inst.y(i));
    return {{"seed", inst.seed}, {"trial", inst.trial}, {"A", rows}, {"y", y}};
}

OracleInstance instance_from_json(const json& j) {
    try {
        OracleInstance inst;
        inst.seed = j.value("seed", std::uint64_t{0});
        inst.trial = j.value("trial", std::uint64_t{0});
        const json& rows = j.at("A");
        const auto m = static_cast<Index>(rows.size());
        const auto n = m > 0 ? static_cast<Index>(rows.at(0).size()) : 0;
        inst.a.resize(m, n);
        for (Index i = 0; i < m; ++i) {
            if (static_cast<Index>(rows.at(i).size()) != n) throw Error(ErrorCode::parse_error, "ragged A");
            for (Index jj = 0; jj < n; ++jj) inst.a(i, jj) = rows[i][jj].get<double>();
        }
        const json& y = j.at("y");
        inst.y.resize(static_cast<Index>(y.size()));
        for (Index i = 0; i < inst.y.size(); ++i) inst.y(i) = y[i].get<double>();
        return inst;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("replay instance: ") + e.what());
    }
}

/// Violations found on one instance, prefixed by the check that raised them.
std::vector<std::string> check_instance(const OracleInstance& inst, const std::string& which) {
    const ProblemPtr problem = make_problem(build_dictionary(inst.a), inst.y);
    const ExactPaths exact = exact_paths(*problem);
    std::vector<std::string> out;
    auto add = [&out](const std::string& tag, const OracleReport& r) {
        for (const auto& v : r.violations) out.push_back(tag + ": " + v);
    };
    const bool all = which == "all";
    if (all || which == "theorems") {
        add("theorem1", check_theorem1(exact));
        add("theorem2", check_theorem2(exact));
    }
    if (all || which == "dominance") {
        const double g_csbr = dominance_gap(exact, csbr(problem));
        if (g_csbr < -1e-9) out.push_back("dominance: csbr below the exact curve by " + fmt(-g_csbr));
        L0pdConfig cfg;
        cfg.check_invariants = true;
        const L0pdResult res = l0pd(problem, cfg);
        const double g_pd = dominance_gap(exact, res.path);
        if (g_pd < -1e-9) out.push_back("dominance: l0pd below the exact curve by " + fmt(-g_pd));
        const std::string inv = res.polygon.check_invariants();
        if (!inv.empty()) out.push_back("polygon: " + inv);
    }
    return out;
}

int cmd_oracle(const OracleArgs& a) {
    if (a.check != "all" && a.check != "theorems" && a.check != "dominance")
        throw Error(ErrorCode::invalid_argument, "--check must be theorems, dominance or all");
    Stopwatch sw;
    json params = {{"check", a.check}};
    json instances = json::array();
    std::size_t failed = 0;

    auto run_one = [&](const OracleInstance& inst) {
        const auto v = check_instance(inst, a.check);
        json rec = {{"seed", inst.seed}, {"trial", inst.trial}, {"violations", v}};
        if (!v.empty()) {
            ++failed;
            if (a.replay.empty()) {
                fs::create_directories(a.dump_dir);
                const fs::path p = fs::path(a.dump_dir) /
                                   ("oracle_violation_" + std::to_string(inst.seed) + "_" + std::to_string(inst.trial) +
                                    ".json");
                write_json(p.string(), instance_to_json(inst));
                rec["dump"] = p.string();
                std::cerr << "violation on trial " << inst.trial << ", instance dumped to " << p.string() << '\n';
            }
            for (const auto& s : v) std::cerr << "  " << s << '\n';
        }
        instances.push_back(std::move(rec));
    };

    if (!a.replay.empty()) {
        params["replay"] = a.replay;
        json j;
        try {
            j = json::parse(read_text(a.replay));
        } catch (const json::exception& e) {
            throw Error(ErrorCode::parse_error, a.replay + ": " + e.what());
        }
        run_one(instance_from_json(j));
    } else {
        if (a.n > 14) throw Error(ErrorCode::too_large, "exhaustive checks need n <= 14, got " + std::to_string(a.n));
        if (a.n < 1 || a.m < 1) throw Error(ErrorCode::bad_dims, "--m and --n must be positive");
        params.update({{"m", a.m}, {"n", a.n}, {"k", a.k}, {"trials", a.trials}, {"seed", a.seed}});
        for (std::size_t t = 0; t < a.trials; ++t) run_one(random_oracle_instance(a.m, a.n, a.k, a.seed, t));
    }
    json report = {{"manifest", run_manifest("oracle", params, {{"check", sw.lap()}})},
                   {"instances_checked", instances.size()},
                   {"instances_failed", failed},
                   {"instances", instances}};
    write_json(a.out, report);
    return failed == 0 ? exit_ok : exit_verification;
}

// bench ---------------------------------------------------------------------

struct BenchArgs {
    std::string scenario = "E";
    std::string scenario_json;
    std::vector<std::string> algos{"l0pd"};
    std::size_t trials = 30;
    std::uint64_t first_trial = 0;
    std::uint64_t seed = 0;
    std::size_t grid_points = default_grid_points;
    double grid_decades = 0.0;
    std::size_t threads = 0;
    bool check_invariants = false;
    std::string out;
    std::string csv;
    std::string plot;
};

std::vector<SvgSeries> mean_j_series(const json& results) {
    std::vector<SvgSeries> series;
    const json& trials = results.at("per_trial");
    if (trials.empty()) return series;
    // Grids are anchored per trial; the panel uses the grid index relative
    // to the top value, which is shared by every trial.
    const json& grid = trials.front().at("grid");
    for (const json& s : results.at("summary")) {
        SvgSeries ser{s.at("algo").get<std::string>(), {}, {}};
        const json& mj = s.at("mean_j");
        for (std::size_t i = 0; i < mj.size() && i < grid.size(); ++i) {
            if (mj[i].is_null()) continue;
            ser.x.push_back(number_from(grid[i]) / number_from(grid[0]));
            ser.y.push_back(number_from(mj[i]));
        }
        series.push_back(std::move(ser));
    }
    return series;
}

void write_bench_plots(const json& results, const std::string& dir) {
    fs::create_directories(dir);
    const std::string scen = results.at("scenario").at("name").get<std::string>();
    write_text((fs::path(dir) / "mean_j.svg").string(),
               svg_plot("Scenario " + scen + ": mean J(lambda)", "lambda / lambda_1", "mean J", mean_j_series(results)));
    for (const json& t : results.at("per_trial")) {
        std::vector<SvgSeries> curves;
        for (const json& run : t.at("runs")) {
            if (!run.contains("path")) continue;
            curves.push_back(path_curve_series(path_from_json(run.at("path")), run.at("algo").get<std::string>()));
        }
        if (curves.empty()) continue;
        const std::string name = "curve_trial_" + std::to_string(t.at("trial").get<std::uint64_t>()) + ".svg";
        write_text((fs::path(dir) / name).string(),
                   svg_plot("Scenario " + scen + ", trial " + std::to_string(t.at("trial").get<std::uint64_t>()),
                            "lambda", "E(S) + lambda |S|", curves));
    }
}

int cmd_bench(const BenchArgs& a, bool seed_given) {
    Stopwatch sw;
    BenchConfig cfg;
    cfg.scenario = load_scenario(a.scenario, a.scenario_json, a.seed, seed_given);
    cfg.algos.clear();
    for (const auto& name : a.algos) {
        std::stringstream ss(name);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) cfg.algos.push_back(parse_algo(part));
    }
    cfg.trials = a.trials;
    cfg.first_trial = a.first_trial;
    cfg.grid_points = a.grid_points;
    cfg.grid_decades = a.grid_decades;
    cfg.threads = a.threads;
    cfg.check_invariants = a.check_invariants;
    cfg.keep_paths = !a.plot.empty();
    const BenchResult res = run_benchmark(cfg);
    const double t_run = sw.lap();

    json params = {{"scenario", to_json(cfg.scenario)},
                   {"algos", a.algos},
                   {"trials", a.trials},
                   {"first_trial", a.first_trial},
                   {"grid_points", a.grid_points},
                   {"grid_decades", a.grid_decades},
                   {"check_invariants", a.check_invariants}};
    json results = to_json(res);
    json out = {{"manifest", run_manifest("bench", params, {{"run", t_run}})}};
    out.update(results);
    write_json(a.out, out);

    if (!a.csv.empty()) write_text(a.csv, bench_summary_csv(res));
    if (!a.plot.empty()) write_bench_plots(out, a.plot);

    std::size_t violations = 0;
    for (const auto& t : res.trials)
        for (const auto& r : t.runs)
            if (!r.invariant_violation.empty()) {
                ++violations;
                std::cerr << "trial " << t.trial << " " << to_string(r.algo) << ": " << r.invariant_violation << '\n';
            }
    std::cerr << bench_summary_csv(res);
    std::size_t failures = 0;
    for (const auto& s : res.summaries) failures += s.failures;
    if (violations > 0) return exit_verification;
    return failures > 0 ? exit_solver : exit_ok;
}

// select --------------------------------------------------------------------

struct SelectArgs {
    std::string path_file;
    std::size_t m = 0;
    std::string rule = "mdlc";
    double alpha = -1.0;
    std::string out;
};

PathResult load_path(const std::string& file) {
    json j;
    try {
        j = json::parse(read_text(file));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, file + ": " + e.what());
    }
    try {
        return path_from_json(j.contains("path") ? j.at("path") : j);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, file + ": " + e.what());
    }
}

int cmd_select(const SelectArgs& a) {
    const PathResult path = load_path(a.path_file);
    std::size_t pick = 0;
    json params = {{"path", a.path_file}, {"m", a.m}, {"rule", a.rule}};
    if (a.alpha >= 0.0) {
        params["alpha"] = a.alpha;
        pick = ic_select(path, a.m, a.alpha);
    } else if (a.rule == "mdlc") {
        pick = mdlc_select(path, a.m);
    } else if (a.rule == "aic") {
        pick = ic_select(path, a.m, IcRule::aic);
    } else if (a.rule == "mdl") {
        pick = ic_select(path, a.m, IcRule::mdl);
    } else if (a.rule == "hq") {
        pick = ic_select(path, a.m, IcRule::hannan_quinn);
    } else {
        throw Error(ErrorCode::invalid_argument, "unknown rule '" + a.rule + "'");
    }
    json out = {{"manifest", run_manifest("select", params, {})},
                {"segment", pick},
                {"lambda_lo", number(path.lambdas[pick])},
                {"lambda_hi", number(path.upper(pick))},
                {"support", to_json(path.supports[pick])},
                {"card", path.supports[pick].size()},
                {"error", number(path.errors[pick])}};
    write_json(a.out, out);
    return exit_ok;
}

// plot ----------------------------------------------------------------------

struct PlotArgs {
    std::vector<std::string> paths;
    std::string bench;
    std::string out = "plot.svg";
    std::string title = "l0-curve";
};

int cmd_plot(const PlotArgs& a) {
    if (!a.bench.empty()) {
        json j;
        try {
            j = json::parse(read_text(a.bench));
        } catch (const json::exception& e) {
            throw Error(ErrorCode::parse_error, a.bench + ": " + e.what());
        }
        write_text(a.out, svg_plot(a.title, "lambda / lambda_1", "mean J", mean_j_series(j)));
        return exit_ok;
    }
    if (a.paths.empty()) throw Error(ErrorCode::invalid_argument, "plot needs --path or --bench");
    std::vector<SvgSeries> series;
    for (const auto& f : a.paths) series.push_back(path_curve_series(load_path(f), fs::path(f).stem().string()));
    write_text(a.out, svg_plot(a.title, "lambda", "E(S) + lambda |S|", series));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate l0-penalized regularization paths"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* c_gen = app.add_subcommand("gen", "Draw one benchmark instance and write it as CSV");
    c_gen->add_option("--scenario", gen.scenario, "Preset A-J");
    c_gen->add_option("--scenario-json", gen.scenario_json, "Custom scenario file");
    c_gen->add_option("--trial", gen.trial);
    auto* gen_seed = c_gen->add_option("--seed", gen.seed);
    c_gen->add_option("--out", gen.out, "Output directory");

    SolveArgs solve;
    auto* c_solve = app.add_subcommand("solve", "Run SBR, CSBR or l0-PD on CSV data");
    c_solve->add_option("--algo", solve.algo)->check(CLI::IsMember({"sbr", "csbr", "l0pd"}));
    c_solve->add_option("--A", solve.a_file)->required();
    c_solve->add_option("--y", solve.y_file)->required();
    c_solve->add_option("--out", solve.out, "JSON output (stdout when omitted)");
    c_solve->add_option("--lambda", solve.lambda, "Penalty for --algo sbr");
    c_solve->add_option("--trace", solve.trace, "SBR move trace as JSON lines");
    c_solve->add_option("--lambda-stop", solve.lambda_stop);
    c_solve->add_option("--lambda-stop-rel", solve.lambda_stop_rel, "lambda_stop as a fraction of lambda_1");
    c_solve->add_option("--k-stop", solve.k_stop);
    c_solve->add_option("--eps-stop", solve.eps_stop);
    c_solve->add_option("--iter-cap", solve.iter_cap);
    c_solve->add_flag("--no-skip-tests", solve.no_skip);
    c_solve->add_flag("--quiet", solve.quiet);

    OracleArgs oracle;
    auto* c_oracle = app.add_subcommand("oracle", "Exhaustive checks on random small instances");
    c_oracle->add_option("--check", oracle.check, "theorems, dominance or all");
    c_oracle->add_option("--n", oracle.n);
    c_oracle->add_option("--m", oracle.m);
    c_oracle->add_option("--k", oracle.k);
    c_oracle->add_option("--trials", oracle.trials);
    c_oracle->add_option("--seed", oracle.seed);
    c_oracle->add_option("--dump-dir", oracle.dump_dir);
    c_oracle->add_option("--replay", oracle.replay, "Re-check a dumped instance");
    c_oracle->add_option("--out", oracle.out);

    BenchArgs bench;
    auto* c_bench = app.add_subcommand("bench", "Benchmark campaign over random trials");
    c_bench->add_option("--scenario", bench.scenario);
    c_bench->add_option("--scenario-json", bench.scenario_json);
    c_bench->add_option("--algo", bench.algos, "csbr, l0pd, sbr (repeat or comma-separate)");
    c_bench->add_option("--trials", bench.trials);
    c_bench->add_option("--first-trial", bench.first_trial);
    auto* bench_seed = c_bench->add_option("--seed", bench.seed);
    c_bench->add_option("--grid-points", bench.grid_points);
    c_bench->add_option("--grid-decades", bench.grid_decades, "Grid span below lambda_1 (default 4, 8 when noise-free)");
    c_bench->add_option("--threads", bench.threads);
    c_bench->add_flag("--check-invariants", bench.check_invariants);
    c_bench->add_option("--out", bench.out);
    c_bench->add_option("--csv", bench.csv);
    c_bench->add_option("--plot", bench.plot, "Directory for SVG panels");

    SelectArgs select;
    auto* c_select = app.add_subcommand("select", "Model order selection on a path");
    c_select->add_option("--path", select.path_file)->required();
    c_select->add_option("--m", select.m)->required();
    c_select->add_option("--rule", select.rule, "mdlc, aic, mdl or hq");
    c_select->add_option("--alpha", select.alpha, "Custom information criterion weight");
    c_select->add_option("--out", select.out);

    PlotArgs plot;
    auto* c_plot = app.add_subcommand("plot", "SVG from path or bench JSON");
    c_plot->add_option("--path", plot.paths);
    c_plot->add_option("--bench", plot.bench);
    c_plot->add_option("--out", plot.out);
    c_plot->add_option("--title", plot.title);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*c_gen) return cmd_gen(gen, gen_seed->count() > 0);
        if (*c_solve) return cmd_solve(solve);
        if (*c_oracle) return cmd_oracle(oracle);
        if (*c_bench) return cmd_bench(bench, bench_seed->count() > 0);
        if (*c_select) return cmd_select(select);
        if (*c_plot) return cmd_plot(plot);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_solver;
    }
    return exit_usage;
}
