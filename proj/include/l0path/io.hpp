#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "l0path/bench.hpp"
#include "l0path/oracle.hpp"
#include "l0path/path.hpp"
#include "l0path/polygon.hpp"
#include "l0path/problems.hpp"
#include "l0path/sbr.hpp"

namespace l0path {

using json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "1.0.0";

/// CSV matrices: first line "m,n", then m rows of n comma-separated values.
/// Throws Error(ParseError) on malformed content and on unreadable files.
Eigen::MatrixXd read_csv_matrix(const std::string& path);
/// An m x 1 or 1 x m matrix.
Eigen::VectorXd read_csv_vector(const std::string& path);
void write_csv_matrix(const std::string& path, const Eigen::MatrixXd& a);
void write_csv_vector(const std::string& path, const Eigen::VectorXd& v);

/// +inf and -inf are written as the strings "inf" / "-inf", NaN as null.
json number(double v);
double number_from(const json& j);

json to_json(const Support& s);
Support support_from_json(const json& j);

json to_json(const PathResult& path);
PathResult path_from_json(const json& j);

json to_json(const ConcavePolygon& poly);
ConcavePolygon polygon_from_json(const json& j);

json to_json(const StoppingRule& stop);
json to_json(const SbrMove& move);
json to_json(const Scenario& s);
/// Starts from the preset named by "preset" (if any) and overrides fields.
Scenario scenario_from_json(const json& j);

json to_json(const TrialScores& s);
json to_json(const OracleReport& r);

/// Per-trial records and per-algorithm summaries. Every timing lives under
/// a "timing" key so that outputs can be compared with timings removed.
json to_json(const BenchResult& r);

/// Reproducibility header embedded in every output file.
json run_manifest(const std::string& command, const json& parameters,
                  const std::map<std::string, double>& phase_seconds);

/// Recursively drops every "timing" member.
json strip_timing(json j);

/// One row per algorithm: SE, TP, Order, MDLc-SE, MDLc-TP, MDLc-Order, CPU.
std::string bench_summary_csv(const BenchResult& r);

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Line plot with a logarithmic horizontal axis.
std::string svg_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                     const std::vector<SvgSeries>& series);

/// Samples lambda -> E(S_j) + lambda |S_j| for a path on a log grid of
/// `points` values spanning its finite breakpoints.
SvgSeries path_curve_series(const PathResult& path, const std::string& label, std::size_t points = 200);

void write_text(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

}  // namespace l0path
