#include "l0path/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "l0path/errors.hpp"

namespace l0path {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::parse_error, path + ": " + what);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

double parse_double(const std::string& path, const std::string& tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        parse_fail(path, "bad number '" + tok + "'");
    }
    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
    if (used != tok.size()) parse_fail(path, "bad number '" + tok + "'");
    return v;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

Eigen::MatrixXd read_csv_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail(path, "cannot open");
    std::string line;
    if (!std::getline(in, line)) parse_fail(path, "empty file");
    const auto dims = split(line, ',');
    if (dims.size() != 2) parse_fail(path, "first line must be 'm,n'");
    const double md = parse_double(path, dims[0]);
    const double nd = parse_double(path, dims[1]);
    if (md < 1 || nd < 1 || md != std::floor(md) || nd != std::floor(nd)) parse_fail(path, "bad dimensions");
    const auto m = static_cast<Index>(md);
    const auto n = static_cast<Index>(nd);
    Eigen::MatrixXd a(m, n);
    for (Index r = 0; r < m; ++r) {
        if (!std::getline(in, line)) parse_fail(path, "expected " + std::to_string(m) + " rows");
        const auto toks = split(line, ',');
        if (static_cast<Index>(toks.size()) != n) {
            parse_fail(path, "row " + std::to_string(r + 1) + " has " + std::to_string(toks.size()) + " values");
        }
        for (Index c = 0; c < n; ++c) {
            const double v = parse_double(path, toks[static_cast<std::size_t>(c)]);
            if (!std::isfinite(v)) parse_fail(path, "non-finite value");
            a(r, c) = v;
        }
    }
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) parse_fail(path, "trailing content");
    }
    return a;
}

Eigen::VectorXd read_csv_vector(const std::string& path) {
    const Eigen::MatrixXd a = read_csv_matrix(path);
    if (a.cols() == 1) return a.col(0);
    if (a.rows() == 1) return a.row(0).transpose();
    parse_fail(path, "expected a single row or column");
}

void write_csv_matrix(const std::string& path, const Eigen::MatrixXd& a) {
    std::ostringstream os;
    os << a.rows() << "," << a.cols() << "\n";
    for (Index r = 0; r < a.rows(); ++r) {
        for (Index c = 0; c < a.cols(); ++c) os << (c ? "," : "") << format_double(a(r, c));
        os << "\n";
    }
    write_text(path, os.str());
}

void write_csv_vector(const std::string& path, const Eigen::VectorXd& v) {
    write_csv_matrix(path, Eigen::MatrixXd(v));
}

json number(double v) {
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double number_from(const json& j) {
    if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return infinity;
        if (s == "-inf") return -infinity;
        throw Error(ErrorCode::parse_error, "bad number '" + s + "'");
    }
    return j.get<double>();
}

json to_json(const Support& s) { return json(s.indices()); }

Support support_from_json(const json& j) {
    std::vector<Index> idx = j.get<std::vector<Index>>();
    std::sort(idx.begin(), idx.end());
    return Support(std::move(idx));
}

json to_json(const PathResult& path) {
    json segs = json::array();
    for (std::size_t j = 0; j < path.segments(); ++j) {
        segs.push_back({{"upper", number(path.upper(j))},
                        {"lower", number(path.lambdas[j])},
                        {"support", to_json(path.supports[j])},
                        {"card", path.supports[j].size()},
                        {"error", number(path.errors[j])}});
    }
    json lambdas = json::array();
    for (double l : path.lambdas) lambdas.push_back(number(l));
    return {{"producer", to_string(path.producer)},
            {"lambdas", lambdas},
            {"continuous", path.continuous},
            {"clamped", path.clamped},
            {"segments", segs}};
}

PathResult path_from_json(const json& j) {
    try {
        PathResult p;
        const auto prod = j.at("producer").get<std::string>();
        if (prod == "sbr") p.producer = Producer::sbr;
        else if (prod == "csbr") p.producer = Producer::csbr;
        else if (prod == "l0pd") p.producer = Producer::l0pd;
        else if (prod == "oracle") p.producer = Producer::oracle;
        else throw Error(ErrorCode::parse_error, "unknown producer '" + prod + "'");
        for (const auto& l : j.at("lambdas")) p.lambdas.push_back(number_from(l));
        p.continuous = j.at("continuous").get<std::vector<bool>>();
        p.clamped = j.at("clamped").get<std::vector<bool>>();
        for (const auto& s : j.at("segments")) {
            p.supports.push_back(support_from_json(s.at("support")));
            p.errors.push_back(number_from(s.at("error")));
        }
        if (p.supports.size() != p.lambdas.size()) throw Error(ErrorCode::parse_error, "segment count mismatch");
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("path JSON: ") + e.what());
    }
}

json to_json(const ConcavePolygon& poly) {
    json edges = json::array();
    for (const LineS& e : poly.edges()) {
        edges.push_back({{"support", to_json(e.support)},
                         {"error", number(e.error)},
                         {"card", e.card},
                         {"explored", e.explored}});
    }
    json bps = json::array();
    for (double b : poly.breakpoints()) bps.push_back(number(b));
    return {{"edges", edges}, {"breakpoints", bps}};
}

ConcavePolygon polygon_from_json(const json& j) {
    try {
        std::vector<LineS> lines;
        for (const auto& e : j.at("edges")) {
            lines.emplace_back(support_from_json(e.at("support")), number_from(e.at("error")),
                               e.at("explored").get<bool>());
        }
        return ConcavePolygon::envelope_of(std::move(lines));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("polygon JSON: ") + e.what());
    }
}

json to_json(const StoppingRule& stop) {
    json j = {{"lambda_stop", number(stop.lambda_stop)}};
    j["k_stop"] = stop.k_stop ? json(stop.k_stop) : json(nullptr);
    j["eps_stop"] = stop.eps_stop >= 0.0 ? number(stop.eps_stop) : json(nullptr);
    j["iter_cap"] = stop.iter_cap ? json(stop.iter_cap) : json(nullptr);
    return j;
}

json to_json(const SbrMove& move) {
    return {{"move", move.insertion ? "add" : "remove"}, {"atom", move.atom}, {"cost", number(move.cost)}};
}

json to_json(const Scenario& s) {
    return {{"name", s.name},
            {"kind", to_string(s.kind)},
            {"snr_db", number(s.snr_db)},
            {"k", s.k},
            {"f", s.f},
            {"delta", s.delta},
            {"sigma", s.sigma},
            {"m", s.m()},
            {"n", s.n()},
            {"seed", s.seed}};
}

Scenario scenario_from_json(const json& j) {
    try {
        Scenario s;
        if (j.contains("preset")) s = scenario_preset(j.at("preset").get<std::string>());
        if (j.contains("name")) s.name = j.at("name").get<std::string>();
        if (j.contains("kind")) {
            const auto k = j.at("kind").get<std::string>();
            if (k == "jumps") s.kind = ProblemKind::jumps;
            else if (k == "deconvolution") s.kind = ProblemKind::deconvolution;
            else throw Error(ErrorCode::parse_error, "unknown kind '" + k + "'");
        }
        if (j.contains("snr_db")) s.snr_db = number_from(j.at("snr_db"));
        if (j.contains("k")) s.k = j.at("k").get<std::size_t>();
        if (j.contains("f")) s.f = j.at("f").get<std::size_t>();
        if (j.contains("delta")) s.delta = j.at("delta").get<std::size_t>();
        if (j.contains("sigma")) s.sigma = j.at("sigma").get<std::size_t>();
        if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
        if (s.name.empty()) s.name = "custom";
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("scenario JSON: ") + e.what());
    }
}

json to_json(const TrialScores& s) {
    json jg = json::array();
    for (double v : s.j_grid) jg.push_back(number(v));
    return {{"se", s.se},
            {"tp", s.tp},
            {"order", s.order},
            {"lambda_opt", number(s.lambda_opt)},
            {"mdlc_se", s.mdlc_se},
            {"mdlc_tp", s.mdlc_tp},
            {"mdlc_order", s.mdlc_order},
            {"j_grid", jg},
            {"skipped_grid", s.skipped_grid}};
}

json to_json(const OracleReport& r) {
    return {{"ok", r.ok()}, {"violations", r.violations}, {"non_supported", r.non_supported}};
}

json to_json(const BenchResult& r) {
    json trials = json::array();
    for (const TrialRecord& rec : r.trials) {
        json runs = json::array();
        for (const AlgoTrial& run : rec.runs) {
            json jr = {{"algo", to_string(run.algo)}, {"segments", run.segments}};
            if (run.algo == Algo::l0pd) jr["explorations"] = run.explorations;
            if (!run.error.empty()) {
                jr["error"] = run.error;
            } else {
                jr["scores"] = to_json(run.scores);
            }
            if (!run.invariant_violation.empty()) jr["invariant_violation"] = run.invariant_violation;
            if (run.path) jr["path"] = to_json(*run.path);
            if (run.polygon) jr["polygon"] = to_json(*run.polygon);
            jr["timing"] = {{"cpu_seconds", run.cpu_seconds}};
            runs.push_back(std::move(jr));
        }
        json grid = json::array();
        for (double g : rec.grid.values) grid.push_back(number(g));
        trials.push_back({{"trial", rec.trial},
                          {"support_star", to_json(rec.support_star)},
                          {"sigma_n_sq", number(rec.sigma_n_sq)},
                          {"grid", grid},
                          {"runs", runs}});
    }
    json summaries = json::array();
    for (const AlgoSummary& s : r.summaries) {
        json mj = json::array();
        for (double v : s.mean_j) mj.push_back(number(v));
        summaries.push_back({{"algo", to_string(s.algo)},
                             {"trials", s.trials},
                             {"failures", s.failures},
                             {"se", s.se},
                             {"tp", s.tp},
                             {"order", s.order},
                             {"mdlc_se", s.mdlc_se},
                             {"mdlc_tp", s.mdlc_tp},
                             {"mdlc_order", s.mdlc_order},
                             {"mean_j", mj},
                             {"timing",
                              {{"cpu_seconds", s.cpu_seconds}, {"cpu_seconds_per_grid", s.cpu_seconds_per_grid}}}});
    }
    json algos = json::array();
    for (Algo a : r.config.algos) algos.push_back(to_string(a));
    return {{"scenario", to_json(r.config.scenario)},
            {"algos", algos},
            {"trials", r.config.trials},
            {"first_trial", r.config.first_trial},
            {"grid_points", r.config.grid_points},
            {"grid_decades", r.config.grid_decades > 0.0 ? r.config.grid_decades : grid_decades_for(r.config.scenario)},
            {"summary", summaries},
            {"per_trial", trials}};
}

json run_manifest(const std::string& command, const json& parameters,
                  const std::map<std::string, double>& phase_seconds) {
    json timing = json::object();
    for (const auto& [k, v] : phase_seconds) timing[k] = v;
    return {{"tool", "l0path"},
            {"version", tool_version},
            {"command", command},
            {"parameters", parameters},
            {"timing", timing}};
}

json strip_timing(json j) {
    if (j.is_object()) {
        j.erase("timing");
        for (auto& [k, v] : j.items()) v = strip_timing(std::move(v));
    } else if (j.is_array()) {
        for (auto& v : j) v = strip_timing(std::move(v));
    }
    return j;
}

std::string bench_summary_csv(const BenchResult& r) {
    std::ostringstream os;
    os << "scenario,algo,trials,failures,se,tp,order,mdlc_se,mdlc_tp,mdlc_order,cpu_seconds,cpu_seconds_per_grid\n";
    os << std::fixed;
    for (const AlgoSummary& s : r.summaries) {
        os << r.config.scenario.name << "," << to_string(s.algo) << "," << s.trials << "," << s.failures << ","
           << std::setprecision(2) << s.se << "," << s.tp << "," << s.order << "," << s.mdlc_se << ","
           << s.mdlc_tp << "," << s.mdlc_order << "," << std::setprecision(4) << s.cpu_seconds << ","
           << s.cpu_seconds_per_grid << "\n";
    }
    return os.str();
}

namespace {

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string svg_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                     const std::vector<SvgSeries>& series) {
    constexpr double width = 640, height = 420, left = 70, right = 150, top = 40, bottom = 50;
    double xmin = infinity, xmax = -infinity, ymin = infinity, ymax = -infinity;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!(s.x[i] > 0.0) || !std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, std::log10(s.x[i]));
            xmax = std::max(xmax, std::log10(s.x[i]));
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!(xmin < xmax)) {
        xmin = std::isfinite(xmin) ? xmin - 1 : 0;
        xmax = xmin + 2;
    }
    if (!(ymin < ymax)) {
        ymin = std::isfinite(ymin) ? ymin - 1 : 0;
        ymax = ymin + 2;
    }
    const double pw = width - left - right, ph = height - top - bottom;
    auto px = [&](double x) { return left + (std::log10(x) - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    std::ostringstream os;
    os << std::setprecision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape_xml(title)
       << "</text>\n";
    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int d = static_cast<int>(std::ceil(xmin)); d <= static_cast<int>(std::floor(xmax)); ++d) {
        const double x = left + (d - xmin) / (xmax - xmin) * pw;
        os << "<line x1=\"" << x << "\" y1=\"" << top + ph << "\" x2=\"" << x << "\" y2=\"" << top + ph + 5
           << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << x << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">1e" << d
           << "</text>\n";
    }
    for (int t = 0; t <= 4; ++t) {
        const double v = ymin + (ymax - ymin) * t / 4.0;
        os << "<text x=\"" << left - 6 << "\" y=\"" << py(v) + 4 << "\" text-anchor=\"end\">" << v << "</text>\n";
    }
    os << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">"
       << escape_xml(x_label) << "</text>\n";
    os << "<text x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << top + ph / 2 << ")\">" << escape_xml(y_label) << "</text>\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = colors[k % 6];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!(s.x[i] > 0.0) || !std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            os << px(s.x[i]) << "," << py(s.y[i]) << " ";
        }
        os << "\"/>\n";
        const double ly = top + 16.0 * static_cast<double>(k + 1);
        os << "<line x1=\"" << left + pw + 10 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 30 << "\" y2=\"" << ly
           << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << left + pw + 35 << "\" y=\"" << ly + 4 << "\">" << escape_xml(s.label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

SvgSeries path_curve_series(const PathResult& path, const std::string& label, std::size_t points) {
    SvgSeries s;
    s.label = label;
    double hi = 0.0, lo = infinity;
    for (double l : path.lambdas) {
        if (l > 0.0 && std::isfinite(l)) {
            hi = std::max(hi, l);
            lo = std::min(lo, l);
        }
    }
    if (!(hi > 0.0)) return s;
    const double top = 2.0 * hi;
    const double floor = path.lambdas.back();
    const double bottom = floor > 0.0 ? floor * 1.0001 : lo * 0.1;
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        const double lam = top * std::pow(bottom / top, t);
        s.x.push_back(lam);
        s.y.push_back(path.cost_at(lam));
    }
    return s;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::parse_error, path + ": cannot open for writing");
    out << content;
    if (!out) throw Error(ErrorCode::parse_error, path + ": write failed");
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::parse_error, path + ": cannot open");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace l0path
