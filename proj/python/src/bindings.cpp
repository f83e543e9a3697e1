#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "l0path/bench.hpp"
#include "l0path/csbr.hpp"
#include "l0path/errors.hpp"
#include "l0path/eval_select.hpp"
#include "l0path/io.hpp"
#include "l0path/l0pd.hpp"
#include "l0path/oracle.hpp"
#include "l0path/problems.hpp"
#include "l0path/sbr.hpp"

namespace py = pybind11;
using namespace l0path;

namespace {

std::vector<Index> to_list(const Support& s) { return {s.begin(), s.end()}; }

ProblemPtr problem_of(const Eigen::MatrixXd& a, const Eigen::VectorXd& y) {
    return make_problem(build_dictionary(a), y);
}

StoppingRule stop_rule(double lambda_stop, std::size_t k_stop, double eps_stop) {
    StoppingRule s;
    s.lambda_stop = lambda_stop;
    s.k_stop = k_stop;
    s.eps_stop = eps_stop;
    return s;
}

py::dict polygon_dict(const ConcavePolygon& poly) {
    py::list edges;
    for (const LineS& e : poly.edges()) {
        py::dict d;
        d["support"] = to_list(e.support);
        d["error"] = e.error;
        d["card"] = e.card;
        d["explored"] = e.explored;
        edges.append(d);
    }
    py::dict out;
    out["edges"] = edges;
    out["breakpoints"] = poly.breakpoints();
    return out;
}

}  // namespace

PYBIND11_MODULE(_l0path, m) {
    m.doc() = "Approximate l0-penalized regularization paths";

    static py::exception<Error> error_type(m, "L0pathError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error_type, e.what());
        }
    });

    py::class_<PathResult>(m, "PathResult")
        .def_property_readonly("producer", [](const PathResult& p) { return std::string(to_string(p.producer)); })
        .def_readonly("lambdas", &PathResult::lambdas)
        .def_readonly("errors", &PathResult::errors)
        .def_readonly("continuous", &PathResult::continuous)
        .def_property_readonly("supports",
                               [](const PathResult& p) {
                                   std::vector<std::vector<Index>> out;
                                   for (const auto& s : p.supports) out.push_back(to_list(s));
                                   return out;
                               })
        .def_property_readonly("segments", &PathResult::segments)
        .def("upper", &PathResult::upper, py::arg("j"))
        .def("cost_at", &PathResult::cost_at, py::arg("lam"))
        .def("solution_at", [](const PathResult& p, double lam) { return to_list(solution_at(p, lam)); },
             py::arg("lam"))
        .def("to_json", [](const PathResult& p) { return to_json(p).dump(); })
        .def("__len__", &PathResult::segments);

    m.def(
        "sbr",
        [](const Eigen::MatrixXd& a, const Eigen::VectorXd& y, double lam, std::vector<Index> init) {
            SbrOptions opts;
            opts.record_trace = true;
            const SbrOutcome r = sbr(problem_of(a, y), lam, Support(std::move(init)), opts);
            py::list trace;
            for (const SbrMove& mv : r.trace) trace.append(py::make_tuple(mv.insertion, mv.atom, mv.cost));
            py::dict out;
            out["support"] = to_list(r.state.support());
            out["error"] = r.state.error();
            out["cost"] = r.cost(lam);
            out["delta_e_add"] = r.delta_e_add;
            out["replacements"] = r.replacements;
            out["trace"] = trace;
            return out;
        },
        py::arg("A"), py::arg("y"), py::arg("lam"), py::arg("init") = std::vector<Index>{},
        "Single Best Replacement at one penalty value.");

    m.def(
        "csbr",
        [](const Eigen::MatrixXd& a, const Eigen::VectorXd& y, double lambda_stop, std::size_t k_stop,
           double eps_stop) { return csbr(problem_of(a, y), stop_rule(lambda_stop, k_stop, eps_stop)); },
        py::arg("A"), py::arg("y"), py::arg("lambda_stop") = 0.0, py::arg("k_stop") = 0, py::arg("eps_stop") = -1.0);

    m.def(
        "l0pd",
        [](const Eigen::MatrixXd& a, const Eigen::VectorXd& y, double lambda_stop, std::size_t k_stop,
           double eps_stop) {
            L0pdConfig cfg;
            cfg.stop = stop_rule(lambda_stop, k_stop, eps_stop);
            L0pdResult r = l0pd(problem_of(a, y), cfg);
            return py::make_tuple(r.path, polygon_dict(r.polygon), r.explorations);
        },
        py::arg("A"), py::arg("y"), py::arg("lambda_stop") = 0.0, py::arg("k_stop") = 0, py::arg("eps_stop") = -1.0,
        "Returns (path, polygon, explorations).");

    m.def(
        "oracle_check",
        [](const Eigen::MatrixXd& a, const Eigen::VectorXd& y) {
            const ProblemPtr p = problem_of(a, y);
            const ExactPaths exact = exact_paths(*p);
            py::dict out;
            out["theorem1"] = check_theorem1(exact).violations;
            out["theorem2"] = check_theorem2(exact).violations;
            out["csbr_gap"] = dominance_gap(exact, csbr(p));
            out["l0pd_gap"] = dominance_gap(exact, l0pd(p).path);
            out["breakpoints"] = exact.curve.breakpoints();
            return out;
        },
        py::arg("A"), py::arg("y"), "Exhaustive checks; n <= 14.");

    m.def(
        "draw_instance",
        [](const std::string& scenario, std::uint64_t trial, std::uint64_t seed) {
            Scenario s = scenario_preset(scenario);
            s.seed = seed;
            const Instance inst = draw_instance(s, trial);
            return py::make_tuple(inst.dict->matrix(), inst.y, inst.x_star, to_list(inst.support_star));
        },
        py::arg("scenario"), py::arg("trial") = 0, py::arg("seed") = 0, "Returns (A, y, x_star, support_star).");

    m.def(
        "mdlc_select", [](const PathResult& p, std::size_t rows) { return mdlc_select(p, rows); }, py::arg("path"),
        py::arg("m"));
    m.def(
        "ic_select", [](const PathResult& p, std::size_t rows, double alpha) { return ic_select(p, rows, alpha); },
        py::arg("path"), py::arg("m"), py::arg("alpha"));

    m.def(
        "bench_json",
        [](const std::string& scenario, const std::vector<std::string>& algos, std::size_t trials,
           std::uint64_t seed) {
            BenchConfig cfg;
            cfg.scenario = scenario_preset(scenario);
            cfg.scenario.seed = seed;
            cfg.algos.clear();
            for (const auto& a : algos) cfg.algos.push_back(parse_algo(a));
            cfg.trials = trials;
            BenchResult r;
            {
                py::gil_scoped_release release;
                r = run_benchmark(cfg);
            }
            return to_json(r).dump();
        },
        py::arg("scenario"), py::arg("algos") = std::vector<std::string>{"l0pd"}, py::arg("trials") = 30,
        py::arg("seed") = 0);

    m.attr("__version__") = tool_version;
}
