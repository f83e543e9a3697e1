#include "l0path/l0pd.hpp"

#include <stdexcept>

#include "l0path/sbr.hpp"

namespace l0path {

PathResult polygon_to_path(const ConcavePolygon& poly, Producer producer) {
    PathResult path;
    path.producer = producer;
    const auto& edges = poly.edges();
    for (std::size_t j = 0; j < edges.size(); ++j) {
        path.supports.push_back(edges[j].support);
        path.errors.push_back(edges[j].error);
        path.lambdas.push_back(poly.lower(j));
        path.clamped.push_back(false);
        if (j + 1 < edges.size()) path.continuous.push_back(true);
    }
    return path;
}

L0pdResult l0pd(ProblemPtr problem, const L0pdConfig& cfg) {
    const StoppingRule& stop = cfg.stop;
    const std::size_t cap = stop.iter_cap ? stop.iter_cap
                                          : static_cast<std::size_t>(20 * problem->dict().cols() + 100);
    L0pdResult res{ConcavePolygon::singleton(problem->obs().norm_sq), {}, 0, 0, 0, {}};
    ConcavePolygon& poly = res.polygon;

    auto skipped = [&](bool fires, const LineS& line) {
        if (!fires) return false;
        ++res.skipped;
        if (cfg.verify_skip_tests && !poly.intersect(line).empty()) ++res.skip_violations;
        return true;
    };

    for (;;) {
        std::size_t j = 0;
        while (j < poly.size() && poly.edges()[j].explored) ++j;
        if (j == poly.size()) break;

        const LineS& edge = poly.edges()[j];
        if (poly.upper(j) <= stop.lambda_stop || (stop.k_stop && edge.card >= stop.k_stop) ||
            (stop.eps_stop >= 0.0 && edge.error <= stop.eps_stop)) {
            break;
        }
        if (res.explorations >= cap) {
            throw PathCapExceeded("l0-PD exploration cap " + std::to_string(cap), polygon_to_path(poly));
        }

        poly.mutable_edges()[j].explored = true;
        const Support current = edge.support;
        res.explored_cards.push_back(current.size());
        ++res.explorations;

        const ActiveSetState state = ActiveSetState::from_support(problem, current);
        const Eigen::VectorXd trials = state.trial_errors();
        const Insertion ins = best_insertion(state, trials);

        if (ins.atom != no_atom) {
            LineS add(current.with(ins.atom), trials(ins.atom));
            const auto idx = poly.find(current);
            if (!skipped(cfg.use_skip_tests && idx && ins.gain < poly.lower(*idx), add)) {
                poly.descend(std::move(add));
            }
        }

        // The empty support has no removal; folding it back in is a no-op.
        LineS rmv(Support{}, problem->obs().norm_sq);
        double rmv_cost = 0.0;
        if (!current.empty()) {
            const Removal r = best_removal(state, trials);
            rmv = LineS(current.without(r.atom), trials(r.atom));
            rmv_cost = r.cost;
        }
        const auto idx = poly.find(current);
        if (!skipped(cfg.use_skip_tests && !current.empty() && idx && rmv_cost > poly.upper(*idx), rmv)) {
            poly.descend(std::move(rmv));
        }

        if (cfg.check_invariants) {
            const std::string violation = poly.check_invariants();
            if (!violation.empty()) throw std::logic_error("l0-PD polygon invariant broken: " + violation);
        }
    }

    res.path = polygon_to_path(poly);
    return res;
}

}  // namespace l0path
