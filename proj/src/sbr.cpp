#include "l0path/sbr.hpp"

#include <cmath>
#include <string>

namespace l0path {

Insertion best_insertion(const ActiveSetState& state, const Eigen::VectorXd& trials) {
    Insertion best;
    const Support& s = state.support();
    for (Index i = 0; i < trials.size(); ++i) {
        if (s.contains(i) || !std::isfinite(trials(i))) continue;
        const double gain = state.error() - trials(i);
        if (best.atom == no_atom || gain > best.gain) {
            best.gain = gain;
            best.atom = i;
        }
    }
    if (best.gain < 0.0) best.gain = 0.0;
    return best;
}

Removal best_removal(const ActiveSetState& state, const Eigen::VectorXd& trials) {
    Removal best;
    for (Index i : state.support()) {
        const double cost = trials(i) - state.error();
        if (best.atom == no_atom || cost < best.cost) {
            best.cost = cost;
            best.atom = i;
        }
    }
    if (best.atom != no_atom && best.cost < 0.0) best.cost = 0.0;
    return best;
}

double delta_e_add(const ActiveSetState& state) {
    return best_insertion(state, state.trial_errors()).gain;
}

double delta_e_rmv(const ActiveSetState& state) {
    if (state.size() == 0) throw Error(ErrorCode::empty_support, "delta_e_rmv of the empty support");
    return best_removal(state, state.trial_errors()).cost;
}

Index ell_add(const ActiveSetState& state) {
    return best_insertion(state, state.trial_errors()).atom;
}

Index ell_rmv(const ActiveSetState& state) {
    if (state.size() == 0) throw Error(ErrorCode::empty_support, "ell_rmv of the empty support");
    return best_removal(state, state.trial_errors()).atom;
}

SbrOutcome sbr(ActiveSetState init, double lambda, const SbrOptions& options) {
    if (!(lambda >= 0.0)) throw Error(ErrorCode::invalid_argument, "lambda must be >= 0");
    const Problem& problem = init.problem();
    const Index n = problem.dict().cols();
    const double slack = 1e-12 * (1.0 + problem.obs().norm_sq);
    const std::size_t max_iter =
        options.max_iterations ? options.max_iterations : static_cast<std::size_t>(50 * n + 100);
    const std::size_t max_card = options.max_cardinality
                                     ? options.max_cardinality
                                     : static_cast<std::size_t>(problem.dict().max_support());

    SbrOutcome out{std::move(init), 0.0, no_atom, 0, {}};
    auto finish = [&](const Eigen::VectorXd& trials) {
        const Insertion ins = best_insertion(out.state, trials);
        out.delta_e_add = ins.gain;
        out.ell_add = ins.atom;
    };

    for (std::size_t iter = 0;; ++iter) {
        const Eigen::VectorXd trials = out.state.trial_errors();
        const ActiveSetState& state = out.state;
        const double card = static_cast<double>(state.size());
        const double current = state.error() + lambda * card;

        double best_cost = infinity;
        Index best_atom = no_atom;
        bool best_insert = false;
        for (Index i = 0; i < n; ++i) {
            const bool active = state.support().contains(i);
            if (active && iter == 0 && i == options.forbid_first_removal) continue;
            if (!std::isfinite(trials(i))) continue;
            const double cost = trials(i) + lambda * (active ? card - 1.0 : card + 1.0);
            if (cost < best_cost || (cost == best_cost && !active && !best_insert)) {
                best_cost = cost;
                best_atom = i;
                best_insert = !active;
            }
        }

        if (best_atom == no_atom || !(best_cost < current - slack)) {
            finish(trials);
            return out;
        }
        if (iter >= max_iter || (best_insert && state.size() + 1 > max_card)) {
            finish(trials);
            throw CapExceeded(iter >= max_iter ? "SBR iteration cap " + std::to_string(max_iter)
                                               : "SBR cardinality cap " + std::to_string(max_card),
                              std::move(out));
        }

        if (best_insert) {
            out.state.insert(best_atom);
        } else {
            out.state.remove(best_atom);
        }
        ++out.replacements;
        if (options.record_trace) {
            out.trace.push_back({best_insert, best_atom, out.cost(lambda)});
        }
    }
}

SbrOutcome sbr(ProblemPtr problem, double lambda, const Support& s_init, const SbrOptions& options) {
    return sbr(ActiveSetState::from_support(std::move(problem), s_init), lambda, options);
}

}  // namespace l0path
