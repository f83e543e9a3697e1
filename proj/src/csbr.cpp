#include "l0path/csbr.hpp"

#include "l0path/sbr.hpp"

namespace l0path {

PathResult csbr(ProblemPtr problem, const StoppingRule& stop) {
    PathResult path;
    path.producer = Producer::csbr;
    path.supports.push_back(Support{});
    path.errors.push_back(problem->obs().norm_sq);

    const auto [lambda_1, first_atom] = problem->first_breakpoint();
    path.lambdas.push_back(lambda_1);
    path.clamped.push_back(false);

    auto stop_at = [&](double lambda, const Support& s, double err) {
        return !(lambda > 0.0) || lambda <= stop.lambda_stop || (stop.k_stop && s.size() >= stop.k_stop) ||
               (stop.eps_stop >= 0.0 && err <= stop.eps_stop);
    };
    if (stop_at(lambda_1, path.supports[0], path.errors[0])) return path;

    const std::size_t cap = stop.iter_cap ? stop.iter_cap
                                          : static_cast<std::size_t>(20 * problem->dict().cols() + 100);

    ActiveSetState init = ActiveSetState::empty(problem);
    init.insert(first_atom);
    Index forbid = first_atom;
    double lambda = lambda_1;

    for (std::size_t j = 1;; ++j) {
        SbrOptions opts;
        opts.forbid_first_removal = forbid;
        SbrOutcome out = sbr(std::move(init), lambda, opts);

        path.supports.push_back(out.state.support());
        path.errors.push_back(out.state.error());
        path.continuous.push_back(out.replacements == 0);

        double next = out.ell_add == no_atom ? 0.0 : out.delta_e_add;
        bool clamped = false;
        if (next >= lambda) {
            next = lambda * (1.0 - 1e-12);
            clamped = true;
        }
        path.lambdas.push_back(next);
        path.clamped.push_back(clamped);

        if (stop_at(next, out.state.support(), out.state.error())) return path;
        if (j >= cap) throw PathCapExceeded("CSBR segment cap " + std::to_string(cap), std::move(path));

        try {
            out.state.insert(out.ell_add);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::rank_deficient) throw;
            // The best insertion is numerically dependent: nothing left to add.
            path.lambdas.back() = 0.0;
            return path;
        }
        init = std::move(out.state);
        forbid = out.ell_add;
        lambda = next;
    }
}

}  // namespace l0path
