#include "l0path/eval_select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "l0path/errors.hpp"

namespace l0path {

LambdaGrid log_grid(double top, double decades, std::size_t n) {
    if (!(top > 0.0) || !std::isfinite(top) || !(decades > 0.0) || n < 2) {
        throw Error(ErrorCode::invalid_argument, "log grid needs top > 0, decades > 0 and at least 2 points");
    }
    LambdaGrid grid;
    grid.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        grid.values.push_back(top * std::pow(10.0, -decades * t));
    }
    return grid;
}

LambdaGrid default_grid(const Problem& problem, std::size_t n, double decades) {
    const double top = problem.first_breakpoint().first;
    if (!(top > 0.0)) throw Error(ErrorCode::empty_grid, "no positive first breakpoint to anchor the grid");
    return log_grid(top, decades, n);
}

bool is_zero_error(double error, double norm_sq) noexcept { return error <= 1e-16 * norm_sq; }

double mdlc_criterion(double error, std::size_t card, std::size_t m) {
    const double k = static_cast<double>(card);
    const double md = static_cast<double>(m);
    return std::log(error) + std::log(md) * (k + 1.0) / (md - k - 2.0);
}

const char* to_string(IcRule rule) noexcept {
    switch (rule) {
        case IcRule::aic: return "aic";
        case IcRule::mdl: return "mdl";
        case IcRule::hannan_quinn: return "hannan_quinn";
    }
    return "?";
}

double ic_alpha(IcRule rule, std::size_t m) {
    const double md = static_cast<double>(m);
    switch (rule) {
        case IcRule::aic: return 2.0;
        case IcRule::mdl: return std::log(md);
        case IcRule::hannan_quinn: return 2.0 * std::log(std::log(md));
    }
    return 2.0;
}

namespace {

struct Candidate {
    std::size_t card;
    double error;
};

template <class Criterion>
std::size_t select(const std::vector<Candidate>& cands, std::size_t m, double norm_sq, Criterion crit) {
    std::size_t best = cands.size();
    std::size_t best_zero = cands.size();
    double best_val = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < cands.size(); ++j) {
        const Candidate& c = cands[j];
        if (c.card + 3 > m) continue;
        if (is_zero_error(c.error, norm_sq)) {
            if (best_zero == cands.size() || c.card < cands[best_zero].card) best_zero = j;
            continue;
        }
        const double v = crit(c);
        if (v < best_val || (v == best_val && best < cands.size() && c.card < cands[best].card)) {
            best_val = v;
            best = j;
        }
    }
    if (best_zero != cands.size()) return best_zero;
    if (best == cands.size()) throw Error(ErrorCode::no_eligible_segment, "no segment satisfies |S| <= m - 3");
    return best;
}

std::vector<Candidate> candidates(const PathResult& path) {
    std::vector<Candidate> out;
    out.reserve(path.segments());
    for (std::size_t j = 0; j < path.segments(); ++j) out.push_back({path.supports[j].size(), path.errors[j]});
    return out;
}

double reference_norm(const PathResult& path) { return path.errors.empty() ? 0.0 : path.errors.front(); }

}  // namespace

std::size_t mdlc_select(const PathResult& path, std::size_t m) {
    return select(candidates(path), m, reference_norm(path),
                  [m](const Candidate& c) { return mdlc_criterion(c.error, c.card, m); });
}

std::size_t ic_select(const PathResult& path, std::size_t m, double alpha) {
    const double md = static_cast<double>(m);
    return select(candidates(path), m, reference_norm(path), [md, alpha](const Candidate& c) {
        return md * std::log(c.error) + alpha * static_cast<double>(c.card);
    });
}

std::size_t ic_select(const PathResult& path, std::size_t m, IcRule rule) {
    return ic_select(path, m, ic_alpha(rule, m));
}

SupportScore support_error(const Support& truth, const Support& estimate) {
    const std::size_t tp = truth.intersection_size(estimate);
    return {truth.size() + estimate.size() - 2 * tp, tp};
}

namespace {

void fill_mdlc(TrialScores& out, const Support& truth, const Support& chosen) {
    const SupportScore s = support_error(truth, chosen);
    out.mdlc_se = s.se;
    out.mdlc_tp = s.tp;
    out.mdlc_order = chosen.size();
}

}  // namespace

TrialScores score_trial(const Support& truth, const PathResult& path, const LambdaGrid& grid, std::size_t m) {
    if (grid.values.empty()) throw Error(ErrorCode::empty_grid, "empty lambda grid");
    TrialScores out;
    bool any = false;
    for (double lambda : grid.values) {
        std::size_t seg;
        try {
            seg = path.segment_at(lambda);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::out_of_range) throw;
            ++out.skipped_grid;
            out.j_grid.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        const Support& s = path.supports[seg];
        out.j_grid.push_back(path.errors[seg] + lambda * static_cast<double>(s.size()));
        const SupportScore sc = support_error(truth, s);
        // Grid is decreasing, so strict improvement keeps the largest lambda on ties.
        if (!any || sc.se < out.se) {
            out.se = sc.se;
            out.tp = sc.tp;
            out.order = s.size();
            out.lambda_opt = lambda;
            any = true;
        }
    }
    if (!any) throw Error(ErrorCode::empty_grid, "no grid point inside the computed path range");
    fill_mdlc(out, truth, path.supports[mdlc_select(path, m)]);
    return out;
}

TrialScores score_grid_solutions(const Support& truth, const std::vector<Support>& supports,
                                 const std::vector<double>& errors, const LambdaGrid& grid, std::size_t m,
                                 double norm_sq) {
    if (grid.values.empty()) throw Error(ErrorCode::empty_grid, "empty lambda grid");
    if (supports.size() != grid.n_points() || errors.size() != grid.n_points()) {
        throw Error(ErrorCode::dimension_mismatch, "one support and error per grid point expected");
    }
    TrialScores out;
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < grid.n_points(); ++i) {
        const double lambda = grid.values[i];
        out.j_grid.push_back(errors[i] + lambda * static_cast<double>(supports[i].size()));
        const SupportScore sc = support_error(truth, supports[i]);
        if (i == 0 || sc.se < out.se) {
            out.se = sc.se;
            out.tp = sc.tp;
            out.order = supports[i].size();
            out.lambda_opt = lambda;
        }
        cands.push_back({supports[i].size(), errors[i]});
    }
    const std::size_t pick = select(cands, m, norm_sq, [m](const Candidate& c) {
        return mdlc_criterion(c.error, c.card, m);
    });
    fill_mdlc(out, truth, supports[pick]);
    return out;
}

}  // namespace l0path
