#include "l0path/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "l0path/errors.hpp"

namespace l0path {

namespace {

double subset_error(const Problem& problem, const Support& s) {
    const Eigen::VectorXd& y = problem.obs().y;
    if (s.empty()) return problem.obs().norm_sq;
    Eigen::MatrixXd a_s(y.size(), static_cast<Index>(s.size()));
    for (std::size_t k = 0; k < s.size(); ++k) a_s.col(static_cast<Index>(k)) = problem.dict().column(s[k]);
    const Eigen::VectorXd x = a_s.colPivHouseholderQr().solve(y);
    return (y - a_s * x).squaredNorm();
}

bool same_sets(std::vector<Support> a, std::vector<Support> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool includes(std::vector<Support> big, std::vector<Support> small) {
    std::sort(big.begin(), big.end());
    std::sort(small.begin(), small.end());
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string describe(const std::vector<Support>& sets) {
    std::string out = "[";
    for (std::size_t k = 0; k < sets.size(); ++k) out += (k ? "," : "") + sets[k].to_string();
    return out + "]";
}

}  // namespace

std::vector<Support> ExactPaths::solution_set(double lambda, double tie_tol) const {
    double best = infinity;
    for (const Subset& s : subsets) {
        best = std::min(best, s.error + lambda * static_cast<double>(s.support.size()));
    }
    std::vector<Support> out;
    for (const Subset& s : subsets) {
        if (s.error + lambda * static_cast<double>(s.support.size()) <= best + tie_tol) out.push_back(s.support);
    }
    return out;
}

ExactPaths exact_paths(const Problem& problem, std::size_t max_card) {
    const Index n = problem.dict().cols();
    if ((max_card == 0 && n > 14) || n > 24) {
        throw Error(ErrorCode::too_large, "exhaustive enumeration over n=" + std::to_string(n) + " atoms");
    }
    const std::size_t k_max = std::min<std::size_t>(max_card ? max_card : static_cast<std::size_t>(n),
                                                    static_cast<std::size_t>(problem.dict().max_support()));
    {
        // Count subsets of size <= k_max.
        double count = 0.0;
        double binom = 1.0;
        for (std::size_t k = 0; k <= k_max; ++k) {
            count += binom;
            binom = binom * static_cast<double>(n - static_cast<Index>(k)) / static_cast<double>(k + 1);
        }
        if (count > static_cast<double>(1u << 22)) {
            throw Error(ErrorCode::too_large, "enumeration of " + std::to_string(count) + " subsets");
        }
    }

    ExactPaths out;
    out.tol = 1e-9 * (1.0 + problem.obs().norm_sq);
    out.err_tol = 1e-12 * (1.0 + problem.obs().norm_sq);

    const std::uint32_t total = 1u << n;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > k_max) continue;
        std::vector<Index> idx;
        for (Index i = 0; i < n; ++i) {
            if (mask & (1u << i)) idx.push_back(i);
        }
        Support s(std::move(idx));
        const double e = subset_error(problem, s);
        out.subsets.push_back({std::move(s), e});
    }

    // Constrained path: |S| <= k.
    std::vector<double> best_exact(k_max + 1, infinity);
    for (const auto& s : out.subsets) {
        best_exact[s.support.size()] = std::min(best_exact[s.support.size()], s.error);
    }
    for (std::size_t k = 0; k <= k_max; ++k) {
        double best = infinity;
        for (std::size_t c = 0; c <= k; ++c) best = std::min(best, best_exact[c]);
        std::vector<Support> sets;
        for (const auto& s : out.subsets) {
            if (s.support.size() <= k && s.error <= best + out.err_tol) sets.push_back(s.support);
        }
        out.constrained.push_back(std::move(sets));
        out.constrained_error.push_back(best);
    }

    // Exact curve from the best line of each cardinality; vertices closer
    // than err_tol are merged by dropping the degenerate edge.
    std::vector<LineS> lines;
    for (const auto& s : out.subsets) {
        if (s.error == best_exact[s.support.size()]) lines.emplace_back(s.support, s.error);
    }
    out.curve = ConcavePolygon::envelope_of(lines);
    for (bool merged = true; merged;) {
        merged = false;
        const auto& edges = out.curve.edges();
        for (std::size_t j = 1; j < edges.size(); ++j) {
            if (out.curve.upper(j) - out.curve.lower(j) < out.err_tol) {
                const std::size_t card = edges[j].card;
                std::erase_if(lines, [card](const LineS& l) { return l.card == card; });
                out.curve = ConcavePolygon::envelope_of(lines);
                merged = true;
                break;
            }
        }
    }

    const auto& bps = out.curve.breakpoints();
    const std::size_t edges = out.curve.size();
    for (std::size_t j = 0; j < edges; ++j) {
        double probe, margin;
        if (edges == 1) {
            probe = margin = 1.0;
        } else if (j == 0) {
            probe = 2.0 * bps[1] + 1.0;
            margin = bps[1] + 1.0;
        } else if (j + 1 == edges) {
            probe = margin = 0.5 * bps[j];
        } else {
            probe = 0.5 * (bps[j] + bps[j + 1]);
            margin = 0.5 * (bps[j] - bps[j + 1]);
        }
        // Neighbouring lines sit at least `margin` above the edge at the
        // probe, so short intervals need a tie tolerance below it.
        out.interval_sets.push_back(out.solution_set(probe, std::min(out.err_tol, 0.25 * margin)));
    }
    for (std::size_t i = 1; i < edges; ++i) out.breakpoint_sets.push_back(out.solution_set(bps[i]));
    return out;
}

OracleReport check_theorem1(const ExactPaths& paths, std::size_t grid_per_interval) {
    OracleReport report;
    const auto& bps = paths.curve.breakpoints();
    const std::size_t edges = paths.curve.size();
    auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

    for (std::size_t j = 0; j < edges; ++j) {
        const double hi = bps[j];
        const double lo = bps[j + 1];
        for (std::size_t g = 1; g <= grid_per_interval; ++g) {
            const double t = static_cast<double>(g) / static_cast<double>(grid_per_interval + 1);
            double lam;
            if (!std::isfinite(hi)) {
                lam = (lo > 0.0 ? lo : 1.0) * (1.0 + 10.0 * t);
            } else {
                lam = lo + t * (hi - lo);
            }
            // Too close to a vertex to separate the neighbouring lines within tol.
            if (lam - lo <= 10.0 * paths.tol || (std::isfinite(hi) && hi - lam <= 10.0 * paths.tol)) continue;
            const auto sets = paths.solution_set(lam, paths.err_tol);
            if (!same_sets(sets, paths.interval_sets[j])) {
                std::ostringstream os;
                os << "interval " << j << ": solution set at lambda=" << lam << " is " << describe(sets)
                   << ", expected " << describe(paths.interval_sets[j]);
                fail(os.str());
            }
        }

        // Breakpoint inclusions.
        if (j >= 1 && !includes(paths.breakpoint_sets[j - 1], paths.interval_sets[j])) {
            fail("interval " + std::to_string(j) + " not included in the set at its upper breakpoint");
        }
        if (j + 1 < edges && !includes(paths.breakpoint_sets[j], paths.interval_sets[j])) {
            fail("interval " + std::to_string(j) + " not included in the set at its lower breakpoint");
        }
        const auto& cards = paths.interval_sets[j];
        for (const Support& s : cards) {
            if (s.size() != cards.front().size()) {
                fail("interval " + std::to_string(j) + " mixes cardinalities");
                break;
            }
        }
    }
    if (paths.interval_sets.empty() || paths.interval_sets.front() != std::vector<Support>{Support{}}) {
        fail("solution set above lambda*_1 is not {empty}");
    }
    return report;
}

OracleReport check_theorem2(const ExactPaths& paths) {
    OracleReport report;
    std::vector<bool> used(paths.constrained.size(), false);
    for (std::size_t j = 0; j < paths.interval_sets.size(); ++j) {
        const auto& set = paths.interval_sets[j];
        bool found = false;
        for (std::size_t k = 0; k < paths.constrained.size(); ++k) {
            if (same_sets(set, paths.constrained[k])) {
                found = true;
                used[k] = true;
            }
        }
        if (!found) {
            report.violations.push_back("penalized set " + describe(set) + " on interval " + std::to_string(j) +
                                        " matches no constrained set");
        }
        for (const Support& s : set) {
            if (s.size() >= paths.constrained.size() ||
                std::find(paths.constrained[s.size()].begin(), paths.constrained[s.size()].end(), s) ==
                    paths.constrained[s.size()].end()) {
                report.violations.push_back("penalized support " + s.to_string() + " is not constrained-optimal");
            }
        }
    }
    // Constrained solutions that differ from their predecessor yet never
    // show up on the penalized path.
    for (std::size_t k = 1; k < paths.constrained.size(); ++k) {
        if (!used[k] && !same_sets(paths.constrained[k], paths.constrained[k - 1])) ++report.non_supported;
    }
    return report;
}

double dominance_gap(const ExactPaths& paths, const PathResult& path) {
    std::vector<double> knots;
    for (double b : paths.curve.breakpoints()) {
        if (std::isfinite(b) && b > 0.0) knots.push_back(b);
    }
    for (double b : path.lambdas) {
        if (b > 0.0) knots.push_back(b);
    }
    const double floor = path.lambdas.empty() ? 0.0 : path.lambdas.back();
    std::sort(knots.begin(), knots.end());
    std::vector<double> probes = knots;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) probes.push_back(0.5 * (knots[i] + knots[i + 1]));
    if (!knots.empty()) {
        const double top = 10.0 * knots.back();
        const double bottom = std::max(knots.front() * 1e-3, floor);
        if (bottom > 0.0) {
            for (int g = 0; g <= 200; ++g) probes.push_back(bottom * std::pow(top / bottom, g / 200.0));
        }
        probes.push_back(top);
    } else {
        probes.push_back(1.0);
    }

    double gap = infinity;
    for (double lam : probes) {
        if (!(lam > floor)) continue;
        gap = std::min(gap, path.cost_at(lam) - paths.curve_value(lam));
    }
    return gap;
}

}  // namespace l0path
