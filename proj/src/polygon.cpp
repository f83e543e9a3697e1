#include "l0path/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace l0path {

ConcavePolygon ConcavePolygon::singleton(double err_empty) {
    ConcavePolygon poly;
    poly.edges_.emplace_back(Support{}, err_empty, false);
    poly.rebuild();
    return poly;
}

ConcavePolygon ConcavePolygon::envelope_of(std::vector<LineS> lines) {
    ConcavePolygon poly;
    poly.edges_ = std::move(lines);
    poly.rebuild();
    return poly;
}

void ConcavePolygon::rebuild() {
    // Equal slopes: smaller error first; equal lines keep their original
    // relative order so the incumbent wins over a newcomer appended last.
    std::stable_sort(edges_.begin(), edges_.end(), [](const LineS& a, const LineS& b) {
        if (a.card != b.card) return a.card < b.card;
        return a.error < b.error;
    });

    auto crossing = [](const LineS& a, const LineS& b) {
        return (a.error - b.error) / static_cast<double>(b.card - a.card);
    };

    std::vector<LineS> hull;
    hull.reserve(edges_.size());
    for (LineS& line : edges_) {
        if (!hull.empty()) {
            const LineS& top = hull.back();
            if (line.card == top.card || line.error >= top.error) continue;
        }
        while (hull.size() >= 2) {
            const LineS& b = hull[hull.size() - 1];
            const LineS& a = hull[hull.size() - 2];
            if (crossing(b, line) >= crossing(a, b)) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(std::move(line));
    }
    edges_ = std::move(hull);

    breakpoints_.assign(edges_.size() + 1, 0.0);
    breakpoints_.front() = infinity;
    for (std::size_t j = 1; j < edges_.size(); ++j) {
        breakpoints_[j] = crossing(edges_[j - 1], edges_[j]);
    }
    breakpoints_.back() = 0.0;
}

std::pair<double, std::size_t> ConcavePolygon::evaluate(double lambda) const {
    for (std::size_t j = edges_.size(); j-- > 0;) {
        if (lambda <= breakpoints_[j]) return {edges_[j].value(lambda), j};
    }
    return {edges_.front().value(lambda), 0};
}

Interval ConcavePolygon::intersect(const LineS& line) const {
    Interval out;
    bool any = false;
    const double c = static_cast<double>(line.card);
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        const double lo = lower(j);
        const double hi = upper(j);
        // On edge j the gap is (e_j - e - slack) + (c_j - c) lambda; keep where > 0.
        const double de = edges_[j].error - line.error - descent_slack;
        const double dc = static_cast<double>(edges_[j].card) - c;
        double a = lo;
        double b = hi;
        if (dc == 0.0) {
            if (!(de > 0.0)) continue;
        } else if (dc > 0.0) {
            a = std::max(lo, -de / dc);
        } else {
            b = std::min(hi, de / -dc);
        }
        if (!(a < b)) continue;
        if (!any) {
            out = {a, b};
            any = true;
        } else {
            out.lo = std::min(out.lo, a);
            out.hi = std::max(out.hi, b);
        }
    }
    if (!any) return Interval{};
    out.lo = std::max(out.lo, 0.0);
    return out;
}

std::optional<std::size_t> ConcavePolygon::find(const Support& s) const {
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        if (edges_[j].card == s.size() && edges_[j].support == s) return j;
    }
    return std::nullopt;
}

DescentResult ConcavePolygon::descend(LineS line) {
    DescentResult result;
    if (find(line.support)) {
        result.status = DescentStatus::duplicate;
        return result;
    }
    result.below = intersect(line);
    if (result.below.empty()) {
        result.status = DescentStatus::dominated;
        return result;
    }

    std::vector<LineS> kept;
    kept.reserve(edges_.size() + 1);
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        if (lower(j) >= result.below.lo && upper(j) <= result.below.hi) {
            ++result.removed;
        } else {
            kept.push_back(std::move(edges_[j]));
        }
    }
    line.card = line.support.size();
    line.explored = false;
    kept.push_back(std::move(line));
    const std::size_t before = kept.size();
    edges_ = std::move(kept);
    rebuild();
    result.removed += before - edges_.size();
    result.status = DescentStatus::inserted;
    return result;
}

std::string ConcavePolygon::check_invariants(double rel_tol) const {
    std::ostringstream err;
    if (edges_.empty()) return "polygon has no edges";
    if (breakpoints_.size() != edges_.size() + 1) return "breakpoint count mismatch";
    if (breakpoints_.front() != infinity) err << "lambda_0 is not +inf; ";
    if (breakpoints_.back() != 0.0) err << "last breakpoint is not 0; ";
    for (std::size_t j = 1; j < edges_.size(); ++j) {
        if (!(edges_[j].card > edges_[j - 1].card)) err << "cardinality not increasing at edge " << j << "; ";
        if (!(breakpoints_[j + 1] < breakpoints_[j])) err << "breakpoints not decreasing at " << j << "; ";
        const double b = breakpoints_[j];
        const double left = edges_[j - 1].value(b);
        const double right = edges_[j].value(b);
        if (std::abs(left - right) > rel_tol * (1.0 + std::abs(left))) {
            err << "discontinuity at breakpoint " << j << "; ";
        }
    }
    for (const LineS& e : edges_) {
        if (e.card != e.support.size()) err << "card mismatch for " << e.support.to_string() << "; ";
        if (!std::isfinite(e.error)) err << "non-finite error; ";
    }
    // Each edge must be the pointwise minimum on its interval (checked at the
    // finite endpoints and the midpoint).
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        const double lo = lower(j);
        const double hi = std::isfinite(upper(j)) ? upper(j) : 2.0 * lo + 1.0;
        for (double lam : {lo, 0.5 * (lo + hi), hi}) {
            const double v = edges_[j].value(lam);
            for (std::size_t i = 0; i < edges_.size(); ++i) {
                if (edges_[i].value(lam) < v - rel_tol * (1.0 + std::abs(v))) {
                    err << "edge " << j << " not minimal at lambda=" << lam << "; ";
                    break;
                }
            }
        }
    }
    return err.str();
}

}  // namespace l0path
