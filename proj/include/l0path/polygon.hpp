#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "l0path/support.hpp"

namespace l0path {

/// The line lambda -> E(S) + lambda |S| attached to a support.
struct LineS {
    Support support;
    double error = 0.0;
    std::size_t card = 0;
    bool explored = false;

    LineS() = default;
    LineS(Support s, double e, bool expl = false)
        : support(std::move(s)), error(e), card(support.size()), explored(expl) {}

    double value(double lambda) const { return error + lambda * static_cast<double>(card); }
};

/// Absolute slack used for "strictly below" tests between lines.
inline constexpr double descent_slack = 1e-12;

struct Interval {
    double lo = 1.0;
    double hi = 0.0;
    bool empty() const noexcept { return !(lo < hi); }
};

enum class DescentStatus { inserted, dominated, duplicate };

struct DescentResult {
    DescentStatus status = DescentStatus::dominated;
    Interval below;
    std::size_t removed = 0;
    bool inserted() const noexcept { return status == DescentStatus::inserted; }
};

/// lambda -> min_j { E(S_j) + lambda |S_j| } over lambda >= 0, stored as its
/// edges in increasing cardinality. Breakpoints are derived from neighbouring
/// edges after every change: breakpoint(0) = +inf > breakpoint(1) > ... >
/// breakpoint(J+1) = 0, edge j living on [breakpoint(j+1), breakpoint(j)].
class ConcavePolygon {
public:
    /// Single flat edge (empty support, ||y||^2), unexplored.
    static ConcavePolygon singleton(double err_empty);

    /// Concave envelope of an arbitrary set of lines (for oracles and tests).
    static ConcavePolygon envelope_of(std::vector<LineS> lines);

    const std::vector<LineS>& edges() const noexcept { return edges_; }
    std::vector<LineS>& mutable_edges() noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }

    /// lambda_0 .. lambda_{J+1}; front is +inf, back is 0.
    const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
    double upper(std::size_t j) const { return breakpoints_[j]; }
    double lower(std::size_t j) const { return breakpoints_[j + 1]; }

    /// Value and active edge. At an interior breakpoint the larger-card edge
    /// (the one below it) is reported.
    std::pair<double, std::size_t> evaluate(double lambda) const;

    /// Largest interval on which `line` lies strictly below the polygon;
    /// empty (lo > hi) if none.
    Interval intersect(const LineS& line) const;

    /// Folds `line` into the polygon if it lowers it somewhere.
    DescentResult descend(LineS line);

    std::optional<std::size_t> find(const Support& s) const;

    /// Empty string when concavity, continuity and breakpoint ordering hold.
    std::string check_invariants(double rel_tol = 1e-9) const;

private:
    void rebuild();

    std::vector<LineS> edges_;
    std::vector<double> breakpoints_;
};

/// Free-function forms of the polygon operations.
inline ConcavePolygon singleton_polygon(double err_empty) { return ConcavePolygon::singleton(err_empty); }
inline Interval intersect(const ConcavePolygon& poly, const LineS& line) { return poly.intersect(line); }
inline DescentResult ccv_descent(ConcavePolygon& poly, LineS line) { return poly.descend(std::move(line)); }

}  // namespace l0path
