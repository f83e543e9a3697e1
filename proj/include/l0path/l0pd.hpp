#pragma once

#include <cstddef>
#include <vector>

#include "l0path/csbr.hpp"
#include "l0path/polygon.hpp"

namespace l0path {

struct L0pdConfig {
    /// lambda_stop is compared with the upper breakpoint of the unexplored
    /// edge of lowest cardinality; k_stop and eps_stop with its support and
    /// error. iter_cap bounds the number of explorations.
    StoppingRule stop;
    /// Skip intersect() when cheap error bounds prove a candidate line
    /// lies above the polygon.
    bool use_skip_tests = true;
    /// Run intersect() anyway whenever a skip test fires and count
    /// disagreements in `L0pdResult::skip_violations`.
    bool verify_skip_tests = false;
#ifdef NDEBUG
    bool check_invariants = false;
#else
    bool check_invariants = true;
#endif
};

struct L0pdResult {
    ConcavePolygon polygon;
    PathResult path;
    std::size_t explorations = 0;
    std::size_t skipped = 0;
    std::size_t skip_violations = 0;
    /// Cardinality of each explored support, in exploration order.
    std::vector<std::size_t> explored_cards;
};

/// l0 regularization path descent: repeatedly explores the unexplored edge
/// of lowest cardinality and folds its best insertion, then its best removal,
/// into the concave polygon.
L0pdResult l0pd(ProblemPtr problem, const L0pdConfig& cfg = {});

/// Edges become segments, vertices become breakpoints; every breakpoint is
/// continuous.
PathResult polygon_to_path(const ConcavePolygon& poly, Producer producer = Producer::l0pd);

}  // namespace l0path
