#pragma once

#include <cstddef>

#include "l0path/dictionary.hpp"
#include "l0path/errors.hpp"
#include "l0path/path.hpp"

namespace l0path {

/// Early-stopping rules shared by the path algorithms. Zero / negative
/// values disable the corresponding rule.
struct StoppingRule {
    double lambda_stop = 0.0;
    std::size_t k_stop = 0;
    double eps_stop = -1.0;
    /// Safety bound on segments (CSBR) or explorations (l0-PD); 0 = 20 n + 100.
    std::size_t iter_cap = 0;
};

/// Raised when a path algorithm hits its safety cap; carries what was built.
class PathCapExceeded : public Error {
public:
    PathCapExceeded(const std::string& what, PathResult partial)
        : Error(ErrorCode::cap_exceeded, what), partial_(std::move(partial)) {}
    const PathResult& partial() const noexcept { return partial_; }

private:
    PathResult partial_;
};

/// Continuation SBR: SBR solves at the adaptively decreasing breakpoints
/// lambda_{j+1} = delta E_add(S_j), each warm-started from S_j + {ell_add}
/// with the removal of ell_add forbidden in the first SBR iteration.
///
/// `continuous[j]` is true when the SBR call at lambdas[j] performed no
/// replacement. `clamped` (one entry per lambda) flags breakpoints forced
/// below their predecessor because delta E_add did not decrease.
PathResult csbr(ProblemPtr problem, const StoppingRule& stop = {});

}  // namespace l0path
