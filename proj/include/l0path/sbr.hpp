#pragma once

#include <cstddef>
#include <vector>

#include "l0path/active_set.hpp"
#include "l0path/errors.hpp"

namespace l0path {

/// Best single insertion: largest error decrease E(S) - E(S + {i}) over
/// i not in S (ties: lowest index). gain = 0, atom = no_atom when no
/// admissible insertion exists.
struct Insertion {
    double gain = 0.0;
    Index atom = no_atom;
};

/// Best single removal: smallest error increase E(S - {i}) - E(S) over i in S.
struct Removal {
    double cost = infinity;
    Index atom = no_atom;
};

Insertion best_insertion(const ActiveSetState& state, const Eigen::VectorXd& trials);
Removal best_removal(const ActiveSetState& state, const Eigen::VectorXd& trials);

double delta_e_add(const ActiveSetState& state);
/// Throws EmptySupport.
double delta_e_rmv(const ActiveSetState& state);
Index ell_add(const ActiveSetState& state);
/// Throws EmptySupport.
Index ell_rmv(const ActiveSetState& state);

struct SbrMove {
    bool insertion = true;
    Index atom = no_atom;
    double cost = 0.0;  // penalized cost after the move
};

struct SbrOptions {
    /// Removal of this atom is not allowed during the first iteration.
    Index forbid_first_removal = no_atom;
    /// 0 selects 50 n + 100.
    std::size_t max_iterations = 0;
    /// 0 means min(m, n).
    std::size_t max_cardinality = 0;
    bool record_trace = false;
};

struct SbrOutcome {
    ActiveSetState state;
    double delta_e_add = 0.0;
    Index ell_add = no_atom;
    std::size_t replacements = 0;
    std::vector<SbrMove> trace;

    double cost(double lambda) const {
        return state.error() + lambda * static_cast<double>(state.size());
    }
};

class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, SbrOutcome partial)
        : Error(ErrorCode::cap_exceeded, what), partial_(std::move(partial)) {}
    const SbrOutcome& partial() const noexcept { return partial_; }

private:
    SbrOutcome partial_;
};

/// Single Best Replacement descent on E(S) + lambda |S| from `init`.
///
/// Every iteration scores all n single replacements and applies the best one
/// if it lowers the cost by more than 1e-12 (1 + ||y||^2). Ties go to
/// insertions, then to the lowest atom index.
SbrOutcome sbr(ActiveSetState init, double lambda, const SbrOptions& options = {});

SbrOutcome sbr(ProblemPtr problem, double lambda, const Support& s_init = {},
               const SbrOptions& options = {});

}  // namespace l0path
