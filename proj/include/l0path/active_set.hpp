#pragma once

#include <vector>

#include <Eigen/Dense>

#include "l0path/dictionary.hpp"
#include "l0path/support.hpp"

namespace l0path {

/// Relative pivot below which an inserted atom is considered numerically
/// dependent on the active ones: d^2 < rank_tolerance * ||a_i||^2.
inline constexpr double rank_tolerance = 1e-10;

/// A support S together with the Cholesky factor L of A_S^T A_S and the
/// projection z = L^{-1} A_S^T y, giving E(S) = min_x ||y - A_S x||^2.
///
/// The factor is kept in insertion order (`factor_order()`); `support()` is
/// the same set sorted. Insertion appends one row to L, removal deletes a
/// row/column and re-triangularises the trailing block with a rank-one
/// Cholesky update, both in O(|S|^2) plus one O(m |S|) residual refresh.
class ActiveSetState {
public:
    /// S = {}, E = ||y||^2.
    static ActiveSetState empty(ProblemPtr problem);

    /// Builds S by inserting its atoms in increasing index order.
    static ActiveSetState from_support(ProblemPtr problem, const Support& support);

    const Problem& problem() const noexcept { return *problem_; }
    const ProblemPtr& problem_ptr() const noexcept { return problem_; }
    const Support& support() const noexcept { return support_; }
    std::size_t size() const noexcept { return order_.size(); }
    double error() const noexcept { return error_; }

    const std::vector<Index>& factor_order() const noexcept { return order_; }
    const Eigen::MatrixXd& cholesky() const noexcept { return chol_; }

    /// Throws AlreadyActive, or RankDeficient when the new pivot is below
    /// `rank_tolerance` or |S| already equals min(m, n). The state is left
    /// untouched on failure.
    void insert(Index atom);

    /// Throws NotActive.
    void remove(Index atom);

    ActiveSetState inserted(Index atom) const {
        ActiveSetState out = *this;
        out.insert(atom);
        return out;
    }
    ActiveSetState removed(Index atom) const {
        ActiveSetState out = *this;
        out.remove(atom);
        return out;
    }

    /// Entry i holds E(S + {i}) for i not in S (+inf when rank deficient) and
    /// E(S - {i}) for i in S.
    Eigen::VectorXd trial_errors() const;

    /// Least-squares amplitudes supported on S, as a dense length-n vector.
    Eigen::VectorXd amplitudes() const;

private:
    explicit ActiveSetState(ProblemPtr problem);

    Eigen::VectorXd factor_amplitudes() const;
    double residual_error() const;

    ProblemPtr problem_;
    Support support_;
    std::vector<Index> order_;
    Eigen::MatrixXd chol_;
    Eigen::VectorXd z_;
    double error_ = 0.0;
};

}  // namespace l0path
