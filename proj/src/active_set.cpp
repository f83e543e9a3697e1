#include "l0path/active_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "l0path/errors.hpp"

namespace l0path {

namespace {

// L L^T + x x^T = L' L'^T, in place, for lower-triangular L.
void cholesky_rank_one_update(Eigen::Ref<Eigen::MatrixXd> L, Eigen::VectorXd x) {
    const Index q = L.rows();
    for (Index j = 0; j < q; ++j) {
        const double ljj = L(j, j);
        const double r = std::hypot(ljj, x(j));
        const double c = r / ljj;
        const double s = x(j) / ljj;
        L(j, j) = r;
        const Index tail = q - j - 1;
        if (tail > 0) {
            L.col(j).tail(tail) = (L.col(j).tail(tail) + s * x.tail(tail)) / c;
            x.tail(tail) = c * x.tail(tail) - s * L.col(j).tail(tail);
        }
    }
}

}  // namespace

ActiveSetState::ActiveSetState(ProblemPtr problem) : problem_(std::move(problem)) {
    error_ = problem_->obs().norm_sq;
}

ActiveSetState ActiveSetState::empty(ProblemPtr problem) { return ActiveSetState(std::move(problem)); }

ActiveSetState ActiveSetState::from_support(ProblemPtr problem, const Support& support) {
    ActiveSetState state(std::move(problem));
    for (Index i : support) state.insert(i);
    return state;
}

void ActiveSetState::insert(Index atom) {
    const Dictionary& dict = problem_->dict();
    if (atom < 0 || atom >= dict.cols()) {
        throw Error(ErrorCode::out_of_range, "atom " + std::to_string(atom));
    }
    if (support_.contains(atom)) {
        throw Error(ErrorCode::already_active, "atom " + std::to_string(atom));
    }
    const Index p = static_cast<Index>(order_.size());
    if (p + 1 > dict.max_support()) {
        throw Error(ErrorCode::rank_deficient,
                    "atom " + std::to_string(atom) + ": support already has min(m,n) atoms");
    }

    const double g_ii = dict.col_norms_sq()(atom);
    Eigen::VectorXd w(p);
    if (p > 0) {
        const Eigen::VectorXd g_col = dict.gram_column(atom);
        for (Index k = 0; k < p; ++k) w(k) = g_col(order_[k]);
        chol_.triangularView<Eigen::Lower>().solveInPlace(w);
    }
    const double d2 = g_ii - w.squaredNorm();
    if (!(d2 >= rank_tolerance * g_ii)) {
        throw Error(ErrorCode::rank_deficient, "atom " + std::to_string(atom));
    }
    const double d = std::sqrt(d2);

    chol_.conservativeResize(p + 1, p + 1);
    chol_.row(p).head(p) = w.transpose();
    chol_.col(p).head(p).setZero();
    chol_(p, p) = d;

    const double z_new = (problem_->correlations()(atom) - w.dot(z_)) / d;
    z_.conservativeResize(p + 1);
    z_(p) = z_new;

    order_.push_back(atom);
    support_ = support_.with(atom);
    error_ = std::min(error_, residual_error());
}

void ActiveSetState::remove(Index atom) {
    auto it = std::find(order_.begin(), order_.end(), atom);
    if (it == order_.end()) {
        throw Error(ErrorCode::not_active, "atom " + std::to_string(atom));
    }
    const Index p = static_cast<Index>(order_.size());
    const Index k = it - order_.begin();
    const Index tail = p - k - 1;

    if (tail > 0) {
        // Trailing block must absorb the deleted column: L33' L33'^T = L33 L33^T + l32 l32^T.
        const Eigen::VectorXd l32 = chol_.col(k).tail(tail);
        Eigen::MatrixXd l33 = chol_.bottomRightCorner(tail, tail);
        const Eigen::VectorXd rhs =
            l33.triangularView<Eigen::Lower>() * z_.tail(tail) + l32 * z_(k);
        cholesky_rank_one_update(l33, l32);
        Eigen::VectorXd z3 = l33.triangularView<Eigen::Lower>().solve(rhs);

        Eigen::MatrixXd next = Eigen::MatrixXd::Zero(p - 1, p - 1);
        next.topLeftCorner(k, k) = chol_.topLeftCorner(k, k);
        next.bottomLeftCorner(tail, k) = chol_.bottomLeftCorner(tail, k);
        next.bottomRightCorner(tail, tail) = l33;
        chol_ = std::move(next);

        Eigen::VectorXd next_z(p - 1);
        next_z.head(k) = z_.head(k);
        next_z.tail(tail) = z3;
        z_ = std::move(next_z);
    } else {
        chol_.conservativeResize(p - 1, p - 1);
        z_.conservativeResize(p - 1);
    }

    order_.erase(it);
    support_ = support_.without(atom);
    error_ = order_.empty() ? problem_->obs().norm_sq : std::max(error_, residual_error());
}

Eigen::VectorXd ActiveSetState::factor_amplitudes() const {
    if (order_.empty()) return {};
    return chol_.triangularView<Eigen::Lower>().transpose().solve(z_);
}

double ActiveSetState::residual_error() const {
    const Dictionary& dict = problem_->dict();
    const Eigen::VectorXd x = factor_amplitudes();
    Eigen::VectorXd r = problem_->obs().y;
    for (std::size_t k = 0; k < order_.size(); ++k) {
        r -= x(static_cast<Index>(k)) * dict.column(order_[k]);
    }
    return r.squaredNorm();
}

Eigen::VectorXd ActiveSetState::amplitudes() const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(problem_->dict().cols());
    const Eigen::VectorXd xf = factor_amplitudes();
    for (std::size_t k = 0; k < order_.size(); ++k) x(order_[k]) = xf(static_cast<Index>(k));
    return x;
}

Eigen::VectorXd ActiveSetState::trial_errors() const {
    const Dictionary& dict = problem_->dict();
    const Index n = dict.cols();
    const Index p = static_cast<Index>(order_.size());
    const Eigen::VectorXd& c = problem_->correlations();
    const Eigen::VectorXd& g_diag = dict.col_norms_sq();

    Eigen::VectorXd out(n);

    // Insertions: the new Cholesky row for atom i is w_i = L^{-1} A_S^T a_i,
    // pivot d_i^2 = ||a_i||^2 - ||w_i||^2 and the error drops by
    // (c_i - w_i^T z)^2 / d_i^2.
    Eigen::VectorXd numer = c;
    Eigen::VectorXd d2 = g_diag;
    if (p > 0) {
        Eigen::MatrixXd w(p, n);
        if (dict.has_cached_gram()) {
            for (Index k = 0; k < p; ++k) w.row(k) = dict.gram().row(order_[k]);
        } else {
            Eigen::MatrixXd active(dict.rows(), p);
            for (Index k = 0; k < p; ++k) active.col(k) = dict.column(order_[k]);
            w = active.transpose() * dict.matrix();
        }
        chol_.triangularView<Eigen::Lower>().solveInPlace(w);
        numer.noalias() -= w.transpose() * z_;
        d2 -= w.colwise().squaredNorm().transpose();
    }
    const bool full = p >= dict.max_support();
    for (Index i = 0; i < n; ++i) {
        if (full || !(d2(i) >= rank_tolerance * g_diag(i))) {
            out(i) = infinity;
        } else {
            out(i) = std::max(0.0, error_ - numer(i) * numer(i) / d2(i));
        }
    }

    // Removals: E(S - {i}) = E(S) + x_i^2 / (G^{-1})_{ii}, with G^{-1} = L^{-T} L^{-1}.
    if (p > 0) {
        const Eigen::VectorXd x = factor_amplitudes();
        const Eigen::MatrixXd l_inv =
            chol_.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(p, p));
        for (Index k = 0; k < p; ++k) {
            const double ginv_kk = l_inv.col(k).squaredNorm();
            out(order_[k]) = error_ + x(k) * x(k) / ginv_kk;
        }
    }
    return out;
}

}  // namespace l0path
