#pragma once

// Independent reference computations for the test suites. Nothing here
// reuses the Cholesky machinery under test: least squares goes through an
// SVD-based pseudo-inverse and envelopes through dense grid scans.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "l0path/dictionary.hpp"
#include "l0path/support.hpp"

namespace fixtures {

using l0path::Index;
using l0path::Support;

inline Eigen::MatrixXd gaussian_matrix(Index m, Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd a(m, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < m; ++i) a(i, j) = g(rng);
    return a;
}

inline Eigen::VectorXd gaussian_vector(Index m, std::mt19937_64& rng) {
    return gaussian_matrix(m, 1, rng).col(0);
}

/// y = A x* + noise with k random atoms; noise_sd = 0 for exact data.
inline Eigen::VectorXd sparse_observation(const Eigen::MatrixXd& a, std::size_t k, double noise_sd,
                                          std::mt19937_64& rng) {
    std::vector<Index> idx(static_cast<std::size_t>(a.cols()));
    for (Index i = 0; i < a.cols(); ++i) idx[static_cast<std::size_t>(i)] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(a.cols());
    for (std::size_t q = 0; q < k; ++q) x(idx[q]) = g(rng) + (g(rng) > 0 ? 1.0 : -1.0);
    Eigen::VectorXd y = a * x;
    for (Index i = 0; i < y.size(); ++i) y(i) += noise_sd * g(rng);
    return y;
}

inline Eigen::MatrixXd columns(const Eigen::MatrixXd& a, const Support& s) {
    Eigen::MatrixXd out(a.rows(), static_cast<Index>(s.size()));
    for (std::size_t k = 0; k < s.size(); ++k) out.col(static_cast<Index>(k)) = a.col(s[k]);
    return out;
}

/// Least-squares amplitudes on S through the SVD pseudo-inverse.
inline Eigen::VectorXd dense_amplitudes(const Eigen::MatrixXd& a, const Eigen::VectorXd& y, const Support& s) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(a.cols());
    if (s.empty()) return x;
    const Eigen::MatrixXd as = columns(a, s);
    const Eigen::VectorXd xs = as.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(y);
    for (std::size_t k = 0; k < s.size(); ++k) x(s[k]) = xs(static_cast<Index>(k));
    return x;
}

inline double dense_error(const Eigen::MatrixXd& a, const Eigen::VectorXd& y, const Support& s) {
    if (s.empty()) return y.squaredNorm();
    return (y - a * dense_amplitudes(a, y, s)).squaredNorm();
}

/// Forward OLS: at every step add the atom whose inclusion gives the smallest
/// dense residual (lowest index on exact ties).
inline std::vector<Index> forward_ols(const Eigen::MatrixXd& a, const Eigen::VectorXd& y, std::size_t steps) {
    std::vector<Index> order;
    Support s;
    for (std::size_t t = 0; t < steps; ++t) {
        double best = std::numeric_limits<double>::infinity();
        Index pick = -1;
        for (Index i = 0; i < a.cols(); ++i) {
            if (s.contains(i)) continue;
            const double e = dense_error(a, y, s.with(i));
            if (e < best) {
                best = e;
                pick = i;
            }
        }
        order.push_back(pick);
        s = s.with(pick);
    }
    return order;
}

/// All subsets of {0..n-1} as supports.
inline std::vector<Support> all_subsets(Index n) {
    std::vector<Support> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Index> idx;
        for (Index i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        out.emplace_back(std::move(idx));
    }
    return out;
}

/// Pointwise minimum of E + lambda |S| over explicit (card, error) lines.
inline double lower_envelope(const std::vector<std::pair<std::size_t, double>>& lines, double lambda) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [card, err] : lines) best = std::min(best, err + lambda * static_cast<double>(card));
    return best;
}

/// Log-spaced probe values between lo and hi.
inline std::vector<double> log_probes(double lo, double hi, int count) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(lo * std::pow(hi / lo, i / static_cast<double>(count - 1)));
    return out;
}

inline l0path::ProblemPtr identity_problem() {
    return l0path::make_problem(l0path::build_dictionary(Eigen::MatrixXd::Identity(2, 2)),
                                Eigen::Vector2d(3.0, 4.0));
}

}  // namespace fixtures
