#pragma once

#include <memory>
#include <optional>

#include <Eigen/Dense>

#include "l0path/support.hpp"

namespace l0path {

/// Immutable dense dictionary A (m x n) with cached squared column norms.
///
/// For n up to `gram_cache_limit` the full Gram matrix A^T A is computed
/// once at construction; above that, Gram columns are produced on demand.
class Dictionary {
public:
    static constexpr Index gram_cache_limit = 4096;

    /// Throws ZeroColumn if a column norm is below 1e-12 times the largest
    /// column norm, BadDims if the matrix is empty.
    explicit Dictionary(Eigen::MatrixXd columns);

    Index rows() const noexcept { return columns_.rows(); }
    Index cols() const noexcept { return columns_.cols(); }
    Index max_support() const noexcept { return std::min(rows(), cols()); }

    const Eigen::MatrixXd& matrix() const noexcept { return columns_; }
    auto column(Index i) const { return columns_.col(i); }
    const Eigen::VectorXd& col_norms_sq() const noexcept { return col_norms_sq_; }

    /// A^T a_i.
    Eigen::VectorXd gram_column(Index i) const;
    bool has_cached_gram() const noexcept { return gram_.has_value(); }
    const Eigen::MatrixXd& gram() const { return *gram_; }

private:
    Eigen::MatrixXd columns_;
    Eigen::VectorXd col_norms_sq_;
    std::optional<Eigen::MatrixXd> gram_;
};

using DictionaryPtr = std::shared_ptr<const Dictionary>;

inline DictionaryPtr build_dictionary(Eigen::MatrixXd columns) {
    return std::make_shared<const Dictionary>(std::move(columns));
}

struct Observation {
    Eigen::VectorXd y;
    double norm_sq = 0.0;

    Observation() = default;
    explicit Observation(Eigen::VectorXd data) : y(std::move(data)), norm_sq(y.squaredNorm()) {}
};

/// A dictionary paired with one observation, plus the correlations A^T y
/// shared by every active-set state built on the pair.
class Problem {
public:
    /// Throws DimensionMismatch if y does not have one entry per row of A.
    Problem(DictionaryPtr dict, Observation obs);

    const Dictionary& dict() const noexcept { return *dict_; }
    const DictionaryPtr& dict_ptr() const noexcept { return dict_; }
    const Observation& obs() const noexcept { return obs_; }
    const Eigen::VectorXd& correlations() const noexcept { return correlations_; }

    /// max_i <y,a_i>^2 / ||a_i||^2 and its arg max (lowest index on ties);
    /// the first breakpoint of every path.
    std::pair<double, Index> first_breakpoint() const;

private:
    DictionaryPtr dict_;
    Observation obs_;
    Eigen::VectorXd correlations_;
};

using ProblemPtr = std::shared_ptr<const Problem>;

inline ProblemPtr make_problem(DictionaryPtr dict, Eigen::VectorXd y) {
    return std::make_shared<const Problem>(std::move(dict), Observation(std::move(y)));
}

}  // namespace l0path
