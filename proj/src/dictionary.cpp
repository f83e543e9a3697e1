#include "l0path/dictionary.hpp"

#include <string>

#include "l0path/errors.hpp"

namespace l0path {

Dictionary::Dictionary(Eigen::MatrixXd columns) : columns_(std::move(columns)) {
    if (columns_.rows() < 1 || columns_.cols() < 1) {
        throw Error(ErrorCode::bad_dims, "dictionary must have at least one row and one column");
    }
    col_norms_sq_ = columns_.colwise().squaredNorm().transpose();
    const double max_norm = std::sqrt(col_norms_sq_.maxCoeff());
    for (Index i = 0; i < cols(); ++i) {
        if (!(std::sqrt(col_norms_sq_(i)) >= 1e-12 * max_norm) || col_norms_sq_(i) == 0.0) {
            throw Error(ErrorCode::zero_column, "column " + std::to_string(i));
        }
    }
    if (cols() <= gram_cache_limit) {
        Eigen::MatrixXd g(cols(), cols());
        g.setZero();
        g.selfadjointView<Eigen::Lower>().rankUpdate(columns_.transpose());
        g.triangularView<Eigen::StrictlyUpper>() = g.transpose();
        gram_ = std::move(g);
    }
}

Eigen::VectorXd Dictionary::gram_column(Index i) const {
    if (gram_) return gram_->col(i);
    return columns_.transpose() * columns_.col(i);
}

Problem::Problem(DictionaryPtr dict, Observation obs) : dict_(std::move(dict)), obs_(std::move(obs)) {
    if (obs_.y.size() != dict_->rows()) {
        throw Error(ErrorCode::dimension_mismatch,
                    "y has " + std::to_string(obs_.y.size()) + " entries, dictionary has " +
                        std::to_string(dict_->rows()) + " rows");
    }
    correlations_ = dict_->matrix().transpose() * obs_.y;
}

std::pair<double, Index> Problem::first_breakpoint() const {
    double best = 0.0;
    Index arg = 0;
    for (Index i = 0; i < dict_->cols(); ++i) {
        const double v = correlations_(i) * correlations_(i) / dict_->col_norms_sq()(i);
        if (v > best) {
            best = v;
            arg = i;
        }
    }
    return {best, arg};
}

}  // namespace l0path
