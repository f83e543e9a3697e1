#include "l0path/path.hpp"

#include "l0path/errors.hpp"

namespace l0path {

const char* to_string(Producer p) noexcept {
    switch (p) {
        case Producer::sbr: return "sbr";
        case Producer::csbr: return "csbr";
        case Producer::l0pd: return "l0pd";
        case Producer::oracle: return "oracle";
    }
    return "unknown";
}

std::size_t PathResult::segment_at(double lambda) const {
    if (supports.empty()) throw Error(ErrorCode::out_of_range, "empty path");
    if (!(lambda > 0.0)) throw Error(ErrorCode::out_of_range, "lambda must be > 0");
    for (std::size_t j = 0; j < supports.size(); ++j) {
        if (lambda > lambdas[j]) return j;
    }
    throw Error(ErrorCode::out_of_range,
                "lambda=" + std::to_string(lambda) + " is below the computed range (last breakpoint " +
                    std::to_string(lambdas.back()) + ")");
}

double PathResult::cost_at(double lambda) const {
    const std::size_t j = segment_at(lambda);
    return errors[j] + lambda * static_cast<double>(supports[j].size());
}

const Support& solution_at(const PathResult& path, double lambda) {
    return path.supports[path.segment_at(lambda)];
}

}  // namespace l0path
