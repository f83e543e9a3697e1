#include "l0path/support.hpp"

#include <algorithm>

#include "l0path/errors.hpp"

namespace l0path {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::zero_column: return "ZeroColumn";
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::already_active: return "AlreadyActive";
        case ErrorCode::not_active: return "NotActive";
        case ErrorCode::rank_deficient: return "RankDeficient";
        case ErrorCode::empty_support: return "EmptySupport";
        case ErrorCode::cap_exceeded: return "CapExceeded";
        case ErrorCode::out_of_range: return "OutOfRange";
        case ErrorCode::too_large: return "TooLarge";
        case ErrorCode::bad_dims: return "BadDims";
        case ErrorCode::no_eligible_segment: return "NoEligibleSegment";
        case ErrorCode::empty_grid: return "EmptyGrid";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

Support::Support(std::initializer_list<Index> indices) : Support(std::vector<Index>(indices)) {}

Support::Support(std::vector<Index> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw Error(ErrorCode::invalid_argument, "support has duplicate indices");
    }
    if (!indices_.empty() && indices_.front() < 0) {
        throw Error(ErrorCode::invalid_argument, "support has negative index");
    }
}

bool Support::contains(Index i) const noexcept {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

Support Support::with(Index i) const {
    if (contains(i)) {
        throw Error(ErrorCode::already_active, "atom " + std::to_string(i));
    }
    Support out;
    out.indices_.reserve(indices_.size() + 1);
    auto pos = std::lower_bound(indices_.begin(), indices_.end(), i);
    out.indices_.assign(indices_.begin(), pos);
    out.indices_.push_back(i);
    out.indices_.insert(out.indices_.end(), pos, indices_.end());
    return out;
}

Support Support::without(Index i) const {
    auto pos = std::lower_bound(indices_.begin(), indices_.end(), i);
    if (pos == indices_.end() || *pos != i) {
        throw Error(ErrorCode::not_active, "atom " + std::to_string(i));
    }
    Support out;
    out.indices_.reserve(indices_.size() - 1);
    out.indices_.assign(indices_.begin(), pos);
    out.indices_.insert(out.indices_.end(), pos + 1, indices_.end());
    return out;
}

std::size_t Support::intersection_size(const Support& other) const noexcept {
    std::size_t count = 0;
    auto a = indices_.begin();
    auto b = other.indices_.begin();
    while (a != indices_.end() && b != other.indices_.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            ++count;
            ++a;
            ++b;
        }
    }
    return count;
}

std::string Support::to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(indices_[k]);
    }
    return out + "}";
}

}  // namespace l0path
