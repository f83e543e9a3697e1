#pragma once

#include <stdexcept>
#include <string>

namespace l0path {

enum class ErrorCode {
    zero_column,
    dimension_mismatch,
    already_active,
    not_active,
    rank_deficient,
    empty_support,
    cap_exceeded,
    out_of_range,
    too_large,
    bad_dims,
    no_eligible_segment,
    empty_grid,
    parse_error,
    invalid_argument,
};

const char* to_string(ErrorCode code) noexcept;

/// Base class of every error raised by the library. The code lets callers
/// (the CLI in particular) map failures onto exit statuses without string
/// matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace l0path
