#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace l0path {

using Index = std::ptrdiff_t;

/// Sentinel for "no atom" (e.g. no admissible insertion left).
inline constexpr Index no_atom = -1;

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// A set of atom indices, kept strictly increasing.
class Support {
public:
    Support() = default;
    Support(std::initializer_list<Index> indices);
    explicit Support(std::vector<Index> indices);

    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    bool contains(Index i) const noexcept;

    Support with(Index i) const;
    Support without(Index i) const;

    std::span<const Index> indices() const noexcept { return indices_; }
    auto begin() const noexcept { return indices_.begin(); }
    auto end() const noexcept { return indices_.end(); }
    Index operator[](std::size_t k) const { return indices_[k]; }

    std::size_t intersection_size(const Support& other) const noexcept;

    std::string to_string() const;

    friend auto operator<=>(const Support&, const Support&) = default;
    friend bool operator==(const Support&, const Support&) = default;

private:
    std::vector<Index> indices_;
};

}  // namespace l0path
