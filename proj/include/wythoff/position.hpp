#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace wythoff {

/// Unordered pair of pile sizes, stored as (low, high) with low <= high.
class Position {
public:
    constexpr Position() = default;
    constexpr Position(std::uint64_t x, std::uint64_t y) noexcept
        : low_(std::min(x, y)), high_(std::max(x, y)) {}

    constexpr std::uint64_t low() const noexcept { return low_; }
    constexpr std::uint64_t high() const noexcept { return high_; }
    constexpr std::uint64_t total() const noexcept { return low_ + high_; }
    constexpr bool terminal() const noexcept { return high_ == 0; }

    friend constexpr auto operator<=>(const Position&, const Position&) = default;

    std::string str() const { return std::to_string(low_) + "," + std::to_string(high_); }

private:
    std::uint64_t low_ = 0;
    std::uint64_t high_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Position& p) {
    return os << '(' << p.low() << ',' << p.high() << ')';
}

}  // namespace wythoff
