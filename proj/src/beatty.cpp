#include "wythoff/beatty.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace wythoff {

namespace {

int bit_width128(uint128 v) noexcept {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0) return 64 + std::bit_width(hi);
    return std::bit_width(static_cast<std::uint64_t>(v));
}

}  // namespace

uint128 isqrt128(uint128 v) noexcept {
    if (v < 2) return v;
    // Start above the root and let Newton's iteration descend monotonically.
    uint128 x = static_cast<uint128>(1) << ((bit_width128(v) + 1) / 2);
    for (;;) {
        const uint128 y = (x + v / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

std::uint64_t beatty_a(std::uint64_t n) {
    if (n > kMaxBeattyIndex) {
        throw std::range_error("beatty index " + std::to_string(n) + " exceeds 2^62");
    }
    const auto wide = static_cast<uint128>(n);
    const uint128 root = isqrt128(5 * wide * wide);
    return static_cast<std::uint64_t>((wide + root) / 2);
}

std::uint64_t beatty_b(std::uint64_t n) { return beatty_a(n) + n; }

std::uint64_t count_a_upto(std::uint64_t v) {
    // floor((v+1)/phi) = floor((v+1)(phi-1)) = a(v+1) - (v+1).
    return beatty_a(v + 1) - (v + 1);
}

BeattyClass classify(std::uint64_t v) {
    if (v == 0) {
        throw std::invalid_argument("classify: value must be positive");
    }
    if (v >= kMaxBeattyIndex) {
        throw std::range_error("classify: value " + std::to_string(v) + " out of range");
    }
    const std::uint64_t m = count_a_upto(v);
    if (m >= 1 && beatty_a(m) == v) return {BeattyKind::A, m};
    // Not an A-value: v is preceded by m A-values, so it is the (v - m)-th B-value.
    const std::uint64_t n = v - m;
    if (beatty_b(n) != v) {
        throw std::logic_error("classify: complementarity violated at " + std::to_string(v));
    }
    return {BeattyKind::B, n};
}

}  // namespace wythoff
