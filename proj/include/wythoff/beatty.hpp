#pragma once

#include <cstdint>
#include <string_view>

namespace wythoff {

/// Exact evaluation of the golden-ratio Beatty pair
///   a(n) = floor(n * phi),  b(n) = floor(n * phi^2) = a(n) + n
/// using only integer arithmetic: floor(n*phi) = (n + isqrt(5 n^2)) / 2.
/// 5n^2 is never a perfect square for n >= 1, so the identity is exact.

/// Largest index accepted by beatty_a / beatty_b. Keeps 5n^2 inside 128 bits
/// and b(n) inside 64 bits.
inline constexpr std::uint64_t kMaxBeattyIndex = std::uint64_t{1} << 62;

__extension__ typedef unsigned __int128 uint128;

/// floor(sqrt(v)) for a 128-bit unsigned value.
uint128 isqrt128(uint128 v) noexcept;

/// floor(n * phi). Throws std::range_error when n > kMaxBeattyIndex.
std::uint64_t beatty_a(std::uint64_t n);

/// floor(n * phi^2) = beatty_a(n) + n.
std::uint64_t beatty_b(std::uint64_t n);

enum class BeattyKind { A, B };

constexpr std::string_view to_string(BeattyKind k) noexcept {
    return k == BeattyKind::A ? "A" : "B";
}

struct BeattyClass {
    BeattyKind kind;
    std::uint64_t index;  // >= 1

    friend bool operator==(const BeattyClass&, const BeattyClass&) = default;
};

/// Places v >= 1 in exactly one of the two complementary sequences.
/// Throws std::invalid_argument for v == 0.
BeattyClass classify(std::uint64_t v);

/// Number of n >= 1 with a(n) <= v, i.e. floor((v + 1) / phi).
std::uint64_t count_a_upto(std::uint64_t v);

}  // namespace wythoff
