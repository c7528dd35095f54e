#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "oracle.hpp"
#include "wythoff/beatty.hpp"

using namespace wythoff;

TEST_CASE("beatty pair small values") {
    CHECK(beatty_a(0) == 0);
    CHECK(beatty_b(0) == 0);
    CHECK(beatty_a(1) == 1);
    CHECK(beatty_b(1) == 2);
    CHECK(beatty_a(2) == 3);
    CHECK(beatty_b(2) == 5);
    CHECK(beatty_a(3) == 4);
    CHECK(beatty_b(3) == 7);
    CHECK(beatty_a(10) == 16);
    CHECK(beatty_b(10) == 26);
}

TEST_CASE("isqrt128") {
    CHECK(isqrt128(0) == 0);
    CHECK(isqrt128(1) == 1);
    CHECK(isqrt128(3) == 1);
    CHECK(isqrt128(4) == 2);
    CHECK(isqrt128(99) == 9);
    const uint128 big = static_cast<uint128>(kMaxBeattyIndex) * kMaxBeattyIndex;
    CHECK(isqrt128(big) == kMaxBeattyIndex);
    CHECK(isqrt128(big - 1) == kMaxBeattyIndex - 1);
}

TEST_CASE("beatty_a agrees with long double floor(n phi)") {
    for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
        if (beatty_a(n) != oracle::float_beatty_a(n)) {
            FAIL("mismatch at n=" << n);
        }
    }
}

TEST_CASE("complementary partition of 1..10^6") {
    constexpr std::uint64_t N = 1'000'000;
    std::vector<std::uint8_t> hits(N + 1, 0);
    for (std::uint64_t n = 1; beatty_a(n) <= N; ++n) ++hits[beatty_a(n)];
    for (std::uint64_t n = 1; beatty_b(n) <= N; ++n) ++hits[beatty_b(n)];
    std::uint64_t bad = 0;
    for (std::uint64_t v = 1; v <= N; ++v) bad += hits[v] != 1;
    CHECK(bad == 0);
}

TEST_CASE("classify examples") {
    CHECK(classify(1) == BeattyClass{BeattyKind::A, 1});
    CHECK(classify(2) == BeattyClass{BeattyKind::B, 1});
    CHECK(classify(4) == BeattyClass{BeattyKind::A, 3});
    CHECK(classify(5) == BeattyClass{BeattyKind::B, 2});
    CHECK(classify(7) == BeattyClass{BeattyKind::B, 3});
}

TEST_CASE("classify agrees with a linear scan") {
    std::uint64_t na = 1;
    std::uint64_t nb = 1;
    for (std::uint64_t v = 1; v <= 20'000; ++v) {
        BeattyClass expect{};
        if (beatty_a(na) == v) {
            expect = {BeattyKind::A, na++};
        } else {
            REQUIRE(beatty_b(nb) == v);
            expect = {BeattyKind::B, nb++};
        }
        REQUIRE(classify(v) == expect);
    }
}

TEST_CASE("classify round trip") {
    for (std::uint64_t n = 1; n <= 100'000; ++n) {
        REQUIRE(classify(beatty_a(n)) == BeattyClass{BeattyKind::A, n});
        REQUIRE(classify(beatty_b(n)) == BeattyClass{BeattyKind::B, n});
    }
}

TEST_CASE("large indices stay exact") {
    const std::uint64_t n = kMaxBeattyIndex / 3;
    CHECK(classify(beatty_a(n)) == BeattyClass{BeattyKind::A, n});
    CHECK(beatty_b(kMaxBeattyIndex) == beatty_a(kMaxBeattyIndex) + kMaxBeattyIndex);
}

TEST_CASE("range errors") {
    CHECK_THROWS_AS(beatty_a(kMaxBeattyIndex + 1), std::range_error);
    CHECK_THROWS_AS(classify(0), std::invalid_argument);
    CHECK_THROWS_AS(classify(kMaxBeattyIndex), std::range_error);
}
