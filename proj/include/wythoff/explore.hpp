#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wythoff/grundy.hpp"
#include "wythoff/report.hpp"
#include "wythoff/rules.hpp"

namespace wythoff {

struct AdditivePeriod {
    std::uint64_t period;
    std::uint64_t preperiod;

    friend bool operator==(const AdditivePeriod&, const AdditivePeriod&) = default;
};

/// Smallest (p, n0), p first, with s[n + p] = s[n] + p for n0 <= n <= B - p,
/// where B = s.size() - 1. A candidate only counts when the periodic tail
/// covers at least half the window (n0 <= B / 2) and two periods (B - n0 >= 2p).
std::optional<AdditivePeriod> find_additive_period(std::span<const Grundy> s);

/// Mines row a over columns 0..b_max and re-mines on 0..b_max/2 for the
/// stability flag. Throws std::out_of_range when b_max < 4 or the table is short.
PeriodReport mine_additive_period(const GrundyTable& table, std::uint64_t a, std::uint64_t b_max);
PeriodReport mine_additive_period(const GameRule& rule, std::uint64_t a, std::uint64_t b_max);

/// R-Wythoff, 4 <= a <= b:  g(a,b) <= b + floor(b/3) - 1 for a < b and
/// floor(3b/4) <= g(b,b) <= b + floor(b/3).
VerificationReport check_conjecture_bw_upper2(const GrundyTable& table);
VerificationReport check_conjecture_bw_upper2(std::uint64_t bound);

/// E-Wythoff diagonals: g(a, a+r) = 2a + r for r >= 0, a >= 2r, except
/// g(2,2) = 3; and g(a, 3a+r) = 4a + r - 1 for a >= 4, 2 <= r <= a + 1.
VerificationReport check_conjecture_ew_diagonals(const GrundyTable& table);
VerificationReport check_conjecture_ew_diagonals(std::uint64_t bound);

/// For each rule: does it keep the Wythoff P-positions up to bound, and how
/// does its value-1 set differ from {(a(n) - 1, b(n) - 1)}.
SurveyReport survey_value1(const GameRule& rule, std::uint64_t bound);
std::vector<SurveyReport> survey_value1_variants(std::span<const GameRule> rules, std::uint64_t bound);

}  // namespace wythoff
