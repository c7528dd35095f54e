#include "wythoff/explore.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wythoff/beatty.hpp"

namespace wythoff {

std::optional<AdditivePeriod> find_additive_period(std::span<const Grundy> s) {
    if (s.size() < 2) return std::nullopt;
    const std::uint64_t B = s.size() - 1;
    auto holds = [&](std::uint64_t n, std::uint64_t p) {
        return std::uint64_t{s[n + p]} == std::uint64_t{s[n]} + p;
    };
    for (std::uint64_t p = 1; 2 * p <= B; ++p) {
        // Scan downwards; a failure above B/2 rules p out.
        std::uint64_t n0 = 0;
        bool rejected = false;
        for (std::uint64_t n = B - p + 1; n-- > 0;) {
            if (!holds(n, p)) {
                n0 = n + 1;
                rejected = 2 * n0 > B;
                break;
            }
        }
        if (!rejected && B - n0 >= 2 * p) return AdditivePeriod{p, n0};
    }
    return std::nullopt;
}

PeriodReport mine_additive_period(const GrundyTable& table, std::uint64_t a, std::uint64_t b_max) {
    Stopwatch clock;
    if (b_max < 4) throw std::out_of_range("additive period: window must reach at least b = 4");
    if (a > table.rows() || b_max > table.bound()) throw std::out_of_range("additive period: table too small");
    auto row = table.row(a);
    row.resize(static_cast<std::size_t>(b_max + 1));
    PeriodReport rep;
    rep.rule = table.rule().name();
    rep.row = a;
    rep.checked_to = b_max;
    const auto full = find_additive_period(row);
    if (full) {
        rep.period = full->period;
        rep.preperiod = full->preperiod;
        const auto half = find_additive_period(std::span<const Grundy>(row).first(row.size() / 2 + 1));
        rep.stable_under_doubling = half == full;
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

PeriodReport mine_additive_period(const GameRule& rule, std::uint64_t a, std::uint64_t b_max) {
    if (b_max < 4) throw std::out_of_range("additive period: window must reach at least b = 4");
    Stopwatch clock;
    auto rep = mine_additive_period(build_strip(rule, a, std::max(a, b_max)), a, b_max);
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport check_conjecture_bw_upper2(const GrundyTable& table) {
    Stopwatch clock;
    if (table.rule().id() != GameId::RWythoff) throw std::invalid_argument("bw-upper2 needs an R-Wythoff table");
    VerificationReport rep;
    rep.claim_id = "conjecture-r-upper";
    rep.rule = table.rule().name();
    rep.bounds = {{"max", table.bound()}, {"rows", table.rows()}};
    for (std::uint64_t a = 4; a <= table.rows(); ++a) {
        for (std::uint64_t b = a; b <= table.bound(); ++b) {
            const std::uint64_t g = table(a, b);
            const std::uint64_t top = b + b / 3;
            const std::string at = "g(" + std::to_string(a) + "," + std::to_string(b) + ") = " + std::to_string(g);
            if (a < b && g > top - 1) rep.fail(Position(a, b), at + " > b + floor(b/3) - 1");
            if (a == b && g > top) rep.fail(Position(a, b), at + " > b + floor(b/3)");
            if (a == b && g < 3 * b / 4) rep.fail(Position(a, b), at + " < floor(3b/4)");
        }
    }
    if (rep.status == Status::Fail) rep.notes.push_back("counterexample refutes the conjecture");
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport check_conjecture_bw_upper2(std::uint64_t bound) {
    Stopwatch clock;
    auto rep = check_conjecture_bw_upper2(build_table(GameRule::r_wythoff(), bound));
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport check_conjecture_ew_diagonals(const GrundyTable& table) {
    Stopwatch clock;
    if (table.rule().id() != GameId::EWythoff) throw std::invalid_argument("ew-diagonals needs an E-Wythoff table");
    VerificationReport rep;
    rep.claim_id = "conjecture-e-diagonals";
    rep.rule = table.rule().name();
    rep.bounds = {{"max", table.bound()}, {"rows", table.rows()}};
    std::uint64_t near = 0;
    std::uint64_t far = 0;
    for (std::uint64_t a = 0; a <= table.rows(); ++a) {
        // g(a, a + r) for 0 <= 2r <= a
        for (std::uint64_t r = 0; 2 * r <= a && a + r <= table.bound(); ++r) {
            const std::uint64_t want = (a == 2 && r == 0) ? 3 : 2 * a + r;
            const std::uint64_t g = table(a, a + r);
            ++near;
            if (g != want) {
                rep.fail(Position(a, a + r), "g(a,a+r) = " + std::to_string(g) + ", conjectured " +
                                                 std::to_string(want) + " (r=" + std::to_string(r) + ")");
            }
        }
        // g(a, 3a + r) for a >= 4, 2 <= r <= a + 1
        for (std::uint64_t r = 2; a >= 4 && r <= a + 1 && 3 * a + r <= table.bound(); ++r) {
            const std::uint64_t want = 4 * a + r - 1;
            const std::uint64_t g = table(a, 3 * a + r);
            ++far;
            if (g != want) {
                rep.fail(Position(a, 3 * a + r), "g(a,3a+r) = " + std::to_string(g) + ", conjectured " +
                                                     std::to_string(want) + " (r=" + std::to_string(r) + ")");
            }
        }
    }
    rep.notes.push_back("cells checked: " + std::to_string(near) + " near-diagonal, " + std::to_string(far) +
                        " on (a, 3a+r)");
    if (rep.status == Status::Fail) rep.notes.push_back("counterexample refutes the conjecture");
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport check_conjecture_ew_diagonals(std::uint64_t bound) {
    Stopwatch clock;
    auto rep = check_conjecture_ew_diagonals(build_table(GameRule::e_wythoff(), bound));
    rep.elapsed_ms = clock.ms();
    return rep;
}

SurveyReport survey_value1(const GameRule& rule, std::uint64_t bound) {
    Stopwatch clock;
    const auto table = build_table(rule, bound);
    SurveyReport rep;
    rep.rule = rule.name();
    rep.bound = bound;
    std::vector<Position> value1;
    for (std::uint64_t a = 0; a <= bound; ++a) {
        for (std::uint64_t b = a; b <= bound; ++b) {
            const Grundy g = table(a, b);
            if ((g == 0) != is_p_position_oracle(Position(a, b))) rep.p_mismatches.emplace_back(a, b);
            if (g == 1) value1.emplace_back(a, b);
        }
    }
    rep.preserves_p_positions = rep.p_mismatches.empty();
    // Shifted P-positions (a(n) - 1, b(n) - 1), n >= 1.
    const auto shifted = value1_formula_within(GameRule::e_wythoff(), bound);
    std::set_difference(value1.begin(), value1.end(), shifted.begin(), shifted.end(),
                        std::back_inserter(rep.value1_extra));
    std::set_difference(shifted.begin(), shifted.end(), value1.begin(), value1.end(),
                        std::back_inserter(rep.value1_missing));
    rep.elapsed_ms = clock.ms();
    return rep;
}

std::vector<SurveyReport> survey_value1_variants(std::span<const GameRule> rules, std::uint64_t bound) {
    std::vector<SurveyReport> out;
    out.reserve(rules.size());
    for (const auto& rule : rules) out.push_back(survey_value1(rule, bound));
    return out;
}

}  // namespace wythoff
