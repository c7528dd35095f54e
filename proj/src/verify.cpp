#include "wythoff/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wythoff/beatty.hpp"

namespace wythoff {

namespace detail {
extern const char* const kGoldenRWythoff;
extern const char* const kGoldenEWythoff;
}  // namespace detail

namespace {

std::vector<GoldenEntry> parse_golden(const char* text) {
    std::vector<GoldenEntry> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        GoldenEntry e{};
        if (!(fields >> e.a >> e.b >> e.g)) throw std::logic_error("malformed golden fixture line: " + line);
        out.push_back(e);
    }
    return out;
}

std::string cell(std::uint64_t a, std::uint64_t b) {
    return "g(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

/// high partner of each P-position with low <= max_low (0 when none).
std::vector<std::uint64_t> p_partners(std::uint64_t max_low) {
    std::vector<std::uint64_t> partner(static_cast<std::size_t>(max_low + 1), 0);
    for (std::uint64_t n = 1; beatty_a(n) <= max_low; ++n) partner[beatty_a(n)] = beatty_b(n);
    return partner;
}

}  // namespace

const std::vector<GoldenEntry>& golden_fixture(GameId id) {
    static const std::vector<GoldenEntry> r = parse_golden(detail::kGoldenRWythoff);
    static const std::vector<GoldenEntry> e = parse_golden(detail::kGoldenEWythoff);
    if (id == GameId::RWythoff) return r;
    if (id == GameId::EWythoff) return e;
    throw std::invalid_argument("no reference table for this game");
}

VerificationReport verify_p_positions(const GrundyTable& table) {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim_id = "p-positions";
    rep.rule = table.rule().name();
    rep.bounds = {{"max", table.bound()}, {"rows", table.rows()}};
    const auto partner = p_partners(table.rows());
    for (std::uint64_t a = 0; a <= table.rows(); ++a) {
        for (std::uint64_t b = a; b <= table.bound(); ++b) {
            const bool zero = table(a, b) == 0;
            const bool formula = a == 0 ? b == 0 : partner[a] == b;
            if (zero != formula) {
                rep.fail(Position(a, b), cell(a, b) + " = " + std::to_string(table(a, b)) +
                                             (formula ? " but the Beatty formula lists a P-position"
                                                      : " but the Beatty formula lists no P-position"));
            }
        }
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_p_positions(const GameRule& rule, std::uint64_t bound) {
    Stopwatch clock;
    auto rep = verify_p_positions(build_table(rule, bound));
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_value1(const GrundyTable& table) {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim_id = "value1";
    rep.rule = table.rule().name();
    rep.bounds = {{"max", table.bound()}, {"rows", table.rows()}};
    auto expected = value1_formula_within(table.rule(), table.bound());
    std::erase_if(expected, [&](const Position& p) { return p.low() > table.rows(); });
    std::vector<Position> actual;
    for (std::uint64_t a = 0; a <= table.rows(); ++a) {
        for (std::uint64_t b = a; b <= table.bound(); ++b) {
            if (table(a, b) == 1) actual.emplace_back(a, b);
        }
    }
    std::vector<Position> extra;
    std::vector<Position> missing;
    std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(missing));
    for (const auto& p : extra) rep.fail(p, "value 1 but not in the formula set");
    for (const auto& p : missing) {
        rep.fail(p, "in the formula set but " + cell(p.low(), p.high()) + " = " + std::to_string(table.at(p)));
    }
    rep.notes.push_back("value-1 positions found: " + std::to_string(actual.size()));
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_value1(const GameRule& rule, std::uint64_t bound) {
    Stopwatch clock;
    auto rep = verify_value1(build_table(rule, bound));
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_no_redundant_moves(std::uint64_t k_max) {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim_id = "no-redundant-moves";
    const auto rule = GameRule::r_wythoff();
    rep.rule = rule.name();
    rep.bounds = {{"k_max", k_max}};
    if (k_max == 0) {
        rep.skip("empty range of k");
        return rep;
    }
    auto check_unique = [&](Position p, const Move& expected, Position target, std::uint64_t k) {
        const auto moves = winning_moves(rule, p);
        if (moves.size() != 1 || moves.front().move != expected || moves.front().result != target) {
            std::string detail = "k=" + std::to_string(k) + ": expected the unique winning move '" +
                                 expected.describe() + "', found " + std::to_string(moves.size()) + ":";
            for (const auto& m : moves) detail += " [" + m.move.describe() + " -> " + m.result.str() + "]";
            rep.fail(p, detail);
        }
    };
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        check_unique(Position(1, 2 + k), Move{MoveKind::SinglePileLarger, 0, k}, Position(1, 2), k);

        // One of 3 + k = a(2) + k and 4 + k = a(3) + k is itself an A-value.
        std::uint64_t n = 0;
        if (classify(3 + k).kind == BeattyKind::A) {
            n = 2;
        } else if (classify(4 + k).kind == BeattyKind::A) {
            n = 3;
        } else {
            rep.fail(Position(3 + k, 4 + k), "k=" + std::to_string(k) + ": neither 3+k nor 4+k is an A-value");
            continue;
        }
        const Position base = p_position_formula(n);
        check_unique(Position(base.low() + k, base.high() + k), Move{MoveKind::EqualBoth, k, k}, base, k);
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_row_existence(const GrundyTable& table, std::uint64_t a_max, std::uint64_t c_max,
                                        std::uint64_t b_budget) {
    Stopwatch clock;
    require(table.rows() >= a_max && table.bound() >= b_budget, "row existence: table too small");
    VerificationReport rep;
    rep.claim_id = "row-existence";
    rep.rule = table.rule().name();
    rep.bounds = {{"a_max", a_max}, {"c_max", c_max}, {"b_budget", b_budget}};
    const GameId id = table.rule().id();
    const bool unique = id == GameId::EWythoff || id == GameId::Wythoff;
    for (std::uint64_t a = 0; a <= a_max; ++a) {
        const auto row = table.row(a);
        std::vector<std::int64_t> first(static_cast<std::size_t>(c_max + 1), -1);
        for (std::uint64_t b = 0; b <= b_budget; ++b) {
            const Grundy g = row[b];
            if (g > c_max) continue;
            if (first[g] < 0) {
                first[g] = static_cast<std::int64_t>(b);
            } else if (unique) {
                rep.fail(Position(a, b), "row " + std::to_string(a) + " repeats value " + std::to_string(g) +
                                             " (also at b=" + std::to_string(first[g]) + ")");
            }
        }
        for (std::uint64_t c = 0; c <= c_max; ++c) {
            if (first[c] < 0) {
                rep.skip("row " + std::to_string(a) + ": value " + std::to_string(c) + " not found for b <= " +
                         std::to_string(b_budget));
            }
        }
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_row_existence(const GameRule& rule, std::uint64_t a_max, std::uint64_t c_max,
                                        std::uint64_t b_budget) {
    Stopwatch clock;
    const std::uint64_t bound = std::max(a_max, b_budget);
    auto rep = verify_row_existence(build_strip(rule, a_max, bound), a_max, c_max, b_budget);
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_diagonal_uniqueness(const GrundyTable& table, std::uint64_t a_max,
                                              std::uint64_t c_max, std::uint64_t b_budget) {
    Stopwatch clock;
    require(table.rows() >= b_budget && table.bound() >= a_max + b_budget, "diagonal check: table too small");
    VerificationReport rep;
    rep.claim_id = "diagonal-uniqueness";
    rep.rule = table.rule().name();
    rep.bounds = {{"a_max", a_max}, {"c_max", c_max}, {"b_budget", b_budget}};
    for (std::uint64_t a = 0; a <= a_max; ++a) {
        std::vector<std::int64_t> first(static_cast<std::size_t>(c_max + 1), -1);
        for (std::uint64_t b = 0; b <= b_budget; ++b) {
            const Grundy g = table(b, a + b);
            if (g > c_max) continue;
            if (first[g] < 0) {
                first[g] = static_cast<std::int64_t>(b);
            } else {
                rep.fail(Position(b, a + b), "diagonal offset " + std::to_string(a) + " repeats value " +
                                                 std::to_string(g) + " (also at b=" + std::to_string(first[g]) + ")");
            }
        }
        for (std::uint64_t c = 0; c <= c_max; ++c) {
            if (first[c] < 0) {
                rep.skip("diagonal offset " + std::to_string(a) + ": value " + std::to_string(c) +
                         " not found for b <= " + std::to_string(b_budget));
            }
        }
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_diagonal_uniqueness(std::uint64_t a_max, std::uint64_t c_max, std::uint64_t b_budget) {
    Stopwatch clock;
    auto rep = verify_diagonal_uniqueness(build_table(GameRule::r_wythoff(), a_max + b_budget), a_max, c_max,
                                          b_budget);
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_small_row_formulas(const GrundyTable& table) {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim_id = "small-rows";
    rep.rule = table.rule().name();
    rep.bounds = {{"b_max", table.bound()}};
    const std::uint64_t B = table.bound();
    auto expect = [&](std::uint64_t a, std::uint64_t x, std::uint64_t want, const char* form) {
        const Grundy got = table(a, x);
        if (got != want) {
            rep.fail(Position(a, x), cell(a, x) + " = " + std::to_string(got) + ", " + form + " gives " +
                                         std::to_string(want));
        }
    };
    // Wythoff row 1, shared by the extension since both allow the same moves there.
    auto wythoff_row1 = [&] {
        for (std::uint64_t x = 0; x <= B; ++x) {
            expect(1, x, x % 3 == 2 ? x - 2 : x + 1, "row 1 mod-3 form");
        }
        rep.notes.push_back("row 1: x+1 if x = 0,1 (mod 3), else x-2");
    };
    switch (table.rule().id()) {
        case GameId::RWythoff: {
            require(table.rows() >= 3, "small rows: R-Wythoff needs rows 0-3");
            for (std::uint64_t x = 0; x <= B; ++x) expect(0, x, x, "row 0 identity");
            for (std::uint64_t x = 3; x <= B; ++x) {
                expect(1, x, x, "row 1 identity for x >= 3");
                expect(2, x, x, "row 2 identity for x >= 3");
            }
            constexpr std::uint64_t prefix[] = {3, 3, 3, 4, 2, 0, 1, 7};
            for (std::uint64_t x = 0; x < 8 && x <= B; ++x) expect(3, x, prefix[x], "row 3 listed prefix");
            for (std::uint64_t x = 7; x <= B; ++x) {
                expect(3, x, (x % 4 == 0 || x % 4 == 3) ? x : x - 4, "row 3 mod-4 form");
            }
            rep.notes.push_back("row 0: x; rows 1-2: x for x >= 3; row 3: prefix to 7, then mod-4 form");
            break;
        }
        case GameId::EWythoff: {
            require(table.rows() >= 2, "small rows: E-Wythoff needs rows 0-2");
            wythoff_row1();
            for (std::uint64_t x = 0; x <= B; ++x) {
                if (x == 1) continue;
                const std::uint64_t want = x % 3 == 0 ? x + 2 : (x % 3 == 1 ? x - 3 : x + 1);
                expect(2, x, want, "row 2 mod-3 form");
            }
            rep.notes.push_back("row 2: x+2, x-3, x+1 for x = 0, 1, 2 (mod 3), x != 1");
            break;
        }
        case GameId::Wythoff:
            require(table.rows() >= 1, "small rows: Wythoff needs rows 0-1");
            wythoff_row1();
            break;
        case GameId::GeneralizedE:
            rep.skip("no closed-form rows for generalized rules");
            break;
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_small_row_formulas(const GameRule& rule, std::uint64_t b_max) {
    Stopwatch clock;
    auto rep = verify_small_row_formulas(build_strip(rule, 3, std::max<std::uint64_t>(b_max, 3)));
    rep.bounds = {{"b_max", b_max}};
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_bounds(const GrundyTable& table) {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim_id = "bounds";
    rep.rule = table.rule().name();
    rep.bounds = {{"max", table.bound()}, {"rows", table.rows()}};
    std::uint64_t lower_from = 0;
    std::uint64_t upper_from = 0;
    std::int64_t upper_slack = 0;  // g <= a + b + slack
    switch (table.rule().id()) {
        case GameId::RWythoff:
            lower_from = 4;
            upper_from = 2;
            upper_slack = -1;
            break;
        case GameId::EWythoff:
            lower_from = 3;
            upper_from = 0;
            upper_slack = 0;
            break;
        default:
            rep.skip("no bounds stated for " + rep.rule);
            return rep;
    }
    for (std::uint64_t a = std::min(lower_from, upper_from); a <= table.rows(); ++a) {
        for (std::uint64_t b = a; b <= table.bound(); ++b) {
            const auto g = static_cast<std::int64_t>(table(a, b));
            const auto sa = static_cast<std::int64_t>(a);
            const auto sb = static_cast<std::int64_t>(b);
            if (a >= lower_from && g < sb - 2 * sa + 1) {
                rep.fail(Position(a, b), cell(a, b) + " = " + std::to_string(g) + " < b - 2a + 1");
            }
            if (a >= upper_from && g > sa + sb + upper_slack) {
                rep.fail(Position(a, b), cell(a, b) + " = " + std::to_string(g) + " above the upper bound");
            }
        }
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_bounds(const GameRule& rule, std::uint64_t bound) {
    Stopwatch clock;
    if (rule.id() != GameId::RWythoff && rule.id() != GameId::EWythoff) {
        VerificationReport rep;
        rep.claim_id = "bounds";
        rep.rule = rule.name();
        rep.bounds = {{"max", bound}};
        rep.skip("no bounds stated for " + rep.rule);
        return rep;
    }
    auto rep = verify_bounds(build_table(rule, bound));
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_golden_tables() {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim_id = "golden-tables";
    rep.rule = "r-wythoff,e-wythoff";
    rep.bounds = {{"max", 9}};
    for (const auto& rule : {GameRule::r_wythoff(), GameRule::e_wythoff()}) {
        const auto table = build_table(rule, 9);
        const auto& fixture = golden_fixture(rule.id());
        if (fixture.size() != 100) {
            rep.fail(Position(0, 0), rule.name() + ": reference table has " + std::to_string(fixture.size()) +
                                         " entries, expected 100");
        }
        for (const auto& e : fixture) {
            const Grundy got = table(e.a, e.b);
            if (got != e.g) {
                rep.fail(Position(e.a, e.b), rule.name() + ": " + cell(e.a, e.b) + " = " + std::to_string(got) +
                                                 ", reference " + std::to_string(e.g));
            }
        }
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

}  // namespace wythoff
