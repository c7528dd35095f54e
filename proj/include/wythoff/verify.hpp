#pragma once

#include <cstdint>
#include <vector>

#include "wythoff/grundy.hpp"
#include "wythoff/report.hpp"
#include "wythoff/rules.hpp"

namespace wythoff {

/// (a, b, g) entry of a transcribed reference table.
struct GoldenEntry {
    std::uint64_t a;
    std::uint64_t b;
    Grundy g;
};

/// Reference tables for 0 <= a, b <= 9 (100 entries, both orientations).
/// Only R-Wythoff and E-Wythoff have one; other ids throw.
const std::vector<GoldenEntry>& golden_fixture(GameId id);

// Each check comes in two forms: one over a caller-supplied table (which must
// cover the stated range) and one that builds what it needs.

/// Grundy value 0 exactly at the closed-form P-positions.
VerificationReport verify_p_positions(const GrundyTable& table);
VerificationReport verify_p_positions(const GameRule& rule, std::uint64_t bound);

/// Grundy value 1 exactly on value1_formula (R-Wythoff, E-Wythoff).
VerificationReport verify_value1(const GrundyTable& table);
VerificationReport verify_value1(const GameRule& rule, std::uint64_t bound);

/// R-Wythoff has no redundant move: for each k <= k_max there are positions
/// where "take k from the larger pile" and "take k from both" are the unique
/// winning moves.
VerificationReport verify_no_redundant_moves(std::uint64_t k_max);

/// Every value c <= c_max occurs in row a <= a_max within b <= b_budget;
/// rows of E-Wythoff and Wythoff hold each value at most once.
/// Values not found are reported as Skipped (existence is budget-bounded).
VerificationReport verify_row_existence(const GrundyTable& table, std::uint64_t a_max, std::uint64_t c_max,
                                        std::uint64_t b_budget);
VerificationReport verify_row_existence(const GameRule& rule, std::uint64_t a_max, std::uint64_t c_max,
                                        std::uint64_t b_budget);

/// Along each R-Wythoff diagonal (b, a + b), a <= a_max, each c <= c_max occurs
/// for at most one b <= b_budget, and (budget permitting) at least one.
VerificationReport verify_diagonal_uniqueness(const GrundyTable& table, std::uint64_t a_max,
                                              std::uint64_t c_max, std::uint64_t b_budget);
VerificationReport verify_diagonal_uniqueness(std::uint64_t a_max, std::uint64_t c_max, std::uint64_t b_budget);

/// Closed forms of rows 0-3 (R-Wythoff), rows 1-2 (E-Wythoff) and row 1
/// (Wythoff) on their validity ranges, columns up to the table bound.
VerificationReport verify_small_row_formulas(const GrundyTable& table);
VerificationReport verify_small_row_formulas(const GameRule& rule, std::uint64_t b_max);

/// Lower bound b - 2a + 1 and upper bounds a + b - 1 (R-Wythoff) / a + b
/// (E-Wythoff) on their domains. Skipped for other rules.
VerificationReport verify_bounds(const GrundyTable& table);
VerificationReport verify_bounds(const GameRule& rule, std::uint64_t bound);

/// Built tables against the transcribed reference tables, cell for cell.
VerificationReport verify_golden_tables();

}  // namespace wythoff
