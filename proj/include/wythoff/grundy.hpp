#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "wythoff/position.hpp"
#include "wythoff/rules.hpp"

namespace wythoff {

using Grundy = std::uint32_t;

/// Smallest nonnegative integer not in values; mex of the empty set is 0.
Grundy mex(std::span<const Grundy> values);

/// Reusable presence buffer for mex over small value ranges.
class MexScratch {
public:
    void mark(std::uint64_t v);
    /// mex of the marked values; clears the marks.
    std::uint64_t take_mex();

private:
    std::vector<std::uint8_t> present_;
    std::vector<std::uint64_t> touched_;
};

/// Order in which the dense kernel fills cells. Both orders give identical tables.
enum class BuildOrder {
    RowMajor,   // ascending low, then high
    Wavefront,  // ascending low + high; cells of one antidiagonal run in parallel
};

struct BuildOptions {
    BuildOrder order = BuildOrder::RowMajor;
    unsigned threads = 0;  // 0: WYTHOFF_THREADS, then hardware concurrency
};

/// Sprague-Grundy values over the canonical positions (a, b) with
/// a <= rows and a <= b <= bound. A full table has rows == bound.
/// Followers never raise the low pile, so a strip is closed under moves.
class GrundyTable {
public:
    const GameRule& rule() const noexcept { return rule_; }
    std::uint64_t bound() const noexcept { return bound_; }
    std::uint64_t rows() const noexcept { return rows_; }
    bool full() const noexcept { return rows_ == bound_; }
    bool contains(Position p) const noexcept { return p.high() <= bound_ && p.low() <= rows_; }

    /// Throws std::out_of_range outside the table.
    Grundy at(Position p) const;
    Grundy operator()(std::uint64_t a, std::uint64_t b) const { return at(Position(a, b)); }

    /// g(a, i) for i = 0..bound.
    std::vector<Grundy> row(std::uint64_t a) const;

    std::size_t cell_count() const noexcept { return values_.size(); }

    friend bool operator==(const GrundyTable& x, const GrundyTable& y) {
        return x.bound_ == y.bound_ && x.rows_ == y.rows_ && x.values_ == y.values_;
    }

private:
    friend class TableBuilder;
    GrundyTable(GameRule rule, std::uint64_t rows, std::uint64_t bound);

    std::size_t offset(std::uint64_t a) const noexcept {
        // rows x < a hold bound - x + 1 cells each
        return static_cast<std::size_t>(a * (bound_ + 1) - a * (a - 1) / 2);
    }
    std::size_t index(std::uint64_t a, std::uint64_t b) const noexcept { return offset(a) + (b - a); }

    GameRule rule_;
    std::uint64_t rows_;
    std::uint64_t bound_;
    std::vector<Grundy> values_;
};

/// Full table over 0 <= a <= b <= bound. Named games use the incremental
/// bitset kernel; generalized rules fall back to the strip kernel.
/// Throws std::length_error if the table cannot be allocated.
GrundyTable build_table(const GameRule& rule, std::uint64_t bound, BuildOptions options = {});

/// Rows 0..rows only, each out to column bound. Costs O(rows) follower work
/// per cell for the named games (O(rows^2) for the extension family).
GrundyTable build_strip(const GameRule& rule, std::uint64_t rows, std::uint64_t bound);

/// Approximate bytes needed by build_table(rule, bound).
std::uint64_t estimate_table_bytes(std::uint64_t bound);

/// Thread count from WYTHOFF_THREADS (0 or unset means hardware concurrency).
unsigned default_thread_count();

/// Closed-form P-position test shared by all three named games.
bool is_p_position_oracle(Position p);

/// Labeled moves from p landing on P-positions (by the closed-form test).
std::vector<LabeledMove> winning_moves(const GameRule& rule, Position p);

/// CSV with header `a,b,g`, sorted by (a, b): one row per canonical position,
/// or with both_orders one per pair a <= rows, b <= bound (the full square
/// for a full table).
void write_csv(std::ostream& out, const GrundyTable& table, bool both_orders = false);

}  // namespace wythoff
