#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wythoff/position.hpp"

namespace wythoff {

enum class GameId { Wythoff, RWythoff, EWythoff, GeneralizedE };

enum class MoveKind { SinglePileLarger, SinglePileSmaller, SinglePileEither, EqualBoth, UnequalPair };

std::string_view to_string(MoveKind kind) noexcept;

/// A labeled move, expressed as tokens taken from the low and high pile of
/// the canonical position it applies to.
struct Move {
    MoveKind kind;
    std::uint64_t take_low = 0;
    std::uint64_t take_high = 0;

    Position apply(Position p) const noexcept {
        return Position(p.low() - take_low, p.high() - take_high);
    }
    std::string describe() const;

    friend bool operator==(const Move&, const Move&) = default;
};

struct LabeledMove {
    Move move;
    Position result;

    friend bool operator==(const LabeledMove&, const LabeledMove&) = default;
};

/// Integer-set descriptor used by the generalized extension family.
/// Text forms: `all`, `lo..hi`, `lo..`, `v1,v2,...`, `mod:m:r`.
class IntSet {
public:
    static IntSet all() { return IntSet{}; }
    static IntSet range(std::uint64_t lo, std::uint64_t hi = std::numeric_limits<std::uint64_t>::max());
    static IntSet list(std::vector<std::uint64_t> values);
    static IntSet residue(std::uint64_t modulus, std::uint64_t remainder);
    static IntSet parse(std::string_view text);

    bool contains(std::uint64_t v) const noexcept;
    bool is_all() const noexcept { return kind_ == Kind::All; }
    std::string str() const;

    friend bool operator==(const IntSet&, const IntSet&) = default;

private:
    enum class Kind { All, Range, List, Residue };
    Kind kind_ = Kind::All;
    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> values_;  // sorted, for List
};

/// Predicate R(k, l) on an adjoined move; k > l is always required on top.
/// Text forms: `any`, `successor`, `diff-eq:c`, `diff-le:c`, `diff-ge:c`, `diff-mod:m:r`.
class Relation {
public:
    static Relation any() { return Relation{}; }
    static Relation successor() { return diff_eq(1); }
    static Relation diff_eq(std::uint64_t c);
    static Relation diff_le(std::uint64_t c);
    static Relation diff_ge(std::uint64_t c);
    static Relation diff_mod(std::uint64_t m, std::uint64_t r);
    static Relation parse(std::string_view text);

    bool holds(std::uint64_t k, std::uint64_t l) const noexcept;
    bool is_any() const noexcept { return kind_ == Kind::Any; }
    std::string str() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    enum class Kind { Any, DiffEq, DiffLe, DiffGe, DiffMod };
    Kind kind_ = Kind::Any;
    std::uint64_t c_ = 0;
    std::uint64_t m_ = 1;
};

/// Adjoined move of the extension family: take k from the smaller pile (either
/// pile when equal) and l from the other, with k > l >= 0, k in K, l in L, R(k, l).
struct AdjoinedMove {
    IntSet k_set;
    IntSet l_set;
    Relation relation;

    bool unrestricted() const noexcept {
        return k_set.is_all() && l_set.is_all() && relation.is_any();
    }
    bool allows(std::uint64_t k, std::uint64_t l) const noexcept {
        return k > l && k_set.contains(k) && l_set.contains(l) && relation.holds(k, l);
    }
    std::string str() const;

    friend bool operator==(const AdjoinedMove&, const AdjoinedMove&) = default;
};

/// Move-generation rule of one game variant.
class GameRule {
public:
    static GameRule wythoff() { return GameRule(GameId::Wythoff); }
    static GameRule r_wythoff() { return GameRule(GameId::RWythoff); }
    static GameRule e_wythoff();
    static GameRule generalized(AdjoinedMove adjoined, std::string label = {});

    GameId id() const noexcept { return id_; }
    bool is_named() const noexcept { return id_ != GameId::GeneralizedE; }
    const std::optional<AdjoinedMove>& adjoined() const noexcept { return adjoined_; }
    const std::string& label() const noexcept { return label_; }

    /// Short identifier: wythoff, r-wythoff, e-wythoff, or generalized[...].
    std::string name() const;

    /// Calls f(Move, Position) for every labeled move from p. Moves with equal
    /// removal vectors are reported once; distinct vectors with the same
    /// resulting position are all reported.
    template <class F>
    void for_each_move(Position p, F&& f) const;

    /// Calls f(Position) for every follower not reached by shrinking the
    /// larger pile alone (or either pile when equal). Duplicates possible.
    template <class F>
    void for_each_cross_follower(Position p, F&& f) const;

    friend bool operator==(const GameRule&, const GameRule&) = default;

private:
    explicit GameRule(GameId id) : id_(id) {}

    template <class F>
    void for_each_adjoined(Position p, F&& f) const;

    GameId id_;
    std::optional<AdjoinedMove> adjoined_;
    std::string label_;
};

/// Distinct canonical followers of p, sorted.
std::vector<Position> followers(const GameRule& rule, Position p);

/// Every labeled move from p together with its resulting position.
std::vector<LabeledMove> moves_with_labels(const GameRule& rule, Position p);

/// (a(n), b(n)): the n-th P-position shared by all supported games.
Position p_position_formula(std::uint64_t n);

/// Closed-form Grundy-value-1 set, indices 1..n_max. R-Wythoff adds (2,2) and
/// (4,6) and drops n = 2. Throws std::invalid_argument for other rules.
std::vector<Position> value1_formula(const GameRule& rule, std::uint64_t n_max);

/// Same set restricted to members with high <= bound.
std::vector<Position> value1_formula_within(const GameRule& rule, std::uint64_t bound);

/// Parses `wythoff`, `r-wythoff`, `e-wythoff` or `generalized:<path>`.
GameRule parse_game(std::string_view text);

/// Key-value rule configuration:
///   game = wythoff | r-wythoff | e-wythoff | generalized-e
///   k_set = <IntSet>      (generalized-e only, default all)
///   l_set = <IntSet>      (default all)
///   relation = <Relation> (default any)
///   name = <label>        (optional)
/// Blank lines and `#` comments are ignored. Throws std::invalid_argument.
GameRule parse_rule_config(std::istream& in);
GameRule load_rule_config(const std::string& path);

/// Config text equivalent to the given rule.
std::string rule_config_text(const GameRule& rule);

// ---------------------------------------------------------------------------

template <class F>
void GameRule::for_each_adjoined(Position p, F&& f) const {
    if (!adjoined_) return;
    const std::uint64_t lo = p.low();
    const bool open = adjoined_->unrestricted();
    // l = 0 coincides with a single-pile move and l = k with a diagonal move;
    // both already come from the Wythoff part of the rule.
    for (std::uint64_t k = 2; k <= lo; ++k) {
        if (!open && !adjoined_->k_set.contains(k)) continue;
        for (std::uint64_t l = 1; l < k; ++l) {
            if (open || adjoined_->allows(k, l)) {
                f(Move{MoveKind::UnequalPair, k, l});
            }
        }
    }
}

template <class F>
void GameRule::for_each_move(Position p, F&& f) const {
    const std::uint64_t lo = p.low();
    const std::uint64_t hi = p.high();
    const bool equal = lo == hi;
    const MoveKind single = equal ? MoveKind::SinglePileEither : MoveKind::SinglePileLarger;
    for (std::uint64_t k = 1; k <= hi; ++k) {
        const Move m{single, 0, k};
        f(m, m.apply(p));
    }
    if (id_ != GameId::RWythoff && !equal) {
        for (std::uint64_t k = 1; k <= lo; ++k) {
            const Move m{MoveKind::SinglePileSmaller, k, 0};
            f(m, m.apply(p));
        }
    }
    for (std::uint64_t k = 1; k <= lo; ++k) {
        const Move m{MoveKind::EqualBoth, k, k};
        f(m, m.apply(p));
    }
    for_each_adjoined(p, [&](const Move& m) { f(m, m.apply(p)); });
}

template <class F>
void GameRule::for_each_cross_follower(Position p, F&& f) const {
    const std::uint64_t lo = p.low();
    const std::uint64_t hi = p.high();
    if (id_ != GameId::RWythoff && lo != hi) {
        for (std::uint64_t k = 1; k <= lo; ++k) f(Position(lo - k, hi));
    }
    for (std::uint64_t k = 1; k <= lo; ++k) f(Position(lo - k, hi - k));
    for_each_adjoined(p, [&](const Move& m) { f(m.apply(p)); });
}

}  // namespace wythoff
