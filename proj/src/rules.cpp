#include "wythoff/rules.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wythoff/beatty.hpp"

namespace wythoff {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
    s = trim(s);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad integer '" + std::string(s) + "' in " + std::string(what));
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::string_view to_string(MoveKind kind) noexcept {
    switch (kind) {
        case MoveKind::SinglePileLarger: return "single-pile-larger";
        case MoveKind::SinglePileSmaller: return "single-pile-smaller";
        case MoveKind::SinglePileEither: return "single-pile-either";
        case MoveKind::EqualBoth: return "equal-both";
        case MoveKind::UnequalPair: return "unequal-pair";
    }
    return "?";
}

std::string Move::describe() const {
    switch (kind) {
        case MoveKind::SinglePileLarger:
            return "take " + std::to_string(take_high) + " from the larger pile";
        case MoveKind::SinglePileSmaller:
            return "take " + std::to_string(take_low) + " from the smaller pile";
        case MoveKind::SinglePileEither:
            return "take " + std::to_string(take_high) + " from either pile";
        case MoveKind::EqualBoth:
            return "take " + std::to_string(take_low) + " from both piles";
        case MoveKind::UnequalPair:
            return "take " + std::to_string(take_low) + " from the smaller pile and " +
                   std::to_string(take_high) + " from the other";
    }
    return {};
}

// --- IntSet -----------------------------------------------------------------

IntSet IntSet::range(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty integer range");
    IntSet s;
    s.kind_ = Kind::Range;
    s.lo_ = lo;
    s.hi_ = hi;
    return s;
}

IntSet IntSet::list(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    IntSet s;
    s.kind_ = Kind::List;
    s.values_ = std::move(values);
    return s;
}

IntSet IntSet::residue(std::uint64_t modulus, std::uint64_t remainder) {
    if (modulus == 0) throw std::invalid_argument("modulus must be positive");
    IntSet s;
    s.kind_ = Kind::Residue;
    s.lo_ = modulus;
    s.hi_ = remainder % modulus;
    return s;
}

IntSet IntSet::parse(std::string_view text) {
    text = trim(text);
    if (text == "all") return all();
    if (text.starts_with("mod:")) {
        const auto parts = split(text.substr(4), ':');
        if (parts.size() != 2) throw std::invalid_argument("expected mod:m:r, got '" + std::string(text) + "'");
        return residue(parse_uint(parts[0], "modulus"), parse_uint(parts[1], "residue"));
    }
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const auto lo = parse_uint(text.substr(0, dots), "range");
        const auto rest = trim(text.substr(dots + 2));
        if (rest.empty()) return range(lo);
        return range(lo, parse_uint(rest, "range"));
    }
    std::vector<std::uint64_t> values;
    for (auto part : split(text, ',')) values.push_back(parse_uint(part, "list"));
    return list(std::move(values));
}

bool IntSet::contains(std::uint64_t v) const noexcept {
    switch (kind_) {
        case Kind::All: return true;
        case Kind::Range: return v >= lo_ && v <= hi_;
        case Kind::List: return std::binary_search(values_.begin(), values_.end(), v);
        case Kind::Residue: return v % lo_ == hi_;
    }
    return false;
}

std::string IntSet::str() const {
    switch (kind_) {
        case Kind::All: return "all";
        case Kind::Range:
            if (hi_ == std::numeric_limits<std::uint64_t>::max()) return std::to_string(lo_) + "..";
            return std::to_string(lo_) + ".." + std::to_string(hi_);
        case Kind::List: {
            std::string out;
            for (auto v : values_) {
                if (!out.empty()) out += ',';
                out += std::to_string(v);
            }
            return out;
        }
        case Kind::Residue: return "mod:" + std::to_string(lo_) + ":" + std::to_string(hi_);
    }
    return {};
}

// --- Relation ---------------------------------------------------------------

Relation Relation::diff_eq(std::uint64_t c) {
    Relation r;
    r.kind_ = Kind::DiffEq;
    r.c_ = c;
    return r;
}

Relation Relation::diff_le(std::uint64_t c) {
    Relation r;
    r.kind_ = Kind::DiffLe;
    r.c_ = c;
    return r;
}

Relation Relation::diff_ge(std::uint64_t c) {
    Relation r;
    r.kind_ = Kind::DiffGe;
    r.c_ = c;
    return r;
}

Relation Relation::diff_mod(std::uint64_t m, std::uint64_t rem) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    Relation r;
    r.kind_ = Kind::DiffMod;
    r.m_ = m;
    r.c_ = rem % m;
    return r;
}

Relation Relation::parse(std::string_view text) {
    text = trim(text);
    if (text == "any") return any();
    if (text == "successor") return successor();
    const auto parts = split(text, ':');
    if (parts.size() == 2 && parts[0] == "diff-eq") return diff_eq(parse_uint(parts[1], "relation"));
    if (parts.size() == 2 && parts[0] == "diff-le") return diff_le(parse_uint(parts[1], "relation"));
    if (parts.size() == 2 && parts[0] == "diff-ge") return diff_ge(parse_uint(parts[1], "relation"));
    if (parts.size() == 3 && parts[0] == "diff-mod") {
        return diff_mod(parse_uint(parts[1], "relation"), parse_uint(parts[2], "relation"));
    }
    throw std::invalid_argument("unknown relation '" + std::string(text) + "'");
}

bool Relation::holds(std::uint64_t k, std::uint64_t l) const noexcept {
    if (k <= l) return false;
    const std::uint64_t d = k - l;
    switch (kind_) {
        case Kind::Any: return true;
        case Kind::DiffEq: return d == c_;
        case Kind::DiffLe: return d <= c_;
        case Kind::DiffGe: return d >= c_;
        case Kind::DiffMod: return d % m_ == c_;
    }
    return false;
}

std::string Relation::str() const {
    switch (kind_) {
        case Kind::Any: return "any";
        case Kind::DiffEq: return c_ == 1 ? "successor" : "diff-eq:" + std::to_string(c_);
        case Kind::DiffLe: return "diff-le:" + std::to_string(c_);
        case Kind::DiffGe: return "diff-ge:" + std::to_string(c_);
        case Kind::DiffMod: return "diff-mod:" + std::to_string(m_) + ":" + std::to_string(c_);
    }
    return {};
}

std::string AdjoinedMove::str() const {
    return "k=" + k_set.str() + ";l=" + l_set.str() + ";rel=" + relation.str();
}

// --- GameRule ---------------------------------------------------------------

GameRule GameRule::e_wythoff() {
    GameRule r(GameId::EWythoff);
    r.adjoined_ = AdjoinedMove{};
    return r;
}

GameRule GameRule::generalized(AdjoinedMove adjoined, std::string label) {
    GameRule r(GameId::GeneralizedE);
    r.adjoined_ = std::move(adjoined);
    r.label_ = std::move(label);
    return r;
}

std::string GameRule::name() const {
    switch (id_) {
        case GameId::Wythoff: return "wythoff";
        case GameId::RWythoff: return "r-wythoff";
        case GameId::EWythoff: return "e-wythoff";
        case GameId::GeneralizedE:
            if (!label_.empty()) return "generalized[" + label_ + "]";
            return "generalized[" + adjoined_->str() + "]";
    }
    return {};
}

std::vector<Position> followers(const GameRule& rule, Position p) {
    std::vector<Position> out;
    rule.for_each_move(p, [&](const Move&, Position q) { out.push_back(q); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<LabeledMove> moves_with_labels(const GameRule& rule, Position p) {
    std::vector<LabeledMove> out;
    rule.for_each_move(p, [&](const Move& m, Position q) { out.push_back({m, q}); });
    return out;
}

Position p_position_formula(std::uint64_t n) { return Position(beatty_a(n), beatty_b(n)); }

std::vector<Position> value1_formula(const GameRule& rule, std::uint64_t n_max) {
    std::vector<Position> out;
    const bool restricted = rule.id() == GameId::RWythoff;
    if (!restricted && rule.id() != GameId::EWythoff) {
        throw std::invalid_argument("no value-1 formula for " + rule.name());
    }
    if (restricted) {
        out.emplace_back(2, 2);
        out.emplace_back(4, 6);
    }
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (restricted && n == 2) continue;
        out.emplace_back(beatty_a(n) - 1, beatty_b(n) - 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Position> value1_formula_within(const GameRule& rule, std::uint64_t bound) {
    // b(n) - 1 >= n, so indices past bound + 1 can never fit.
    std::uint64_t n_max = 0;
    while (n_max <= bound && beatty_b(n_max + 1) - 1 <= bound) ++n_max;
    auto all = value1_formula(rule, n_max);
    std::erase_if(all, [&](const Position& p) { return p.high() > bound; });
    return all;
}

GameRule parse_game(std::string_view text) {
    if (text == "wythoff") return GameRule::wythoff();
    if (text == "r-wythoff") return GameRule::r_wythoff();
    if (text == "e-wythoff") return GameRule::e_wythoff();
    if (text.starts_with("generalized:")) return load_rule_config(std::string(text.substr(12)));
    throw std::invalid_argument("unknown game '" + std::string(text) + "'");
}

GameRule parse_rule_config(std::istream& in) {
    std::map<std::string, std::string, std::less<>> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("rule config line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key(trim(view.substr(0, eq)));
        std::string value(trim(view.substr(eq + 1)));
        if (key != "game" && key != "k_set" && key != "l_set" && key != "relation" && key != "name") {
            throw std::invalid_argument("rule config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        if (!kv.emplace(key, value).second) {
            throw std::invalid_argument("rule config: duplicate key '" + key + "'");
        }
    }
    const auto game = kv.find("game");
    if (game == kv.end()) throw std::invalid_argument("rule config: missing 'game'");
    const bool extra = kv.contains("k_set") || kv.contains("l_set") || kv.contains("relation");
    if (game->second != "generalized-e") {
        if (extra) throw std::invalid_argument("rule config: k_set/l_set/relation need game = generalized-e");
        if (game->second.starts_with("generalized")) throw std::invalid_argument("rule config: bad game");
        return parse_game(game->second);
    }
    AdjoinedMove adjoined;
    if (auto it = kv.find("k_set"); it != kv.end()) adjoined.k_set = IntSet::parse(it->second);
    if (auto it = kv.find("l_set"); it != kv.end()) adjoined.l_set = IntSet::parse(it->second);
    if (auto it = kv.find("relation"); it != kv.end()) adjoined.relation = Relation::parse(it->second);
    std::string label;
    if (auto it = kv.find("name"); it != kv.end()) label = it->second;
    return GameRule::generalized(std::move(adjoined), std::move(label));
}

GameRule load_rule_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open rule config '" + path + "'");
    return parse_rule_config(in);
}

std::string rule_config_text(const GameRule& rule) {
    std::ostringstream out;
    if (rule.id() != GameId::GeneralizedE) {
        out << "game = " << rule.name() << '\n';
        return out.str();
    }
    const auto& adj = *rule.adjoined();
    out << "game = generalized-e\n"
        << "k_set = " << adj.k_set.str() << '\n'
        << "l_set = " << adj.l_set.str() << '\n'
        << "relation = " << adj.relation.str() << '\n';
    if (!rule.label().empty()) out << "name = " << rule.label() << '\n';
    return out.str();
}

}  // namespace wythoff
