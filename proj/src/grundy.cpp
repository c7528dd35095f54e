#include "wythoff/grundy.hpp"

#include <algorithm>
#include <barrier>
#include <bit>
#include <cstdlib>
#include <new>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "wythoff/beatty.hpp"

namespace wythoff {

namespace {

constexpr std::uint64_t kAllOnes = ~std::uint64_t{0};

std::size_t words_for(std::uint64_t bits) { return static_cast<std::size_t>((bits + 63) / 64); }

/// Fixed-width bitset over Grundy values; width set once at construction.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t words) : w_(words, 0) {}

    void set(std::uint64_t v) noexcept { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset() noexcept { std::fill(w_.begin(), w_.end(), 0); }
    std::uint64_t* data() noexcept { return w_.data(); }
    const std::uint64_t* data() const noexcept { return w_.data(); }
    std::size_t size() const noexcept { return w_.size(); }

private:
    std::vector<std::uint64_t> w_;
};

/// Bits of values already seen along one row, plus the first word that may
/// still hold a zero. Rows only gain bits, so the mark never moves back.
struct RowBits {
    Bits bits;
    std::size_t fill = 0;

    std::size_t first_open_word() noexcept {
        const auto* w = bits.data();
        while (w[fill] == kAllOnes) ++fill;
        return fill;
    }
};

std::uint64_t first_zero(std::uint64_t word) noexcept {
    return static_cast<std::uint64_t>(std::countr_zero(~word));
}

}  // namespace

// --- mex ---------------------------------------------------------------------

Grundy mex(std::span<const Grundy> values) {
    std::vector<bool> seen(values.size() + 1, false);
    for (Grundy v : values) {
        if (v < seen.size()) seen[v] = true;
    }
    Grundy m = 0;
    while (seen[m]) ++m;
    return m;
}

void MexScratch::mark(std::uint64_t v) {
    if (v >= present_.size()) present_.resize(std::max<std::size_t>(v + 1, 2 * present_.size()), 0);
    if (!present_[v]) {
        present_[v] = 1;
        touched_.push_back(v);
    }
}

std::uint64_t MexScratch::take_mex() {
    std::uint64_t m = 0;
    while (m < present_.size() && present_[m]) ++m;
    for (auto v : touched_) present_[v] = 0;
    touched_.clear();
    return m;
}

// --- table -------------------------------------------------------------------

GrundyTable::GrundyTable(GameRule rule, std::uint64_t rows, std::uint64_t bound)
    : rule_(std::move(rule)), rows_(rows), bound_(bound) {
    if (rows > bound) throw std::invalid_argument("strip rows exceed bound");
    const std::uint64_t cells = (rows + 1) * (bound + 1) - rows * (rows + 1) / 2;
    try {
        values_.assign(static_cast<std::size_t>(cells), 0);
    } catch (const std::bad_alloc&) {
        throw std::length_error("cannot allocate Grundy table for bound " + std::to_string(bound) + " (" +
                                std::to_string(cells) + " cells)");
    }
}

Grundy GrundyTable::at(Position p) const {
    if (!contains(p)) {
        throw std::out_of_range("position " + p.str() + " outside table (rows " + std::to_string(rows_) +
                                ", bound " + std::to_string(bound_) + ")");
    }
    return values_[index(p.low(), p.high())];
}

std::vector<Grundy> GrundyTable::row(std::uint64_t a) const {
    if (a > rows_) throw std::out_of_range("row " + std::to_string(a) + " outside table");
    std::vector<Grundy> out;
    out.reserve(static_cast<std::size_t>(bound_ + 1));
    for (std::uint64_t i = 0; i < a; ++i) out.push_back(values_[index(i, a)]);
    const std::size_t base = offset(a);
    out.insert(out.end(), values_.begin() + static_cast<std::ptrdiff_t>(base),
               values_.begin() + static_cast<std::ptrdiff_t>(base + (bound_ - a + 1)));
    return out;
}

// --- builders ----------------------------------------------------------------

unsigned default_thread_count() {
    if (const char* env = std::getenv("WYTHOFF_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256ul));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t estimate_table_bytes(std::uint64_t bound) {
    const std::uint64_t cells = (bound + 1) * (bound + 2) / 2;
    const std::uint64_t bitset_bytes = (bound + 1) * words_for(2 * bound + 2) * 8;
    // column, diagonal and (wavefront) row bitsets
    return cells * sizeof(Grundy) + 3 * bitset_bytes;
}

/// Fills tables. Dense kernel state for cell (a, b), d = b - a:
///   row[a]  values g(a, y), y < b        (single-pile moves on the larger pile)
///   col[b]  values g(x, b), x < a        (single-pile moves on the smaller pile)
///   diag[d] values g(x, x + d), x < a    (equal removal)
/// For the extension the diagonal set is widened to the whole region
/// {(x, y) : x < a, x + d <= y <= b}, which only grows along a diagonal:
/// stepping to (a, b) adds column b below row a and the previous diagonal cell.
class TableBuilder {
public:
    static GrundyTable dense(const GameRule& rule, std::uint64_t bound, const BuildOptions& options) {
        GrundyTable table(rule, bound, bound);
        TableBuilder builder(table, rule.id());
        try {
            if (options.order == BuildOrder::RowMajor) {
                builder.run_row_major();
            } else {
                const unsigned threads = options.threads ? options.threads : default_thread_count();
                builder.run_wavefront(threads);
            }
        } catch (const std::bad_alloc&) {
            throw std::length_error("out of memory building table for bound " + std::to_string(bound));
        }
        return table;
    }

    static GrundyTable strip(const GameRule& rule, std::uint64_t rows, std::uint64_t bound) {
        GrundyTable table(rule, rows, bound);
        auto& g = table.values_;
        const std::size_t words = words_for(rows + bound + 2);
        RowBits row;
        Bits scratch(words);
        std::vector<std::size_t> touched;
        for (std::uint64_t a = 0; a <= rows; ++a) {
            row.bits = Bits(words);
            row.fill = 0;
            for (std::uint64_t y = 0; y < a; ++y) row.bits.set(g[table.index(y, a)]);
            for (std::uint64_t b = a; b <= bound; ++b) {
                auto* s = scratch.data();
                rule.for_each_cross_follower(Position(a, b), [&](Position q) {
                    const Grundy v = g[table.index(q.low(), q.high())];
                    const std::size_t w = v >> 6;
                    if (s[w] == 0) touched.push_back(w);
                    s[w] |= std::uint64_t{1} << (v & 63);
                });
                const auto* r = row.bits.data();
                std::size_t w = row.first_open_word();
                while ((r[w] | s[w]) == kAllOnes) ++w;
                const auto value = static_cast<Grundy>(w * 64 + first_zero(r[w] | s[w]));
                for (auto t : touched) s[t] = 0;
                touched.clear();
                g[table.index(a, b)] = value;
                row.bits.set(value);
            }
        }
        return table;
    }

private:
    TableBuilder(GrundyTable& table, GameId id)
        : table_(table), id_(id), bound_(table.bound()), words_(words_for(2 * table.bound() + 2)) {
        diag_.assign(static_cast<std::size_t>(bound_ + 1), Bits(words_));
        if (id_ != GameId::RWythoff) col_.assign(static_cast<std::size_t>(bound_ + 1), Bits(words_));
    }

    void start_row(RowBits& row, std::uint64_t a) {
        row.bits.reset();
        row.fill = 0;
        for (std::uint64_t y = 0; y < a; ++y) row.bits.set(table_.values_[table_.index(y, a)]);
    }

    void cell(RowBits& row, std::uint64_t a, std::uint64_t b) {
        const std::uint64_t d = b - a;
        auto* dg = diag_[d].data();
        const auto* r = row.bits.data();
        std::size_t w = row.first_open_word();
        Grundy value = 0;
        switch (id_) {
            case GameId::RWythoff: {
                while ((r[w] | dg[w]) == kAllOnes) ++w;
                value = static_cast<Grundy>(w * 64 + first_zero(r[w] | dg[w]));
                break;
            }
            case GameId::Wythoff: {
                const auto* c = col_[b].data();
                while ((r[w] | dg[w] | c[w]) == kAllOnes) ++w;
                value = static_cast<Grundy>(w * 64 + first_zero(r[w] | dg[w] | c[w]));
                break;
            }
            default: {
                // Column b only holds values <= 2b.
                const auto* c = col_[b].data();
                const std::size_t used = std::min(words_, words_for(2 * b + 1));
                for (std::size_t i = 0; i < used; ++i) dg[i] |= c[i];
                while ((r[w] | dg[w]) == kAllOnes) ++w;
                value = static_cast<Grundy>(w * 64 + first_zero(r[w] | dg[w]));
                break;
            }
        }
        table_.values_[table_.index(a, b)] = value;
        row.bits.set(value);
        diag_[d].set(value);
        if (id_ != GameId::RWythoff && a < b) col_[b].set(value);
    }

    void run_row_major() {
        RowBits row;
        row.bits = Bits(words_);
        for (std::uint64_t a = 0; a <= bound_; ++a) {
            start_row(row, a);
            for (std::uint64_t b = a; b <= bound_; ++b) cell(row, a, b);
        }
    }

    void run_wavefront(unsigned threads) {
        std::vector<RowBits> rows(static_cast<std::size_t>(bound_ + 1));
        for (auto& r : rows) r.bits = Bits(words_);
        // Antidiagonal s holds cells (a, s - a) for max(0, s - bound) <= a <= s / 2.
        auto sweep = [&](std::uint64_t s, unsigned lane, unsigned lanes) {
            const std::uint64_t first = s > bound_ ? s - bound_ : 0;
            for (std::uint64_t a = first + lane; a <= s / 2; a += lanes) {
                const std::uint64_t b = s - a;
                if (a == b) start_row(rows[a], a);
                cell(rows[a], a, b);
            }
        };
        const std::uint64_t last = 2 * bound_;
        if (threads <= 1) {
            for (std::uint64_t s = 0; s <= last; ++s) sweep(s, 0, 1);
            return;
        }
        std::barrier sync(static_cast<std::ptrdiff_t>(threads));
        auto worker = [&](unsigned lane) {
            for (std::uint64_t s = 0; s <= last; ++s) {
                sweep(s, lane, threads);
                sync.arrive_and_wait();
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
        worker(0);
    }

    GrundyTable& table_;
    GameId id_;
    std::uint64_t bound_;
    std::size_t words_;
    std::vector<Bits> diag_;
    std::vector<Bits> col_;
};

GrundyTable build_table(const GameRule& rule, std::uint64_t bound, BuildOptions options) {
    if (!rule.is_named()) return TableBuilder::strip(rule, bound, bound);
    return TableBuilder::dense(rule, bound, options);
}

GrundyTable build_strip(const GameRule& rule, std::uint64_t rows, std::uint64_t bound) {
    return TableBuilder::strip(rule, std::min(rows, bound), bound);
}

// --- strategy ----------------------------------------------------------------

bool is_p_position_oracle(Position p) {
    if (p.low() == 0) return p.high() == 0;
    const BeattyClass c = classify(p.low());
    return c.kind == BeattyKind::A && p.high() == beatty_b(c.index);
}

std::vector<LabeledMove> winning_moves(const GameRule& rule, Position p) {
    std::vector<LabeledMove> out;
    rule.for_each_move(p, [&](const Move& m, Position q) {
        if (is_p_position_oracle(q)) out.push_back({m, q});
    });
    return out;
}

void write_csv(std::ostream& out, const GrundyTable& table, bool both_orders) {
    out << "a,b,g\n";
    for (std::uint64_t a = 0; a <= table.rows(); ++a) {
        for (std::uint64_t b = both_orders ? 0 : a; b <= table.bound(); ++b) {
            out << a << ',' << b << ',' << table(a, b) << '\n';
        }
    }
}

}  // namespace wythoff
