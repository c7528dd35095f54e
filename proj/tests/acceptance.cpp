// Acceptance run: one PASS/FAIL line per criterion.
// Usage: wythoff_acceptance [criterion ...]   (default: all of 1..11)

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "wythoff/beatty.hpp"
#include "wythoff/explore.hpp"
#include "wythoff/grundy.hpp"
#include "wythoff/verify.hpp"

using namespace wythoff;

namespace {

constexpr std::uint64_t kTableBound = 2000;
constexpr std::uint64_t kRowBound = 100'000;
constexpr std::uint64_t kRedundancyK = 200;
constexpr std::uint64_t kRowsA = 64;
constexpr std::uint64_t kRowsC = 64;
constexpr std::uint64_t kRowsBudget = 4096;
constexpr std::uint64_t kOracleBound = 200;
constexpr std::uint64_t kBeattyRange = 1'000'000;
constexpr std::uint64_t kClassifyRange = 100'000;
constexpr std::uint64_t kPeriodRows = 30;
constexpr std::uint64_t kPeriodWindow = 20'000;
constexpr std::uint64_t kPerfBound = 4096;
constexpr double kGoldenSeconds = 1.0;
constexpr double kPSeconds = 60.0;
constexpr double kPerfSeconds = 30.0;
constexpr std::uint64_t kPerfBytes = std::uint64_t{1} << 30;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string& what) {
        if (!ok) pass = false;
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string& what) { details.push_back("     " + what); }
};

std::string seconds(double ms) {
    std::ostringstream s;
    s.precision(3);
    s << std::fixed << ms / 1000.0 << " s";
    return s.str();
}

std::string summary(const VerificationReport& r) {
    std::ostringstream s;
    s << r.claim_id << " [" << r.rule << "] " << to_string(r.status);
    if (r.violations != 0) s << ", " << r.violations << " violation(s)";
    if (!r.counterexamples.empty()) {
        const auto& c = r.counterexamples.front();
        s << ", first " << c.position << ": " << c.detail;
    }
    if (r.status == Status::Skipped && !r.notes.empty()) s << " (" << r.notes.front() << ")";
    return s.str();
}

std::vector<GameRule> named_rules() { return {GameRule::wythoff(), GameRule::r_wythoff(), GameRule::e_wythoff()}; }

/// Peak resident set size in bytes, from /proc/self/status.
std::uint64_t peak_rss_bytes() {
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line)) {
        if (line.starts_with("VmHWM:")) return std::stoull(line.substr(6)) * 1024;
    }
    return 0;
}

void reset_peak_rss() {
    std::ofstream clear("/proc/self/clear_refs");
    clear << "5";
}

// --- criteria --------------------------------------------------------------

Outcome golden() {
    Outcome o;
    Stopwatch clock;
    const auto r = verify_golden_tables();
    const double ms = clock.ms();
    o.check(r.status == Status::Pass, summary(r));
    o.check(ms < kGoldenSeconds * 1000, "runtime " + seconds(ms) + " < 1 s");
    return o;
}

Outcome p_positions() {
    Outcome o;
    Stopwatch clock;
    for (const auto& rule : named_rules()) o.check(verify_p_positions(rule, kTableBound).status == Status::Pass,
                                                   "p-positions " + rule.name() + " to 2000");
    const double ms = clock.ms();
    o.check(ms < kPSeconds * 1000, "runtime " + seconds(ms) + " < 60 s");
    return o;
}

Outcome value1() {
    Outcome o;
    for (const auto& rule : {GameRule::r_wythoff(), GameRule::e_wythoff()}) {
        const auto table = build_table(rule, kTableBound);
        o.check(verify_value1(table).status == Status::Pass, summary(verify_value1(table)));
    }
    // R-Wythoff's exceptional members, read from the table independently of the formula
    const auto r = build_table(GameRule::r_wythoff(), 20);
    o.check(r(2, 2) == 1 && r(4, 6) == 1 && r(2, 4) != 1, "R-Wythoff: (2,2), (4,6) have value 1, (2,4) does not");
    return o;
}

Outcome bounds() {
    Outcome o;
    for (const auto& rule : {GameRule::r_wythoff(), GameRule::e_wythoff()}) {
        const auto r = verify_bounds(rule, kTableBound);
        o.check(r.status == Status::Pass, summary(r));
    }
    return o;
}

Outcome small_rows() {
    Outcome o;
    for (const auto& rule : named_rules()) {
        const auto r = verify_small_row_formulas(rule, kRowBound);
        o.check(r.status == Status::Pass, summary(r) + " to b = 100000");
    }
    return o;
}

Outcome redundancy() {
    Outcome o;
    const auto r = verify_no_redundant_moves(kRedundancyK);
    o.check(r.status == Status::Pass, summary(r));

    // Same witnesses, but winning moves taken from a computed table and the
    // move legality read off the rule text.
    const auto rule = GameRule::r_wythoff();
    const auto table = build_table(rule, 4 + 7 + kRedundancyK);
    auto unique_winner = [&](std::uint64_t x, std::uint64_t y, std::uint64_t i, std::uint64_t j) {
        std::set<std::pair<std::uint64_t, std::uint64_t>> winners;
        for (std::uint64_t di = 0; di <= x; ++di) {
            for (std::uint64_t dj = 0; dj <= y; ++dj) {
                if (oracle::legal(rule, x, y, di, dj) && table(x - di, y - dj) == 0) winners.emplace(di, dj);
            }
        }
        return winners.size() == 1 && *winners.begin() == std::make_pair(i, j);
    };
    std::uint64_t bad = 0;
    for (std::uint64_t k = 1; k <= kRedundancyK; ++k) {
        if (!unique_winner(1, 2 + k, 0, k)) ++bad;
        // (a(n)+k, b(n)+k) for whichever n in {2, 3} makes a(n)+k an A-value
        bool found = false;
        for (std::uint64_t n : {2u, 3u}) {
            if (classify(beatty_a(n) + k).kind != BeattyKind::A) continue;
            found = true;
            if (!unique_winner(beatty_a(n) + k, beatty_b(n) + k, k, k)) ++bad;
            break;
        }
        if (!found) ++bad;
    }
    o.check(bad == 0, "table cross-check of both witness families, k <= 200: " + std::to_string(bad) + " bad");
    return o;
}

Outcome rows_and_diagonals() {
    Outcome o;
    for (const auto& rule : {GameRule::r_wythoff(), GameRule::e_wythoff()}) {
        const auto r = verify_row_existence(rule, kRowsA, kRowsC, kRowsBudget);
        // every (a, c) must be found, so Skipped does not count here
        o.check(r.status == Status::Pass, summary(r));
    }
    const auto d = verify_diagonal_uniqueness(kRowsA, kRowsC, kRowsBudget);
    o.check(d.status != Status::Fail, summary(d));
    return o;
}

Outcome naive_oracle() {
    Outcome o;
    for (const auto& rule : named_rules()) {
        const auto table = build_table(rule, kOracleBound);
        oracle::NaiveGrundy naive(rule, kOracleBound);
        std::uint64_t bad = 0;
        for (std::uint64_t a = 0; a <= kOracleBound; ++a) {
            for (std::uint64_t b = a; b <= kOracleBound; ++b) bad += table(a, b) != naive(a, b);
        }
        o.check(bad == 0, rule.name() + " vs naive oracle to 200: " + std::to_string(bad) + " mismatches");
    }
    return o;
}

Outcome beatty() {
    Outcome o;
    std::vector<std::uint8_t> hits(kBeattyRange + 1, 0);
    for (std::uint64_t n = 1; beatty_a(n) <= kBeattyRange; ++n) ++hits[beatty_a(n)];
    for (std::uint64_t n = 1; beatty_b(n) <= kBeattyRange; ++n) ++hits[beatty_b(n)];
    const auto bad = std::count_if(hits.begin() + 1, hits.end(), [](std::uint8_t h) { return h != 1; });
    o.check(bad == 0, "partition of 1..10^6: " + std::to_string(bad) + " values not covered exactly once");

    std::uint64_t trips = 0;
    for (std::uint64_t n = 1; n <= kClassifyRange; ++n) {
        trips += classify(beatty_a(n)) != BeattyClass{BeattyKind::A, n};
        trips += classify(beatty_b(n)) != BeattyClass{BeattyKind::B, n};
    }
    o.check(trips == 0, "classify round trip n <= 10^5: " + std::to_string(trips) + " failures");
    return o;
}

Outcome conjectures() {
    Outcome o;
    const auto upper = check_conjecture_bw_upper2(kTableBound);
    o.check(upper.status == Status::Pass, summary(upper));
    const auto diag = check_conjecture_ew_diagonals(kTableBound);
    o.check(diag.status == Status::Pass, summary(diag));

    for (const auto& rule : {GameRule::r_wythoff(), GameRule::e_wythoff()}) {
        const auto strip = build_strip(rule, kPeriodRows, kPeriodWindow);
        std::vector<std::uint64_t> unstable;
        for (std::uint64_t a = 0; a <= kPeriodRows; ++a) {
            if (!mine_additive_period(strip, a, kPeriodWindow).stable_under_doubling) unstable.push_back(a);
        }
        std::string rows;
        for (auto a : unstable) rows += (rows.empty() ? "" : ",") + std::to_string(a);
        o.check(unstable.empty(), rule.name() + " rows 0..30 stable periods at b_max 20000" +
                                      (unstable.empty() ? std::string() : "; unstable rows " + rows));
    }
    return o;
}

Outcome performance() {
    Outcome o;
    reset_peak_rss();
    const auto rule = GameRule::r_wythoff();
    Stopwatch clock;
    const auto seq = build_table(rule, kPerfBound, {BuildOrder::RowMajor, 1});
    const double ms = clock.ms();
    const std::uint64_t rss = peak_rss_bytes();
    o.check(ms < kPerfSeconds * 1000, "sequential build at 4096: " + seconds(ms) + " < 30 s");
    o.check(rss != 0 && rss < kPerfBytes, "peak RSS " + std::to_string(rss >> 20) + " MiB < 1024 MiB");

    Stopwatch wave_clock;
    const auto wave = build_table(rule, kPerfBound, {BuildOrder::Wavefront, std::max(2u, default_thread_count())});
    o.note("wavefront build: " + seconds(wave_clock.ms()));
    o.check(wave == seq, "wavefront table equals sequential table");
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all = {
        {1, "golden tables", golden},
        {2, "P-positions to 2000", p_positions},
        {3, "Grundy-value-1 sets to 2000", value1},
        {4, "lower and upper bounds to 2000", bounds},
        {5, "small-row closed forms to 10^5", small_rows},
        {6, "no redundant moves, k <= 200", redundancy},
        {7, "row existence and diagonal uniqueness", rows_and_diagonals},
        {8, "engine equals naive oracle to 200", naive_oracle},
        {9, "Beatty complementarity and classify", beatty},
        {10, "conjecture exploration", conjectures},
        {11, "R-Wythoff table at 4096", performance},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) {
        try {
            wanted.insert(std::stoi(argv[i]));
        } catch (const std::exception&) {
            std::cerr << "usage: wythoff_acceptance [criterion ...]\n";
            return 2;
        }
    }
    bool ok = true;
    for (const auto& c : all) {
        if (!wanted.empty() && !wanted.contains(c.id)) continue;
        Stopwatch clock;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        ok &= o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << seconds(clock.ms())
                  << ")\n";
        for (const auto& d : o.details) std::cout << "       " << d << '\n';
        std::cout.flush();
    }
    return ok ? 0 : 1;
}
