#include "wythoff/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "wythoff/beatty.hpp"
#include "wythoff/explore.hpp"
#include "wythoff/verify.hpp"

namespace wythoff::cli {

namespace {

/// Signals a bad flag combination or value; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Ascii, Csv, Json };

struct CliConfig {
    std::vector<std::string> games;
    std::optional<std::uint64_t> max;
    std::optional<std::uint64_t> row;
    std::optional<std::uint64_t> row_max;
    std::optional<std::uint64_t> max_b;
    std::uint64_t k_max = 200;
    std::optional<std::uint64_t> a_max;
    std::optional<std::uint64_t> c_max;
    std::optional<std::uint64_t> b_budget;
    Format format = Format::Ascii;
    std::string out_path;
    bool yes = false;
    std::string position;
    std::string value;
    std::string suite;
    std::string conjecture;
};

std::size_t digits(std::uint64_t v) { return std::to_string(v).size(); }

std::uint64_t parse_count(std::string_view text, std::string_view what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return v;
}

Position parse_position(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("position must look like a,b");
    return Position(parse_count(std::string_view(text).substr(0, comma), "position"),
                    parse_count(std::string_view(text).substr(comma + 1), "position"));
}

GameRule game_or_throw(const std::string& text) {
    try {
        return parse_game(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

GameRule single_game(const CliConfig& cfg) {
    if (cfg.games.size() != 1) throw UsageError("exactly one --game is required");
    return game_or_throw(cfg.games.front());
}

std::vector<GameRule> games_or(const CliConfig& cfg, std::vector<GameRule> fallback) {
    if (cfg.games.empty()) return fallback;
    std::vector<GameRule> out;
    for (const auto& g : cfg.games) out.push_back(game_or_throw(g));
    return out;
}

void confirm_size(const CliConfig& cfg, std::uint64_t bound, std::ostream& err) {
    const std::uint64_t bytes = estimate_table_bytes(bound);
    if (bytes > kConfirmBytes && !cfg.yes) {
        std::ostringstream msg;
        msg << "a table to " << bound << " needs about " << (bytes >> 20) << " MiB; rerun with --yes to proceed";
        err << msg.str() << '\n';
        throw UsageError("size confirmation required");
    }
}

GrundyTable build_full(const GameRule& rule, std::uint64_t bound) {
    BuildOptions options;
    options.threads = default_thread_count();
    options.order = options.threads > 1 ? BuildOrder::Wavefront : BuildOrder::RowMajor;
    return build_table(rule, bound, options);
}

/// Collects reports in arrival order and renders them as text or one JSON array.
class ReportSink {
public:
    explicit ReportSink(Format format) : format_(format) {}

    void add(const VerificationReport& r) {
        failed_ |= r.status == Status::Fail;
        push(to_json(r), to_text(r));
    }
    void add(const PeriodReport& r) { push(to_json(r), to_text(r)); }
    void add(const SurveyReport& r) { push(to_json(r), to_text(r)); }

    bool failed() const noexcept { return failed_; }

    std::string render() const {
        if (format_ == Format::Json) return json_.dump(2) + "\n";
        return text_;
    }

private:
    void push(nlohmann::json j, const std::string& text) {
        json_.push_back(std::move(j));
        text_ += text;
    }

    Format format_;
    bool failed_ = false;
    nlohmann::json json_ = nlohmann::json::array();
    std::string text_;
};

void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + cfg.out_path + "'");
    file << text;
}

Format report_format(const CliConfig& cfg) {
    if (cfg.format == Format::Csv) throw UsageError("reports support --format ascii or json");
    return cfg.format;
}

// --- subcommands ---------------------------------------------------------------

int cmd_table(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const GameRule rule = single_game(cfg);
    if (!cfg.max) throw UsageError("table needs --max");
    confirm_size(cfg, *cfg.max, err);
    const GrundyTable table = build_full(rule, *cfg.max);
    std::ostringstream text;
    switch (cfg.format) {
        case Format::Ascii: text << render_ascii(table); break;
        case Format::Csv: write_csv(text, table, true); break;
        case Format::Json: {
            nlohmann::json j;
            j["game"] = rule.name();
            j["max"] = table.bound();
            auto cells = nlohmann::json::array();
            for (std::uint64_t a = 0; a <= table.bound(); ++a) {
                for (std::uint64_t b = 0; b <= table.bound(); ++b) cells.push_back({a, b, table(a, b)});
            }
            j["cells"] = std::move(cells);
            text << j.dump() << '\n';
            break;
        }
    }
    emit(cfg, text.str(), out);
    return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> suites = {"p-positions", "value1",    "golden",   "bounds",    "rows",
                                                    "row-existence", "diagonal", "redundancy", "all"};
    if (std::find(suites.begin(), suites.end(), cfg.suite) == suites.end()) {
        throw UsageError("unknown suite '" + cfg.suite + "'");
    }
    ReportSink sink(report_format(cfg));
    const std::string& s = cfg.suite;
    const bool all = s == "all";
    const std::uint64_t max = cfg.max.value_or(200);
    const auto rules = games_or(cfg, {GameRule::wythoff(), GameRule::r_wythoff(), GameRule::e_wythoff()});

    if (s == "golden" || all) sink.add(verify_golden_tables());
    if (s == "redundancy" || (all && std::any_of(rules.begin(), rules.end(), [](const GameRule& r) {
                                  return r.id() == GameId::RWythoff;
                              }))) {
        sink.add(verify_no_redundant_moves(cfg.k_max));
    }
    for (const auto& rule : rules) {
        const bool named = rule.id() == GameId::RWythoff || rule.id() == GameId::EWythoff;
        if (s == "p-positions" || s == "value1" || s == "bounds" || all) {
            confirm_size(cfg, max, err);
            const GrundyTable table = build_full(rule, max);
            if (s == "p-positions" || all) sink.add(verify_p_positions(table));
            if (s == "value1" || (all && named)) {
                if (!named) throw UsageError("value1 needs --game r-wythoff or e-wythoff");
                sink.add(verify_value1(table));
            }
            if (s == "bounds" || (all && named)) sink.add(verify_bounds(table));
        }
        if (s == "rows" || all) sink.add(verify_small_row_formulas(rule, cfg.max_b.value_or(max)));
        if (s == "row-existence" || all) {
            const std::uint64_t a_max = cfg.a_max.value_or(std::min<std::uint64_t>(16, max));
            sink.add(verify_row_existence(rule, a_max, cfg.c_max.value_or(16), cfg.b_budget.value_or(max)));
        }
        if (s == "diagonal" || (all && rule.id() == GameId::RWythoff)) {
            if (rule.id() != GameId::RWythoff) throw UsageError("diagonal needs --game r-wythoff");
            const std::uint64_t a_max = cfg.a_max.value_or(std::min<std::uint64_t>(16, max));
            const std::uint64_t budget = cfg.b_budget.value_or(max - a_max);
            confirm_size(cfg, a_max + budget, err);
            sink.add(verify_diagonal_uniqueness(a_max, cfg.c_max.value_or(16), budget));
        }
        if (s == "redundancy" || s == "golden") break;
    }
    emit(cfg, sink.render(), out);
    return sink.failed() ? kExitFail : kExitOk;
}

int cmd_conjecture(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string& name = cfg.conjecture;
    ReportSink sink(report_format(cfg));
    if (name == "additive-period") {
        const GameRule rule = cfg.games.empty() ? GameRule::r_wythoff() : single_game(cfg);
        const std::uint64_t b_max = cfg.max_b.value_or(1000);
        if (b_max < 4) throw UsageError("--max-b must be at least 4");
        std::uint64_t first = 0;
        std::uint64_t last = 0;
        if (cfg.row) {
            first = last = *cfg.row;
        } else if (cfg.row_max) {
            last = *cfg.row_max;
        } else {
            throw UsageError("additive-period needs --row or --row-max");
        }
        const GrundyTable strip = build_strip(rule, last, std::max(last, b_max));
        for (std::uint64_t a = first; a <= last; ++a) sink.add(mine_additive_period(strip, a, b_max));
    } else if (name == "bw-upper2") {
        const std::uint64_t max = cfg.max.value_or(200);
        confirm_size(cfg, max, err);
        sink.add(check_conjecture_bw_upper2(build_full(GameRule::r_wythoff(), max)));
    } else if (name == "ew-diagonals") {
        const std::uint64_t max = cfg.max.value_or(200);
        confirm_size(cfg, max, err);
        sink.add(check_conjecture_ew_diagonals(build_full(GameRule::e_wythoff(), max)));
    } else if (name == "survey-value1") {
        const std::uint64_t max = cfg.max.value_or(9);
        confirm_size(cfg, max, err);
        AdjoinedMove successor{IntSet::range(1), IntSet::range(1), Relation::successor()};
        const auto rules = games_or(cfg, {GameRule::wythoff(), GameRule::r_wythoff(), GameRule::e_wythoff(),
                                          GameRule::generalized(successor, "successor")});
        for (const auto& r : survey_value1_variants(rules, max)) sink.add(r);
    } else {
        throw UsageError("unknown conjecture '" + name + "'");
    }
    emit(cfg, sink.render(), out);
    return sink.failed() ? kExitFail : kExitOk;
}

int cmd_classify(const CliConfig& cfg, std::ostream& out) {
    if (cfg.value.starts_with('-')) throw UsageError("value must be a positive integer");
    const std::uint64_t v = parse_count(cfg.value, "value");
    if (v < 1) throw UsageError("value must be a positive integer");
    BeattyClass c{};
    try {
        c = classify(v);
    } catch (const std::range_error& e) {
        throw UsageError(e.what());
    }
    const Position p = p_position_formula(c.index);
    std::ostringstream text;
    if (cfg.format == Format::Json) {
        nlohmann::json j{{"value", v},
                         {"kind", std::string(to_string(c.kind))},
                         {"index", c.index},
                         {"p_position", {p.low(), p.high()}}};
        text << j.dump() << '\n';
    } else {
        text << v << ": " << to_string(c.kind) << ", n=" << c.index << ", P-position " << p << '\n';
    }
    emit(cfg, text.str(), out);
    return kExitOk;
}

int cmd_best_move(const CliConfig& cfg, std::ostream& out) {
    const GameRule rule = single_game(cfg);
    const Position p = parse_position(cfg.position);
    const auto moves = winning_moves(rule, p);
    std::ostringstream text;
    if (cfg.format == Format::Json) {
        nlohmann::json j;
        j["game"] = rule.name();
        j["position"] = {p.low(), p.high()};
        j["p_position"] = moves.empty();
        auto arr = nlohmann::json::array();
        for (const auto& m : moves) {
            arr.push_back({{"kind", std::string(to_string(m.move.kind))},
                           {"take_low", m.move.take_low},
                           {"take_high", m.move.take_high},
                           {"result", {m.result.low(), m.result.high()}}});
        }
        j["moves"] = std::move(arr);
        text << j.dump() << '\n';
    } else if (moves.empty()) {
        text << rule.name() << ' ' << p << ": P-position: no winning move\n";
    } else {
        text << rule.name() << ' ' << p << ": " << moves.size() << " winning move(s)\n";
        for (const auto& m : moves) text << "  " << m.move.describe() << " -> " << m.result << '\n';
    }
    emit(cfg, text.str(), out);
    return kExitOk;
}

}  // namespace

std::string render_ascii(const GrundyTable& table) {
    const std::uint64_t n = table.bound();
    Grundy top = 0;
    for (std::uint64_t a = 0; a <= n; ++a) {
        for (std::uint64_t b = a; b <= n; ++b) top = std::max(top, table(a, b));
    }
    const auto cell = static_cast<int>(std::max(digits(top), digits(n)) + 1);
    const auto label = static_cast<int>(std::max<std::size_t>(3, digits(n)));
    std::ostringstream out;
    for (std::uint64_t a = n + 1; a-- > 0;) {
        out << std::setw(label) << a << " |";
        for (std::uint64_t b = 0; b <= n; ++b) out << std::setw(cell) << table(a, b);
        out << '\n';
    }
    out << std::string(static_cast<std::size_t>(label + 1), '-') << '+'
        << std::string(static_cast<std::size_t>(cell) * (n + 1), '-') << '\n';
    out << std::setw(label) << "a/b" << " |";
    for (std::uint64_t b = 0; b <= n; ++b) out << std::setw(cell) << b;
    out << '\n';
    return out.str();
}

std::vector<std::vector<Grundy>> parse_ascii(const std::string& text) {
    std::vector<std::pair<std::uint64_t, std::vector<Grundy>>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto bar = line.find('|');
        if (bar == std::string::npos) continue;
        std::istringstream head(line.substr(0, bar));
        std::string label;
        head >> label;
        if (label == "a/b") continue;
        std::istringstream body(line.substr(bar + 1));
        std::vector<Grundy> values;
        for (Grundy g; body >> g;) values.push_back(g);
        rows.emplace_back(parse_count(label, "row label"), std::move(values));
    }
    std::vector<std::vector<Grundy>> grid(rows.size());
    for (auto& [a, values] : rows) {
        if (a >= grid.size() || values.size() != rows.size()) throw std::invalid_argument("malformed ascii table");
        grid[a] = std::move(values);
    }
    return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sprague-Grundy tables and checks for Wythoff's game and its R/E variants", "wythoff"};
    app.require_subcommand(1);
    CliConfig cfg;

    const std::map<std::string, Format> formats{{"ascii", Format::Ascii}, {"csv", Format::Csv}, {"json", Format::Json}};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "ascii, csv or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", cfg.out_path, "write output to PATH instead of stdout");
    };
    auto add_game = [&](CLI::App* sub) {
        sub->add_option("--game", cfg.games, "wythoff | r-wythoff | e-wythoff | generalized:<path>");
    };

    auto* table = app.add_subcommand("table", "print the Grundy table for 0 <= a, b <= max");
    add_game(table);
    add_common(table);
    table->add_option("--max", cfg.max, "largest pile size");
    table->add_flag("--yes", cfg.yes, "allow very large tables");

    auto* verify = app.add_subcommand("verify", "run exhaustive checks");
    verify->add_option("suite", cfg.suite,
                       "p-positions | value1 | golden | bounds | rows | row-existence | diagonal | redundancy | all")
        ->required();
    add_game(verify);
    add_common(verify);
    verify->add_option("--max", cfg.max, "table bound (default 200)");
    verify->add_option("--max-b", cfg.max_b, "column bound for the small-row checks");
    verify->add_option("--k-max", cfg.k_max, "largest k for the redundancy check (default 200)");
    verify->add_option("--a-max", cfg.a_max, "rows / diagonal offsets to scan");
    verify->add_option("--c-max", cfg.c_max, "largest value to look for (default 16)");
    verify->add_option("--b-budget", cfg.b_budget, "search budget along each row or diagonal");
    verify->add_flag("--yes", cfg.yes, "allow very large tables");

    auto* conj = app.add_subcommand("conjecture", "explore conjectured properties");
    conj->add_option("name", cfg.conjecture, "additive-period | bw-upper2 | ew-diagonals | survey-value1")
        ->required();
    add_game(conj);
    add_common(conj);
    conj->add_option("--max", cfg.max, "table bound");
    conj->add_option("--row", cfg.row, "row to mine");
    conj->add_option("--row-max", cfg.row_max, "mine rows 0..R");
    conj->add_option("--max-b", cfg.max_b, "mining window (default 1000)");
    conj->add_flag("--yes", cfg.yes, "allow very large tables");

    auto* cls = app.add_subcommand("classify", "place a positive integer in the floor(n phi) / floor(n phi^2) split");
    cls->add_option("value", cfg.value, "positive integer")->required();
    add_common(cls);

    auto* best = app.add_subcommand("best-move", "list the winning moves from a position");
    add_game(best);
    add_common(best);
    best->add_option("--position", cfg.position, "a,b")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (conj->parsed()) return cmd_conjecture(cfg, out, err);
        if (cls->parsed()) return cmd_classify(cfg, out);
        if (best->parsed()) return cmd_best_move(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace wythoff::cli
