#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "wythoff/cli.hpp"
#include "wythoff/verify.hpp"

using namespace wythoff;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

using Cell = std::tuple<std::uint64_t, std::uint64_t, Grundy>;

std::vector<Cell> csv_cells(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "a,b,g");
    std::vector<Cell> cells;
    while (std::getline(in, line)) {
        std::uint64_t a = 0;
        std::uint64_t b = 0;
        Grundy g = 0;
        char c1 = 0;
        char c2 = 0;
        std::istringstream row(line);
        row >> a >> c1 >> b >> c2 >> g;
        REQUIRE((c1 == ',' && c2 == ','));
        cells.emplace_back(a, b, g);
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace

TEST_CASE("table ascii matches the R-Wythoff reference table") {
    const auto r = run_cli({"table", "--game", "r-wythoff", "--max", "9", "--format", "ascii"});
    REQUIRE(r.code == cli::kExitOk);
    const auto grid = cli::parse_ascii(r.out);
    REQUIRE(grid.size() == 10);
    for (const auto& e : golden_fixture(GameId::RWythoff)) CHECK(grid[e.a][e.b] == e.g);
    // highest row first, b across
    CHECK(r.out.starts_with("  9 |"));
}

TEST_CASE("table csv") {
    const auto r = run_cli({"table", "--game", "e-wythoff", "--max", "9", "--format", "csv"});
    REQUIRE(r.code == cli::kExitOk);
    const auto cells = csv_cells(r.out);
    CHECK(cells.size() == 100);
    CHECK(cells.back() == Cell{9, 9, 18});

    const auto zero = run_cli({"table", "--game", "wythoff", "--max", "0", "--format", "csv"});
    CHECK(zero.out == "a,b,g\n0,0,0\n");
}

TEST_CASE("ascii, csv and json agree") {
    for (const char* game : {"wythoff", "r-wythoff", "e-wythoff"}) {
        for (const char* max : {"0", "7", "20"}) {
            const auto csv = csv_cells(run_cli({"table", "--game", game, "--max", max, "--format", "csv"}).out);
            const auto js = nlohmann::json::parse(run_cli({"table", "--game", game, "--max", max, "--format", "json"}).out);
            std::vector<Cell> from_json;
            for (const auto& c : js["cells"]) from_json.emplace_back(c[0], c[1], c[2]);
            std::sort(from_json.begin(), from_json.end());
            CHECK(from_json == csv);

            const auto grid = cli::parse_ascii(run_cli({"table", "--game", game, "--max", max}).out);
            std::vector<Cell> from_ascii;
            for (std::uint64_t a = 0; a < grid.size(); ++a) {
                for (std::uint64_t b = 0; b < grid[a].size(); ++b) from_ascii.emplace_back(a, b, grid[a][b]);
            }
            CHECK(from_ascii == csv);
        }
    }
}

TEST_CASE("table writes to --out") {
    const auto path = std::filesystem::temp_directory_path() / "wythoff_cli_test.csv";
    const auto r = run_cli({"table", "--game", "r-wythoff", "--max", "3", "--format", "csv", "--out", path.string()});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(csv_cells(text.str()).size() == 16);
    std::filesystem::remove(path);
}

TEST_CASE("table usage errors") {
    CHECK(run_cli({"table", "--game", "r-wythoff"}).code == cli::kExitUsage);
    CHECK(run_cli({"table", "--max", "5"}).code == cli::kExitUsage);
    CHECK(run_cli({"table", "--game", "go", "--max", "5"}).code == cli::kExitUsage);
    CHECK(run_cli({"table", "--game", "wythoff", "--max", "5", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(run_cli({}).code == cli::kExitUsage);
}

TEST_CASE("large tables need --yes") {
    const auto r = run_cli({"table", "--game", "wythoff", "--max", "40000"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("--yes") != std::string::npos);
    CHECK(r.err.find("MiB") != std::string::npos);
}

TEST_CASE("verify") {
    auto r = run_cli({"verify", "golden"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("[pass] golden-tables") != std::string::npos);

    r = run_cli({"verify", "all", "--game", "r-wythoff", "--max", "500"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("[fail]") == std::string::npos);

    r = run_cli({"verify", "redundancy", "--k-max", "200"});
    CHECK(r.code == cli::kExitOk);

    r = run_cli({"verify", "p-positions", "--max", "100", "--format", "json"});
    CHECK(r.code == cli::kExitOk);
    const auto js = nlohmann::json::parse(r.out);
    REQUIRE(js.is_array());
    CHECK(js.size() == 3);
    for (const auto& rep : js) CHECK(rep["status"] == "pass");

    CHECK(run_cli({"verify", "nonsense"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "value1", "--game", "wythoff"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "golden", "--format", "csv"}).code == cli::kExitUsage);
}

TEST_CASE("verify with a generalized rule file") {
    const std::string path = std::string(WYTHOFF_PRESET_DIR) + "/successor.cfg";
    const auto r = run_cli({"verify", "p-positions", "--game", "generalized:" + path, "--max", "80"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("generalized[successor]") != std::string::npos);
    CHECK(run_cli({"verify", "p-positions", "--game", "generalized:/no/such.cfg"}).code == cli::kExitUsage);
}

TEST_CASE("conjecture") {
    auto r = run_cli({"conjecture", "additive-period", "--game", "r-wythoff", "--row", "3", "--max-b", "100000"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("p=4") != std::string::npos);

    r = run_cli({"conjecture", "additive-period", "--game", "e-wythoff", "--row", "0", "--max-b", "100", "--format",
                 "json"});
    const auto js = nlohmann::json::parse(r.out);
    CHECK(js[0]["period"] == 1);
    CHECK(js[0]["preperiod"] == 0);

    CHECK(run_cli({"conjecture", "bw-upper2", "--max", "300"}).code == cli::kExitOk);
    CHECK(run_cli({"conjecture", "ew-diagonals", "--max", "30"}).code == cli::kExitOk);
    // refuted at (35,107)
    CHECK(run_cli({"conjecture", "ew-diagonals", "--max", "110"}).code == cli::kExitFail);
    CHECK(run_cli({"conjecture", "survey-value1"}).code == cli::kExitOk);
    CHECK(run_cli({"conjecture", "additive-period"}).code == cli::kExitUsage);
    CHECK(run_cli({"conjecture", "nonsense"}).code == cli::kExitUsage);
}

TEST_CASE("classify") {
    CHECK(run_cli({"classify", "4"}).out == "4: A, n=3, P-position (4,7)\n");
    CHECK(run_cli({"classify", "5"}).out == "5: B, n=2, P-position (3,5)\n");
    CHECK(run_cli({"classify", "1"}).out == "1: A, n=1, P-position (1,2)\n");
    const auto js = nlohmann::json::parse(run_cli({"classify", "7", "--format", "json"}).out);
    CHECK(js["kind"] == "B");
    CHECK(js["index"] == 3);
    CHECK(run_cli({"classify", "0"}).code == cli::kExitUsage);
    CHECK(run_cli({"classify", "-3"}).code == cli::kExitUsage);
    CHECK(run_cli({"classify", "abc"}).code == cli::kExitUsage);
}

TEST_CASE("best-move") {
    auto r = run_cli({"best-move", "--game", "r-wythoff", "--position", "1,3"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "r-wythoff (1,3): 1 winning move(s)\n  take 1 from the larger pile -> (1,2)\n");

    r = run_cli({"best-move", "--game", "wythoff", "--position", "3,5"});
    CHECK(r.out.find("P-position: no winning move") != std::string::npos);

    r = run_cli({"best-move", "--game", "e-wythoff", "--position", "2,2", "--format", "json"});
    const auto js = nlohmann::json::parse(r.out);
    CHECK(js["moves"].size() == 2);

    // order of the piles does not matter
    CHECK(run_cli({"best-move", "--game", "r-wythoff", "--position", "3,1"}).out == run_cli({"best-move", "--game", "r-wythoff", "--position", "1,3"}).out);
    CHECK(run_cli({"best-move", "--game", "r-wythoff", "--position", "1;3"}).code == cli::kExitUsage);
    CHECK(run_cli({"best-move", "--game", "r-wythoff", "--position", "1,x"}).code == cli::kExitUsage);
}
