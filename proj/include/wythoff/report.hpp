#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wythoff/position.hpp"

#include <json.hpp>

namespace wythoff {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s) noexcept;

struct Counterexample {
    Position position;
    std::string detail;
};

/// Outcome of one exhaustive check. Fail exactly when counterexamples exist.
struct VerificationReport {
    static constexpr std::size_t kMaxListed = 64;

    std::string claim_id;
    std::string rule;
    std::vector<std::pair<std::string, std::uint64_t>> bounds;
    Status status = Status::Pass;
    std::vector<Counterexample> counterexamples;  // first kMaxListed
    std::uint64_t violations = 0;                 // total, listed or not
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;

    void fail(Position p, std::string detail);
    /// Marks Skipped unless already failed.
    void skip(std::string note);
    bool passed() const noexcept { return status != Status::Fail; }
};

/// Additive-period evidence for one Grundy row.
struct PeriodReport {
    std::string rule;
    std::uint64_t row = 0;
    std::optional<std::uint64_t> period;
    std::optional<std::uint64_t> preperiod;
    std::uint64_t checked_to = 0;
    bool stable_under_doubling = false;
    double elapsed_ms = 0.0;
};

/// Descriptive comparison of one rule against the Wythoff P-positions and the
/// shifted value-1 set {(a(n) - 1, b(n) - 1)}.
struct SurveyReport {
    std::string rule;
    std::uint64_t bound = 0;
    bool preserves_p_positions = false;
    std::vector<Position> p_mismatches;
    std::vector<Position> value1_extra;    // value 1 but not in the shifted set
    std::vector<Position> value1_missing;  // in the shifted set but not value 1
    double elapsed_ms = 0.0;
};

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const PeriodReport& r);
nlohmann::json to_json(const SurveyReport& r);

std::string to_text(const VerificationReport& r);
std::string to_text(const PeriodReport& r);
std::string to_text(const SurveyReport& r);

/// Wall-clock stopwatch for report timing.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace wythoff
