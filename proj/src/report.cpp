#include "wythoff/report.hpp"

#include <sstream>

namespace wythoff {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

void VerificationReport::fail(Position p, std::string detail) {
    status = Status::Fail;
    ++violations;
    if (counterexamples.size() < kMaxListed) counterexamples.push_back({p, std::move(detail)});
}

void VerificationReport::skip(std::string note) {
    if (status != Status::Fail) status = Status::Skipped;
    notes.push_back(std::move(note));
}

namespace {

nlohmann::json positions_json(const std::vector<Position>& ps) {
    auto arr = nlohmann::json::array();
    for (const auto& p : ps) arr.push_back({p.low(), p.high()});
    return arr;
}

std::string positions_text(const std::vector<Position>& ps) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < ps.size(); ++i) out << (i ? ", " : "") << ps[i];
    out << '}';
    return out.str();
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["kind"] = "verification";
    j["claim_id"] = r.claim_id;
    j["rule"] = r.rule;
    auto bounds = nlohmann::json::object();
    for (const auto& [name, value] : r.bounds) bounds[name] = value;
    j["bounds"] = bounds;
    j["status"] = to_string(r.status);
    auto ce = nlohmann::json::array();
    for (const auto& c : r.counterexamples) {
        ce.push_back({{"a", c.position.low()}, {"b", c.position.high()}, {"detail", c.detail}});
    }
    j["counterexamples"] = ce;
    j["violations"] = r.violations;
    j["notes"] = r.notes;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

nlohmann::json to_json(const PeriodReport& r) {
    nlohmann::json j;
    j["kind"] = "period";
    j["rule"] = r.rule;
    j["row"] = r.row;
    j["period"] = r.period ? nlohmann::json(*r.period) : nlohmann::json(nullptr);
    j["preperiod"] = r.preperiod ? nlohmann::json(*r.preperiod) : nlohmann::json(nullptr);
    j["checked_to"] = r.checked_to;
    j["stable_under_doubling"] = r.stable_under_doubling;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

nlohmann::json to_json(const SurveyReport& r) {
    nlohmann::json j;
    j["kind"] = "survey";
    j["rule"] = r.rule;
    j["bound"] = r.bound;
    j["preserves_p_positions"] = r.preserves_p_positions;
    j["p_mismatches"] = positions_json(r.p_mismatches);
    j["value1_extra"] = positions_json(r.value1_extra);
    j["value1_missing"] = positions_json(r.value1_missing);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << '[' << to_string(r.status) << "] " << r.claim_id << " (" << r.rule;
    for (const auto& [name, value] : r.bounds) out << ", " << name << '=' << value;
    out << ") " << static_cast<long long>(r.elapsed_ms) << " ms\n";
    if (r.violations) {
        out << "    " << r.violations << " violation(s)";
        if (r.violations > r.counterexamples.size()) out << ", first " << r.counterexamples.size() << " listed";
        out << '\n';
    }
    for (const auto& c : r.counterexamples) out << "    " << c.position << ": " << c.detail << '\n';
    for (const auto& n : r.notes) out << "    note: " << n << '\n';
    return out.str();
}

std::string to_text(const PeriodReport& r) {
    std::ostringstream out;
    out << "[period] " << r.rule << " row " << r.row << ": ";
    if (r.period) {
        out << "p=" << *r.period << ", n0=" << *r.preperiod;
    } else {
        out << "no additive period found";
    }
    out << " (checked to " << r.checked_to << ", " << (r.stable_under_doubling ? "stable" : "not stable")
        << " under doubling)\n";
    return out.str();
}

std::string to_text(const SurveyReport& r) {
    std::ostringstream out;
    out << "[survey] " << r.rule << " bound " << r.bound << ": P-positions "
        << (r.preserves_p_positions ? "preserved" : "NOT preserved") << '\n';
    if (!r.p_mismatches.empty()) out << "    P mismatches: " << positions_text(r.p_mismatches) << '\n';
    out << "    value-1 extra: " << positions_text(r.value1_extra) << '\n'
        << "    value-1 missing: " << positions_text(r.value1_missing) << '\n';
    return out.str();
}

}  // namespace wythoff
