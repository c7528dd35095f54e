#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wythoff/grundy.hpp"

namespace wythoff::cli {

/// Exit codes: 0 all pass/skipped, 1 any failure, 2 usage or config error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Tables estimated above this size need --yes.
inline constexpr std::uint64_t kConfirmBytes = std::uint64_t{2} << 30;

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Symmetric table for 0 <= a, b <= max: rows a = max..0 top to bottom,
/// then a rule and a column header `a/b | 0 1 ...`.
std::string render_ascii(const GrundyTable& table);

/// Inverse of render_ascii: g[a][b] for the full square.
std::vector<std::vector<Grundy>> parse_ascii(const std::string& text);

}  // namespace wythoff::cli
