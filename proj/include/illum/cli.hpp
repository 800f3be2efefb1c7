#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "illum/scenarios.hpp"

namespace illum {

inline constexpr const char* kToolName = "illum";
inline constexpr const char* kToolVersion = "1.0.0";

// Body file round-trip. Coordinates are exact "p/q" strings or integers;
// anything else (decimals included) is rejected. Malformed files throw
// std::invalid_argument carrying line/column (syntax) or a field path
// (semantics).
SymmetricBody load_body_file(const std::string& path, std::size_t orbit_cap = 1000000);
void save_body_file(const SymmetricBody& B, const std::string& path);

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Named self-checks: fast property groups ("exact.", "body.", "illum.",
// "sets.") and the full verification battery ("paper.c01" .. "paper.c13",
// each with its wall-clock budget). filter keeps the checks whose name
// contains it; empty keeps everything. Includes a deliberate negative
// control: the deep-direction recipe run with an oversized small-coordinate
// value must fail to illuminate.
std::vector<CheckOutcome> run_checks(const std::string& filter);

// Entry point behind the illum binary; args excludes the program name.
// Exit codes: 0 confirmed/success, 1 refuted or cover failure (the report
// is still written), 2 usage or input error, 3 resource limit.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace illum
