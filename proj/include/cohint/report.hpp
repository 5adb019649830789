#pragma once

#include "cohint/document.hpp"
#include "cohint/integrality.hpp"

#include <optional>
#include <string>

namespace cohint {

enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitMismatch = 2, kExitInternal = 3 };

struct RunOptions {
  std::string command;
  std::optional<std::string> input_text;  // contents of --input
  std::optional<std::string> catalog_key;
  std::optional<int> max_degree;
  std::optional<std::size_t> group_cap;
  std::optional<int> orbit;
};

struct RunResult {
  Json report;
  int exit_code = kExitOk;
};

/// Dispatches validate, strata, bps, verify, molien and catalog. Errors are
/// reported inside the JSON with the matching exit code, never thrown.
RunResult run(const RunOptions& options);

Json rational_json(const Rational& q);
Json strata_section(const Analysis& a);
Json bps_section(Analysis& a, std::optional<int> orbit);
Json verify_section(Analysis& a, int max_degree, bool& pass);

/// Plain-text rendering of a report.
std::string render_text(const Json& report);

}  // namespace cohint
