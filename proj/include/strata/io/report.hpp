#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/io/definitions.hpp"

namespace strata::io {

enum ExitCode : int { verified = 0, refuted = 1, input_error = 2 };

struct ReportOptions {
  /// Positional arguments after the command (algebra, module names, ...).
  std::vector<std::string> args;
  /// Default 2 dim A (or dim g for Lie commands).
  std::optional<std::size_t> max_degree;
  std::optional<std::string> order;
  std::optional<std::string> segment;
  std::size_t exhaustive_bound = 8;
  std::uint64_t seed = 20240601;
  /// Where the seed came from, recorded in reports.
  std::string seed_source = "default";
  std::size_t samples = 100;
};

struct Report {
  int exit_code = verified;
  json body;
  std::string text;
};

const std::vector<std::string>& report_commands();

/// Runs one command. Input and precondition failures are returned as
/// exit code 2 with {"error": {...}} bodies rather than thrown.
Report run_report(const Workspace& ws, const std::string& command, const ReportOptions& options);

/// Reads STRATA_EXT_SEED into the options when set.
void apply_seed_environment(ReportOptions& options);

}  // namespace strata::io
