#pragma once

#include "cli/ideal_file.hpp"
#include "executor/smoothness_run.hpp"

namespace cli {

struct CheckOptions {
  std::optional<smoothness::ChartMode> mode;  // overrides the file's mode
  int codim_limit = 2;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 50'000'000;
  std::optional<std::string> trace_path;
};

struct CheckReport {
  smoothness::Verdict verdict;
  nlohmann::json json;  // the full report object printed by the tool
  int exit_code = 0;    // 0 smooth, 1 singular
};

/// Parses the ideal, decomposes it into charts per the effective mode,
/// runs the smoothness net and assembles the report. Throws file_error /
/// std::runtime_error for input or engine errors (exit code 2 paths).
CheckReport run_check(const IdealFile& file, const CheckOptions& opts);

/// Runs every `*.ideal` file under `dir` against its `<stem>.expected`
/// sidecar ("smooth" or "singular"), printing one table row per ideal.
/// Returns 0 if all match, 1 on any mismatch; throws file_error for an
/// unusable corpus directory.
int run_corpus(const std::string& dir, const CheckOptions& opts,
               std::ostream& out);

}  // namespace cli
