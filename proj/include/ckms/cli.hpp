#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ckms::cli {

struct RunConfig {
  double tolerance = 1e-9;
  double precision = 1e-12;
  std::size_t max_word_len = 3;
  std::size_t dimension_cap = 4096;
  long denominator_bound = 1000000;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

struct RunOutput {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Parses a full command line (without the program name), runs one subcommand and
/// returns what would be written to stdout and stderr.
///
/// Exit codes: 0 success or pass, 1 failed check or rejected input, 2 usage error.
RunOutput run(const std::vector<std::string>& args);

/// One line of the reproduction report.
struct Check {
  std::string id;
  std::string claim;
  std::string expected;
  std::string observed;
  bool passed = false;
};

struct Report {
  std::vector<Check> checks;
  /// Rows reported for information that are not pass/fail (documented inconsistencies).
  std::vector<std::string> flags;
};

/// Recomputes every worked example and compares it with its reference value.
Report reproduce_paper(const RunConfig& config);

}  // namespace ckms::cli
