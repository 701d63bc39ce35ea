#pragma once

// Batch driver behind the `realizer` executable.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "realizer/covering.hpp"
#include "realizer/involutions.hpp"
#include "realizer/io.hpp"

namespace realizer {

enum class Mode { Validate, Subdivide, Tomei, Cover, Verify, Homology, Report };

struct RunConfig {
  Mode mode = Mode::Verify;
  std::string input;
  int n = 0;
  std::size_t max_cells = kDefaultMaxCells;
  std::size_t matching_cap = kDefaultMatchingCap;
  std::size_t homology_limit = 20000;  // largest K (top simplices) whose homology is computed
  std::string output;
  bool deterministic = true;           // reserved; runs are always deterministic
};

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitUsage = 2 };

/// Runs one pipeline stage, writing the text summary to `out` and the JSON
/// document to config.output when set. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments (and REALIZER_MAX_CELLS) and calls run().
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Full verification of one complex. The report's "status" is "pass",
/// "fail" or "cap_exceeded".
nlohmann::json verify_report(const ComplexInput& input, const RunConfig& config);

/// Verification of the Tomei complex of dimension n.
nlohmann::json tomei_report(int n, const RunConfig& config);

/// One "[PASS] name: detail" line per check.
std::string text_summary(const nlohmann::json& report);

}  // namespace realizer
