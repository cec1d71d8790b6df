#ifndef MBPNS_TOOLS_CLI_RUN_HPP_
#define MBPNS_TOOLS_CLI_RUN_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace mbpns::cli {

enum class Command { validate, synth, sample, reconstruct, verify, sweep, bounds };

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kInputError = 2 };

struct RunManifest {
  Command command = Command::validate;
  std::filesystem::path config;
  std::filesystem::path input;
  std::filesystem::path out;        // empty: write to the output stream
  std::filesystem::path report;     // reconstruct only; defaults to <out>.report.json
  std::filesystem::path reference;  // reconstruct only; optional original signal
  std::optional<std::uint64_t> seed;
  int trials = 100;
  bool oracle = false;
  double tolerance = 1e-8;  // reconstruct: relative error above this exits 1
  int max_M = 0;            // sweep/bounds grid; 0 picks the command default
  int max_N = 0;
  int steps = 0;
};

// Executes one command. Artifacts go to files (atomically) or to `out`;
// diagnostics are single lines "error: <Kind>: <message>" on `err`.
int run(const RunManifest& manifest, std::ostream& out, std::ostream& err);

// Parses argv into a manifest and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mbpns::cli

#endif  // MBPNS_TOOLS_CLI_RUN_HPP_
