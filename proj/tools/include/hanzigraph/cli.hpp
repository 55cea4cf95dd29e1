#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hanzi::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataError = 2,
  kMissingLayer = 3,
};

/// Environment variable naming the default store path.
inline constexpr const char* kStoreEnv = "HANZIGRAPH_STORE";
inline constexpr const char* kDefaultStore = "hanzigraph.store";

/// Everything a command run depends on; echoed into every report.
struct RunConfig {
  std::filesystem::path store;
  std::vector<std::filesystem::path> graphs;
  std::optional<std::filesystem::path> output;
  std::optional<double> q;
  std::optional<double> lambda_main;
  std::optional<std::size_t> theta_s;
  std::string weight = "w_R";
  double threshold = 1.0;
  std::string method = "threshold-components";
  std::size_t max_clique_size = 6;
  bool allow_large_cliques = false;
  std::optional<long> clique_budget_ms;
  std::size_t top = 10;
  std::string format = "json";
  std::size_t workers = 1;
  std::optional<std::uint64_t> seed;
  bool use_glosses = false;
  int hypernym_depth = 1;
  bool blocking = true;

  /// Throws std::invalid_argument describing the first invalid field.
  void validate() const;
  /// Canonical single-line JSON (sorted keys).
  std::string to_json() const;
};

/// Runs the command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hanzi::cli
