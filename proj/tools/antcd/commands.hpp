#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "antcd/saba.hpp"

namespace antcd::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kDataError = 2 };

struct GenerateOptions {
  std::string kind;  // gn | clique-ring | clique-pairs
  std::size_t groups = 4;
  std::size_t group_size = 32;
  double z_in = 10.0;
  double z_out = 6.0;
  std::size_t cliques = 30;
  std::size_t clique_size = 5;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct DetectOptions {
  std::string edges;
  std::string algo = "maba";  // saba | maba
  bool weighted = false;
  SabaConfig config;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct EvalOptions {
  std::string edges;
  std::string partition;
  std::optional<std::string> truth;
  bool weighted = false;
  std::optional<std::string> json_out;
};

struct BenchOptions {
  std::vector<std::size_t> groups{10, 20, 40};
  std::size_t group_size = 100;
  double z_in = 10.0;
  double z_out = 6.0;
  std::size_t seeds = 3;
  SabaConfig config;
  std::optional<std::uint64_t> seed;
  std::string out;
};

// Each command writes its files, prints a summary to `log` and throws
// antcd::Error on bad data or parameters.
void cmd_generate(const GenerateOptions& opts, std::ostream& log);
void cmd_detect(const DetectOptions& opts, std::ostream& log);
void cmd_eval(const EvalOptions& opts, std::ostream& log);
void cmd_bench(const BenchOptions& opts, std::ostream& log);

/// Parses argv, dispatches, and maps failures onto ExitCode values.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace antcd::cli
