#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tilings/engine.hpp"
#include "tilings/oracle.hpp"

namespace tilings::cli {

enum class Format { paper, csv, json };

struct RunConfig {
  std::string subcommand;
  int s = 2;
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<int> m;
  std::optional<int> m_max;
  int size_max = 8;
  Format format = Format::paper;
  std::size_t state_cap = kDefaultStateCap;
  std::size_t gf_cap = kDefaultGfCap;
  std::size_t oracle_cap = kDefaultOracleCells;
  bool row_sums = false;
  std::string out_path;  // empty: standard output
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv into a config. On --help or a usage error, prints to
/// `out`/`err` and returns std::nullopt with `exit_code` set.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

/// Executes one subcommand; rendered output goes to `out` (or the --out
/// file), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tilings::cli
