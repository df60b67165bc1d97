#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "superchar/weights.hpp"
#include "superchar_cli/format.hpp"

namespace superchar::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitBadInput = 2,
  kExitInstability = 3,
  kExitVerifyFailed = 4,
};

struct JobConfig {
  std::optional<int> m;
  std::optional<int> n;
  std::string lambda;
  std::string mu;
  std::string ab;
  std::string variant = "classic";
  std::string depth = "auto";
  std::optional<Position> cutoff;
  std::string format = "text";
  std::string only;
  bool mutate_sign = false;
};

/// "3,2,2" → {3, 2, 2}; an empty string gives an empty list.
std::vector<Position> parse_int_list(const std::string& s);
/// From --m/--n/--lambda/--mu, or from --ab "A/B".
HighestWeight resolve_weight(const JobConfig& cfg);

std::string cmd_char(const JobConfig& cfg);
std::string cmd_diagram(const JobConfig& cfg);
std::string cmd_theta(const JobConfig& cfg);
std::string cmd_kac(const JobConfig& cfg);
std::string cmd_proj(const JobConfig& cfg);
/// Writes the report and returns the exit code.
int cmd_verify(const JobConfig& cfg, std::ostream& out);

/// Full dispatcher used by main(); returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superchar::cli
