#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>
#include "superchar/weights.hpp"

namespace superchar::cli {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double seconds = 0;
  std::vector<std::string> details;  ///< first few failure descriptions
  bool ok() const { return failures == 0 && cases > 0; }
};

struct VerifyOptions {
  std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {2, 2}};
  Position lo = -3;
  Position hi = 3;
  /// Empty runs every suite.
  std::vector<std::string> only;
  /// Replaces ε(φ) by Σ (a − φ(a)), dropping the core correction; the oracle suite must then fail.
  bool mutate_sign = false;
};

/// kac, oracle, variant, orthogonality, supersymmetry, theta-mult.
const std::vector<std::string>& suite_names();

/// Dominant weights of gl(m|n) with every entry in [lo, hi].
std::vector<HighestWeight> weight_grid(int m, int n, Position lo, Position hi);

std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

nlohmann::ordered_json verify_json(const std::vector<SuiteResult>& results);
std::string verify_text(const std::vector<SuiteResult>& results);

}  // namespace superchar::cli
