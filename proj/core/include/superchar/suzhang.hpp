#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superchar/charring.hpp"

namespace superchar {

/// Cross position ↦ image. Core symbols are fixed implicitly.
using WeightMap = std::map<Position, Position>;

/// All φ ∈ W(f, ℤ) with values ≥ cutoff, depth-first over crosses in
/// increasing order and images in increasing order. With max_drop set, only
/// maps with Σ (a − φ(a)) ≤ max_drop are produced.
std::vector<WeightMap> enumerate_weight_maps(const WeightDiagram& f, Position cutoff,
                                             std::optional<Position> max_drop = std::nullopt);

/// ε(φ) = Σ_a (a − φ(a) − #{cores strictly between φ(a) and a}).
Position epsilon_exponent(const WeightDiagram& f, const WeightMap& phi);
int epsilon_sign(const WeightDiagram& f, const WeightMap& phi);

/// φ(f): crosses moved to their images, cores unchanged.
WeightDiagram apply_weight_map(const WeightDiagram& f, const WeightMap& phi);

/// Closed band of ε-degrees.
struct DegreeWindow {
  Position lo = 0;
  Position hi = 0;
  bool contains(Position d) const { return lo <= d && d <= hi; }
};

/// [deg χ − m·n, deg χ], which holds every weight of L(χ).
DegreeWindow character_window(const HighestWeight& chi);

using SignRule = std::function<int(const WeightDiagram&, const WeightMap&)>;

struct OracleOptions {
  /// Lowest admissible image; defaults to (min cross) − m·n.
  std::optional<Position> cutoff;
  /// Defaults to character_window(χ).
  std::optional<DegreeWindow> window;
  /// Rerun at cutoff − 3 and require the same window contents.
  bool check_stability = true;
  /// Replaces (−1)^{ε(φ)}; used to confirm that a wrong sign is detected.
  SignRule sign_override;
};

struct OracleResult {
  CharPoly character;
  Position cutoff = 0;
  DegreeWindow window;
  std::size_t maps = 0;   ///< φ's whose Kac character meets the window
};

/// Σ_φ (−1)^{ε(φ)} ch K(φ(f)) restricted to the window.
/// Throws InstabilityError if deepening the cutoff changes the result.
OracleResult oracle_char(const HighestWeight& chi, const OracleOptions& opts = {});

/// Same sum through lattice points x ∈ D_f: signs (−1)^{S(f⁻¹(×)) + S(g_x⁻¹(×))},
/// terms J(e^{π_f(x)}), then division by D̂. Restricted to character_window(χ).
CharPoly oracle_char_lattice(const HighestWeight& chi, std::optional<Position> cutoff = std::nullopt);

/// Every diagram of F(m, n) supported in [lo, hi] with at most r_max crosses,
/// in lexicographic order of their symbol maps.
std::vector<WeightDiagram> diagram_family(Position lo, Position hi, int m, int n, int r_max);

struct OrthogonalityReport {
  std::size_t family = 0;
  std::size_t interior_rows = 0;
  std::size_t boundary_rows = 0;   ///< rows whose projective family leaves the window
  std::size_t entries_checked = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> failures;  ///< first few mismatches, rendered
  bool ok = false;
};

/// Checks Σ_{h ∈ P(f)} b_{g,h} = δ_{f,g} with b_{g,h} = Σ_{φ(g) = h} (−1)^{ε(φ)}
/// for every interior row f and every g in the family.
OrthogonalityReport orthogonality_check(Position lo, Position hi, int m, int n, int r_max);

}  // namespace superchar
