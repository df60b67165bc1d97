#pragma once

#include <optional>
#include <vector>

#include "superchar/capgraph.hpp"
#include "superchar/charring.hpp"

namespace superchar {

enum class Variant { kClassic, kReduced };

const char* variant_name(Variant v);
/// "classic" or "reduced"; throws InvalidInput otherwise.
Variant parse_variant(std::string_view s);

struct FormulaOptions {
  Variant variant = Variant::kClassic;
  /// Truncation depth of the geometric series; nullopt selects auto_depth.
  std::optional<Position> depth;
  /// Recompute at depth + 5 and require identical output.
  bool check_stability = true;
  /// θ̃ exponent convention (reduced variant only).
  TildeExponents tilde_mode = TildeExponents::kTilde;
};

struct FormulaResult {
  CharPoly character;
  Position depth = 0;
  Variant variant = Variant::kClassic;
  /// θ (classic) or θ̃ (reduced), in t_1..t_r.
  ThetaPoly theta;
  Position nu = 0;
  std::vector<Position> gamma;
  /// Number of Δ-summands of θ or θ̃ that entered the computation.
  std::size_t delta_summands = 0;
  int atypicality = 0;
  int components = 0;
  /// Atypical roots α_1..α_r in cross order.
  std::vector<Exponent> alphas;
};

/// (max A − min over crosses of the component minimum) + m·n + 5, raised to
/// at least m·n + ν + 1 so the retained band always covers the whole character.
Position auto_depth(const HighestWeight& chi);

/// Character of L(χ) from the closed formula, expanded as truncated series.
/// Throws InstabilityError when depth and depth + 5 disagree.
FormulaResult irreducible_char(const HighestWeight& chi, const FormulaOptions& opts = {});

/// Single evaluation at a fixed depth, without the stability rerun.
CharPoly irreducible_char_at_depth(const HighestWeight& chi, Variant variant, Position depth,
                                   TildeExponents mode = TildeExponents::kTilde);

}  // namespace superchar
