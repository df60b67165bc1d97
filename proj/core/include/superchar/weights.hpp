#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "superchar/numeric.hpp"

namespace superchar {

/// Highest weight Σ λ_i ε_i + Σ μ_j δ_j of gl(m|n).
struct HighestWeight {
  int m = 0;
  int n = 0;
  std::vector<Position> lambda;
  std::vector<Position> mu;

  /// λ and μ non-increasing, lengths m and n.
  bool is_dominant() const;
  /// Σ λ_i: the grading that every weight of a module shares up to the
  /// number of odd roots subtracted.
  Position eps_degree() const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// Integral shift Σ (1-i) ε_i + Σ (m-j) δ_j.
struct RhoVector {
  std::vector<Position> eps_part;
  std::vector<Position> delta_part;
};

/// A = {(χ+ρ, ε_i)} listed decreasing, B listed increasing, with
/// ω = Σ a_i ε_i - Σ b_j δ_j = χ+ρ.
struct ABPair {
  std::vector<Position> a;
  std::vector<Position> b;

  friend bool operator==(const ABPair&, const ABPair&) = default;
};

enum class Symbol : char {
  kCircle = 'o',
  kCross = 'x',
  kLess = '<',
  kGreater = '>',
};

char symbol_char(Symbol s);

/// Finite-support map ℤ → {×, <, >}; every other position is ○.
class WeightDiagram {
 public:
  WeightDiagram() = default;
  /// Circle entries are dropped.
  explicit WeightDiagram(const std::map<Position, Symbol>& symbols);

  Symbol at(Position p) const;
  const std::map<Position, Symbol>& symbols() const { return symbols_; }

  /// Positions carrying s, increasing. s must not be a circle.
  std::vector<Position> positions_of(Symbol s) const;
  std::vector<Position> crosses() const { return positions_of(Symbol::kCross); }
  /// Non-circle positions c_1 < ... < c_N.
  std::vector<Position> support() const;
  bool is_core(Position p) const;

  /// #× + #>.
  int m() const;
  /// #× + #<.
  int n() const;
  int atypicality() const;

  /// Symbols over [lo, hi] as one string, e.g. "xxox".
  std::string render(Position lo, Position hi) const;

  friend auto operator<=>(const WeightDiagram&, const WeightDiagram&) = default;
  friend bool operator==(const WeightDiagram&, const WeightDiagram&) = default;

 private:
  std::map<Position, Symbol> symbols_;
};

RhoVector rho(int m, int n);

/// Throws InvalidInput for non-dominant χ or mismatched lengths.
ABPair ab_sets(const HighestWeight& chi);
/// Inverse of ab_sets.
HighestWeight weight_from_ab(const ABPair& ab);

/// × on A∩B, > on A∖B, < on B∖A. Entries must be distinct within each set.
WeightDiagram build_diagram(const ABPair& ab);
/// Reads A (×,> decreasing) and B (×,< increasing) back off a diagram.
ABPair diagram_ab(const WeightDiagram& f);
HighestWeight weight_from_diagram(const WeightDiagram& f);
inline WeightDiagram diagram_of(const HighestWeight& chi) { return build_diagram(ab_sets(chi)); }

/// Number of core symbols (<, >) strictly left of p.
Position cores_left_of(const WeightDiagram& f, Position p);
/// x♯ = x - (cores strictly left of x); defined for any non-core position.
Position core_reindex(const WeightDiagram& f, Position x);

struct CoreStrip {
  WeightDiagram core_free;
  /// Cross position a ↦ a♯.
  std::map<Position, Position> reindex;
};

/// Deletes every < and > and closes up the gaps.
CoreStrip core_strip(const WeightDiagram& f);

/// Σ of positions carrying × or <.
Position n_filtration(const WeightDiagram& f);

}  // namespace superchar
