#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superchar/laurent.hpp"
#include "superchar/weights.hpp"

namespace superchar {

/// Element of the character ring: Laurent polynomial in x_1..x_m (x_i = e^{ε_i})
/// and y_1..y_n (y_j = e^{δ_j}); exponent vectors are (ε-part, δ-part).
class CharPoly {
 public:
  CharPoly() = default;
  CharPoly(int m, int n) : m_(m), n_(n), poly_(static_cast<std::size_t>(m + n)) {}
  CharPoly(int m, int n, LaurentPoly poly);

  static CharPoly monomial(int m, int n, Exponent e, const Rational& c = 1);

  int m() const { return m_; }
  int n() const { return n_; }
  const LaurentPoly& poly() const { return poly_; }
  const LaurentPoly::Terms& terms() const { return poly_.terms(); }
  std::size_t size() const { return poly_.size(); }
  bool is_zero() const { return poly_.is_zero(); }
  Rational coefficient(const Exponent& e) const { return poly_.coefficient(e); }
  void add_term(const Exponent& e, const Rational& c) { poly_.add_term(e, c); }

  CharPoly& operator+=(const CharPoly& o);
  CharPoly& operator-=(const CharPoly& o);
  CharPoly& operator*=(const Rational& c);
  friend CharPoly operator+(CharPoly a, const CharPoly& b) { return a += b; }
  friend CharPoly operator-(CharPoly a, const CharPoly& b) { return a -= b; }
  friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
  friend bool operator==(const CharPoly& a, const CharPoly& b);

  CharPoly shifted(std::span<const Position> e) const;
  /// Terms whose ε-degree lies in [lo, hi].
  CharPoly degree_band(Position lo, Position hi) const;
  /// Product keeping only terms of ε-degree ≥ floor.
  CharPoly multiply_above(const CharPoly& o, Position floor) const;

 private:
  void check_shape(const CharPoly& o) const;
  int m_ = 0;
  int n_ = 0;
  LaurentPoly poly_;
};

/// Σ of the ε-exponents; W₀-invariant, lowered by one by every odd root.
Position eps_degree(std::span<const Position> e, int m);

/// Exponent vector of χ in (ε, δ) coordinates.
Exponent weight_exponent(const HighestWeight& chi);
/// ρ as an exponent vector.
Exponent rho_exponent(int m, int n);
/// ω = χ + ρ.
Exponent omega_exponent(const HighestWeight& chi);

/// J(p) = Σ_{σ ∈ S_m × S_n} sgn(σ) σ(p).
CharPoly alt_J(const CharPoly& p);

struct RootData {
  int m = 0;
  int n = 0;
  std::vector<Exponent> R0plus;   ///< ε_i − ε_j (i<j), then δ_i − δ_j (i<j)
  std::vector<Exponent> R1plus;   ///< ε_i − δ_j, ordered by (i, j)
  std::vector<Exponent> S_chi;    ///< atypical roots, in increasing cross order
  std::vector<std::pair<int, int>> S_pairs;  ///< 0-based (i, j) for each atypical root
  /// 2κ = (n − m + 1)(Σε − Σδ), the W₀-invariant gap between D and D̂.
  Exponent kappa2;
};

RootData root_data(int m, int n);
/// root_data(m, n) plus S_χ read off the diagram of χ.
RootData root_data(const HighestWeight& chi);

Exponent root_exponent_odd(int m, int n, int i, int j);

/// D̂ = e^ρ ∏_{R0+}(1 − e^{−α}) / ∏_{R1+}(1 + e^{−β}), kept as its factor lists.
struct Dhat {
  int m = 0;
  int n = 0;
  Exponent rho;
  std::vector<Exponent> even_roots;
  std::vector<Exponent> odd_roots;
};

Dhat dhat_denominator(int m, int n);
/// D̂ · p. Division by the odd factors must be exact.
CharPoly dhat_multiply(const CharPoly& p);
/// p / D̂. Division by the even factors must be exact.
CharPoly dhat_divide(const CharPoly& p);
/// p / D̂ keeping only terms of ε-degree ≥ floor (after the ρ shift).
CharPoly dhat_divide_above(const CharPoly& p, Position floor);

/// Weyl character of the gl(k)-module with dominant highest weight w, by
/// Gelfand–Tsetlin branching.
LaurentPoly weyl_character(std::span<const Position> w);
/// Weyl dimension formula ∏_{i<j} (w_i − w_j + j − i)/(j − i).
BigInt weyl_dimension(std::span<const Position> w);

/// e^χ-part: g₀ character times ∏_{R1+}(1 + e^{−β}), keeping ε-degree ≥ min_degree.
CharPoly kac_char_weyl(const HighestWeight& chi, std::optional<Position> min_degree = std::nullopt);
/// J(e^ω) / D̂.
CharPoly kac_char_alternant(const HighestWeight& chi);
/// Both routes, asserted equal (InternalError otherwise).
CharPoly kac_char(const HighestWeight& chi);
CharPoly kac_char(const WeightDiagram& f);

/// Image of the basis vector e_k attached to a non-○ position of f.
struct EvTarget {
  Position position = 0;
  Symbol symbol = Symbol::kCircle;
  Exponent exponent;  ///< ε_i, −δ_j or ε_i − δ_j
  int sign = 1;       ///< −1 on crosses for ev_f, always +1 for π_f
};

/// t_k ↦ e^{ε_i} (>), e^{−δ_j} (<), −e^{ε_i − δ_j} (×), over the support in increasing order.
std::vector<EvTarget> ev_map(const WeightDiagram& f);
/// The unsigned companion of ev_map.
std::vector<EvTarget> pi_map(const WeightDiagram& f);
/// π_f(x) for a point x in support coordinates.
Exponent apply_pi(const std::vector<EvTarget>& pi, std::span<const Position> x, int m, int n);

/// Invariant under every transposition of ε-exponents and of δ-exponents.
bool is_symmetric(const CharPoly& p);
/// Symmetric and, for every (i, j), x_i ∂p/∂x_i + y_j ∂p/∂y_j vanishes at x_i = −y_j.
bool supersymmetry_check(const CharPoly& p);
/// Sum of coefficients; throws InternalError unless it is an integer.
BigInt dimension_eval(const CharPoly& p);

}  // namespace superchar
