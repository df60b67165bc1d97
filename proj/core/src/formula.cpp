#include "superchar/formula.hpp"

#include <algorithm>

namespace superchar {

const char* variant_name(Variant v) { return v == Variant::kClassic ? "classic" : "reduced"; }

Variant parse_variant(std::string_view s) {
  if (s == "classic") return Variant::kClassic;
  if (s == "reduced") return Variant::kReduced;
  throw InvalidInput("unknown variant '" + std::string(s) + "' (expected classic or reduced)");
}

namespace {

struct Prepared {
  HighestWeight chi;
  Forest g;
  SegmentData sd;
  std::vector<Exponent> alphas;
  ThetaPoly theta;
  std::size_t delta_summands = 0;
  Position nu = 0;
  std::vector<Position> gamma;
  Exponent top;   ///< χ + ρ (+ γ)
  int sign = 1;   ///< (−1)^ν for the reduced variant
};

Prepared prepare(const HighestWeight& chi, Variant variant, TildeExponents mode) {
  Prepared p;
  p.chi = chi;
  const WeightDiagram f = diagram_of(chi);
  p.g = gamma(cap_diagram(f));
  p.sd = segment_data(f);
  p.alphas = root_data(chi).S_chi;
  p.top = omega_exponent(chi);
  if (variant == Variant::kClassic) {
    ThetaExpansion t = theta_expansion(p.g);
    p.theta = std::move(t.poly);
    p.delta_summands = t.terms.size();
    p.gamma.assign(p.alphas.size(), 0);
    for (std::size_t k = 0; k < p.alphas.size(); ++k) {
      p.nu = checked_add(p.nu, checked_sub(p.sd.tilde.at(p.g.labels[k]), p.g.labels[k]));
    }
  } else {
    ThetaTilde t = theta_tilde(p.g, p.sd, mode);
    p.theta = std::move(t.poly);
    p.delta_summands = t.terms.size();
    p.nu = t.nu;
    p.gamma = t.gamma;
    for (std::size_t k = 0; k < p.alphas.size(); ++k) {
      p.top = add_exponents(p.top, scale_exponent(p.alphas[k], p.gamma[k]));
    }
    p.sign = p.nu % 2 == 0 ? 1 : -1;
  }
  return p;
}

CharPoly evaluate(const Prepared& p, Position depth) {
  const int m = p.chi.m;
  const int n = p.chi.n;
  const auto size = static_cast<std::size_t>(m + n);
  const Position floor = checked_sub(eps_degree(p.top, m), depth);

  // e^{top} θ(−e^{α_1}, …, −e^{α_r}), with the (−1)^ν prefactor folded in.
  CharPoly y(m, n);
  for (const auto& [ex, c] : p.theta.terms()) {
    Exponent e = p.top;
    Position parity = 0;
    for (std::size_t k = 0; k < ex.size(); ++k) {
      e = add_exponents(e, scale_exponent(p.alphas[k], ex[k]));
      parity += ex[k];
    }
    y.add_term(e, (parity % 2 == 0) == (p.sign == 1) ? c : Rational(-c));
  }

  // 1/(1 + e^{−α_k}) as Σ_{j ≤ depth} (−e^{−α_k})^j.
  for (const Exponent& a : p.alphas) {
    CharPoly series(m, n);
    for (Position j = 0; j <= depth; ++j) {
      series.add_term(scale_exponent(a, -j), j % 2 == 0 ? Rational(1) : Rational(-1));
    }
    y = y.multiply_above(series, floor);
  }

  // ∏_{R1+}(1 + e^{−β}) is W₀-invariant, so it may enter before J.
  const RootData rd = root_data(m, n);
  for (const Exponent& b : rd.R1plus) {
    CharPoly factor = CharPoly::monomial(m, n, Exponent(size, 0));
    factor.add_term(scale_exponent(b, -1), 1);
    y = y.multiply_above(factor, floor);
  }

  LaurentPoly z = alt_J(y).poly();
  for (const Exponent& a : rd.R0plus) z = divide_by_binomial(z, scale_exponent(a, -1), -1);
  const CharPoly ch(m, n, z.shifted(scale_exponent(rho_exponent(m, n), -1)));
  const Position top = p.chi.eps_degree();
  return ch.degree_band(checked_sub(top, Position{m} * n), top);
}

}  // namespace

Position auto_depth(const HighestWeight& chi) {
  const ABPair ab = ab_sets(chi);
  const WeightDiagram f = build_diagram(ab);
  const Forest g = gamma(cap_diagram(f));
  const SegmentData sd = segment_data(f);
  const Position mn = Position{chi.m} * chi.n;
  Position spread = 0;
  Position nu = 0;
  if (!g.labels.empty()) {
    const auto mins = component_mins(g);
    spread = checked_sub(ab.a.front(), *std::min_element(mins.begin(), mins.end()));
    for (Position c : g.labels) nu = checked_add(nu, checked_sub(sd.tilde.at(c), c));
  }
  return std::max(checked_add(checked_add(spread, mn), 5), checked_add(checked_add(mn, nu), 1));
}

CharPoly irreducible_char_at_depth(const HighestWeight& chi, Variant variant, Position depth, TildeExponents mode) {
  if (!chi.is_dominant()) throw InvalidInput("highest weight is not dominant (or has wrong lengths)");
  if (depth < 0) throw InvalidInput("depth must be non-negative");
  return evaluate(prepare(chi, variant, mode), depth);
}

FormulaResult irreducible_char(const HighestWeight& chi, const FormulaOptions& opts) {
  if (!chi.is_dominant()) throw InvalidInput("highest weight is not dominant (or has wrong lengths)");
  const Position depth = opts.depth.value_or(auto_depth(chi));
  if (depth < 0) throw InvalidInput("depth must be non-negative");
  const Prepared p = prepare(chi, opts.variant, opts.tilde_mode);

  FormulaResult out;
  out.character = evaluate(p, depth);
  if (opts.check_stability && out.character != evaluate(p, checked_add(depth, 5))) {
    throw InstabilityError("character changes between depth " + std::to_string(depth) + " and " +
                           std::to_string(depth + 5) + "; retry with a larger --depth (at least " +
                           std::to_string(auto_depth(chi)) + ")");
  }
  out.depth = depth;
  out.variant = opts.variant;
  out.theta = p.theta;
  out.nu = p.nu;
  out.gamma = p.gamma;
  out.delta_summands = p.delta_summands;
  out.atypicality = p.g.vertex_count();
  out.components = p.g.component_count();
  out.alphas = p.alphas;
  return out;
}

}  // namespace superchar
