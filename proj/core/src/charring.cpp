#include "superchar/charring.hpp"

#include <algorithm>
#include <numeric>

namespace superchar {

namespace {

int inversion_parity(std::span<const int> perm) {
  int parity = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) parity ^= 1;
    }
  }
  return parity;
}

struct SignedPerm {
  std::vector<int> perm;
  int sign = 1;
};

std::vector<SignedPerm> all_perms(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPerm> out;
  do {
    out.push_back({p, inversion_parity(p) == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Sorts the block [first, first+len) decreasingly; returns the sort sign, or 0 on a repeat.
int sort_block_desc(Exponent& e, std::size_t first, std::size_t len) {
  int sign = 1;
  // Insertion sort; blocks are tiny and the swap count gives the sign.
  for (std::size_t i = first + 1; i < first + len; ++i) {
    for (std::size_t j = i; j > first && e[j - 1] < e[j]; --j) {
      std::swap(e[j - 1], e[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = first + 1; i < first + len; ++i) {
    if (e[i - 1] == e[i]) return 0;
  }
  return sign;
}

Exponent odd_root(int m, int n, int i, int j) {
  Exponent e(static_cast<std::size_t>(m + n), 0);
  e[static_cast<std::size_t>(i)] = 1;
  e[static_cast<std::size_t>(m + j)] = -1;
  return e;
}

Exponent negated(std::span<const Position> e) { return scale_exponent(e, -1); }

}  // namespace

CharPoly::CharPoly(int m, int n, LaurentPoly poly) : m_(m), n_(n), poly_(std::move(poly)) {
  if (poly_.nvars() != static_cast<std::size_t>(m + n)) {
    if (!poly_.is_zero()) throw InternalError("CharPoly arity mismatch");
    poly_ = LaurentPoly(static_cast<std::size_t>(m + n));
  }
}

CharPoly CharPoly::monomial(int m, int n, Exponent e, const Rational& c) {
  if (e.size() != static_cast<std::size_t>(m + n)) throw InternalError("CharPoly monomial arity mismatch");
  return CharPoly(m, n, LaurentPoly::monomial(std::move(e), c));
}

void CharPoly::check_shape(const CharPoly& o) const {
  if (m_ != o.m_ || n_ != o.n_) throw InternalError("CharPoly shape mismatch");
}

CharPoly& CharPoly::operator+=(const CharPoly& o) {
  check_shape(o);
  poly_ += o.poly_;
  return *this;
}

CharPoly& CharPoly::operator-=(const CharPoly& o) {
  check_shape(o);
  poly_ -= o.poly_;
  return *this;
}

CharPoly& CharPoly::operator*=(const Rational& c) {
  poly_ *= c;
  return *this;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
  a.check_shape(b);
  return CharPoly(a.m_, a.n_, a.poly_ * b.poly_);
}

bool operator==(const CharPoly& a, const CharPoly& b) {
  return a.m_ == b.m_ && a.n_ == b.n_ && a.poly_.terms() == b.poly_.terms();
}

CharPoly CharPoly::shifted(std::span<const Position> e) const { return CharPoly(m_, n_, poly_.shifted(e)); }

CharPoly CharPoly::degree_band(Position lo, Position hi) const {
  const int m = m_;
  return CharPoly(m_, n_, poly_.filtered([&](const Exponent& e) {
    const Position d = eps_degree(e, m);
    return d >= lo && d <= hi;
  }));
}

CharPoly CharPoly::multiply_above(const CharPoly& o, Position floor) const {
  check_shape(o);
  const int m = m_;
  return CharPoly(m_, n_, poly_.multiply_truncated(o.poly_, [&](const Exponent& e) {
    return eps_degree(e, m) >= floor;
  }));
}

Position eps_degree(std::span<const Position> e, int m) {
  Position d = 0;
  for (int i = 0; i < m; ++i) d = checked_add(d, e[static_cast<std::size_t>(i)]);
  return d;
}

Exponent weight_exponent(const HighestWeight& chi) {
  Exponent e(chi.lambda.begin(), chi.lambda.end());
  e.insert(e.end(), chi.mu.begin(), chi.mu.end());
  return e;
}

Exponent rho_exponent(int m, int n) {
  const RhoVector r = rho(m, n);
  Exponent e(r.eps_part.begin(), r.eps_part.end());
  e.insert(e.end(), r.delta_part.begin(), r.delta_part.end());
  return e;
}

Exponent omega_exponent(const HighestWeight& chi) {
  return add_exponents(weight_exponent(chi), rho_exponent(chi.m, chi.n));
}

CharPoly alt_J(const CharPoly& p) {
  const int m = p.m();
  const int n = p.n();
  // J(σe) = sgn(σ)J(e): collapse every orbit onto its decreasing representative first.
  LaurentPoly canon(static_cast<std::size_t>(m + n));
  for (const auto& [e, c] : p.terms()) {
    Exponent s = e;
    const int s1 = sort_block_desc(s, 0, static_cast<std::size_t>(m));
    if (s1 == 0) continue;
    const int s2 = sort_block_desc(s, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    if (s2 == 0) continue;
    canon.add_term(s, s1 * s2 == 1 ? c : Rational(-c));
  }
  static thread_local std::map<std::pair<int, int>, std::pair<std::vector<SignedPerm>, std::vector<SignedPerm>>> cache;
  auto& perms = cache[{m, n}];
  if (perms.first.empty()) perms = {all_perms(m), all_perms(n)};

  CharPoly out(m, n);
  Exponent e2(static_cast<std::size_t>(m + n));
  for (const auto& [e, c] : canon.terms()) {
    for (const SignedPerm& a : perms.first) {
      for (int i = 0; i < m; ++i) e2[static_cast<std::size_t>(a.perm[static_cast<std::size_t>(i)])] = e[static_cast<std::size_t>(i)];
      for (const SignedPerm& b : perms.second) {
        for (int j = 0; j < n; ++j) {
          e2[static_cast<std::size_t>(m + b.perm[static_cast<std::size_t>(j)])] = e[static_cast<std::size_t>(m + j)];
        }
        out.add_term(e2, a.sign * b.sign == 1 ? c : Rational(-c));
      }
    }
  }
  return out;
}

Exponent root_exponent_odd(int m, int n, int i, int j) { return odd_root(m, n, i, j); }

RootData root_data(int m, int n) {
  if (m < 1 || n < 1) throw InvalidInput("root_data: m and n must be positive");
  RootData rd;
  rd.m = m;
  rd.n = n;
  const auto size = static_cast<std::size_t>(m + n);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Exponent e(size, 0);
      e[static_cast<std::size_t>(i)] = 1;
      e[static_cast<std::size_t>(j)] = -1;
      rd.R0plus.push_back(e);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Exponent e(size, 0);
      e[static_cast<std::size_t>(m + i)] = 1;
      e[static_cast<std::size_t>(m + j)] = -1;
      rd.R0plus.push_back(e);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) rd.R1plus.push_back(odd_root(m, n, i, j));
  }
  rd.kappa2.assign(size, n - m + 1);
  for (int j = 0; j < n; ++j) rd.kappa2[static_cast<std::size_t>(m + j)] = -(n - m + 1);
  return rd;
}

RootData root_data(const HighestWeight& chi) {
  RootData rd = root_data(chi.m, chi.n);
  const ABPair ab = ab_sets(chi);
  for (Position c : build_diagram(ab).crosses()) {
    const auto i = static_cast<int>(std::find(ab.a.begin(), ab.a.end(), c) - ab.a.begin());
    const auto j = static_cast<int>(std::find(ab.b.begin(), ab.b.end(), c) - ab.b.begin());
    rd.S_pairs.emplace_back(i, j);
    rd.S_chi.push_back(odd_root(chi.m, chi.n, i, j));
  }
  return rd;
}

Dhat dhat_denominator(int m, int n) {
  const RootData rd = root_data(m, n);
  return Dhat{m, n, rho_exponent(m, n), rd.R0plus, rd.R1plus};
}

CharPoly dhat_multiply(const CharPoly& p) {
  const Dhat d = dhat_denominator(p.m(), p.n());
  LaurentPoly q = p.poly().shifted(d.rho);
  for (const Exponent& a : d.even_roots) {
    LaurentPoly f = LaurentPoly::constant(q.nvars(), 1);
    f.add_term(negated(a), -1);
    q = q * f;
  }
  for (const Exponent& b : d.odd_roots) q = divide_by_binomial(q, negated(b), 1);
  return CharPoly(p.m(), p.n(), std::move(q));
}

CharPoly dhat_divide_above(const CharPoly& p, Position floor) {
  const Dhat d = dhat_denominator(p.m(), p.n());
  const Position rho_deg = eps_degree(d.rho, p.m());
  CharPoly q = p;
  for (const Exponent& b : d.odd_roots) {
    CharPoly f = CharPoly::monomial(p.m(), p.n(), Exponent(d.rho.size(), 0));
    f.add_term(negated(b), 1);
    q = q.multiply_above(f, checked_add(floor, rho_deg));
  }
  LaurentPoly r = q.poly();
  for (const Exponent& a : d.even_roots) r = divide_by_binomial(r, negated(a), -1);
  return CharPoly(p.m(), p.n(), r.shifted(negated(d.rho)));
}

CharPoly dhat_divide(const CharPoly& p) {
  Position lowest = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const Position d = eps_degree(e, p.m());
    lowest = first ? d : std::min(lowest, d);
    first = false;
  }
  if (first) return CharPoly(p.m(), p.n());
  // The odd factors lower the ε-degree by at most m·n; nothing needs dropping.
  const Position rho_deg = eps_degree(rho_exponent(p.m(), p.n()), p.m());
  return dhat_divide_above(p, checked_sub(checked_sub(lowest, rho_deg), Position{p.m()} * p.n()));
}

LaurentPoly weyl_character(std::span<const Position> w) {
  const std::size_t k = w.size();
  if (!std::is_sorted(w.rbegin(), w.rend())) throw InvalidInput("weyl_character: weight is not dominant");
  if (k == 0) return LaurentPoly::constant(0, 1);
  if (k == 1) return LaurentPoly::monomial(Exponent{w[0]});

  // s_w(x_1..x_k) = Σ_{ν interlacing w} s_ν(x_1..x_{k-1}) x_k^{|w|-|ν|}.
  const Position total = total_degree(w);
  LaurentPoly out(k);
  std::vector<Position> nu(k - 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k - 1) {
      const LaurentPoly sub = weyl_character(nu);
      const Position last = checked_sub(total, total_degree(nu));
      for (const auto& [e, c] : sub.terms()) {
        Exponent full(e);
        full.push_back(last);
        out.add_term(full, c);
      }
      return;
    }
    for (Position v = w[i + 1]; v <= w[i]; ++v) {
      nu[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

BigInt weyl_dimension(std::span<const Position> w) {
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      num *= BigInt(static_cast<long>(checked_add(checked_sub(w[i], w[j]), static_cast<Position>(j - i))));
      den *= BigInt(static_cast<long>(j - i));
    }
  }
  return num / den;
}

CharPoly kac_char_weyl(const HighestWeight& chi, std::optional<Position> min_degree) {
  if (!chi.is_dominant()) throw InvalidInput("kac_char: highest weight is not dominant");
  const int m = chi.m;
  const int n = chi.n;
  const LaurentPoly x = weyl_character(chi.lambda);
  const LaurentPoly y = weyl_character(chi.mu);
  CharPoly out(m, n);
  Exponent e(static_cast<std::size_t>(m + n));
  for (const auto& [ex, cx] : x.terms()) {
    std::copy(ex.begin(), ex.end(), e.begin());
    for (const auto& [ey, cy] : y.terms()) {
      std::copy(ey.begin(), ey.end(), e.begin() + m);
      out.add_term(e, cx * cy);
    }
  }
  const Position floor = min_degree.value_or(checked_sub(chi.eps_degree(), Position{m} * n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      CharPoly f = CharPoly::monomial(m, n, Exponent(static_cast<std::size_t>(m + n), 0));
      f.add_term(negated(odd_root(m, n, i, j)), 1);
      out = out.multiply_above(f, floor);
    }
  }
  return out;
}

CharPoly kac_char_alternant(const HighestWeight& chi) {
  if (!chi.is_dominant()) throw InvalidInput("kac_char: highest weight is not dominant");
  return dhat_divide(alt_J(CharPoly::monomial(chi.m, chi.n, omega_exponent(chi))));
}

CharPoly kac_char(const HighestWeight& chi) {
  CharPoly a = kac_char_weyl(chi);
  if (a != kac_char_alternant(chi)) throw InternalError("Kac character routes disagree");
  return a;
}

CharPoly kac_char(const WeightDiagram& f) { return kac_char(weight_from_diagram(f)); }

namespace {

std::vector<EvTarget> eval_targets(const WeightDiagram& f, bool signed_crosses) {
  const ABPair ab = diagram_ab(f);
  const int m = static_cast<int>(ab.a.size());
  const int n = static_cast<int>(ab.b.size());
  std::vector<EvTarget> out;
  for (const auto& [p, s] : f.symbols()) {
    EvTarget t;
    t.position = p;
    t.symbol = s;
    t.exponent.assign(static_cast<std::size_t>(m + n), 0);
    const auto ai = std::find(ab.a.begin(), ab.a.end(), p);
    const auto bj = std::find(ab.b.begin(), ab.b.end(), p);
    if (ai != ab.a.end()) t.exponent[static_cast<std::size_t>(ai - ab.a.begin())] = 1;
    if (bj != ab.b.end()) t.exponent[static_cast<std::size_t>(m + (bj - ab.b.begin()))] = -1;
    if (s == Symbol::kCross && signed_crosses) t.sign = -1;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<EvTarget> ev_map(const WeightDiagram& f) { return eval_targets(f, true); }
std::vector<EvTarget> pi_map(const WeightDiagram& f) { return eval_targets(f, false); }

Exponent apply_pi(const std::vector<EvTarget>& pi, std::span<const Position> x, int m, int n) {
  if (x.size() != pi.size()) throw InternalError("apply_pi: point dimension mismatch");
  Exponent out(static_cast<std::size_t>(m + n), 0);
  for (std::size_t k = 0; k < pi.size(); ++k) {
    out = add_exponents(out, scale_exponent(pi[k].exponent, x[k]));
  }
  return out;
}

bool is_symmetric(const CharPoly& p) {
  const auto m = static_cast<std::size_t>(p.m());
  const auto total = m + static_cast<std::size_t>(p.n());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i + 1 < total; ++i) {
      if (i + 1 == m) continue;  // never swap an ε with a δ
      Exponent s = e;
      std::swap(s[i], s[i + 1]);
      if (p.coefficient(s) != c) return false;
    }
  }
  return true;
}

bool supersymmetry_check(const CharPoly& p) {
  if (!is_symmetric(p)) return false;
  const auto m = static_cast<std::size_t>(p.m());
  const auto n = static_cast<std::size_t>(p.n());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly q(m + n);
      for (const auto& [e, c] : p.terms()) {
        const Position factor = checked_add(e[i], e[m + j]);
        if (factor == 0) continue;
        Exponent s = e;
        s[m + j] = checked_add(e[m + j], e[i]);
        s[i] = 0;
        Rational v = c * Rational(static_cast<long>(factor));
        if (e[i] % 2 != 0) v = -v;
        q.add_term(s, v);
      }
      if (!q.is_zero()) return false;
    }
  }
  return true;
}

BigInt dimension_eval(const CharPoly& p) {
  const Rational s = p.poly().coefficient_sum();
  if (s.get_den() != 1) throw InternalError("character has a non-integral dimension " + s.get_str());
  return s.get_num();
}

}  // namespace superchar
