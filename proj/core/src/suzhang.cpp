#include "superchar/suzhang.hpp"

#include <algorithm>
#include <set>

#include "superchar/capgraph.hpp"
#include "superchar/latticegen.hpp"
#include "superchar/parallel.hpp"

namespace superchar {

std::vector<WeightMap> enumerate_weight_maps(const WeightDiagram& f, Position cutoff,
                                             std::optional<Position> max_drop) {
  const CapForest cf = cap_diagram(f);
  const auto& crosses = cf.crosses;
  if (!crosses.empty() && cutoff > crosses.front()) {
    throw InvalidInput("enumerate_weight_maps: cutoff exceeds the smallest cross");
  }
  // Ancestors under ⊣ always precede a cross in increasing order.
  std::vector<std::vector<std::size_t>> above(crosses.size());
  for (std::size_t j = 0; j < crosses.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (precedes(cf, crosses[i], crosses[j])) above[j].push_back(i);
    }
  }
  std::vector<WeightMap> out;
  std::vector<Position> image(crosses.size());
  std::set<Position> used;
  std::function<void(std::size_t, Position)> rec = [&](std::size_t k, Position drop) {
    if (k == crosses.size()) {
      WeightMap phi;
      for (std::size_t i = 0; i < crosses.size(); ++i) phi.emplace(crosses[i], image[i]);
      out.push_back(std::move(phi));
      return;
    }
    const Position c = crosses[k];
    Position lo = cutoff;
    if (max_drop) lo = std::max(lo, checked_sub(c, *max_drop - drop));
    for (Position v = lo; v <= c; ++v) {
      if (f.is_core(v) || used.contains(v)) continue;
      const bool ordered = std::all_of(above[k].begin(), above[k].end(), [&](std::size_t i) { return image[i] < v; });
      if (!ordered) continue;
      image[k] = v;
      used.insert(v);
      rec(k + 1, checked_add(drop, c - v));
      used.erase(v);
    }
  };
  rec(0, 0);
  return out;
}

Position epsilon_exponent(const WeightDiagram& f, const WeightMap& phi) {
  Position e = 0;
  for (const auto& [a, b] : phi) {
    Position cores = 0;
    for (auto it = f.symbols().upper_bound(b); it != f.symbols().end() && it->first < a; ++it) {
      if (it->second != Symbol::kCross) ++cores;
    }
    e = checked_add(e, checked_sub(checked_sub(a, b), cores));
  }
  return e;
}

int epsilon_sign(const WeightDiagram& f, const WeightMap& phi) { return epsilon_exponent(f, phi) % 2 == 0 ? 1 : -1; }

WeightDiagram apply_weight_map(const WeightDiagram& f, const WeightMap& phi) {
  std::map<Position, Symbol> symbols;
  for (const auto& [p, s] : f.symbols()) {
    if (s != Symbol::kCross) symbols.emplace(p, s);
  }
  for (const auto& [a, b] : phi) {
    if (f.at(a) != Symbol::kCross) throw InvalidInput("weight map is defined on a non-cross");
    if (!symbols.emplace(b, Symbol::kCross).second) throw InvalidInput("weight map image collides");
  }
  return WeightDiagram(symbols);
}

DegreeWindow character_window(const HighestWeight& chi) {
  const Position top = chi.eps_degree();
  return {checked_sub(top, Position{chi.m} * chi.n), top};
}

namespace {

/// Kac characters restricted to a window, memoized per thread across oracle runs.
const CharPoly& cached_kac(const HighestWeight& chi, const DegreeWindow& w) {
  thread_local std::map<Exponent, CharPoly> cache;
  Exponent key = weight_exponent(chi);
  key.insert(key.end(), {Position{chi.m}, w.lo, w.hi});
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(std::move(key), kac_char_weyl(chi, w.lo).degree_band(w.lo, w.hi)).first;
  }
  return it->second;
}

CharPoly oracle_sum(const HighestWeight& chi, const WeightDiagram& f, Position cutoff, const DegreeWindow& w,
                    const SignRule& sign_rule, std::size_t* used) {
  // A map lowering the crosses by D in total produces K(φ(f)) in the band
  // [deg χ − D − m·n, deg χ − D]; larger drops miss the window.
  const Position max_drop = checked_sub(chi.eps_degree(), w.lo);
  const auto maps = enumerate_weight_maps(f, cutoff, std::max<Position>(max_drop, 0));
  std::vector<HighestWeight> weights(maps.size());
  std::vector<int> signs(maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k) {
    weights[k] = weight_from_diagram(apply_weight_map(f, maps[k]));
    signs[k] = sign_rule ? sign_rule(f, maps[k]) : epsilon_sign(f, maps[k]);
  }
  std::vector<CharPoly> kac(maps.size());
  parallel_for(maps.size(), [&](std::size_t k) {
    kac[k] = cached_kac(weights[k], w);
  });
  CharPoly total(chi.m, chi.n);
  std::size_t meeting = 0;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (kac[k].is_zero()) continue;
    ++meeting;
    CharPoly term = kac[k];
    if (signs[k] < 0) term *= Rational(-1);
    total += term;
  }
  if (used) *used = meeting;
  return total;
}

}  // namespace

OracleResult oracle_char(const HighestWeight& chi, const OracleOptions& opts) {
  if (!chi.is_dominant()) throw InvalidInput("highest weight is not dominant (or has wrong lengths)");
  const WeightDiagram f = diagram_of(chi);
  const auto crosses = f.crosses();
  OracleResult out;
  out.window = opts.window.value_or(character_window(chi));
  const Position lowest = crosses.empty() ? 0 : crosses.front();
  out.cutoff = opts.cutoff.value_or(checked_sub(lowest, Position{chi.m} * chi.n));
  out.character = oracle_sum(chi, f, out.cutoff, out.window, opts.sign_override, &out.maps);
  if (opts.check_stability && !crosses.empty()) {
    const Position deeper = checked_sub(out.cutoff, 3);
    if (oracle_sum(chi, f, deeper, out.window, opts.sign_override, nullptr) != out.character) {
      throw InstabilityError("oracle result changes between cutoff " + std::to_string(out.cutoff) + " and " +
                             std::to_string(deeper) + "; retry with --cutoff " + std::to_string(deeper - 3));
    }
  }
  return out;
}

CharPoly oracle_char_lattice(const HighestWeight& chi, std::optional<Position> cutoff) {
  if (!chi.is_dominant()) throw InvalidInput("highest weight is not dominant (or has wrong lengths)");
  const WeightDiagram f = diagram_of(chi);
  const auto crosses = f.crosses();
  const DegreeWindow w = character_window(chi);
  const Position mn = Position{chi.m} * chi.n;
  const Position cut = cutoff.value_or(checked_sub(crosses.empty() ? 0 : crosses.front(), mn));
  const OrderPolyhedron d = polyhedron_of(f);
  const auto pi = pi_map(f);

  std::vector<std::size_t> cross_coords;
  Position s_f = 0;
  for (std::size_t k = 0; k < d.labels.size(); ++k) {
    if (f.at(d.labels[k]) == Symbol::kCross) {
      cross_coords.push_back(k);
      s_f = checked_add(s_f, d.labels[k]);
    }
  }
  CharPoly alternants(chi.m, chi.n);
  for_each_lattice_point(d, cut, [&](std::span<const Position> x) {
    Position s_g = 0;
    Position drop = 0;
    for (std::size_t k : cross_coords) {
      s_g = checked_add(s_g, x[k]);
      drop = checked_add(drop, checked_sub(d.labels[k], x[k]));
    }
    if (drop > mn) return;
    const Exponent e = apply_pi(pi, x, chi.m, chi.n);
    CharPoly term = alt_J(CharPoly::monomial(chi.m, chi.n, e));
    if ((s_f + s_g) % 2 != 0) term *= Rational(-1);
    alternants += term;
  });
  return dhat_divide(alternants).degree_band(w.lo, w.hi);
}

std::vector<WeightDiagram> diagram_family(Position lo, Position hi, int m, int n, int r_max) {
  if (hi < lo || m < 1 || n < 1 || r_max < 0) throw InvalidInput("diagram_family: bad window or counts");
  std::vector<WeightDiagram> out;
  std::map<Position, Symbol> cur;
  std::function<void(Position, int, int, int)> rec = [&](Position p, int crosses, int greater, int less) {
    if (p > hi) {
      if (greater == m && less == n) out.emplace_back(cur);
      return;
    }
    rec(p + 1, crosses, greater, less);
    if (greater < m && less < n && crosses < r_max) {
      cur[p] = Symbol::kCross;
      rec(p + 1, crosses + 1, greater + 1, less + 1);
      cur.erase(p);
    }
    if (greater < m) {
      cur[p] = Symbol::kGreater;
      rec(p + 1, crosses, greater + 1, less);
      cur.erase(p);
    }
    if (less < n) {
      cur[p] = Symbol::kLess;
      rec(p + 1, crosses, greater, less + 1);
      cur.erase(p);
    }
  };
  rec(lo, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

OrthogonalityReport orthogonality_check(Position lo, Position hi, int m, int n, int r_max) {
  OrthogonalityReport rep;
  const auto family = diagram_family(lo, hi, m, n, r_max);
  rep.family = family.size();
  std::map<WeightDiagram, std::size_t> index;
  for (std::size_t k = 0; k < family.size(); ++k) index.emplace(family[k], k);

  // b[g][h] for images h that stay inside the window.
  std::vector<std::map<WeightDiagram, Position>> b(family.size());
  parallel_for(family.size(), [&](std::size_t k) {
    for (const WeightMap& phi : enumerate_weight_maps(family[k], lo)) {
      b[k][apply_weight_map(family[k], phi)] += epsilon_sign(family[k], phi);
    }
  });

  auto inside = [&](const WeightDiagram& d) {
    return d.symbols().empty() || (d.symbols().begin()->first >= lo && d.symbols().rbegin()->first <= hi);
  };
  for (std::size_t fi = 0; fi < family.size(); ++fi) {
    const auto proj = projective_family(family[fi]);
    if (!std::all_of(proj.begin(), proj.end(), inside)) {
      ++rep.boundary_rows;
      continue;
    }
    ++rep.interior_rows;
    for (std::size_t gi = 0; gi < family.size(); ++gi) {
      Position sum = 0;
      for (const WeightDiagram& h : proj) {
        auto it = b[gi].find(h);
        if (it != b[gi].end()) sum += it->second;
      }
      ++rep.entries_checked;
      const Position expected = fi == gi ? 1 : 0;
      if (sum == expected) continue;
      ++rep.mismatches;
      if (rep.failures.size() < 20) {
        rep.failures.push_back("f=" + family[fi].render(lo, hi) + " g=" + family[gi].render(lo, hi) +
                               " entry " + std::to_string(sum) + " expected " + std::to_string(expected));
      }
    }
  }
  rep.ok = rep.mismatches == 0 && rep.interior_rows > 0;
  return rep;
}

}  // namespace superchar
