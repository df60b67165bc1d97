#include "superchar/weights.hpp"

#include <algorithm>
#include <set>

namespace superchar {

bool HighestWeight::is_dominant() const {
  if (m < 1 || n < 1) return false;
  if (lambda.size() != static_cast<std::size_t>(m) || mu.size() != static_cast<std::size_t>(n)) return false;
  return std::is_sorted(lambda.rbegin(), lambda.rend()) && std::is_sorted(mu.rbegin(), mu.rend());
}

Position HighestWeight::eps_degree() const {
  Position d = 0;
  for (Position x : lambda) d = checked_add(d, x);
  return d;
}

char symbol_char(Symbol s) { return static_cast<char>(s); }

WeightDiagram::WeightDiagram(const std::map<Position, Symbol>& symbols) {
  for (const auto& [p, s] : symbols) {
    if (s != Symbol::kCircle) symbols_.emplace(p, s);
  }
}

Symbol WeightDiagram::at(Position p) const {
  auto it = symbols_.find(p);
  return it == symbols_.end() ? Symbol::kCircle : it->second;
}

std::vector<Position> WeightDiagram::positions_of(Symbol s) const {
  std::vector<Position> out;
  for (const auto& [p, t] : symbols_) {
    if (t == s) out.push_back(p);
  }
  return out;
}

std::vector<Position> WeightDiagram::support() const {
  std::vector<Position> out;
  out.reserve(symbols_.size());
  for (const auto& [p, s] : symbols_) out.push_back(p);
  return out;
}

bool WeightDiagram::is_core(Position p) const {
  const Symbol s = at(p);
  return s == Symbol::kLess || s == Symbol::kGreater;
}

int WeightDiagram::m() const {
  return static_cast<int>(std::count_if(symbols_.begin(), symbols_.end(), [](const auto& kv) {
    return kv.second == Symbol::kCross || kv.second == Symbol::kGreater;
  }));
}

int WeightDiagram::n() const {
  return static_cast<int>(std::count_if(symbols_.begin(), symbols_.end(), [](const auto& kv) {
    return kv.second == Symbol::kCross || kv.second == Symbol::kLess;
  }));
}

int WeightDiagram::atypicality() const {
  return static_cast<int>(std::count_if(symbols_.begin(), symbols_.end(),
                                        [](const auto& kv) { return kv.second == Symbol::kCross; }));
}

std::string WeightDiagram::render(Position lo, Position hi) const {
  std::string out;
  for (Position p = lo; p <= hi; ++p) out.push_back(symbol_char(at(p)));
  return out;
}

RhoVector rho(int m, int n) {
  if (m < 1 || n < 1) throw InvalidInput("rho: m and n must be positive");
  RhoVector r;
  for (int i = 1; i <= m; ++i) r.eps_part.push_back(1 - i);
  for (int j = 1; j <= n; ++j) r.delta_part.push_back(m - j);
  return r;
}

ABPair ab_sets(const HighestWeight& chi) {
  if (!chi.is_dominant()) throw InvalidInput("highest weight is not dominant (or has wrong lengths)");
  ABPair ab;
  for (int i = 1; i <= chi.m; ++i) ab.a.push_back(checked_add(chi.lambda[i - 1], 1 - i));
  for (int j = 1; j <= chi.n; ++j) {
    ab.b.push_back(checked_sub(checked_sub(0, chi.mu[j - 1]), chi.m - j));
  }
  return ab;
}

HighestWeight weight_from_ab(const ABPair& ab) {
  HighestWeight chi;
  chi.m = static_cast<int>(ab.a.size());
  chi.n = static_cast<int>(ab.b.size());
  if (!std::is_sorted(ab.a.rbegin(), ab.a.rend()) || std::adjacent_find(ab.a.begin(), ab.a.end()) != ab.a.end() ||
      !std::is_sorted(ab.b.begin(), ab.b.end()) || std::adjacent_find(ab.b.begin(), ab.b.end()) != ab.b.end()) {
    throw InvalidInput("A must be strictly decreasing and B strictly increasing");
  }
  for (int i = 1; i <= chi.m; ++i) chi.lambda.push_back(checked_sub(ab.a[i - 1], 1 - i));
  for (int j = 1; j <= chi.n; ++j) {
    chi.mu.push_back(checked_sub(checked_sub(0, ab.b[j - 1]), chi.m - j));
  }
  return chi;
}

WeightDiagram build_diagram(const ABPair& ab) {
  const std::set<Position> a(ab.a.begin(), ab.a.end());
  const std::set<Position> b(ab.b.begin(), ab.b.end());
  if (a.size() != ab.a.size() || b.size() != ab.b.size()) {
    throw InvalidInput("A and B must not contain repeated entries");
  }
  std::map<Position, Symbol> symbols;
  for (Position x : a) symbols[x] = b.contains(x) ? Symbol::kCross : Symbol::kGreater;
  for (Position x : b) {
    if (!a.contains(x)) symbols[x] = Symbol::kLess;
  }
  return WeightDiagram(symbols);
}

ABPair diagram_ab(const WeightDiagram& f) {
  ABPair ab;
  for (const auto& [p, s] : f.symbols()) {
    if (s == Symbol::kCross || s == Symbol::kGreater) ab.a.push_back(p);
    if (s == Symbol::kCross || s == Symbol::kLess) ab.b.push_back(p);
  }
  std::reverse(ab.a.begin(), ab.a.end());
  return ab;
}

HighestWeight weight_from_diagram(const WeightDiagram& f) { return weight_from_ab(diagram_ab(f)); }

Position cores_left_of(const WeightDiagram& f, Position p) {
  Position count = 0;
  for (auto it = f.symbols().begin(); it != f.symbols().end() && it->first < p; ++it) {
    if (it->second == Symbol::kLess || it->second == Symbol::kGreater) ++count;
  }
  return count;
}

Position core_reindex(const WeightDiagram& f, Position x) {
  if (f.is_core(x)) throw InvalidInput("core_reindex: position carries a core symbol");
  return checked_sub(x, cores_left_of(f, x));
}

CoreStrip core_strip(const WeightDiagram& f) {
  CoreStrip out;
  std::map<Position, Symbol> kept;
  for (Position c : f.crosses()) {
    const Position sharp = core_reindex(f, c);
    out.reindex.emplace(c, sharp);
    kept.emplace(sharp, Symbol::kCross);
  }
  out.core_free = WeightDiagram(kept);
  return out;
}

Position n_filtration(const WeightDiagram& f) {
  Position s = 0;
  for (const auto& [p, sym] : f.symbols()) {
    if (sym == Symbol::kCross || sym == Symbol::kLess) s = checked_add(s, p);
  }
  return s;
}

}  // namespace superchar
