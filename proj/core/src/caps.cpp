#include "superchar/caps.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace superchar {

Position CapForest::end_of(Position c) const {
  auto it = cap_end.find(c);
  if (it == cap_end.end()) throw InvalidInput("position " + std::to_string(c) + " is not a cross");
  return it->second;
}

std::map<Position, Position> caps_greedy(const WeightDiagram& f) {
  std::map<Position, Position> ends;
  std::set<Position> used;
  const auto crosses = f.crosses();
  for (auto it = crosses.rbegin(); it != crosses.rend(); ++it) {
    Position p = checked_add(*it, 1);
    while (f.at(p) != Symbol::kCircle || used.contains(p)) p = checked_add(p, 1);
    ends.emplace(*it, p);
    used.insert(p);
  }
  return ends;
}

std::map<Position, Position> caps_balanced(const WeightDiagram& f) {
  std::map<Position, Position> ends;
  for (Position a : f.crosses()) {
    Position crosses = 0;
    Position circles = 0;
    for (Position p = checked_add(a, 1);; p = checked_add(p, 1)) {
      const Symbol s = f.at(p);
      if (s == Symbol::kCircle && crosses == circles) {
        ends.emplace(a, p);
        break;
      }
      if (s == Symbol::kCross) ++crosses;
      if (s == Symbol::kCircle) ++circles;
    }
  }
  return ends;
}

CapForest cap_diagram(const WeightDiagram& f) {
  CapForest cf;
  cf.crosses = f.crosses();
  cf.cap_end = caps_greedy(f);
  if (cf.cap_end != caps_balanced(f)) {
    throw InternalError("greedy and balanced cap constructions disagree on " +
                        f.render(f.symbols().begin()->first, f.symbols().rbegin()->first));
  }
  for (Position b : cf.crosses) {
    std::optional<Position> best;
    for (Position a : cf.crosses) {
      if (a < b && cf.cap_end.at(b) < cf.cap_end.at(a)) {
        if (!best || cf.cap_end.at(a) < cf.cap_end.at(*best)) best = a;
      }
    }
    cf.parent.emplace(b, best);
  }
  return cf;
}

bool precedes(const CapForest& cf, Position a, Position b) {
  const Position ea = cf.end_of(a);
  const Position eb = cf.end_of(b);
  return a < b && eb < ea;
}

WeightDiagram sigma_swap(const WeightDiagram& f, std::span<const Position> subset) {
  const auto ends = caps_greedy(f);
  std::map<Position, Symbol> symbols = f.symbols();
  for (Position c : subset) {
    auto it = ends.find(c);
    if (it == ends.end()) throw InvalidInput("sigma_swap: " + std::to_string(c) + " is not a cross");
    symbols.erase(c);
  }
  for (Position c : subset) symbols[ends.at(c)] = Symbol::kCross;
  return WeightDiagram(symbols);
}

std::vector<WeightDiagram> projective_family(const WeightDiagram& f) {
  const auto crosses = f.crosses();
  if (crosses.size() > 30) throw InvalidInput("projective_family: atypicality too large to enumerate");
  const std::size_t count = std::size_t{1} << crosses.size();
  std::vector<WeightDiagram> out;
  out.reserve(count);
  std::vector<Position> subset;
  for (std::size_t mask = 0; mask < count; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < crosses.size(); ++i) {
      if ((mask >> i) & 1U) subset.push_back(crosses[i]);
    }
    out.push_back(sigma_swap(f, subset));
  }
  return out;
}

SegmentData segment_data(const WeightDiagram& f) {
  SegmentData sd;
  const auto crosses = f.crosses();
  std::size_t i = 0;
  while (i < crosses.size()) {
    std::size_t j = i;
    // Extend while everything strictly between consecutive crosses is core.
    while (j + 1 < crosses.size()) {
      bool only_core = true;
      for (Position p = checked_add(crosses[j], 1); p < crosses[j + 1]; ++p) {
        if (!f.is_core(p)) {
          only_core = false;
          break;
        }
      }
      if (!only_core) break;
      ++j;
    }
    sd.segments.emplace_back(crosses[i], crosses[j]);
    for (std::size_t k = i; k <= j; ++k) sd.tilde.emplace(crosses[k], crosses[j]);
    i = j + 1;
  }
  return sd;
}

std::string render_caps(const WeightDiagram& f, const CapForest& cf) {
  if (f.symbols().empty()) return "(empty diagram)\n";
  Position lo = f.symbols().begin()->first;
  Position hi = f.symbols().rbegin()->first;
  for (const auto& [c, e] : cf.cap_end) hi = std::max(hi, e);

  std::size_t width = 3;
  for (Position p = lo; p <= hi; ++p) width = std::max(width, std::to_string(p).size() + 1);
  const auto col = [&](Position p) { return static_cast<std::size_t>(p - lo) * width + width - 1; };
  const std::size_t line_len = static_cast<std::size_t>(hi - lo + 1) * width;

  std::map<Position, int> height;
  std::function<int(Position)> h = [&](Position c) -> int {
    if (auto it = height.find(c); it != height.end()) return it->second;
    int best = 0;
    for (const auto& [child, par] : cf.parent) {
      if (par && *par == c) best = std::max(best, h(child));
    }
    return height[c] = best + 1;
  };
  int max_height = 0;
  for (Position c : cf.crosses) max_height = std::max(max_height, h(c));

  std::string out;
  for (int row = max_height; row >= 1; --row) {
    std::string line(line_len, ' ');
    for (Position c : cf.crosses) {
      const int hc = height.at(c);
      if (hc < row) continue;
      const std::size_t left = col(c);
      const std::size_t right = col(cf.cap_end.at(c));
      if (hc == row) {
        for (std::size_t k = left; k <= right; ++k) line[k] = '-';
        line[left] = '+';
        line[right] = '+';
      } else {
        line[left] = '|';
        line[right] = '|';
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  std::string symbols(line_len, ' ');
  std::string labels(line_len, ' ');
  for (Position p = lo; p <= hi; ++p) {
    symbols[col(p)] = symbol_char(f.at(p));
    const std::string s = std::to_string(p);
    labels.replace(col(p) + 1 - s.size(), s.size(), s);
  }
  out += symbols + "\n" + labels + "\n";
  return out;
}

}  // namespace superchar
