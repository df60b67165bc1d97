#include "superchar/latticegen.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace superchar {

bool OrderPolyhedron::contains(std::span<const Position> x) const {
  if (static_cast<int>(x.size()) != dimension) return false;
  for (const auto& [i, b] : upper) {
    if (x[static_cast<std::size_t>(i)] > b) return false;
  }
  for (const auto& [i, v] : pinned) {
    if (x[static_cast<std::size_t>(i)] != v) return false;
  }
  for (const Edge& e : chain_edges) {
    if (x[static_cast<std::size_t>(e.from)] > x[static_cast<std::size_t>(e.to)]) return false;
  }
  return true;
}

OrderPolyhedron polyhedron_of(const Forest& g) {
  OrderPolyhedron p;
  p.dimension = g.vertex_count();
  p.labels = g.labels;
  for (int i = 0; i < p.dimension; ++i) p.upper.emplace(i, g.labels[static_cast<std::size_t>(i)]);
  p.chain_edges = g.edges;
  return p;
}

OrderPolyhedron polyhedron_of(const WeightDiagram& f) {
  OrderPolyhedron p;
  p.labels = f.support();
  p.dimension = static_cast<int>(p.labels.size());
  std::map<Position, int> index;
  for (int k = 0; k < p.dimension; ++k) {
    const Position c = p.labels[static_cast<std::size_t>(k)];
    index.emplace(c, k);
    if (f.at(c) == Symbol::kCross) {
      p.upper.emplace(k, c);
    } else {
      p.pinned.emplace(k, c);
    }
  }
  const Forest g = gamma(cap_diagram(f));
  for (const Edge& e : g.edges) {
    p.chain_edges.push_back({index.at(g.labels[static_cast<std::size_t>(e.from)]),
                             index.at(g.labels[static_cast<std::size_t>(e.to)])});
  }
  return p;
}

OrderPolyhedron polyhedron_with_bound(const Forest& g, Position a) {
  OrderPolyhedron p = polyhedron_of(g);
  for (auto& [i, b] : p.upper) b = a;
  return p;
}

std::vector<Vertex> vertices(const Forest& g) {
  std::vector<Vertex> out;
  for (const Forest& d : subgraphs(g)) out.push_back({d.edges, component_mins(d)});
  return out;
}

OrderPolyhedron tangent_cone(const Forest& delta) {
  OrderPolyhedron p;
  p.dimension = delta.vertex_count();
  p.labels = delta.labels;
  const auto mins = component_mins(delta);
  for (int i = 0; i < p.dimension; ++i) {
    if (mins[static_cast<std::size_t>(i)] == delta.labels[static_cast<std::size_t>(i)]) {
      p.upper.emplace(i, delta.labels[static_cast<std::size_t>(i)]);
    }
  }
  p.chain_edges = delta.edges;
  return p;
}

ConeDescriptor cone_genfun(const Forest& delta) {
  ConeDescriptor c;
  c.vertex = component_mins(delta);
  c.scalar = make_rational(linear_extensions(delta), factorial(static_cast<unsigned>(delta.vertex_count())));
  c.numerator = c.vertex;
  c.denominator_vars.resize(static_cast<std::size_t>(delta.vertex_count()));
  std::iota(c.denominator_vars.begin(), c.denominator_vars.end(), 0);
  return c;
}

void for_each_lattice_point(const OrderPolyhedron& p, Position cutoff,
                            const std::function<void(std::span<const Position>)>& visit) {
  const auto d = static_cast<std::size_t>(p.dimension);
  std::vector<std::optional<Position>> ub(d);
  for (const auto& [i, b] : p.upper) ub[static_cast<std::size_t>(i)] = b;
  for (const auto& [i, v] : p.pinned) {
    auto& u = ub[static_cast<std::size_t>(i)];
    u = u ? std::min(*u, v) : v;
  }
  // x_from ≤ x_to ≤ ub(to); the chain graph is acyclic, so d rounds suffice.
  for (std::size_t round = 0; round < d; ++round) {
    for (const Edge& e : p.chain_edges) {
      const auto& bt = ub[static_cast<std::size_t>(e.to)];
      auto& bf = ub[static_cast<std::size_t>(e.from)];
      if (bt && (!bf || *bt < *bf)) bf = bt;
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!ub[i]) throw InvalidInput("enumerate_lattice: coordinate " + std::to_string(i) + " is unbounded above");
  }
  std::vector<std::vector<Edge>> due(d);
  for (const Edge& e : p.chain_edges) due[static_cast<std::size_t>(std::max(e.from, e.to))].push_back(e);

  std::vector<Position> x(d, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == d) {
      visit(x);
      return;
    }
    const auto pin = p.pinned.find(static_cast<int>(k));
    const Position lo = pin != p.pinned.end() ? pin->second : cutoff;
    const Position hi = pin != p.pinned.end() ? std::min(pin->second, *ub[k]) : *ub[k];
    for (Position v = lo; v <= hi; ++v) {
      x[k] = v;
      bool ok = true;
      for (const Edge& e : due[k]) {
        if (x[static_cast<std::size_t>(e.from)] > x[static_cast<std::size_t>(e.to)]) {
          ok = false;
          break;
        }
      }
      if (ok) rec(k + 1);
    }
  };
  rec(0);
}

std::vector<std::vector<Position>> enumerate_lattice(const OrderPolyhedron& p, Position cutoff) {
  std::vector<std::vector<Position>> out;
  for_each_lattice_point(p, cutoff, [&](std::span<const Position> x) { out.emplace_back(x.begin(), x.end()); });
  return out;
}

std::vector<std::vector<int>> linear_extension_list(const Forest& g) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> out;
  std::vector<int> pos(order.size());
  do {
    for (std::size_t k = 0; k < order.size(); ++k) pos[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    const bool ok = std::all_of(g.edges.begin(), g.edges.end(), [&](const Edge& e) {
      return pos[static_cast<std::size_t>(e.from)] < pos[static_cast<std::size_t>(e.to)];
    });
    if (ok) out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

PartitionReport chain_decomposition_check(const Forest& g, Position a, Position cutoff) {
  if (cutoff > a) throw InvalidInput("chain_decomposition_check: cutoff above the bound");
  PartitionReport rep;
  const auto sigmas = linear_extension_list(g);
  const std::set<std::vector<int>> sigma_set(sigmas.begin(), sigmas.end());
  rep.regions = sigmas.size();
  rep.regions_op = linear_extension_list(g.reversed()).size();
  rep.strict_region_counts.assign(sigmas.size(), 0);

  const OrderPolyhedron d = polyhedron_with_bound(g, a);
  const auto r = static_cast<std::size_t>(g.vertex_count());

  auto chain_holds = [&](std::span<const Position> x, const std::vector<int>& s, bool strict) {
    for (std::size_t k = 0; k + 1 < r; ++k) {
      const Position lhs = x[static_cast<std::size_t>(s[k])];
      const Position rhs = x[static_cast<std::size_t>(s[k + 1])];
      if (strict ? lhs >= rhs : lhs > rhs) return false;
    }
    return r == 0 || x[static_cast<std::size_t>(s[r - 1])] <= a;
  };

  // Every point of the box [cutoff, a]^r, so that the closure side can be
  // checked against D_Γ(a) in both directions.
  OrderPolyhedron box;
  box.dimension = static_cast<int>(r);
  for (int i = 0; i < box.dimension; ++i) box.upper.emplace(i, a);
  for_each_lattice_point(box, cutoff, [&](std::span<const Position> x) {
    const bool inside = d.contains(x);
    bool in_closure = false;
    for (const auto& s : sigmas) {
      if (chain_holds(x, s, false)) {
        in_closure = true;
        break;
      }
    }
    if (in_closure && !inside) ++rep.closure_extra;
    if (!inside) return;
    ++rep.points;
    if (!in_closure) ++rep.closure_missing;

    const std::set<Position> distinct(x.begin(), x.end());
    if (distinct.size() == r) {
      ++rep.strict_points;
      std::size_t hits = 0;
      for (std::size_t k = 0; k < sigmas.size(); ++k) {
        if (chain_holds(x, sigmas[k], true)) {
          ++hits;
          ++rep.strict_region_counts[k];
        }
      }
      if (hits == 0) ++rep.strict_unassigned;
      if (hits > 1) ++rep.strict_multiple;
    } else {
      ++rep.diagonal_points;
      std::vector<int> s(r);
      std::iota(s.begin(), s.end(), 0);
      std::stable_sort(s.begin(), s.end(), [&](int i, int j) {
        return x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(j)];
      });
      if (!sigma_set.contains(s)) ++rep.diagonal_unassigned;
    }
  });

  const bool equal_counts = std::adjacent_find(rep.strict_region_counts.begin(), rep.strict_region_counts.end(),
                                               std::not_equal_to<>()) == rep.strict_region_counts.end();
  rep.ok = rep.strict_unassigned == 0 && rep.strict_multiple == 0 && rep.diagonal_unassigned == 0 &&
           rep.closure_missing == 0 && rep.closure_extra == 0 && equal_counts && rep.regions == rep.regions_op;
  return rep;
}

}  // namespace superchar
