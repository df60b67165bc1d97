#include "superchar/capgraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace superchar {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

void check_vertex(const Forest& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex index out of range");
}

}  // namespace

std::vector<int> Forest::components() const {
  UnionFind uf(vertex_count());
  for (const Edge& e : edges) uf.unite(e.from, e.to);
  std::vector<int> id(labels.size(), -1);
  std::vector<int> root_id(labels.size(), -1);
  int next = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    const int root = uf.find(v);
    if (root_id[static_cast<std::size_t>(root)] < 0) root_id[static_cast<std::size_t>(root)] = next++;
    id[static_cast<std::size_t>(v)] = root_id[static_cast<std::size_t>(root)];
  }
  return id;
}

int Forest::component_count() const {
  const auto ids = components();
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

bool Forest::is_undirected_forest() const {
  UnionFind uf(vertex_count());
  for (const Edge& e : edges) {
    if (e.from < 0 || e.to < 0 || e.from >= vertex_count() || e.to >= vertex_count()) return false;
    if (!uf.unite(e.from, e.to)) return false;
  }
  return true;
}

bool Forest::is_out_forest() const {
  if (!is_undirected_forest()) return false;
  std::vector<int> indeg(labels.size(), 0);
  for (const Edge& e : edges) {
    if (++indeg[static_cast<std::size_t>(e.to)] > 1) return false;
  }
  return true;
}

Forest Forest::reversed() const {
  Forest out{labels, {}};
  for (const Edge& e : edges) out.edges.push_back({e.to, e.from});
  return out;
}

Forest Forest::with_edges(std::vector<Edge> subset) const { return Forest{labels, std::move(subset)}; }

Forest gamma(const CapForest& cf) {
  Forest g;
  g.labels = cf.crosses;
  auto index_of = [&](Position c) {
    return static_cast<int>(std::lower_bound(cf.crosses.begin(), cf.crosses.end(), c) - cf.crosses.begin());
  };
  for (Position c : cf.crosses) {
    const auto& par = cf.parent.at(c);
    if (par) g.edges.push_back({index_of(*par), index_of(c)});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<Forest> subgraphs(const Forest& g) {
  if (g.edges.size() > 30) throw InvalidInput("subgraphs: too many edges to enumerate");
  const std::size_t count = std::size_t{1} << g.edges.size();
  std::vector<Forest> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Edge> subset;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      if ((mask >> k) & 1U) subset.push_back(g.edges[k]);
    }
    out.push_back(g.with_edges(std::move(subset)));
  }
  return out;
}

Position component_min(const Forest& g, int v) {
  check_vertex(g, v);
  return component_mins(g)[static_cast<std::size_t>(v)];
}

std::vector<Position> component_mins(const Forest& g) {
  const auto ids = g.components();
  std::vector<Position> best(static_cast<std::size_t>(g.component_count()), 0);
  std::vector<bool> seen(best.size(), false);
  for (std::size_t v = 0; v < g.labels.size(); ++v) {
    const auto c = static_cast<std::size_t>(ids[v]);
    if (!seen[c] || g.labels[v] < best[c]) best[c] = g.labels[v];
    seen[c] = true;
  }
  std::vector<Position> out(g.labels.size());
  for (std::size_t v = 0; v < g.labels.size(); ++v) out[v] = best[static_cast<std::size_t>(ids[v])];
  return out;
}

BigInt linear_extensions_hook(const Forest& g) {
  if (!g.is_out_forest()) throw InvalidInput("hook formula requires an out-forest");
  const int r = g.vertex_count();
  std::vector<std::vector<int>> children(static_cast<std::size_t>(r));
  std::vector<bool> has_parent(static_cast<std::size_t>(r), false);
  for (const Edge& e : g.edges) {
    children[static_cast<std::size_t>(e.from)].push_back(e.to);
    has_parent[static_cast<std::size_t>(e.to)] = true;
  }
  BigInt product = 1;
  std::vector<int> size(static_cast<std::size_t>(r), 0);
  // Post-order from each root; depth is bounded by r.
  std::function<int(int)> visit = [&](int v) {
    int s = 1;
    for (int c : children[static_cast<std::size_t>(v)]) s += visit(c);
    size[static_cast<std::size_t>(v)] = s;
    product *= s;
    return s;
  };
  for (int v = 0; v < r; ++v) {
    if (!has_parent[static_cast<std::size_t>(v)]) visit(v);
  }
  return factorial(static_cast<unsigned>(r)) / product;
}

BigInt linear_extensions_dp(const Forest& g) {
  const int r = g.vertex_count();
  if (r > 20) throw InvalidInput("linear_extensions_dp: at most 20 vertices");
  std::vector<std::uint32_t> pred(static_cast<std::size_t>(r), 0);
  for (const Edge& e : g.edges) {
    check_vertex(g, e.from);
    check_vertex(g, e.to);
    pred[static_cast<std::size_t>(e.to)] |= std::uint32_t{1} << e.from;
  }
  const std::uint32_t full = r == 0 ? 0 : (std::uint32_t{1} << r) - 1;
  std::vector<std::uint64_t> count(static_cast<std::size_t>(full) + 1, 0);
  count[0] = 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    const std::uint64_t c = count[mask];
    if (c == 0) continue;
    for (int v = 0; v < r; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if ((mask & bit) == 0 && (pred[static_cast<std::size_t>(v)] & ~mask) == 0) count[mask | bit] += c;
    }
  }
  if (count[full] == 0) throw InvalidInput("orientation contains a directed cycle");
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &count[full]);
  return out;
}

BigInt linear_extensions(const Forest& g) {
  return g.is_out_forest() ? linear_extensions_hook(g) : linear_extensions_dp(g);
}

ThetaExpansion theta_expansion(const Forest& g) {
  const int r = g.vertex_count();
  const BigInt rfact = factorial(static_cast<unsigned>(r));
  ThetaExpansion out{ThetaPoly(static_cast<std::size_t>(r)), {}};
  for (const Forest& d : subgraphs(g)) {
    ThetaTerm t;
    t.edges = d.edges;
    t.star_edges = d.edges;
    t.sign = d.edges.size() % 2 == 0 ? 1 : -1;
    t.extensions = linear_extensions(d);
    const auto mins = component_mins(d);
    t.exponent.resize(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < t.exponent.size(); ++i) t.exponent[i] = checked_sub(mins[i], g.labels[i]);
    out.poly.add_term(t.exponent, make_rational(BigInt(t.sign * t.extensions), rfact));
    out.terms.push_back(std::move(t));
  }
  return out;
}

std::vector<Edge> special_edges(const Forest& g, const SegmentData& sd) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges) {
    const Position from = sd.tilde.at(g.labels[static_cast<std::size_t>(e.from)]);
    const Position to = sd.tilde.at(g.labels[static_cast<std::size_t>(e.to)]);
    if (from < to) out.push_back(e);
  }
  return out;
}

Subforest gamma0(const Forest& g, const SegmentData& sd) {
  const auto ids = g.components();
  const auto mins = component_mins(g);
  Subforest out;
  std::vector<bool> in(g.labels.size(), false);
  for (std::size_t v = 0; v < g.labels.size(); ++v) {
    if (sd.tilde.at(g.labels[v]) == sd.tilde.at(mins[v])) {
      in[v] = true;
      out.vertices.push_back(static_cast<int>(v));
    }
  }
  for (const Edge& e : g.edges) {
    if (in[static_cast<std::size_t>(e.from)] && in[static_cast<std::size_t>(e.to)]) out.edges.push_back(e);
  }
  return out;
}

ThetaTilde theta_tilde(const Forest& g, const SegmentData& sd, TildeExponents mode) {
  const int r = g.vertex_count();
  const BigInt rfact = factorial(static_cast<unsigned>(r));
  std::vector<Position> tilde(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < tilde.size(); ++i) tilde[i] = sd.tilde.at(g.labels[i]);

  const auto special = special_edges(g, sd);
  const Subforest g0 = gamma0(g, sd);
  const std::set<Edge> g0_edges(g0.edges.begin(), g0.edges.end());
  std::vector<Edge> fixed;
  for (const Edge& e : g.edges) {
    if (std::find(special.begin(), special.end(), e) == special.end()) fixed.push_back(e);
  }

  ThetaTilde out{ThetaPoly(static_cast<std::size_t>(r)), {}, 0, std::vector<Position>(static_cast<std::size_t>(r), 0)};
  if (special.size() > 30) throw InvalidInput("theta_tilde: too many special edges to enumerate");
  const std::size_t count = std::size_t{1} << special.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    ThetaTerm t;
    t.edges = fixed;
    for (std::size_t k = 0; k < special.size(); ++k) {
      if ((mask >> k) & 1U) t.edges.push_back(special[k]);
    }
    std::sort(t.edges.begin(), t.edges.end());
    std::size_t reversed = 0;
    for (const Edge& e : t.edges) {
      if (g0_edges.contains(e)) {
        t.star_edges.push_back(e);
      } else {
        t.star_edges.push_back({e.to, e.from});
        ++reversed;
      }
    }
    t.sign = reversed % 2 == 0 ? 1 : -1;
    const Forest delta = g.with_edges(t.edges);
    t.extensions = linear_extensions_dp(g.with_edges(t.star_edges));

    // Δ(i) is the vertex carrying the smallest plain label in i's component of Δ.
    const auto ids = delta.components();
    std::vector<int> root(static_cast<std::size_t>(r), -1);
    for (int v = 0; v < r; ++v) {
      int& best = root[static_cast<std::size_t>(ids[static_cast<std::size_t>(v)])];
      if (best < 0 || g.labels[static_cast<std::size_t>(v)] < g.labels[static_cast<std::size_t>(best)]) best = v;
    }
    t.exponent.resize(static_cast<std::size_t>(r));
    for (int v = 0; v < r; ++v) {
      const auto i = static_cast<std::size_t>(v);
      const auto m = static_cast<std::size_t>(root[static_cast<std::size_t>(ids[i])]);
      t.exponent[i] = mode == TildeExponents::kTilde ? checked_sub(tilde[m], tilde[i])
                                                     : checked_sub(g.labels[m], g.labels[i]);
    }
    out.poly.add_term(t.exponent, make_rational(BigInt(t.sign * t.extensions), rfact));
    out.terms.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < tilde.size(); ++i) {
    out.gamma[i] = checked_sub(tilde[i], g.labels[i]);
    out.nu = checked_add(out.nu, out.gamma[i]);
  }
  return out;
}

}  // namespace superchar
