#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "superchar/latticegen.hpp"

using namespace superchar;

namespace {

Forest example_gamma() { return gamma(cap_diagram(build_diagram(ABPair{{3, 1, 0}, {0, 1, 3}}))); }

Forest from_parents(const std::vector<int>& parent) {
  Forest g;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    g.labels.push_back(static_cast<Position>(2 * v));
    if (parent[v] >= 0) g.edges.push_back({parent[v], static_cast<int>(v)});
  }
  return g;
}

}  // namespace

TEST(Lattice, VerticesOfExample) {
  const auto vs = vertices(example_gamma());
  std::set<std::vector<Position>> points;
  for (const auto& v : vs) points.insert(v.point);
  const std::set<std::vector<Position>> want{{0, 0, 0}, {0, 1, 0}, {0, 0, 3}, {0, 1, 3}};
  EXPECT_EQ(points, want);
  const OrderPolyhedron d = polyhedron_of(example_gamma());
  for (const auto& v : vs) EXPECT_TRUE(d.contains(v.point));
}

TEST(Lattice, ConeScalarsOfExample) {
  const Forest g = example_gamma();
  std::multiset<Rational> scalars;
  for (const Forest& d : subgraphs(g)) {
    const ConeDescriptor cd = cone_genfun(d);
    scalars.insert(cd.scalar);
    EXPECT_EQ(cd.vertex, component_mins(d));
  }
  const std::multiset<Rational> want{make_rational(1, 3), make_rational(1, 2), make_rational(1, 2), 1};
  EXPECT_EQ(scalars, want);
}

TEST(Lattice, TangentConeBoundsOnlyComponentMinima) {
  const Forest g = example_gamma();
  const OrderPolyhedron full = tangent_cone(g);
  EXPECT_EQ(full.upper, (std::map<int, Position>{{0, 0}}));
  EXPECT_TRUE(full.contains(std::vector<Position>{0, 100, 50}));
  EXPECT_FALSE(full.contains(std::vector<Position>{1, 1, 1}));
  EXPECT_FALSE(full.contains(std::vector<Position>{0, -1, 0}));
  const OrderPolyhedron empty = tangent_cone(g.with_edges({}));
  EXPECT_EQ(empty.upper.size(), 3U);
}

TEST(Lattice, EnumerationMatchesTripleLoop) {
  const Forest g = example_gamma();
  const OrderPolyhedron d = polyhedron_of(g);
  std::vector<std::vector<Position>> want;
  for (Position x0 = -2; x0 <= 0; ++x0) {
    for (Position x1 = -2; x1 <= 1; ++x1) {
      for (Position x2 = -2; x2 <= 3; ++x2) {
        if (x0 <= x1 && x0 <= x2) want.push_back({x0, x1, x2});
      }
    }
  }
  EXPECT_EQ(enumerate_lattice(d, -2), want);
}

TEST(Lattice, SingleCoordinateWindow) {
  const Forest g{{5}, {}};
  EXPECT_EQ(enumerate_lattice(polyhedron_of(g), 3), (std::vector<std::vector<Position>>{{3}, {4}, {5}}));
  EXPECT_TRUE(enumerate_lattice(polyhedron_of(g), 6).empty());
}

TEST(Lattice, UnboundedCoordinateRejected) {
  const OrderPolyhedron cone = tangent_cone(example_gamma());
  EXPECT_THROW(enumerate_lattice(cone, 0), InvalidInput);
}

TEST(Lattice, DiagramPolyhedronPinsCores) {
  const WeightDiagram f(std::map<Position, Symbol>{
      {0, Symbol::kCross}, {1, Symbol::kGreater}, {3, Symbol::kCross}, {4, Symbol::kLess}});
  const OrderPolyhedron d = polyhedron_of(f);
  EXPECT_EQ(d.dimension, 4);
  EXPECT_EQ(d.pinned, (std::map<int, Position>{{1, 1}, {3, 4}}));
  EXPECT_EQ(d.upper, (std::map<int, Position>{{0, 0}, {2, 3}}));
  for (const auto& x : enumerate_lattice(d, -3)) {
    EXPECT_EQ(x[1], 1);
    EXPECT_EQ(x[3], 4);
    EXPECT_TRUE(d.contains(x));
  }
}

TEST(Lattice, ExtensionListsMatchCounts) {
  for (int r = 1; r <= 5; ++r) {
    for (const auto& parent : oracle::recursive_forests(r)) {
      const Forest g = from_parents(parent);
      const auto list = linear_extension_list(g);
      EXPECT_EQ(linear_extensions(g), list.size());
      EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
    }
  }
}

TEST(Lattice, ChainRegionsPartitionTheWindow) {
  for (int r = 1; r <= 4; ++r) {
    for (const auto& parent : oracle::recursive_forests(r)) {
      const Forest g = from_parents(parent);
      const PartitionReport rep = chain_decomposition_check(g, 2, -2);
      EXPECT_TRUE(rep.ok);
      EXPECT_EQ(rep.strict_unassigned, 0U);
      EXPECT_EQ(rep.strict_multiple, 0U);
      EXPECT_EQ(rep.closure_missing, 0U);
      EXPECT_EQ(rep.closure_extra, 0U);
      EXPECT_EQ(rep.points, rep.strict_points + rep.diagonal_points);
      EXPECT_EQ(linear_extensions(g), rep.regions);
      EXPECT_EQ(rep.regions, rep.regions_op);
    }
  }
}
