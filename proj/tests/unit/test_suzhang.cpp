#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <tuple>

#include "superchar/formula.hpp"
#include "superchar/suzhang.hpp"

using namespace superchar;

namespace {

WeightDiagram random_diagram(std::mt19937& rng, int span) {
  std::uniform_int_distribution<int> pick(0, 5);
  std::map<Position, Symbol> s;
  for (Position p = 0; p < span; ++p) {
    switch (pick(rng)) {
      case 0: s[p] = Symbol::kCross; break;
      case 1: s[p] = Symbol::kLess; break;
      case 2: s[p] = Symbol::kGreater; break;
      default: break;
    }
  }
  return WeightDiagram(s);
}

}  // namespace

TEST(SuZhang, WeightMapsOfSingleCross) {
  const WeightDiagram f(std::map<Position, Symbol>{{0, Symbol::kCross}});
  const auto maps = enumerate_weight_maps(f, -2);
  EXPECT_EQ(maps, (std::vector<WeightMap>{{{0, -2}}, {{0, -1}}, {{0, 0}}}));
}

TEST(SuZhang, WeightMapsRespectNesting) {
  const WeightDiagram f(std::map<Position, Symbol>{{0, Symbol::kCross}, {1, Symbol::kCross}});
  const auto maps = enumerate_weight_maps(f, -1);
  EXPECT_EQ(maps, (std::vector<WeightMap>{{{0, -1}, {1, 0}}, {{0, -1}, {1, 1}}, {{0, 0}, {1, 1}}}));
  EXPECT_EQ(enumerate_weight_maps(f, -1, 1).size(), 2U);
  EXPECT_THROW(enumerate_weight_maps(f, 1), InvalidInput);
}

TEST(SuZhang, WeightMapsAvoidCores) {
  const WeightDiagram f(std::map<Position, Symbol>{{-1, Symbol::kGreater}, {0, Symbol::kCross}});
  for (const auto& phi : enumerate_weight_maps(f, -3)) EXPECT_NE(phi.at(0), -1);
  EXPECT_EQ(enumerate_weight_maps(f, -3).size(), 3U);
}

TEST(SuZhang, EpsilonExamples) {
  const WeightDiagram plain(std::map<Position, Symbol>{{0, Symbol::kCross}});
  EXPECT_EQ(epsilon_exponent(plain, {{0, -2}}), 2);
  EXPECT_EQ(epsilon_sign(plain, {{0, -2}}), 1);
  const WeightDiagram cored(std::map<Position, Symbol>{{1, Symbol::kGreater}, {3, Symbol::kCross}});
  EXPECT_EQ(epsilon_exponent(cored, {{3, 0}}), 2);
  EXPECT_EQ(epsilon_exponent(cored, {{3, 2}}), 1);
  EXPECT_EQ(epsilon_sign(cored, {{3, 2}}), -1);
}

TEST(SuZhang, EpsilonIgnoresCores) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightDiagram f = random_diagram(rng, 7);
    if (f.atypicality() == 0 || f.atypicality() > 3) continue;
    const CoreStrip s = core_strip(f);
    const Position cutoff = f.crosses().front() - 4;
    for (const auto& phi : enumerate_weight_maps(f, cutoff)) {
      WeightMap sharp;
      for (const auto& [a, b] : phi) sharp.emplace(s.reindex.at(a), core_reindex(f, b));
      EXPECT_EQ(epsilon_exponent(f, phi), epsilon_exponent(s.core_free, sharp));
      const WeightDiagram g = apply_weight_map(f, phi);
      EXPECT_EQ(g.m(), f.m());
      EXPECT_EQ(g.n(), f.n());
    }
  }
}

TEST(SuZhang, WindowOfExample) {
  const DegreeWindow w = character_window(HighestWeight{3, 3, {3, 2, 2}, {-2, -2, -3}});
  EXPECT_EQ(w.hi, 7);
  EXPECT_EQ(w.lo, -2);
  EXPECT_TRUE(w.contains(0));
  EXPECT_FALSE(w.contains(8));
}

TEST(SuZhang, LatticeRouteMatchesEpsilonRoute) {
  const std::vector<HighestWeight> weights{
      {2, 1, {0, 0}, {0}}, {2, 1, {1, 0}, {-1}}, {2, 2, {0, 0}, {0, 0}}, {2, 2, {1, 0}, {-1, -1}},
      {3, 3, {3, 2, 2}, {-2, -2, -3}}};
  for (const auto& chi : weights) {
    EXPECT_EQ(oracle_char_lattice(chi), oracle_char(chi).character);
  }
}

TEST(SuZhang, OracleIsAnIrreducibleCharacter) {
  const OracleResult r = oracle_char(HighestWeight{2, 2, {1, 0}, {-1, -1}});
  EXPECT_TRUE(supersymmetry_check(r.character));
  EXPECT_GT(r.maps, 0U);
  EXPECT_EQ(r.character.coefficient({1, 0, -1, -1}), 1);
  for (const auto& [e, c] : r.character.terms()) EXPECT_GT(c, 0);
}

TEST(SuZhang, WrongSignIsDetected) {
  const HighestWeight chi{2, 1, {0, 0}, {0}};
  OracleOptions opts;
  opts.sign_override = [](const WeightDiagram&, const WeightMap&) { return 1; };
  opts.check_stability = false;
  const CharPoly wrong = oracle_char(chi, opts).character;
  EXPECT_NE(wrong, irreducible_char(chi).character);
  EXPECT_EQ(oracle_char(chi).character, irreducible_char(chi).character);
}

TEST(SuZhang, DiagramFamily) {
  const auto fam = diagram_family(0, 3, 1, 1, 1);
  EXPECT_TRUE(std::is_sorted(fam.begin(), fam.end()));
  for (const auto& f : fam) {
    EXPECT_EQ(f.m(), 1);
    EXPECT_EQ(f.n(), 1);
  }
  // One × at 4 positions, or a > and a < at distinct positions.
  EXPECT_EQ(fam.size(), 4U + 12U);
}

TEST(SuZhang, OrthogonalityOnSmallWindows) {
  for (const auto& [lo, hi, m, n, r] : std::vector<std::tuple<int, int, int, int, int>>{
           {0, 5, 1, 1, 1}, {0, 6, 2, 1, 1}}) {
    const OrthogonalityReport rep = orthogonality_check(lo, hi, m, n, r);
    EXPECT_TRUE(rep.ok) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_GT(rep.interior_rows, 0U);
    EXPECT_EQ(rep.mismatches, 0U);
  }
}
