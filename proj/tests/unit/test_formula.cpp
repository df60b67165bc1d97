#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "superchar/formula.hpp"
#include "superchar/suzhang.hpp"

using namespace superchar;

namespace {

HighestWeight example() { return HighestWeight{3, 3, {3, 2, 2}, {-2, -2, -3}}; }

std::vector<HighestWeight> grid(int m, int n, int lo, int hi) {
  std::vector<HighestWeight> out;
  std::vector<Position> lam(static_cast<std::size_t>(m), lo);
  std::vector<Position> mu(static_cast<std::size_t>(n), lo);
  auto next = [&](std::vector<Position>& v) {
    // Next non-increasing vector in [lo, hi], odometer style.
    for (std::size_t i = v.size(); i-- > 0;) {
      if (v[i] < hi && (i == 0 || v[i] < v[i - 1])) {
        ++v[i];
        for (std::size_t k = i + 1; k < v.size(); ++k) v[k] = lo;
        return true;
      }
    }
    return false;
  };
  do {
    std::fill(mu.begin(), mu.end(), lo);
    do {
      out.push_back(HighestWeight{m, n, lam, mu});
    } while (next(mu));
  } while (next(lam));
  return out;
}

}  // namespace

TEST(Formula, VariantNames) {
  EXPECT_EQ(parse_variant("classic"), Variant::kClassic);
  EXPECT_EQ(parse_variant("reduced"), Variant::kReduced);
  EXPECT_STREQ(variant_name(Variant::kReduced), "reduced");
  EXPECT_THROW(parse_variant("other"), InvalidInput);
}

TEST(Formula, TypicalWeightsGiveKacCharacters) {
  for (const auto& chi : grid(2, 1, -2, 2)) {
    if (diagram_of(chi).atypicality() != 0) continue;
    EXPECT_EQ(irreducible_char(chi).character, kac_char(chi));
  }
}

TEST(Formula, OneDimensionalGl11Modules) {
  for (Position a = -3; a <= 3; ++a) {
    const HighestWeight chi{1, 1, {a}, {-a}};
    for (Variant v : {Variant::kClassic, Variant::kReduced}) {
      const FormulaResult r = irreducible_char(chi, {v});
      EXPECT_EQ(r.character, CharPoly::monomial(1, 1, {a, -a}));
      EXPECT_EQ(r.atypicality, 1);
    }
  }
}

TEST(Formula, ExampleMatchesOracle) {
  const CharPoly want = oracle_char(example()).character;
  const FormulaResult classic = irreducible_char(example(), {Variant::kClassic});
  const FormulaResult reduced = irreducible_char(example(), {Variant::kReduced});
  EXPECT_EQ(classic.character, want);
  EXPECT_EQ(reduced.character, want);
  EXPECT_EQ(classic.delta_summands, 4U);
  EXPECT_EQ(reduced.delta_summands, 2U);
  EXPECT_EQ(reduced.nu, 1);
  EXPECT_EQ(classic.components, 1);
  EXPECT_EQ(classic.alphas.size(), 3U);
  EXPECT_TRUE(supersymmetry_check(classic.character));
}

TEST(Formula, SmallGridMatchesOracle) {
  for (const auto& chi : grid(2, 2, -1, 1)) {
    const CharPoly want = oracle_char(chi).character;
    EXPECT_EQ(irreducible_char(chi, {Variant::kClassic}).character, want);
    EXPECT_EQ(irreducible_char(chi, {Variant::kReduced}).character, want);
  }
}

TEST(Formula, TrivialModule) {
  const FormulaResult r = irreducible_char(HighestWeight{2, 2, {0, 0}, {0, 0}});
  EXPECT_EQ(r.character, CharPoly::monomial(2, 2, {0, 0, 0, 0}));
}

TEST(Formula, AutoDepthCoversTheBand) {
  const HighestWeight chi = example();
  EXPECT_GE(auto_depth(chi), Position{3 * 3 + 1 + 1});
  EXPECT_EQ(irreducible_char(chi).depth, auto_depth(chi));
}

TEST(Formula, ShallowDepthIsUnstable) {
  FormulaOptions opts;
  opts.depth = 0;
  EXPECT_THROW(irreducible_char(example(), opts), InstabilityError);
  opts.check_stability = false;
  EXPECT_NO_THROW(irreducible_char(example(), opts));
}

TEST(Formula, FixedDepthAgreesWithAutomatic) {
  const CharPoly at = irreducible_char_at_depth(example(), Variant::kReduced, auto_depth(example()) + 3);
  EXPECT_EQ(at, irreducible_char(example()).character);
}
