#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "superchar/charring.hpp"

using namespace superchar;

namespace {

oracle::Poly to_oracle(const CharPoly& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) {
    EXPECT_TRUE(c.get_den() == 1);
    out[oracle::Mono(e.begin(), e.end())] = c.get_num().get_si();
  }
  return out;
}

HighestWeight random_weight(std::mt19937& rng, int m, int n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  HighestWeight chi{m, n, {}, {}};
  for (int i = 0; i < m; ++i) chi.lambda.push_back(entry(rng));
  for (int j = 0; j < n; ++j) chi.mu.push_back(entry(rng));
  std::sort(chi.lambda.rbegin(), chi.lambda.rend());
  std::sort(chi.mu.rbegin(), chi.mu.rend());
  return chi;
}

}  // namespace

TEST(CharRing, ExponentVectors) {
  const HighestWeight chi{3, 3, {3, 2, 2}, {-2, -2, -3}};
  EXPECT_EQ(weight_exponent(chi), (Exponent{3, 2, 2, -2, -2, -3}));
  EXPECT_EQ(rho_exponent(3, 3), (Exponent{0, -1, -2, 2, 1, 0}));
  EXPECT_EQ(omega_exponent(chi), (Exponent{3, 1, 0, 0, -1, -3}));
  EXPECT_EQ(eps_degree(omega_exponent(chi), 3), 4);
}

TEST(CharRing, AlternationOfRegularMonomial) {
  const CharPoly j = alt_J(CharPoly::monomial(3, 3, {3, 1, 0, 0, -1, -3}));
  EXPECT_EQ(j.size(), 36U);
  for (const auto& [e, c] : j.terms()) EXPECT_TRUE(c == 1 || c == -1);
  EXPECT_TRUE(alt_J(CharPoly::monomial(2, 1, {1, 1, 0})).is_zero());
}

TEST(CharRing, DhatOfGl11) {
  CharPoly p(1, 1);
  p.add_term({0, 0}, 1);
  p.add_term({-1, 1}, 1);
  EXPECT_EQ(dhat_multiply(p), CharPoly::monomial(1, 1, {0, 0}));
  EXPECT_EQ(dhat_divide(CharPoly::monomial(1, 1, {0, 0})), p);
}

TEST(CharRing, WeylCharacterOfVector) {
  const std::vector<Position> w{1, 0};
  LaurentPoly want(2);
  want.add_term({1, 0}, 1);
  want.add_term({0, 1}, 1);
  EXPECT_EQ(weyl_character(w), want);
}

TEST(CharRing, WeylDimensionMatchesReference) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long> w(static_cast<std::size_t>(1 + trial % 4));
    for (auto& x : w) x = entry(rng);
    std::sort(w.rbegin(), w.rend());
    const std::vector<Position> wp(w.begin(), w.end());
    EXPECT_EQ(weyl_dimension(wp), oracle::weyl_dim(w));
    EXPECT_EQ(weyl_character(wp).coefficient_sum(), oracle::weyl_dim(w));
  }
}

TEST(CharRing, KacCharacterOfGl21MatchesHandProduct) {
  const HighestWeight chi{2, 1, {1, 0}, {0}};
  const oracle::Poly weyl{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}};
  const oracle::Poly odd1{{{0, 0, 0}, 1}, {{-1, 0, 1}, 1}};
  const oracle::Poly odd2{{{0, 0, 0}, 1}, {{0, -1, 1}, 1}};
  const oracle::Poly want = oracle::mul(oracle::mul(weyl, odd1), odd2);
  const CharPoly k = kac_char(chi);
  EXPECT_EQ(to_oracle(k), want);
  EXPECT_EQ(k.size(), 7U);
  EXPECT_EQ(dimension_eval(k), 8);
}

TEST(CharRing, KacDimensionFactorizes) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 3;
    const int n = 1 + (trial / 3) % 2;
    const HighestWeight chi = random_weight(rng, m, n);
    const CharPoly k = kac_char(chi);
    const long dims = oracle::weyl_dim({chi.lambda.begin(), chi.lambda.end()}) *
                      oracle::weyl_dim({chi.mu.begin(), chi.mu.end()});
    EXPECT_EQ(dimension_eval(k), dims << (m * n));
    EXPECT_EQ(kac_char_weyl(chi), kac_char_alternant(chi));
    EXPECT_TRUE(supersymmetry_check(k));
    EXPECT_EQ(k.coefficient(weight_exponent(chi)), 1);
  }
}

TEST(CharRing, SupersymmetryDetectsNonCharacters) {
  EXPECT_FALSE(supersymmetry_check(CharPoly::monomial(2, 1, {1, 0, 0})));
  EXPECT_TRUE(is_symmetric(CharPoly::monomial(2, 1, {1, 1, 0})));
  CharPoly s(2, 1);
  s.add_term({1, 0, 0}, 1);
  s.add_term({0, 1, 0}, 1);
  EXPECT_TRUE(is_symmetric(s));
  EXPECT_FALSE(supersymmetry_check(s));
}

TEST(CharRing, EvaluationMapOfExample) {
  const WeightDiagram f = build_diagram(ABPair{{3, 1, 0}, {0, 1, 3}});
  const auto ev = ev_map(f);
  ASSERT_EQ(ev.size(), 3U);
  EXPECT_EQ(ev[0].exponent, (Exponent{0, 0, 1, -1, 0, 0}));
  EXPECT_EQ(ev[1].exponent, (Exponent{0, 1, 0, 0, -1, 0}));
  EXPECT_EQ(ev[2].exponent, (Exponent{1, 0, 0, 0, 0, -1}));
  for (const auto& t : ev) EXPECT_EQ(t.sign, -1);
  for (const auto& t : pi_map(f)) EXPECT_EQ(t.sign, 1);
}

TEST(CharRing, EvaluationMapOfCores) {
  // > at 2 is a_1 and < at 0 is b_1 for gl(1|1).
  const WeightDiagram f(std::map<Position, Symbol>{{0, Symbol::kLess}, {2, Symbol::kGreater}});
  const auto ev = ev_map(f);
  ASSERT_EQ(ev.size(), 2U);
  EXPECT_EQ(ev[0].exponent, (Exponent{0, -1}));
  EXPECT_EQ(ev[1].exponent, (Exponent{1, 0}));
  EXPECT_EQ(ev[0].sign, 1);
}

TEST(CharRing, BandsAndTruncatedProducts) {
  const CharPoly k = kac_char(HighestWeight{2, 1, {1, 0}, {0}});
  const CharPoly band = k.degree_band(0, 0);
  for (const auto& [e, c] : band.terms()) EXPECT_EQ(eps_degree(e, 2), 0);
  EXPECT_EQ(k.degree_band(-1, 1), k);
  const CharPoly sq = k * k;
  EXPECT_EQ(k.multiply_above(k, 1), sq.degree_band(1, 2));
}

TEST(CharRing, NonIntegerDimensionThrows) {
  EXPECT_THROW(dimension_eval(CharPoly::monomial(1, 1, {0, 0}, make_rational(1, 2))), InternalError);
}
