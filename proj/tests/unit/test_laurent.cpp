#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "superchar/laurent.hpp"

using namespace superchar;

TEST(Laurent, TermsCancelAndVanish) {
  LaurentPoly p = LaurentPoly::monomial({1, -2}, 3);
  p += LaurentPoly::monomial({1, -2}, -3);
  EXPECT_TRUE(p.is_zero());
  p.add_term({0, 0}, 0);
  EXPECT_TRUE(p.is_zero());
}

TEST(Laurent, GradedOrderPutsHighDegreeFirst) {
  LaurentPoly p(3);
  p.add_term({0, 0, 0}, 1);
  p.add_term({0, -1, 0}, 1);
  p.add_term({0, 0, -3}, 1);
  p.add_term({0, -1, -3}, 1);
  std::vector<Exponent> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  const std::vector<Exponent> want{{0, 0, 0}, {0, -1, 0}, {0, 0, -3}, {0, -1, -3}};
  EXPECT_EQ(order, want);
}

TEST(Laurent, ProductAndShift) {
  LaurentPoly a = LaurentPoly::constant(2, 1);
  a.add_term({1, 0}, 1);
  LaurentPoly b = LaurentPoly::constant(2, 1);
  b.add_term({1, 0}, -1);
  const LaurentPoly prod = a * b;
  EXPECT_EQ(prod.size(), 2U);
  EXPECT_EQ(prod.coefficient({2, 0}), -1);
  EXPECT_EQ(prod.shifted(std::vector<Position>{-2, 5}).coefficient({0, 5}), -1);
}

TEST(Laurent, ExactDivisionRecoversFactor) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-4, 4);
  const std::vector<Exponent> directions{{-1, 1, 0}, {0, -1, 1}, {1, 0, -1}, {-1, 0, 0}};
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly p(3);
    for (int t = 0; t < 6; ++t) p.add_term({exp(rng), exp(rng), exp(rng)}, make_rational(coeff(rng), 1 + (t % 3)));
    const Exponent& d = directions[static_cast<std::size_t>(trial) % directions.size()];
    const int sign = trial % 2 == 0 ? 1 : -1;
    LaurentPoly factor = LaurentPoly::constant(3, 1);
    factor.add_term(d, sign);
    EXPECT_EQ(divide_by_binomial(p * factor, d, sign), p);
  }
}

TEST(Laurent, InexactDivisionThrows) {
  const LaurentPoly p = LaurentPoly::monomial({0, 0});
  EXPECT_THROW(divide_by_binomial(p, std::vector<Position>{1, -1}, -1), InternalError);
  EXPECT_THROW(divide_by_binomial(p, std::vector<Position>{2, 0}, 1), InternalError);
}

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+4"), 4);
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("1/-2"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
}

TEST(Numeric, OverflowIsRejected) {
  constexpr Position big = std::numeric_limits<Position>::max();
  EXPECT_THROW(checked_add(big, 1), InvalidInput);
  EXPECT_THROW(checked_mul(big, 2), InvalidInput);
  EXPECT_EQ(checked_sub(Position{5}, Position{7}), -2);
  EXPECT_EQ(factorial(6), 720);
}
