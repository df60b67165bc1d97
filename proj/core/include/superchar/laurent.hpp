#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "superchar/numeric.hpp"

namespace superchar {

using Exponent = std::vector<Position>;

/// Total degree descending, then lexicographically descending. This is the
/// canonical term order of every polynomial in the library, so iteration
/// order is also the printing order.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

Position total_degree(std::span<const Position> e);
Exponent add_exponents(std::span<const Position> a, std::span<const Position> b);
Exponent scale_exponent(std::span<const Position> a, Position k);

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Rational, GradedLexGreater>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly monomial(Exponent e, const Rational& c = 1);
  static LaurentPoly constant(std::size_t nvars, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;
  /// Adds c·x^e, erasing the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  /// Multiplies by x^shift.
  LaurentPoly shifted(std::span<const Position> shift) const;
  /// Keeps the terms satisfying pred.
  LaurentPoly filtered(const std::function<bool(const Exponent&)>& pred) const;
  /// Product, discarding product terms rejected by keep (applied term-wise).
  LaurentPoly multiply_truncated(const LaurentPoly& other,
                                 const std::function<bool(const Exponent&)>& keep) const;

  /// Sum of all coefficients, i.e. evaluation at x = (1, ..., 1).
  Rational coefficient_sum() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_arity(std::size_t n) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Exact division of p by the binomial (1 + sign·x^direction), sign = ±1.
/// direction must have an entry equal to ±1 (true for every root of gl(m|n)).
/// Throws InternalError when the remainder is non-zero.
LaurentPoly divide_by_binomial(const LaurentPoly& p, std::span<const Position> direction, int sign);

}  // namespace superchar
