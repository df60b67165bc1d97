#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "superchar/errors.hpp"

namespace superchar {

/// Exact rational coefficient.
using Rational = mpq_class;
/// Exact integer for counts that can outgrow 64 bits (factorials, multiplicities).
using BigInt = mpz_class;

/// Positions on the weight line and exponent entries. Arithmetic on them goes
/// through the checked helpers below and throws instead of wrapping.
using Position = std::int64_t;

inline Position checked_add(Position a, Position b) {
  Position out;
  if (__builtin_add_overflow(a, b, &out)) throw InvalidInput("integer overflow in position arithmetic");
  return out;
}

inline Position checked_sub(Position a, Position b) {
  Position out;
  if (__builtin_sub_overflow(a, b, &out)) throw InvalidInput("integer overflow in position arithmetic");
  return out;
}

inline Position checked_mul(Position a, Position b) {
  Position out;
  if (__builtin_mul_overflow(a, b, &out)) throw InvalidInput("integer overflow in position arithmetic");
  return out;
}

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" or "p" for integers; the canonical GMP form.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q"; rejects anything else.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);

}  // namespace superchar
