#include "superchar/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace superchar {

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return make_rational(p, q);
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Position total_degree(std::span<const Position> e) {
  Position d = 0;
  for (Position x : e) d = checked_add(d, x);
  return d;
}

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const Position da = total_degree(a);
  const Position db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Exponent add_exponents(std::span<const Position> a, std::span<const Position> b) {
  if (a.size() != b.size()) throw InternalError("exponent arity mismatch");
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

Exponent scale_exponent(std::span<const Position> a, Position k) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(a[i], k);
  return out;
}

LaurentPoly LaurentPoly::monomial(Exponent e, const Rational& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
  return monomial(Exponent(nvars, 0), c);
}

void LaurentPoly::check_arity(std::size_t n) const {
  if (n != nvars_) throw InternalError("Laurent polynomial arity mismatch");
}

Rational LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  check_arity(e.size());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(std::span<const Position> shift) const {
  check_arity(shift.size());
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(add_exponents(e, shift), c);
  return out;
}

LaurentPoly LaurentPoly::filtered(const std::function<bool(const Exponent&)>& pred) const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (pred(e)) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

LaurentPoly LaurentPoly::multiply_truncated(const LaurentPoly& other,
                                            const std::function<bool(const Exponent&)>& keep) const {
  check_arity(other.nvars_);
  LaurentPoly out(nvars_);
  Rational prod;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponent e = add_exponents(ea, eb);
      if (keep && !keep(e)) continue;
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  return a.multiply_truncated(b, nullptr);
}

Rational LaurentPoly::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly divide_by_binomial(const LaurentPoly& p, std::span<const Position> direction, int sign) {
  if (direction.size() != p.nvars()) throw InternalError("divisor arity mismatch");
  if (sign != 1 && sign != -1) throw InternalError("binomial sign must be +1 or -1");
  const auto pivot_it = std::find_if(direction.begin(), direction.end(),
                                     [](Position d) { return d == 1 || d == -1; });
  if (pivot_it == direction.end()) throw InternalError("binomial direction has no unit entry");
  const auto pivot = static_cast<std::size_t>(pivot_it - direction.begin());
  const Position unit = direction[pivot];

  // Split p into strings base + k·direction; on each string p = q·(1 + sign·u)
  // is a univariate division solved bottom-up: q_k = p_k - sign·q_{k-1}.
  std::map<Exponent, std::map<Position, Rational>> strings;
  for (const auto& [e, c] : p.terms()) {
    const Position k = checked_mul(e[pivot], unit);
    Exponent base(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) base[i] = checked_sub(e[i], checked_mul(k, direction[i]));
    strings[std::move(base)].emplace(k, c);
  }

  LaurentPoly q(p.nvars());
  for (const auto& [base, coeffs] : strings) {
    const Position kmin = coeffs.begin()->first;
    const Position kmax = coeffs.rbegin()->first;
    Rational prev = 0;
    for (Position k = kmin; k < kmax; ++k) {
      auto it = coeffs.find(k);
      Rational cur = (it == coeffs.end()) ? Rational(0) : it->second;
      if (sign == 1) {
        cur -= prev;
      } else {
        cur += prev;
      }
      if (cur != 0) {
        Exponent e(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) e[i] = checked_add(base[i], checked_mul(k, direction[i]));
        q.add_term(e, cur);
      }
      prev = cur;
    }
    Rational top = coeffs.rbegin()->second;
    if (sign == 1) {
      top -= prev;
    } else {
      top += prev;
    }
    if (top != 0) throw InternalError("inexact division by binomial factor");
  }
  return q;
}

}  // namespace superchar
