#include "superchar_cli/format.hpp"

#include <sstream>

namespace superchar::cli {

Format parse_format(std::string_view s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "latex") return Format::kLatex;
  throw InvalidInput("unknown format '" + std::string(s) + "' (expected text, json or latex)");
}

std::string rational_pq(const Rational& c) { return c.get_num().get_str() + "/" + c.get_den().get_str(); }

namespace {

std::string join(const std::vector<Position>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string latex_fraction(const Rational& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

/// Appends "c·m" to out with a leading sign; omits a unit coefficient when m is non-empty.
void append_signed(std::string& out, const Rational& c, const std::string& mono, bool first, bool latex) {
  const bool negative = c < 0;
  const Rational a = negative ? Rational(-c) : c;
  if (first) {
    if (negative) out += latex ? "-" : "-";
  } else {
    out += latex ? (negative ? "-" : "+") : (negative ? " - " : " + ");
  }
  if (mono.empty()) {
    out += latex ? latex_fraction(a) : a.get_str();
  } else if (a == 1) {
    out += mono;
  } else {
    out += latex ? latex_fraction(a) + mono : a.get_str() + " " + mono;
  }
}

Exponent split_eps(const Exponent& e, int m) { return Exponent(e.begin(), e.begin() + m); }
Exponent split_delta(const Exponent& e, int m) { return Exponent(e.begin() + m, e.end()); }

std::vector<Position> int_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string("JSON field '") + what + "' must be an integer array");
  std::vector<Position> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidInput(std::string("JSON field '") + what + "' must hold integers");
    out.push_back(v.get<Position>());
  }
  return out;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("JSON document lacks '") + key + "'");
  return j.at(key);
}

}  // namespace

std::string theta_text(const ThetaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += "t" + std::to_string(k + 1);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    append_signed(out, c, mono, first, false);
    first = false;
  }
  return out;
}

std::string theta_latex_substituted(const ThetaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string exp;
    Position parity = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      parity += e[k];
      const std::string alpha = "\\alpha_" + std::to_string(k + 1);
      const Position a = e[k] < 0 ? -e[k] : e[k];
      exp += e[k] < 0 ? "-" : (exp.empty() ? "" : "+");
      exp += a == 1 ? alpha : std::to_string(a) + alpha;
    }
    const Rational signed_c = parity % 2 == 0 ? c : Rational(-c);
    append_signed(out, signed_c, exp.empty() ? "" : "e^{" + exp + "}", first, true);
    first = false;
  }
  return out;
}

std::string gamma_text(const std::vector<Position>& gamma) {
  std::string out;
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    if (gamma[k] == 0) continue;
    const std::string mono = "alpha" + std::to_string(k + 1);
    append_signed(out, Rational(static_cast<long>(gamma[k])), mono, out.empty(), false);
  }
  return out.empty() ? "0" : out;
}

CharDocument make_document(const HighestWeight& chi, const FormulaResult& r) {
  return CharDocument{chi, r.variant, r.depth, dimension_eval(r.character), r.character,
                      r.theta, r.nu, r.gamma, r.delta_summands};
}

nlohmann::ordered_json charpoly_json(const CharPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["eps"] = split_eps(e, p.m());
    t["delta"] = split_delta(e, p.m());
    t["coeff"] = rational_pq(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

CharPoly parse_charpoly_json(const nlohmann::json& terms, int m, int n) {
  if (!terms.is_array()) throw InvalidInput("JSON 'terms' must be an array");
  CharPoly p(m, n);
  for (const auto& t : terms) {
    Exponent e = int_list(field(t, "eps"), "eps");
    const Exponent d = int_list(field(t, "delta"), "delta");
    if (e.size() != static_cast<std::size_t>(m) || d.size() != static_cast<std::size_t>(n)) {
      throw InvalidInput("JSON term has the wrong number of exponents");
    }
    e.insert(e.end(), d.begin(), d.end());
    const auto& c = field(t, "coeff");
    if (!c.is_string()) throw InvalidInput("JSON coefficient must be a \"p/q\" string");
    p.add_term(e, parse_rational(c.get<std::string>()));
  }
  return p;
}

nlohmann::ordered_json char_json(const CharDocument& d) {
  nlohmann::ordered_json j;
  j["m"] = d.weight.m;
  j["n"] = d.weight.n;
  j["weight"]["lambda"] = d.weight.lambda;
  j["weight"]["mu"] = d.weight.mu;
  j["variant"] = variant_name(d.variant);
  j["depth"] = d.depth;
  j["dimension"] = d.dimension.get_str();
  j["terms"] = charpoly_json(d.character);
  nlohmann::ordered_json theta;
  theta["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : d.theta.terms()) {
    nlohmann::ordered_json t;
    t["exp"] = e;
    t["coeff"] = rational_pq(c);
    theta["terms"].push_back(std::move(t));
  }
  theta["nu"] = d.nu;
  theta["gamma"] = d.gamma;
  theta["delta_summands"] = d.delta_summands;
  j["theta"] = std::move(theta);
  return j;
}

CharDocument parse_char_json(const nlohmann::json& j) {
  CharDocument d;
  const auto& m = field(j, "m");
  const auto& n = field(j, "n");
  if (!m.is_number_integer() || !n.is_number_integer()) throw InvalidInput("JSON 'm' and 'n' must be integers");
  d.weight.m = m.get<int>();
  d.weight.n = n.get<int>();
  const auto& w = field(j, "weight");
  d.weight.lambda = int_list(field(w, "lambda"), "lambda");
  d.weight.mu = int_list(field(w, "mu"), "mu");
  if (!d.weight.is_dominant()) throw InvalidInput("JSON weight is not dominant");
  const auto& v = field(j, "variant");
  if (!v.is_string()) throw InvalidInput("JSON 'variant' must be a string");
  d.variant = parse_variant(v.get<std::string>());
  const auto& depth = field(j, "depth");
  if (!depth.is_number_integer()) throw InvalidInput("JSON 'depth' must be an integer");
  d.depth = depth.get<Position>();
  const auto& dim = field(j, "dimension");
  if (!dim.is_string()) throw InvalidInput("JSON 'dimension' must be a decimal string");
  const Rational dim_q = parse_rational(dim.get<std::string>());
  if (dim_q.get_den() != 1) throw InvalidInput("JSON 'dimension' must be an integer");
  d.dimension = dim_q.get_num();
  d.character = parse_charpoly_json(field(j, "terms"), d.weight.m, d.weight.n);

  const auto& theta = field(j, "theta");
  d.gamma = int_list(field(theta, "gamma"), "gamma");
  d.theta = ThetaPoly(d.gamma.size());
  for (const auto& t : field(theta, "terms")) {
    const Exponent e = int_list(field(t, "exp"), "exp");
    if (e.size() != d.gamma.size()) throw InvalidInput("JSON theta exponent has the wrong length");
    const auto& c = field(t, "coeff");
    if (!c.is_string()) throw InvalidInput("JSON coefficient must be a \"p/q\" string");
    d.theta.add_term(e, parse_rational(c.get<std::string>()));
  }
  const auto& nu = field(theta, "nu");
  if (!nu.is_number_integer()) throw InvalidInput("JSON 'nu' must be an integer");
  d.nu = nu.get<Position>();
  const auto& ds = field(theta, "delta_summands");
  if (!ds.is_number_unsigned()) throw InvalidInput("JSON 'delta_summands' must be a non-negative integer");
  d.delta_summands = ds.get<std::size_t>();
  return d;
}

std::string weight_text(const HighestWeight& chi) {
  return "gl(" + std::to_string(chi.m) + "|" + std::to_string(chi.n) + ") lambda=(" + join(chi.lambda) +
         ") mu=(" + join(chi.mu) + ")";
}

std::string charpoly_lines(const CharPoly& p) {
  std::ostringstream os;
  for (const auto& [e, c] : p.terms()) {
    os << "  " << c.get_str() << "  [" << join(split_eps(e, p.m())) << " | " << join(split_delta(e, p.m()))
       << "]\n";
  }
  return os.str();
}

std::string char_text(const CharDocument& d) {
  std::ostringstream os;
  os << "ch L: " << weight_text(d.weight) << "\n";
  os << "variant " << variant_name(d.variant) << ", depth " << d.depth << ", " << d.delta_summands
     << " delta summands\n";
  os << (d.variant == Variant::kClassic ? "theta: " : "theta~: ") << theta_text(d.theta) << "\n";
  if (d.variant == Variant::kReduced) os << "nu = " << d.nu << ", gamma = " << gamma_text(d.gamma) << "\n";
  os << "dimension " << d.dimension.get_str() << ", " << d.character.size() << " terms [eps | delta]:\n";
  os << charpoly_lines(d.character);
  return os.str();
}

std::string charpoly_latex(const CharPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      const bool eps = k < static_cast<std::size_t>(p.m());
      mono += (eps ? "x_{" + std::to_string(k + 1) : "y_{" + std::to_string(k + 1 - p.m())) + "}";
      if (e[k] != 1) mono += "^{" + std::to_string(e[k]) + "}";
    }
    append_signed(out, c, mono, first, true);
    first = false;
  }
  return out;
}

std::string char_latex(const CharDocument& d) {
  std::string denominator;
  for (std::size_t k = 0; k < d.gamma.size(); ++k) denominator += "(1+e^{-\\alpha_" + std::to_string(k + 1) + "})";
  std::string top = "\\chi+\\rho";
  if (d.variant == Variant::kReduced) {
    for (std::size_t k = 0; k < d.gamma.size(); ++k) {
      if (d.gamma[k] == 0) continue;
      top += "+";
      if (d.gamma[k] != 1) top += std::to_string(d.gamma[k]);
      top += "\\alpha_" + std::to_string(k + 1);
    }
  }
  std::string out = "D\\,\\mathrm{ch}\\,L(\\chi)=";
  if (d.variant == Variant::kReduced && d.nu % 2 != 0) out += "-";
  out += "J\\left(e^{" + top + "}";
  const std::string num = theta_latex_substituted(d.theta);
  out += denominator.empty() ? (num == "1" ? "" : "\\left(" + num + "\\right)")
                             : "\\frac{" + num + "}{" + denominator + "}";
  out += "\\right)\n";
  out += "\\mathrm{ch}\\,L(\\chi)=" + charpoly_latex(d.character) + "\n";
  return out;
}

}  // namespace superchar::cli
