#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superchar/capgraph.hpp"
#include "superchar/charring.hpp"
#include "superchar/formula.hpp"

namespace superchar::cli {

enum class Format { kText, kJson, kLatex };

Format parse_format(std::string_view s);

/// Coefficient as "p/q" (q = 1 included).
std::string rational_pq(const Rational& c);

/// "1 - 1/2 t2^-1 - 1/2 t3^-3 + 1/3 t2^-1 t3^-3".
std::string theta_text(const ThetaPoly& p);
/// θ(−e^{α_1}, …, −e^{α_r}) as LaTeX, e.g. "1+\frac{1}{2}e^{-\alpha_2}".
std::string theta_latex_substituted(const ThetaPoly& p);
/// "alpha1 + 2 alpha3", or "0".
std::string gamma_text(const std::vector<Position>& gamma);

/// Everything `superchar char` emits; also the JSON document read back by parse_char_json.
struct CharDocument {
  HighestWeight weight;
  Variant variant = Variant::kClassic;
  Position depth = 0;
  BigInt dimension;
  CharPoly character;
  ThetaPoly theta;
  Position nu = 0;
  std::vector<Position> gamma;
  std::size_t delta_summands = 0;
};

CharDocument make_document(const HighestWeight& chi, const FormulaResult& r);

nlohmann::ordered_json char_json(const CharDocument& d);
/// Inverse of char_json; throws InvalidInput on malformed documents.
CharDocument parse_char_json(const nlohmann::json& j);

std::string char_text(const CharDocument& d);
std::string char_latex(const CharDocument& d);

/// Terms of a character, one per line: coefficient then [ε-part | δ-part].
std::string charpoly_lines(const CharPoly& p);
nlohmann::ordered_json charpoly_json(const CharPoly& p);
CharPoly parse_charpoly_json(const nlohmann::json& terms, int m, int n);
/// Monomial LaTeX in x_i, y_j.
std::string charpoly_latex(const CharPoly& p);

std::string weight_text(const HighestWeight& chi);

}  // namespace superchar::cli
