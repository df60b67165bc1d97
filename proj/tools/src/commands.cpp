#include "superchar_cli/commands.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "superchar/formula.hpp"
#include "superchar/suzhang.hpp"
#include "superchar_cli/verify.hpp"

namespace superchar::cli {

std::vector<Position> parse_int_list(const std::string& s) {
  std::vector<Position> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rational q = parse_rational(item);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw InvalidInput("'" + item + "' is not an integer");
    out.push_back(q.get_num().get_si());
  }
  if (s.back() == ',') throw InvalidInput("trailing comma in '" + s + "'");
  return out;
}

HighestWeight resolve_weight(const JobConfig& cfg) {
  if (!cfg.ab.empty()) {
    if (!cfg.lambda.empty() || !cfg.mu.empty()) throw InvalidInput("give either --ab or --lambda/--mu, not both");
    const auto slash = cfg.ab.find('/');
    if (slash == std::string::npos) throw InvalidInput("--ab expects \"A/B\", e.g. 3,1,0/0,1,3");
    ABPair ab{parse_int_list(cfg.ab.substr(0, slash)), parse_int_list(cfg.ab.substr(slash + 1))};
    if (ab.a.empty() || ab.b.empty()) throw InvalidInput("--ab: A and B must be non-empty");
    const HighestWeight chi = weight_from_ab(ab);
    if ((cfg.m && *cfg.m != chi.m) || (cfg.n && *cfg.n != chi.n)) {
      throw InvalidInput("--m/--n disagree with the sizes of A and B");
    }
    return chi;
  }
  if (!cfg.m || !cfg.n) throw InvalidInput("--m and --n are required (or use --ab)");
  HighestWeight chi{*cfg.m, *cfg.n, parse_int_list(cfg.lambda), parse_int_list(cfg.mu)};
  if (chi.m < 1 || chi.n < 1) throw InvalidInput("--m and --n must be positive");
  if (chi.lambda.size() != static_cast<std::size_t>(chi.m)) throw InvalidInput("--lambda must have m entries");
  if (chi.mu.size() != static_cast<std::size_t>(chi.n)) throw InvalidInput("--mu must have n entries");
  if (!chi.is_dominant()) throw InvalidInput("weight is not dominant: lambda and mu must be non-increasing");
  return chi;
}

namespace {

FormulaOptions formula_options(const JobConfig& cfg) {
  FormulaOptions fo;
  fo.variant = parse_variant(cfg.variant);
  if (cfg.depth != "auto") {
    const auto d = parse_int_list(cfg.depth);
    if (d.size() != 1 || d[0] < 0) throw InvalidInput("--depth must be 'auto' or a non-negative integer");
    fo.depth = d[0];
  }
  return fo;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::pair<Position, Position> render_range(const WeightDiagram& f, const CapForest& cf) {
  if (f.symbols().empty()) return {0, 0};
  Position lo = f.symbols().begin()->first - 1;
  Position hi = f.symbols().rbegin()->first;
  for (const auto& [c, e] : cf.cap_end) hi = std::max(hi, e);
  return {lo, hi + 1};
}

std::string join_positions(const std::vector<Position>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

nlohmann::ordered_json weight_json(const HighestWeight& chi) {
  nlohmann::ordered_json j;
  j["lambda"] = chi.lambda;
  j["mu"] = chi.mu;
  return j;
}

}  // namespace

std::string cmd_char(const JobConfig& cfg) {
  const HighestWeight chi = resolve_weight(cfg);
  const Format fmt = parse_format(cfg.format);
  const CharDocument d = make_document(chi, irreducible_char(chi, formula_options(cfg)));
  switch (fmt) {
    case Format::kJson: return dump(char_json(d));
    case Format::kLatex: return char_latex(d);
    case Format::kText: break;
  }
  return char_text(d);
}

std::string cmd_diagram(const JobConfig& cfg) {
  const HighestWeight chi = resolve_weight(cfg);
  const Format fmt = parse_format(cfg.format);
  const ABPair ab = ab_sets(chi);
  const WeightDiagram f = build_diagram(ab);
  const CapForest cf = cap_diagram(f);
  const Forest g = gamma(cf);
  const SegmentData sd = segment_data(f);

  if (fmt == Format::kJson) {
    nlohmann::ordered_json j;
    j["m"] = chi.m;
    j["n"] = chi.n;
    j["weight"] = weight_json(chi);
    j["A"] = ab.a;
    j["B"] = ab.b;
    j["symbols"] = nlohmann::ordered_json::array();
    for (const auto& [p, s] : f.symbols()) j["symbols"].push_back({{"pos", p}, {"sym", std::string(1, symbol_char(s))}});
    j["crosses"] = cf.crosses;
    j["caps"] = nlohmann::ordered_json::array();
    for (const auto& [c, e] : cf.cap_end) j["caps"].push_back({{"start", c}, {"end", e}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges) {
      j["edges"].push_back({{"from", g.labels[static_cast<std::size_t>(e.from)]},
                            {"to", g.labels[static_cast<std::size_t>(e.to)]}});
    }
    j["segments"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : sd.segments) j["segments"].push_back({a, b});
    return dump(j);
  }

  std::ostringstream os;
  if (fmt == Format::kLatex) {
    const auto [lo, hi] = render_range(f, cf);
    os << "\\begin{array}{" << std::string(static_cast<std::size_t>(hi - lo + 1), 'c') << "}\n";
    for (Position p = lo; p <= hi; ++p) {
      const Symbol s = f.at(p);
      os << (s == Symbol::kCross ? "\\times" : s == Symbol::kLess ? "<" : s == Symbol::kGreater ? ">" : "\\circ");
      os << (p == hi ? "\\\\\n" : " & ");
    }
    for (Position p = lo; p <= hi; ++p) os << p << (p == hi ? "\n" : " & ");
    os << "\\end{array}\n";
    return os.str();
  }
  os << weight_text(chi) << "\n";
  os << "A = {" << join_positions(ab.a) << "}  B = {" << join_positions(ab.b) << "}\n";
  os << "atypicality " << g.vertex_count() << ", " << g.component_count() << " components\n\n";
  os << render_caps(f, cf) << "\n";
  os << "Gamma_f edges:";
  if (g.edges.empty()) os << " none";
  for (const Edge& e : g.edges) {
    os << " " << g.labels[static_cast<std::size_t>(e.from)] << "->" << g.labels[static_cast<std::size_t>(e.to)];
  }
  os << "\nsegments:";
  if (sd.segments.empty()) os << " none";
  for (const auto& [a, b] : sd.segments) os << " [" << a << "," << b << "]";
  os << "\n";
  return os.str();
}

std::string cmd_theta(const JobConfig& cfg) {
  const HighestWeight chi = resolve_weight(cfg);
  const Format fmt = parse_format(cfg.format);
  const Variant v = parse_variant(cfg.variant);
  const WeightDiagram f = diagram_of(chi);
  const Forest g = gamma(cap_diagram(f));

  ThetaPoly poly;
  std::vector<ThetaTerm> terms;
  Position nu = 0;
  std::vector<Position> gam(g.labels.size(), 0);
  if (v == Variant::kClassic) {
    ThetaExpansion t = theta_expansion(g);
    poly = std::move(t.poly);
    terms = std::move(t.terms);
  } else {
    ThetaTilde t = theta_tilde(g, segment_data(f));
    poly = std::move(t.poly);
    terms = std::move(t.terms);
    nu = t.nu;
    gam = t.gamma;
  }

  if (fmt == Format::kJson) {
    nlohmann::ordered_json j;
    j["variant"] = variant_name(v);
    j["crosses"] = g.labels;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : poly.terms()) j["terms"].push_back({{"exp", e}, {"coeff", rational_pq(c)}});
    j["summands"] = nlohmann::ordered_json::array();
    auto edges_json = [&](const std::vector<Edge>& es) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const Edge& e : es) {
        a.push_back({g.labels[static_cast<std::size_t>(e.from)], g.labels[static_cast<std::size_t>(e.to)]});
      }
      return a;
    };
    for (const ThetaTerm& t : terms) {
      nlohmann::ordered_json s;
      s["edges"] = edges_json(t.edges);
      s["star_edges"] = edges_json(t.star_edges);
      s["sign"] = t.sign;
      s["extensions"] = t.extensions.get_str();
      s["exp"] = t.exponent;
      j["summands"].push_back(std::move(s));
    }
    j["nu"] = nu;
    j["gamma"] = gam;
    return dump(j);
  }
  if (fmt == Format::kLatex) {
    std::string body = theta_text(poly);
    return std::string(v == Variant::kClassic ? "\\theta" : "\\tilde\\theta") + "(\\Gamma,t)=" +
           theta_latex_substituted(poly) + "\\quad\\text{at } t_i=-e^{\\alpha_i}\n";
  }
  std::string out = theta_text(poly) + "\n";
  if (v == Variant::kReduced) out += "nu = " + std::to_string(nu) + "\ngamma = " + gamma_text(gam) + "\n";
  return out;
}

std::string cmd_kac(const JobConfig& cfg) {
  const HighestWeight chi = resolve_weight(cfg);
  const Format fmt = parse_format(cfg.format);
  const CharPoly k = kac_char(chi);
  if (fmt == Format::kJson) {
    nlohmann::ordered_json j;
    j["m"] = chi.m;
    j["n"] = chi.n;
    j["weight"] = weight_json(chi);
    j["dimension"] = dimension_eval(k).get_str();
    j["terms"] = charpoly_json(k);
    return dump(j);
  }
  if (fmt == Format::kLatex) return "\\mathrm{ch}\\,K(\\chi)=" + charpoly_latex(k) + "\n";
  std::ostringstream os;
  os << "ch K: " << weight_text(chi) << "\n";
  os << "dimension " << dimension_eval(k).get_str() << ", " << k.size() << " terms [eps | delta]:\n";
  os << charpoly_lines(k);
  return os.str();
}

std::string cmd_proj(const JobConfig& cfg) {
  const HighestWeight chi = resolve_weight(cfg);
  const Format fmt = parse_format(cfg.format);
  if (fmt == Format::kLatex) throw InvalidInput("proj supports text and json output");
  const WeightDiagram f = diagram_of(chi);
  const CapForest cf = cap_diagram(f);
  const auto family = projective_family(f);
  auto [lo, hi] = render_range(f, cf);
  if (fmt == Format::kJson) {
    nlohmann::ordered_json j;
    j["m"] = chi.m;
    j["n"] = chi.n;
    j["weight"] = weight_json(chi);
    j["family"] = nlohmann::ordered_json::array();
    for (const auto& g : family) {
      const HighestWeight w = weight_from_diagram(g);
      j["family"].push_back({{"diagram", g.render(lo, hi)}, {"weight", weight_json(w)}});
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "P(f) for " << weight_text(chi) << ": " << family.size() << " Kac factors\n";
  os << "positions " << lo << ".." << hi << "\n";
  for (const auto& g : family) {
    const HighestWeight w = weight_from_diagram(g);
    os << "  " << g.render(lo, hi) << "  lambda=(" << join_positions(w.lambda) << ") mu=(" << join_positions(w.mu)
       << ")\n";
  }
  return os.str();
}

int cmd_verify(const JobConfig& cfg, std::ostream& out) {
  VerifyOptions vo;
  if (!cfg.only.empty()) {
    std::stringstream ss(cfg.only);
    std::string item;
    while (std::getline(ss, item, ',')) vo.only.push_back(item);
  }
  if (cfg.m || cfg.n) {
    if (!cfg.m || !cfg.n) throw InvalidInput("verify: give both --m and --n, or neither");
    vo.shapes = {{*cfg.m, *cfg.n}};
  }
  vo.mutate_sign = cfg.mutate_sign;
  const Format fmt = parse_format(cfg.format);
  if (fmt == Format::kLatex) throw InvalidInput("verify supports text and json output");
  const auto results = run_verify(vo);
  out << (fmt == Format::kJson ? dump(verify_json(results)) : verify_text(results));
  const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.ok(); });
  return ok ? kExitOk : kExitVerifyFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters of irreducible gl(m|n)-modules"};
  app.require_subcommand(1);
  JobConfig cfg;
  std::string command;

  auto add_weight = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "rank of the even gl(m) part");
    sub->add_option("--n", cfg.n, "rank of the odd gl(n) part");
    sub->add_option("--lambda", cfg.lambda, "comma-separated λ (non-increasing)")->allow_extra_args(false);
    sub->add_option("--mu", cfg.mu, "comma-separated μ (non-increasing)")->allow_extra_args(false);
    sub->add_option("--ab", cfg.ab, "diagram sets as A/B, e.g. 3,1,0/0,1,3");
    sub->add_option("--format", cfg.format, "text, json or latex");
  };
  struct Sub {
    const char* name;
    const char* help;
  };
  for (const Sub& s : {Sub{"char", "character of L(χ) from the closed formula"},
                       Sub{"diagram", "weight diagram, caps and the forest Γ_f"},
                       Sub{"theta", "the polynomial θ (classic) or θ̃ (reduced)"},
                       Sub{"kac", "character of the Kac module K(χ)"},
                       Sub{"proj", "Kac factors of the projective cover P(χ)"}}) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_weight(sub);
    if (std::string(s.name) == "char" || std::string(s.name) == "theta") {
      sub->add_option("--variant", cfg.variant, "classic or reduced");
    }
    if (std::string(s.name) == "char") sub->add_option("--depth", cfg.depth, "series depth: auto or an integer");
    sub->callback([&command, name = std::string(s.name)] { command = name; });
  }
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--m", cfg.m, "restrict the grids to gl(m|n)");
  verify->add_option("--n", cfg.n, "restrict the grids to gl(m|n)");
  verify->add_option("--only", cfg.only, "comma-separated suites: kac,oracle,variant,orthogonality,"
                                         "supersymmetry,theta-mult");
  verify->add_option("--format", cfg.format, "text or json");
  verify->add_option("--cutoff", cfg.cutoff, "accepted for symmetry with the oracle; cutoffs are automatic");
  verify->add_flag("--mutate-sign", cfg.mutate_sign, "inject a wrong ε(φ) to check the oracle suite fails");
  verify->callback([&command] { command = "verify"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (command == "verify") return cmd_verify(cfg, out);
    if (command == "char") out << cmd_char(cfg);
    if (command == "diagram") out << cmd_diagram(cfg);
    if (command == "theta") out << cmd_theta(cfg);
    if (command == "kac") out << cmd_kac(cfg);
    if (command == "proj") out << cmd_proj(cfg);
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InstabilityError& e) {
    err << "instability: " << e.what() << "\n";
    return kExitInstability;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace superchar::cli
