#include "superchar_cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "superchar/capgraph.hpp"
#include "superchar/formula.hpp"
#include "superchar/suzhang.hpp"
#include "superchar_cli/format.hpp"

namespace superchar::cli {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kac", "oracle", "variant", "orthogonality", "supersymmetry",
                                              "theta-mult"};
  return names;
}

std::vector<HighestWeight> weight_grid(int m, int n, Position lo, Position hi) {
  std::vector<HighestWeight> out;
  std::vector<std::vector<Position>> lambdas;
  std::vector<std::vector<Position>> mus;
  std::function<void(std::vector<Position>&, int, Position, std::vector<std::vector<Position>>&)> rec =
      [&](std::vector<Position>& cur, int len, Position cap, std::vector<std::vector<Position>>& sink) {
        if (static_cast<int>(cur.size()) == len) {
          sink.push_back(cur);
          return;
        }
        for (Position v = cap; v >= lo; --v) {
          cur.push_back(v);
          rec(cur, len, v, sink);
          cur.pop_back();
        }
      };
  std::vector<Position> cur;
  rec(cur, m, hi, lambdas);
  rec(cur, n, hi, mus);
  for (const auto& l : lambdas) {
    for (const auto& u : mus) out.push_back(HighestWeight{m, n, l, u});
  }
  return out;
}

namespace {

class Runner {
 public:
  explicit Runner(const VerifyOptions& opts) : opts_(opts) {
    for (const auto& [m, n] : opts.shapes) {
      const auto g = weight_grid(m, n, opts.lo, opts.hi);
      grid_.insert(grid_.end(), g.begin(), g.end());
    }
  }

  SuiteResult run(const std::string& name) {
    SuiteResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    if (name == "kac") kac(r);
    if (name == "oracle") oracle(r);
    if (name == "variant") variant(r);
    if (name == "orthogonality") orthogonality(r);
    if (name == "supersymmetry") supersymmetry(r);
    if (name == "theta-mult") theta_mult(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

 private:
  static void fail(SuiteResult& r, const std::string& what) {
    ++r.failures;
    if (r.details.size() < 10) r.details.push_back(what);
  }

  /// Runs check once per case, turning library exceptions into failures.
  template <class Check>
  void each(SuiteResult& r, const HighestWeight& chi, Check&& check) {
    ++r.cases;
    try {
      if (!check()) fail(r, weight_text(chi));
    } catch (const std::exception& e) {
      fail(r, weight_text(chi) + ": " + e.what());
    }
  }

  const CharPoly& classic(const HighestWeight& chi) {
    auto key = weight_exponent(chi);
    key.push_back(chi.m);
    auto it = classic_.find(key);
    if (it == classic_.end()) it = classic_.emplace(key, irreducible_char(chi).character).first;
    return it->second;
  }

  void kac(SuiteResult& r) {
    for (const auto& chi : grid_) {
      each(r, chi, [&] {
        const CharPoly j = alt_J(CharPoly::monomial(chi.m, chi.n, omega_exponent(chi)));
        return dhat_multiply(kac_char(chi)) == j;
      });
    }
  }

  void oracle(SuiteResult& r) {
    OracleOptions oo;
    if (opts_.mutate_sign) {
      oo.sign_override = [](const WeightDiagram&, const WeightMap& phi) {
        Position drop = 0;
        for (const auto& [a, b] : phi) drop += a - b;
        return drop % 2 == 0 ? 1 : -1;
      };
    }
    for (const auto& chi : grid_) {
      each(r, chi, [&] {
        const CharPoly& f = classic(chi);
        if (oracle_char(chi, oo).character != f) return false;
        // The lattice-point route is independent of ε(φ); skip it for mutation runs.
        return opts_.mutate_sign || oracle_char_lattice(chi) == f;
      });
    }
  }

  void variant(SuiteResult& r) {
    for (const auto& chi : grid_) {
      each(r, chi, [&] {
        FormulaOptions fo;
        fo.variant = Variant::kReduced;
        return irreducible_char(chi, fo).character == classic(chi);
      });
    }
  }

  void orthogonality(SuiteResult& r) {
    struct Window {
      Position lo, hi;
      int m, n, r_max;
    };
    for (const Window& w : {Window{0, 5, 1, 1, 1}, Window{0, 6, 1, 1, 1}, Window{0, 6, 2, 1, 1},
                            Window{0, 6, 2, 2, 2}}) {
      ++r.cases;
      const OrthogonalityReport rep = orthogonality_check(w.lo, w.hi, w.m, w.n, w.r_max);
      if (!rep.ok) {
        std::string what = "window [" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "] gl(" +
                           std::to_string(w.m) + "|" + std::to_string(w.n) + "): " +
                           std::to_string(rep.mismatches) + " mismatches";
        if (!rep.failures.empty()) what += "; " + rep.failures.front();
        fail(r, what);
      }
    }
  }

  void supersymmetry(SuiteResult& r) {
    for (const auto& chi : grid_) {
      each(r, chi, [&] {
        const CharPoly& p = classic(chi);
        if (!supersymmetry_check(p)) return false;
        if (p.coefficient(weight_exponent(chi)) != 1) return false;
        for (const auto& [e, c] : p.terms()) {
          if (c < 0 || c.get_den() != 1) return false;
        }
        if (dimension_eval(p) <= 0) return false;
        if (diagram_of(chi).atypicality() == 0 && p != kac_char(chi)) return false;
        return true;
      });
    }
  }

  /// θ(Γ) against the product of θ over the components of Γ, in disjoint variables.
  static bool multiplicative(const Forest& g) {
    const auto ids = g.components();
    ThetaPoly product = ThetaPoly::constant(g.labels.size(), 1);
    for (int c = 0; c < g.component_count(); ++c) {
      std::vector<int> members;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (ids[static_cast<std::size_t>(v)] == c) members.push_back(v);
      }
      Forest part;
      std::map<int, int> local;
      for (int v : members) {
        local.emplace(v, part.vertex_count());
        part.labels.push_back(g.labels[static_cast<std::size_t>(v)]);
      }
      for (const Edge& e : g.edges) {
        if (local.contains(e.from)) part.edges.push_back({local.at(e.from), local.at(e.to)});
      }
      ThetaPoly embedded(g.labels.size());
      const ThetaPoly part_theta = theta(part);
      for (const auto& [e, coeff] : part_theta.terms()) {
        Exponent full(g.labels.size(), 0);
        for (std::size_t k = 0; k < members.size(); ++k) full[static_cast<std::size_t>(members[k])] = e[k];
        embedded.add_term(full, coeff);
      }
      product = product * embedded;
    }
    return product == theta(g);
  }

  void theta_mult(SuiteResult& r) {
    for (const auto& chi : grid_) {
      const Forest g = gamma(cap_diagram(diagram_of(chi)));
      if (g.component_count() < 2) continue;
      each(r, chi, [&] { return multiplicative(g); });
    }
    // Unions of two rooted forests on up to three vertices each; the second
    // block is interleaved with the first so components are not contiguous.
    std::vector<std::vector<int>> parents;
    for (int size = 1; size <= 3; ++size) {
      std::vector<int> par(static_cast<std::size_t>(size), -1);
      std::function<void(int)> rec = [&](int i) {
        if (i == size) {
          parents.push_back(par);
          return;
        }
        for (int p = -1; p < i; ++p) {
          par[static_cast<std::size_t>(i)] = p;
          rec(i + 1);
        }
      };
      rec(1);
    }
    for (const auto& p1 : parents) {
      for (const auto& p2 : parents) {
        Forest g;
        const int n1 = static_cast<int>(p1.size());
        const int n2 = static_cast<int>(p2.size());
        std::vector<int> v1, v2;
        for (int k = 0; k < n1 + n2; ++k) (k % 2 == 0 && static_cast<int>(v1.size()) < n1 ? v1 : v2).push_back(k);
        if (static_cast<int>(v2.size()) > n2) {
          v1.push_back(v2.back());
          v2.pop_back();
          std::sort(v1.begin(), v1.end());
        }
        for (int k = 0; k < n1 + n2; ++k) g.labels.push_back(3 * k + (k % 3));
        for (int i = 0; i < n1; ++i) {
          if (p1[static_cast<std::size_t>(i)] >= 0) {
            g.edges.push_back({v1[static_cast<std::size_t>(p1[static_cast<std::size_t>(i)])], v1[static_cast<std::size_t>(i)]});
          }
        }
        for (int i = 0; i < n2; ++i) {
          if (p2[static_cast<std::size_t>(i)] >= 0) {
            g.edges.push_back({v2[static_cast<std::size_t>(p2[static_cast<std::size_t>(i)])], v2[static_cast<std::size_t>(i)]});
          }
        }
        ++r.cases;
        if (!multiplicative(g)) fail(r, "synthetic forest with " + std::to_string(g.edges.size()) + " edges");
      }
    }
  }

  const VerifyOptions& opts_;
  std::vector<HighestWeight> grid_;
  std::map<Exponent, CharPoly> classic_;
};

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
  for (const auto& s : opts.only) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw InvalidInput("unknown verification suite '" + s + "'");
    }
  }
  Runner runner(opts);
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) {
    if (opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), name) != opts.only.end()) {
      out.push_back(runner.run(name));
    }
  }
  return out;
}

nlohmann::ordered_json verify_json(const std::vector<SuiteResult>& results) {
  nlohmann::ordered_json j;
  bool ok = true;
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json s;
    s["name"] = r.name;
    s["ok"] = r.ok();
    s["cases"] = r.cases;
    s["failures"] = r.failures;
    s["details"] = r.details;
    j["suites"].push_back(std::move(s));
    ok = ok && r.ok();
  }
  j["ok"] = ok;
  return j;
}

std::string verify_text(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  bool ok = true;
  for (const auto& r : results) {
    os << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
    for (const auto& d : r.details) os << "    " << d << "\n";
    ok = ok && r.ok();
  }
  os << (ok ? "all suites passed\n" : "verification FAILED\n");
  return os.str();
}

}  // namespace superchar::cli
