#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's polynomial or counting code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Mono = std::vector<long>;
using Poly = std::map<Mono, long>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Mono e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Topological sorts counted by filtering every permutation.
inline std::uint64_t brute_linear_extensions(int r, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> p(static_cast<std::size_t>(r));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  std::vector<int> pos(p.size());
  do {
    for (std::size_t k = 0; k < p.size(); ++k) pos[static_cast<std::size_t>(p[k])] = static_cast<int>(k);
    bool ok = true;
    for (const auto& [a, b] : edges) ok = ok && pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Parent arrays of every recursive forest on r vertices: parent[i] ∈ {-1} ∪ [0, i).
inline std::vector<std::vector<int>> recursive_forests(int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> par(static_cast<std::size_t>(r), -1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      out.push_back(par);
      return;
    }
    for (int p = -1; p < i; ++p) {
      par[static_cast<std::size_t>(i)] = p;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Weyl dimension of gl(k) with integer arithmetic (small weights only).
inline long weyl_dim(const std::vector<long>& w) {
  long num = 1;
  long den = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      num *= w[i] - w[j] + static_cast<long>(j - i);
      den *= static_cast<long>(j - i);
    }
  }
  return num / den;
}

}  // namespace oracle
