#pragma once

#include <cstdint>
#include <vector>

#include "superchar/caps.hpp"
#include "superchar/laurent.hpp"

namespace superchar {

/// Directed edge between 0-based vertex indices.
struct Edge {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertices 0..r-1 labelled by positions c_0 < ... < c_{r-1}; edges directed.
/// The underlying undirected graph must be a forest.
struct Forest {
  std::vector<Position> labels;
  std::vector<Edge> edges;

  int vertex_count() const { return static_cast<int>(labels.size()); }
  /// Component id per vertex, ids numbered by first appearance.
  std::vector<int> components() const;
  int component_count() const;
  /// No multiple edges and no cycles once orientation is ignored.
  bool is_undirected_forest() const;
  /// Every vertex has in-degree ≤ 1, so edges point away from component roots.
  bool is_out_forest() const;
  Forest reversed() const;
  Forest with_edges(std::vector<Edge> subset) const;
};

/// The Hasse forest Γ_f: i → j when c_i ⊣ c_j is a covering pair.
Forest gamma(const CapForest& cf);

/// All 2^|E| spanning subgraphs, ordered by edge-subset bitmask.
std::vector<Forest> subgraphs(const Forest& g);

/// Minimum label over the component of v.
Position component_min(const Forest& g, int v);
std::vector<Position> component_mins(const Forest& g);

/// r! / ∏ |subtree(v)|. Requires an out-forest.
BigInt linear_extensions_hook(const Forest& g);
/// Topological-sort count by dynamic programming over down-sets (r ≤ 20).
/// Handles any orientation; throws InvalidInput on a directed cycle.
BigInt linear_extensions_dp(const Forest& g);
/// Hook formula when applicable, down-set DP otherwise.
BigInt linear_extensions(const Forest& g);

/// Laurent polynomial in t_1..t_r.
using ThetaPoly = LaurentPoly;

/// One Δ-summand of θ or θ̃.
struct ThetaTerm {
  std::vector<Edge> edges;       ///< E(Δ)
  std::vector<Edge> star_edges;  ///< E(Δ*) (θ̃ only; equals edges for θ)
  int sign = 1;
  BigInt extensions;             ///< |S_Δ| or |S_Δ*|
  Exponent exponent;             ///< exponent of t in the summand
};

struct ThetaExpansion {
  ThetaPoly poly;
  std::vector<ThetaTerm> terms;
};

/// θ(Γ,t) = (1/r!) Σ_Δ (-1)^|E(Δ)| |S_Δ| ∏ t_i^{c_Δ(i) - c_i}.
ThetaExpansion theta_expansion(const Forest& g);
inline ThetaPoly theta(const Forest& g) { return theta_expansion(g).poly; }

/// Edges i → j with c̃_i < c̃_j.
std::vector<Edge> special_edges(const Forest& g, const SegmentData& sd);

/// An induced subgraph on a subset of the vertices of a forest.
struct Subforest {
  std::vector<int> vertices;
  std::vector<Edge> edges;
};

/// Induced subgraph on the vertices with c̃_i = c̃ of their component minimum.
Subforest gamma0(const Forest& g, const SegmentData& sd);

/// Whether θ̃ exponents use tilde labels (c̃_Δ(i) - c̃_i) or plain ones.
enum class TildeExponents { kTilde, kPlain };

struct ThetaTilde {
  ThetaPoly poly;
  std::vector<ThetaTerm> terms;
  Position nu = 0;                 ///< Σ (c̃_i - c_i)
  std::vector<Position> gamma;     ///< coefficient of α_i in γ
};

/// Reduced polynomial θ̃: sum over subgraphs keeping every non-special edge,
/// with the edges outside Γ₀ reversed when counting extensions.
ThetaTilde theta_tilde(const Forest& g, const SegmentData& sd,
                       TildeExponents mode = TildeExponents::kTilde);

}  // namespace superchar
