#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "superchar/capgraph.hpp"

namespace superchar {

/// {x : x_i ≤ upper[i], x_i = pinned[i], x_from ≤ x_to for every chain edge}.
/// Coordinates listed in neither map are constrained only through chain edges.
struct OrderPolyhedron {
  int dimension = 0;
  std::map<int, Position> upper;
  std::map<int, Position> pinned;
  std::vector<Edge> chain_edges;
  /// Position carried by each coordinate (labels of crosses, or full support).
  std::vector<Position> labels;

  bool contains(std::span<const Position> x) const;
};

/// D_Γ in cross coordinates: x_i ≤ c_i and x_i ≤ x_j for each edge i → j.
OrderPolyhedron polyhedron_of(const Forest& g);
/// D_f in full coordinates over the support of f: crosses bounded, cores pinned.
OrderPolyhedron polyhedron_of(const WeightDiagram& f);
/// D_Γ(a): every x_i ≤ a, plus the chain edges of Γ.
OrderPolyhedron polyhedron_with_bound(const Forest& g, Position a);

struct Vertex {
  std::vector<Edge> edges;        ///< E(Δ)
  std::vector<Position> point;    ///< M_Δ, x_i = c_{Δ(i)}
};

/// One vertex per Δ ∈ M(Γ), ordered by edge-subset bitmask.
std::vector<Vertex> vertices(const Forest& g);

/// Tangent cone at M_Δ: a bound at each Δ-component minimum and the Δ chain edges.
OrderPolyhedron tangent_cone(const Forest& delta);

struct ConeDescriptor {
  std::vector<Position> vertex;
  Rational scalar;                     ///< |S_Δ| / r!
  Exponent numerator;                  ///< c_{Δ(i)} per i
  std::vector<int> denominator_vars;   ///< factors (1 - t_i^{-1})
};

ConeDescriptor cone_genfun(const Forest& delta);

/// Integer points with every free coordinate ≥ cutoff, lexicographic order.
/// Throws InvalidInput if some coordinate has no upper bound.
std::vector<std::vector<Position>> enumerate_lattice(const OrderPolyhedron& p, Position cutoff);
/// Same points, streamed to a callback instead of materialized.
void for_each_lattice_point(const OrderPolyhedron& p, Position cutoff,
                            const std::function<void(std::span<const Position>)>& visit);

struct PartitionReport {
  std::size_t points = 0;            ///< lattice points of D_Γ(a) in the window
  std::size_t strict_points = 0;     ///< points with pairwise distinct coordinates
  std::size_t diagonal_points = 0;   ///< points with a repeated coordinate
  std::size_t regions = 0;           ///< |S_Γ|
  std::size_t regions_op = 0;        ///< |S_Γop|
  std::vector<std::size_t> strict_region_counts;  ///< one per σ ∈ S_Γ
  std::size_t strict_unassigned = 0;   ///< strict points in no strict region
  std::size_t strict_multiple = 0;     ///< strict points in more than one strict region
  std::size_t diagonal_unassigned = 0; ///< diagonal points whose index tie-break is not in S_Γ
  std::size_t closure_missing = 0;     ///< points of D_Γ(a) outside every closed region
  std::size_t closure_extra = 0;       ///< closed-region points outside D_Γ(a)
  bool ok = false;
};

/// Checks on the window [cutoff, a]^r that the strict chain regions over
/// σ ∈ S_Γ partition the strict points of D_Γ(a), that their closures cover
/// D_Γ(a) exactly, and that diagonal points get a region by index tie-break.
PartitionReport chain_decomposition_check(const Forest& g, Position a, Position cutoff);

/// Linear extensions of g as vertex sequences, in lexicographic order.
std::vector<std::vector<int>> linear_extension_list(const Forest& g);

}  // namespace superchar
