#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superchar/weights.hpp"

namespace superchar {

/// Caps of a weight diagram: every × is joined to a ○ on its right.
/// Core symbols are skipped, i.e. they are neither cap ends nor free circles.
struct CapForest {
  /// c_1 < ... < c_r.
  std::vector<Position> crosses;
  /// c ↦ c̃, the right end of the cap starting at c.
  std::map<Position, Position> cap_end;
  /// c ↦ the cross whose cap immediately encloses c's cap (covering relation of ⊣).
  std::map<Position, std::optional<Position>> parent;

  Position end_of(Position c) const;
  bool is_cross(Position c) const { return cap_end.contains(c); }
};

/// Builds caps by the greedy rightmost-first rule and by the balanced-count
/// rule, and throws InternalError if the two disagree.
CapForest cap_diagram(const WeightDiagram& f);

/// Greedy construction alone: rightmost × first, each joined to the first
/// free ○ on its right.
std::map<Position, Position> caps_greedy(const WeightDiagram& f);
/// Counting construction alone: the first ○ to the right with equally many
/// × and ○ strictly between.
std::map<Position, Position> caps_balanced(const WeightDiagram& f);

/// a ⊣ b: the cap of b lies strictly under the cap of a.
/// Throws InvalidInput if a or b is not a cross.
bool precedes(const CapForest& cf, Position a, Position b);

/// Swaps × and ○ at c and c̃ for every c ∈ C, cap ends taken from f.
WeightDiagram sigma_swap(const WeightDiagram& f, std::span<const Position> subset);

/// { σ_C(f) : C ⊆ crosses }, 2^r distinct diagrams, ordered by the subset bitmask
/// over crosses in increasing order.
std::vector<WeightDiagram> projective_family(const WeightDiagram& f);

struct SegmentData {
  /// Maximal runs [first, last] of crosses with only core symbols between
  /// consecutive members.
  std::vector<std::pair<Position, Position>> segments;
  /// c ↦ c̃ᵢ, the last cross of c's run.
  std::map<Position, Position> tilde;
};

SegmentData segment_data(const WeightDiagram& f);

/// Two lines of symbols and positions with nested cap arcs drawn above them.
std::string render_caps(const WeightDiagram& f, const CapForest& cf);

}  // namespace superchar
