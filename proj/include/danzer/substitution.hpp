#pragma once

#include <array>
#include <string>
#include <vector>

#include "danzer/tiles.hpp"

namespace danzer {

struct RuleChild {
  std::string label;  // e.g. "K1", "tB.B2"
  TileKind kind;
  /// Placement inside t * canonical_tile(parent).
  Motion place;
};

/// t * canonical_tile(parent) = union of place(canonical_tile(kind)).
struct SubstitutionRule {
  TileKind parent;
  std::vector<RuleChild> children;
  /// The frame the construction is drawn in: the drawn t * parent equals
  /// frame.scaled_translation(t) applied to t * canonical_tile(parent).
  Motion frame;

  /// Children as drawn, i.e. with the frame applied.
  std::vector<Tetra> drawn_children() const;
  std::array<long, 4> counts() const;  // indexed by kind_index
};

/// The four rules, indexed by kind_index. Built and verified once; a rule
/// failing verification throws std::logic_error on first use.
const std::array<SubstitutionRule, 4>& rules();
const SubstitutionRule& rule(TileKind parent);

/// M[c][p] = number of children of kind c in the rule for p.
using CountMatrix = std::array<std::array<long, 4>, 4>;
CountMatrix count_matrix();

struct RuleReport {
  TileKind parent;
  Golden children_volume;
  Golden expected_volume;
  bool volume_ok = false;
  bool containment_ok = false;
  bool disjoint_ok = false;
  bool congruence_ok = false;
  std::vector<std::string> failures;
  bool ok() const { return volume_ok && containment_ok && disjoint_ok && congruence_ok; }
};

/// Exact checks: volume balance, containment in the inflated parent,
/// pairwise interior disjointness and congruence to the canonical kinds.
RuleReport verify_rule(const SubstitutionRule& rule);
RuleReport verify_rule(TileKind parent);

struct Patch {
  std::vector<Tile> tiles;
  /// Number of inflations applied to the seed.
  int scale_exponent = 0;

  std::array<long, 4> counts() const;
  Golden total_volume() const;
};

Patch seed_patch(TileKind kind);
/// Replaces every tile (k, (M, t)) by (k_c, (M G_c, t t + M t_c)) for the
/// children (G_c, t_c) of rule k. Output is sorted by (kind, rot, tr).
Patch inflate(const Patch& patch);
/// Throws std::invalid_argument for negative n.
Patch inflate_n(TileKind seed, int n);

}  // namespace danzer
