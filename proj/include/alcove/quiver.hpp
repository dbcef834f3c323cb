#pragma once

#include <string>
#include <vector>

#include "alcove/arrangement.hpp"
#include "alcove/oracle.hpp"
#include "alcove/pth_root.hpp"
#include "alcove/word.hpp"

namespace alcove {

// Positive-root wall families: sign-normalized primitive covectors of the
// root hyperplane directions, tagged with a realizing root datum index so
// Demazure letters can be spelled.  roots[root_index].alpha == sign * alpha.
struct RootFamily {
  IntVec alpha;
  int root_index = -1;
  int sign = 1;
};
std::vector<RootFamily> root_wall_families(const GaugeTheoryData& t);

// Action of a wall-preserving affine element on root-wall data:
// alpha_k ∘ w == sign[k] * alpha_{perm[k]} + shift[k] with integer shift.
// Domain error if w fails to permute the families this way.
struct RootFloorAction {
  std::vector<int> perm;
  std::vector<int> sign;
  std::vector<Int> shift;
};
RootFloorAction root_floor_action(const std::vector<RootFamily>& fams, const AffineMap& w);
// Image of the floor vector of an alcove piece (component of a chamber minus
// the root walls) under the element inducing `ra`.
IntVec act_root_floor(const RootFloorAction& ra, const IntVec& r);
// Image (family, level) of the root wall {alpha_j = n}.
std::pair<int, Int> act_root_wall(const RootFloorAction& ra, int j, const Int& n);

// Floor vectors of all alcove pieces of chamber `a`, lexicographically
// sorted.  BudgetExceeded if a root direction is unbounded on the chamber or
// more than `budget` pieces appear.
std::vector<IntVec> chamber_pieces(const GaugeTheoryData& t,
                                   const std::vector<RootFamily>& fams,
                                   const IntVec& a, size_t budget = 4096);

// Node of the wall-crossing quiver: one Weyl class of matter chambers plus a
// distinguished alcove piece anchoring every word spelled at this node.
struct QuiverNode {
  IntVec chamber;                     // canonical floor vector of the class
  IntVec piece;                       // root floor vector of the anchor piece
  EVec witness;                       // interior point of the anchor piece
  std::vector<AffineMap> stab;        // chamber stabilizer (finite quotient)
  std::vector<AffineMap> piece_stab;  // subgroup fixing the anchor piece
  std::string ring;                   // endomorphism coefficient ring tag
};

struct QuiverArrow {
  int src = -1, dst = -1;
  int line = -1;      // matter line whose wall the arrow crosses
  Int wall;           // wall level of that line at the source representative
  IntVec neighbor;    // raw floor vector across the facet
  AffineMap relabel;  // element carrying the crossed chamber onto dst's rep
  MorphismWord word;
  int opposite = -1;
};

struct QuiverLoop {
  int node = -1;
  int family = -1;      // root wall family index
  Int level;            // wall level bounding the anchor piece
  MorphismWord word;    // wall-in, Demazure, wall-out
  bool word_ok = true;  // false when a degenerate wall blocks the word
};

struct QuiverRelation {
  std::string schema;  // dot-pass | dot-pass-loop | wall-return | loop-squared | square
  std::string display;
  WordSum lhs, rhs;
  Verdict checked = Verdict::EqualUpToTruncation;
};

struct QuiverPresentation {
  GaugeTheoryData conventions;  // reduced theory every word lives over
  std::vector<RootFamily> families;
  LambdaSet classes;
  std::vector<QuiverNode> nodes;
  std::vector<QuiverArrow> arrows;
  std::vector<QuiverLoop> loops;
  std::vector<QuiverRelation> relations;
  int relations_degree_bound = 0;
  bool relations_complete = false;
};

QuiverPresentation build_quiver(const GaugeTheoryData& t, const RatVec& flavor,
                                const PthRootContext& pctx, size_t budget = 100000);

// Instantiate the relation schemas on all generator tuples whose path degree
// (arrows 1, loops 2, dots their polynomial degree) stays within the bound;
// each instance is oracle-checked before it is recorded, and the result is
// tagged relations_complete = false.
std::vector<QuiverRelation> emit_relations(QuiverPresentation& q, int deg_bound = 4);

std::string export_dot(const QuiverPresentation& q);
std::string export_json(const QuiverPresentation& q);

}  // namespace alcove
