#pragma once

#include "alcove/arrangement.hpp"
#include "alcove/jsonio.hpp"
#include "alcove/linsolve.hpp"
#include "alcove/pth_root.hpp"
#include "alcove/theory.hpp"

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace alcove {

// One integer-periodic family of parallel walls in flavor space:
// { psi : mu . psi + offset in Z }.  Canonical form: the first nonzero entry
// of mu is positive and offset lies in [0, 1).
struct WallFamily {
  RatVec mu;
  Rat offset;

  Rat value(const RatVec& psi) const { return dot(mu, psi) + offset; }
  bool operator==(const WallFamily& o) const { return mu == o.mu && offset == o.offset; }
  bool operator<(const WallFamily& o) const {
    if (mu != o.mu) return mu < o.mu;
    return offset < o.offset;
  }
};

// Walls where some chamber class degenerates, by exact Fourier-Motzkin
// projection of the joint (xi, psi, floor) feasibility system onto psi-space
// (floor entries are kept symbolic; their integer shifts give the period).
// Pre: flavor_rank >= 1.
std::vector<WallFamily> circuit_hyperplanes(const GaugeTheoryData& t);

// Position of a face relative to one wall family: on the wall at `level`, or
// inside the open interval (level, level + 1).
struct FaceCoord {
  bool on = false;
  Int level = 0;

  bool operator==(const FaceCoord& o) const { return on == o.on && level == o.level; }
  bool operator<(const FaceCoord& o) const {
    if (on != o.on) return on;  // equalities sort after open slots
    return level < o.level;
  }
};
using FaceKey = std::vector<FaceCoord>;

struct FlavorFace {
  FaceKey key;
  std::vector<std::pair<int, Int>> equalities;  // (family, level), the walls containing the face
  int dimension = 0;
  RatVec witness;                 // rational interior point
  std::vector<IntVec> lambda_here;  // Lambda^R at the witness
  std::vector<IntVec> lambda;       // Lambda_C: union of Lambda^R over the star
};

// Lazy face complex of the circuit arrangement.  Faces are materialized on
// query and cached (insert-once, guarded for concurrent use); all geometry is
// exact.
class SchoberComplex {
 public:
  explicit SchoberComplex(const GaugeTheoryData& t, size_t budget = 100000);

  const GaugeTheoryData& theory() const { return t_; }
  const std::vector<WallFamily>& families() const { return fams_; }

  // Chamber classes of the real (∞-mode) arrangement at flavor point psi.
  std::vector<IntVec> lambda_real(const RatVec& psi) const;

  FaceKey key_of(const RatVec& psi) const;
  const FlavorFace& face(const FaceKey& key);
  const FlavorFace& face_of(const RatVec& psi);

  // Closure order: a <= b  iff  a is contained in the closure of b.
  static bool leq(const FaceKey& a, const FaceKey& b);

  // True when some straight line meets the three faces in order.
  bool colinear(const FaceKey& c1, const FaceKey& c2, const FaceKey& c3) const;

  // Every face the closed segment [psi1, psi2] meets, in order (open faces
  // alternating with walls).  Degenerate segments are displaced by an
  // infinitesimal generic vector when allow_perturb is set; otherwise
  // Domain ("DegenerateSegment").
  std::vector<const FlavorFace*> segment_face_sequence(const RatVec& psi1, const RatVec& psi2,
                                                       bool allow_perturb = true);

  // Walls (family, level) crossed strictly between the two points.
  std::set<std::pair<int, Int>> separating_walls(const RatVec& psi1, const RatVec& psi2) const;

  // Faces meeting the box [lo, hi] (componentwise), with Lambda_C inlined.
  ojson export_json(const RatVec& lo, const RatVec& hi);

 private:
  std::vector<LinCon> key_system(const FaceKey& key) const;
  FlavorFace materialize(const FaceKey& key);

  GaugeTheoryData t_;
  size_t budget_;
  std::vector<WallFamily> fams_;
  std::map<FaceKey, FlavorFace> cache_;
  std::mutex mu_;
};

}  // namespace alcove
