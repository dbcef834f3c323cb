#pragma once

#include "alcove/linsolve.hpp"
#include "alcove/rational.hpp"

#include <optional>
#include <string>

namespace alcove {

// A matter line: weight of the matter representation restricted to the gauge
// torus, together with its flavor dependence.  The realized offset is
//   offset = offset_const + flavor_cov . psi
// for the currently chosen flavor point psi; lattice-level code only ever
// reads `offset`.
struct MatterLine {
  IntVec gauge;       // g_i, length = rank
  IntVec flavor_cov;  // F_i, length = flavor_rank (empty means zero)
  Rat offset_const;   // c_i
  Rat offset;         // realized f_i
};

struct RootDatum {
  IntVec alpha;   // covector, length = rank
  IntVec coroot;  // vector, length = rank; <alpha, coroot> = 2
  bool simple = false;
};

// Affine-linear map eta -> lin * eta + tr on the level-1 slice.
struct AffineMap {
  IntMat lin;
  RatVec tr;

  static AffineMap identity(int n) {
    AffineMap w;
    w.lin = IntMat::identity(n);
    w.tr.assign(n, Rat(0));
    return w;
  }
  static AffineMap translation(const RatVec& t) {
    AffineMap w;
    w.lin = IntMat::identity((int)t.size());
    w.tr = t;
    return w;
  }

  int rank() const { return lin.n; }

  EVec apply(const EVec& x) const {
    EVec r = lin.apply(x);
    for (int i = 0; i < lin.n; ++i) r[i] += RatEps(tr[i]);
    return r;
  }
  RatVec apply(const RatVec& x) const {
    RatVec r = lin.apply(x);
    for (int i = 0; i < lin.n; ++i) r[i] += tr[i];
    return r;
  }

  AffineMap compose(const AffineMap& o) const {  // this after o
    AffineMap r;
    r.lin = lin.mul(o.lin);
    r.tr = lin.apply(o.tr);
    for (int i = 0; i < lin.n; ++i) r.tr[i] += tr[i];
    return r;
  }

  AffineMap inverse() const {
    AffineMap r;
    r.lin = lin.inverse_unimodular();
    RatVec t = r.lin.apply(tr);
    r.tr.resize(lin.n);
    for (int i = 0; i < lin.n; ++i) r.tr[i] = -t[i];
    return r;
  }

  bool operator==(const AffineMap& o) const { return lin == o.lin && tr == o.tr; }
  bool operator<(const AffineMap& o) const {
    if (lin.m != o.lin.m) return lin.m < o.lin.m;
    return tr < o.tr;
  }
  bool is_identity() const { return *this == identity(lin.n); }
  bool is_translation_by_int() const;
};

struct GaugeTheoryData {
  int rank = 0;
  int flavor_rank = 0;
  std::vector<MatterLine> matter;
  std::vector<RootDatum> roots;
  std::vector<AffineMap> weyl_gens;      // linear involutions
  std::vector<AffineMap> lenzero_gens;   // length-zero elements of the extended group
  Rat delta = Rat(1, 2);                 // base loop-rotation offset, in (0,1)
  RatEps delta_eff = RatEps(Rat(1, 2));  // delta actually used in wall combinatorics
  RatVec psi;                            // chosen flavor point (length flavor_rank)

  int lines() const { return (int)matter.size(); }

  GaugeTheoryData with_delta_eff(const RatEps& d) const {
    GaugeTheoryData t = *this;
    t.delta_eff = d;
    return t;
  }
};

enum class PointClass { Exceptional, Unexceptional, Generic };

// phi_i^mid evaluated at a level-1 point: g_i(eta) + f_i + delta.
RatEps eval_mid(const GaugeTheoryData& t, int i, const EVec& eta);

PointClass classify(const GaugeTheoryData& t, const EVec& eta);
inline bool unexceptional(const GaugeTheoryData& t, const EVec& eta) {
  return classify(t, eta) != PointClass::Exceptional;
}
inline bool generic_point(const GaugeTheoryData& t, const EVec& eta) {
  return classify(t, eta) == PointClass::Generic;
}

EVec act(const AffineMap& w, const EVec& eta);

// Structural checks: involutive Weyl generators, W-invariance of the matter
// covector multiset, root/coroot pairing, delta range, fundamental-alcove
// preservation by the length-zero generators.  Throws Error(Domain) on
// violation.
void validate(const GaugeTheoryData& t);

// Matching of wall families under an affine symmetry: perm[j] = i and
// shift[j] = k mean mid_j(w.xi) = mid_i(xi) + k for all xi.  Empty result if
// the arrangement is not stable under w.
struct WallMatch {
  std::vector<int> perm;
  std::vector<Int> shift;
};
std::optional<WallMatch> wall_match(const GaugeTheoryData& t, const AffineMap& w);

// Realizes offsets at a flavor point (offset = offset_const + F_i . psi).
GaugeTheoryData realize(const GaugeTheoryData& t, const RatVec& psi);

// Constraints of the fundamental alcove (0 <= alpha <= 1 band for roots,
// dominant for simple roots); empty when there are no roots.
std::vector<LinCon> alcove_conditions(const GaugeTheoryData& t);

}  // namespace alcove
