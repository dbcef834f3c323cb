#pragma once

#include <optional>

#include "alcove/pth_root.hpp"
#include "alcove/theory.hpp"
#include "alcove/word.hpp"

namespace alcove {

// A chamber of the unrolled matter arrangement, recorded by its floor vector:
// C_a = {ξ : a_i < mid_i(ξ) < a_i + 1 for all i}.
struct Chamber {
  IntVec a;
  bool operator==(const Chamber& o) const { return a == o.a; }
  bool operator!=(const Chamber& o) const { return !(*this == o); }
  bool operator<(const Chamber& o) const { return a < o.a; }
};

Chamber chamber_of(const GaugeTheoryData& t, const EVec& eta);
std::vector<LinCon> chamber_conditions(const GaugeTheoryData& t, const IntVec& a);
bool is_nonempty(const GaugeTheoryData& t, const IntVec& a);
// Interior rational witness (feasible == false when the chamber is empty).
FMWitness chamber_witness(const GaugeTheoryData& t, const IntVec& a);

// Induced permutation action on floor vectors: a'_j = a_{perm[j]} + shift_j.
struct FloorAction {
  std::vector<int> perm;
  IntVec shift;
};
FloorAction floor_action(const GaugeTheoryData& t, const AffineMap& w);
IntVec act_floor(const GaugeTheoryData& t, const AffineMap& w, const IntVec& a);

// Precomputed data for canonical forms: an echelon basis of the sublattice
// L = {(g_i·γ)_i : γ ∈ ℤ^n} of floor translations, together with the finite
// quotient of the floor-action group by L.
struct QuotientElement {
  FloorAction action;   // shift reduced into the fundamental domain of L
  AffineMap witness;    // a group element inducing this class
};
struct FloorLattice {
  int d = 0;                        // number of matter lines
  int n = 0;                        // gauge rank
  std::vector<IntVec> basis;        // echelon basis columns of L
  std::vector<int> pivot;           // pivot row of each basis column
  std::vector<IntVec> basis_gamma;  // γ with (g_i·γ)_i = basis column
  std::vector<QuotientElement> quotient;
};
FloorLattice floor_lattice(const GaugeTheoryData& t, size_t budget = 4096);

// Unique representative of a + L (greedy top-down reduction against the
// echelon basis); `gamma_out`, when given, receives γ with
// reduced = a - (g_i·γ)_i.
IntVec reduce_floor(const FloorLattice& fl, const IntVec& a,
                    IntVec* gamma_out = nullptr);
// Lexicographically minimal reduced form over the full Ŵ-orbit.
IntVec canonical_floor(const GaugeTheoryData& t, const FloorLattice& fl,
                       const IntVec& a);
// Group element carrying a to its canonical form.
AffineMap canonical_witness(const GaugeTheoryData& t, const FloorLattice& fl,
                            const IntVec& a);
// Joint canonical form of an ordered chamber pair (same element applied to
// both, translation chosen by the first component).
std::pair<IntVec, IntVec> canonical_pair(const GaugeTheoryData& t,
                                         const FloorLattice& fl,
                                         const IntVec& a, const IntVec& b);

// Elements of Ŵ whose floor action fixes `a` exactly.
std::vector<AffineMap> chamber_stabilizer(const GaugeTheoryData& t,
                                          const FloorLattice& fl, const IntVec& a);

// Floor vector across the facet of C_a on the wall {mid_i = a_i + (dir>0)};
// walls of parallel matter lines that pass through the same rational locus
// step their floor coordinates simultaneously.  nullopt when the facet is
// not genuinely shared (empty or lower-dimensional contact).
std::optional<IntVec> neighbor_floor(const GaugeTheoryData& t, const IntVec& a,
                                     int line, int dir);

struct LambdaSet {
  std::vector<Chamber> reps;       // canonical forms, sorted
  std::map<IntVec, int> index;     // canonical floor -> position in reps
  GaugeTheoryData conventions;     // theory the floors refer to (scaled data)
};
// Ŵ-classes of nonempty chambers in the conventions dictated by pctx
// (offsets/p at finite p, infinitesimal delta in ∞ mode).  At finite p only
// classes containing scaled lattice points are kept.
LambdaSet enumerate_lambda_bar(const GaugeTheoryData& t, const PthRootContext& pctx,
                               size_t budget = 100000);

// #{υ ∈ ℤ^n : a_i < mid_i(υ/k) < a_i+1}; OpenMP-parallel when enabled.
Int count_points(const GaugeTheoryData& t, const IntVec& a, unsigned long k);
// Single-threaded reference implementation (recursive interval scan).
Int count_points_serial(const GaugeTheoryData& t, const IntVec& a, unsigned long k);
// Brute-force oracle: scan an explicit bounding box.
Int count_points_boxscan(const GaugeTheoryData& t, const IntVec& a, unsigned long k);

std::vector<Int> ehrhart_profile(const GaugeTheoryData& t, const IntVec& a,
                                 const std::vector<unsigned long>& ks);

// Quasi-polynomial k ↦ count_points(k): one polynomial of degree ≤ rank per
// residue class modulo the period.
struct QuasiPolynomial {
  unsigned long period = 1;
  std::vector<RatVec> coeffs;  // coeffs[r][e]: coefficient of k^e for k ≡ r
  Rat eval(unsigned long k) const;
};
// Fits from fresh samples and cross-checks every requested k exactly;
// FitFailed when the counts are not quasi-polynomial of the expected shape.
QuasiPolynomial ehrhart_fit(const GaugeTheoryData& t, const IntVec& a,
                            const std::vector<unsigned long>& ks);

}  // namespace alcove
