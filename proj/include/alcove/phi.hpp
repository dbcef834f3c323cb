#pragma once

#include "alcove/polynomial.hpp"
#include "alcove/ratfun.hpp"
#include "alcove/theory.hpp"

#include <string>
#include <vector>

namespace alcove {

// One crossing factor phi_i^+ - n*h of a wall product.
struct PhiFactor {
  int line = 0;
  Int n = 0;

  bool operator==(const PhiFactor& o) const { return line == o.line && n == o.n; }
  bool operator<(const PhiFactor& o) const {
    if (line != o.line) return line < o.line;
    return n < o.n;
  }
};

// Sorted multiset of crossing factors.
using PhiFactors = std::vector<PhiFactor>;

// Smallest integer > v / largest integer < v, with eps-aware strictness.
Int strict_above(const RatEps& v);
Int strict_below(const RatEps& v);

// Factors (i, n) with mid_i(eta) > n and mid_i(eta_prime) < n.
PhiFactors phi_product(const GaugeTheoryData& t, const EVec& eta, const EVec& eta_prime);

// Factors (i, n) crossed twice along eta'' -> eta' -> eta: the two sign
// patterns (above, below, above) and (below, above, below) over the triple
// (eta, eta_prime, eta_dblprime).
PhiFactors phi_triple(const GaugeTheoryData& t, const EVec& eta, const EVec& eta_prime,
                      const EVec& eta_dblprime);

PhiFactors phi_merge(const PhiFactors& a, const PhiFactors& b);
bool phi_equal(const PhiFactors& a, const PhiFactors& b);
// Multiset difference a \ b; Domain error if b is not contained in a.
PhiFactors phi_diff(const PhiFactors& a, const PhiFactors& b);

// phi_i^+ = g_i . x + f_i h as a polynomial.
PolyElem matter_form(const GaugeTheoryData& t, int i, unsigned long char_p = 0);
// g_i . x + (f_i - n) h
PolyElem phi_factor_poly(const GaugeTheoryData& t, const PhiFactor& f, unsigned long char_p = 0);
// alpha . x - n h
PolyElem affine_root_poly(int rank, const IntVec& alpha, const Int& n, unsigned long char_p = 0);
// Expanded product of the factors.
PolyElem phi_expand(const GaugeTheoryData& t, const PhiFactors& fs, unsigned long char_p = 0);

std::string phi_str(const PhiFactors& fs);

// Weyl action on polynomials: (w . f) = f o L(w)^{-1} with
// L(w)(x, h) = (A x + t h, h).
PolyElem poly_weyl_act(const AffineMap& w, const PolyElem& f);
RatFun rf_weyl_act(const AffineMap& w, const RatFun& f);

// Translation twist t_gamma f = f(x - gamma h, h)  (conjugation by y_gamma).
PolyElem translate_poly(const IntVec& gamma, const PolyElem& f);

// Affine reflection through { alpha . x = n }.
AffineMap reflection_map(const RootDatum& rt, const Int& n);

// Demazure operator (f - s_{alpha,n} f) / (alpha . x - n h); exact.
PolyElem demazure(const RootDatum& rt, const Int& n, const PolyElem& f);
inline PolyElem demazure(const RootDatum& rt, const PolyElem& f) { return demazure(rt, Int(0), f); }

}  // namespace alcove
