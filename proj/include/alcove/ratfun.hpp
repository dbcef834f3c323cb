#pragma once

#include "alcove/polynomial.hpp"
#include "alcove/theory.hpp"

#include <map>
#include <string>

namespace alcove {

// Rational function num / prod(factor^mult) whose denominator factors are
// affine-linear polynomials kept in a normalized form (primitive integer
// coefficients, lex-first coefficient positive; monic-like mod p).  All
// denominators arising in the fraction representation are products of linear
// forms (roots and matter weights), so this closed class suffices and keeps
// equality syntactic: fractions are fully reduced factor-by-factor and the
// normalization scalar is absorbed into the numerator.
struct RatFun {
  PolyElem num;
  std::map<PolyElem, unsigned> den;

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }
  bool operator<(const RatFun& o) const {
    if (!(num == o.num)) return num < o.num;
    return den < o.den;
  }
};

RatFun rf_zero(int n, unsigned long p = 0);
RatFun rf_one(int n, unsigned long p = 0);
RatFun rf_poly(const PolyElem& f);

RatFun rf_add(const RatFun& a, const RatFun& b);
RatFun rf_sub(const RatFun& a, const RatFun& b);
RatFun rf_neg(const RatFun& a);
RatFun rf_mul(const RatFun& a, const RatFun& b);
RatFun rf_mul_poly(const RatFun& a, const PolyElem& f);
RatFun rf_scale(const RatFun& a, const Rat& c);
// Divide by an affine-linear nonzero polynomial.
RatFun rf_div_linear(const RatFun& a, const PolyElem& ell);
// Exact division by an arbitrary product of linear forms (Domain error if a
// denominator factor cannot be cleared and is not linear).
RatFun rf_div(const RatFun& a, const RatFun& b);

// Pullback along the affine-linear variable substitution
//   x |-> A x + t h   (h fixed),
// i.e. substitute into numerator and each denominator factor.
RatFun rf_subst_affine(const RatFun& a, const IntMat& A, const RatVec& t);
// Substitute h -> value; Domain error if a denominator factor vanishes.
RatFun rf_set_h(const RatFun& a, const Rat& value);
// Reduce into F_p (factors that collide mod p are merged; Domain error if a
// factor vanishes mod p).
RatFun rf_with_char(const RatFun& a, unsigned long p);

std::string rf_str(const RatFun& a);

}  // namespace alcove
