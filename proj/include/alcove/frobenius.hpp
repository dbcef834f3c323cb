#pragma once

#include "alcove/phi.hpp"
#include "alcove/ratfun.hpp"
#include "alcove/theory.hpp"
#include "alcove/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace alcove {

// Splitting context: the prime, the base splitting kappa_0 used on the h = 0
// polynomial ring, and whether kappa_0 is averaged over the finite Weyl group
// (the averaged map is W-equivariant; averaging needs p coprime to |W|).
struct FrobeniusContext {
  unsigned long p = 2;
  enum class Base { Monomial } base = Base::Monomial;
  bool w_average = false;
};

// f^p - h^{p-1} f.
PolyElem artin_schreier(const PolyElem& f, unsigned long p);

// Ring-map extension x_j -> AS(x_j), h -> h.  On degree-one forms this agrees
// with artin_schreier modulo p.
PolyElem artin_schreier_subst(const PolyElem& f, unsigned long p);

// Token-wise quantum Frobenius on words of an abelian theory: Poly(f) becomes
// Poly(AS(f)) and translations dilate by p around the word's source, so the
// basis endomorphism f * r_nu maps to AS-image * r_{p nu}.  Fails Domain
// ("NonAbelianTheory") when roots, Weyl reflections or Demazure letters occur.
MorphismWord quantum_frobenius(const GaugeTheoryData& t, const MorphismWord& w,
                               unsigned long p);

// ---- The h = 0 abelian monopole algebra ------------------------------------
// Element: finite sum f_nu * r_nu with h-free polynomial coefficients.
using AbelianElem = std::map<IntVec, PolyElem>;

AbelianElem ab_term(const GaugeTheoryData& t, const IntVec& nu, const PolyElem& f,
                    unsigned long p);
AbelianElem ab_add(const AbelianElem& a, const AbelianElem& b);
// (f r_nu)(g r_mu) = f g PhiBar(-nu-mu, -mu, 0) r_{nu+mu} with PhiBar the
// double-crossing product specialized at h = 0.
AbelianElem ab_mul(const GaugeTheoryData& t, const AbelianElem& a, const AbelianElem& b,
                   unsigned long p);
AbelianElem ab_pow(const GaugeTheoryData& t, const AbelianElem& a, unsigned k,
                   unsigned long p);
bool ab_equal(const AbelianElem& a, const AbelianElem& b);
std::string ab_str(const AbelianElem& a);

// The word realizing f * r_nu = f y_nu r(-nu, 0) as an endomorphism of the
// canonical generic base point.
MorphismWord ab_term_word(const GaugeTheoryData& t, const IntVec& nu, const PolyElem& f);

// ---- Splittings ------------------------------------------------------------

// Base splitting kappa_0 on h-free polynomials: the standard monomial
// splitting x^m -> x^{m/p} (0 when p does not divide m componentwise),
// W-averaged when the context asks for it.
PolyElem kappa0(const GaugeTheoryData& t, const PolyElem& f, const FrobeniusContext& c);

// kappa(f r_lambda) = kappa0(f) r_{lambda/p} when p | lambda, else 0.
// Pre: abelian theory, h = 0, F_p coefficients.
AbelianElem kappa(const GaugeTheoryData& t, const AbelianElem& a, const FrobeniusContext& c);

// Localized variant: coefficients may carry denominators that are products of
// linear forms (inverted roots).  Denominator exponents are raised to the
// next multiple of p before splitting, using kappa(ell^{pk} z) = ell^k kappa(z).
using LocAbelianElem = std::map<IntVec, RatFun>;
LocAbelianElem kappa_loc(const GaugeTheoryData& t, const LocAbelianElem& a,
                         const FrobeniusContext& c);
LocAbelianElem loc_mul(const GaugeTheoryData& t, const LocAbelianElem& a,
                       const LocAbelianElem& b, unsigned long p);
LocAbelianElem loc_scale(const LocAbelianElem& a, const RatFun& c);
bool loc_equal(const LocAbelianElem& a, const LocAbelianElem& b);

// ---- Dressed-monopole spanning set -----------------------------------------

struct MonopoleTerm {
  IntVec lambda;  // dominant cocharacter
  PolyElem f;     // W_lambda-invariant h-free dressing
};
using MonopoleElem = std::vector<MonopoleTerm>;

// kappa(m_lambda(f)) = m_{lambda/p}(kappa0(f)) when p | lambda, else 0.
// Pre: kappa_0 W-equivariant (context flag set, or the theory abelian); every
// term must be in spanning form: lambda dominant for the simple roots and f
// invariant under the stabilizer of lambda ("NotInSpanningForm" otherwise).
MonopoleElem kappa_nonabelian(const GaugeTheoryData& t, const MonopoleElem& m,
                              const FrobeniusContext& c);

bool monopole_equal(const MonopoleElem& a, const MonopoleElem& b);

}  // namespace alcove
