#pragma once

#include <map>

#include "alcove/ratfun.hpp"
#include "alcove/word.hpp"

namespace alcove {

// Element of K_X = ⊕_λ Frac(Sym)·[t^λ]: finitely many components indexed by
// the character lattice.
using FracVector = std::map<IntVec, RatFun>;

FracVector fv_basis(int rank, const IntVec& lam, const PolyElem& coeff);
FracVector fv_add(const FracVector& a, const FracVector& b);
FracVector fv_scale(const FracVector& a, const Rat& c);
FracVector fv_sub(const FracVector& a, const FracVector& b);
bool fv_is_zero(const FracVector& a);
bool fv_equal(const FracVector& a, const FracVector& b);
std::string fv_str(const FracVector& a);

// One generator letter acting on K_X; `at` is the object the letter is
// applied at (needed by wall letters, whose factor set depends on it).
FracVector act_token(const GaugeTheoryData& t, const Token& tok, const EVec& at,
                     const FracVector& v);

// Whole word acting on K_X (letters applied left to right).
FracVector act_frac(const GaugeTheoryData& t, const MorphismWord& w,
                    const FracVector& v);

// The polynomial model: wall letters multiply by the expanded Φ product,
// Demazure letters apply the divided-difference operator.  Total-degree
// bookkeeping matches word_degree.
PolyElem act_poly(const GaugeTheoryData& t, const MorphismWord& w,
                  const PolyElem& f);

}  // namespace alcove
