#pragma once

#include <utility>

#include "alcove/action.hpp"

namespace alcove {

// Canonical operator form of a word: a sum of terms R·(M ⋉ W) where M is the
// affine substitution acting on rational functions, W the induced map on the
// weight lattice, and R a rational-function left multiplier.  Composition of
// words multiplies these symbols; two words are equal as module operators
// exactly when the (merged) forms agree.
using OpKey = std::pair<AffineMap, AffineMap>;
using OperatorForm = std::map<OpKey, RatFun>;

// Formal rational combination of parallel words.
using WordSum = std::vector<std::pair<Rat, MorphismWord>>;

struct OracleOpts {
  int deg_bound = 6;        // sweep: monomial total degree bound
  int weight_radius = 4;    // sweep: weight 1-norm bound
  unsigned long char_p = 0; // reduce coefficients mod p when nonzero
  bool h_zero = false;      // specialize h = 0 before comparing
};

enum class Verdict { EqualUpToTruncation, Different };

OperatorForm word_form(const GaugeTheoryData& t, const MorphismWord& w);
OperatorForm sum_form(const GaugeTheoryData& t, const WordSum& ws);
OperatorForm form_specialize(const OperatorForm& f, const OracleOpts& o);
FracVector form_apply(const OperatorForm& f, const PolyElem& m, const IntVec& lam);
bool form_identical(const OperatorForm& a, const OperatorForm& b);

// Equality as operators on K_X.  Identical canonical forms certify exact
// equality; otherwise both sides are swept over the truncated basis
// m·[t^λ], deg m ≤ deg_bound, ‖λ‖₁ ≤ weight_radius, and any discrepancy is
// decisive for Different.
Verdict equal_oracle(const GaugeTheoryData& t, const MorphismWord& a,
                     const MorphismWord& b, const OracleOpts& o = {});
Verdict equal_oracle_sums(const GaugeTheoryData& t, const WordSum& a,
                          const WordSum& b, const OracleOpts& o = {});

std::string verdict_str(Verdict v);

// Exponent vectors over `nvars` variables with total degree ≤ max_deg,
// lexicographic order (shared by the oracle sweep and basis builders).
std::vector<std::vector<uint32_t>> monomial_exponents(int nvars, int max_deg);
// Integer vectors of length n with 1-norm ≤ radius, lexicographic order.
std::vector<IntVec> weight_box(int n, int radius);

}  // namespace alcove
