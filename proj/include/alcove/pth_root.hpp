#pragma once

#include "alcove/oracle.hpp"
#include "alcove/word.hpp"

namespace alcove {

// Comparison data for the p-th-root conventions: the prime (or the ∞ marker
// for the real-convention limit), the gauge lift of the comparison coweight,
// and the per-matter-line pairings with it.  Empty vectors mean zero.
struct PthRootContext {
  bool infinite = false;
  unsigned long p = 0;
  IntVec upsilon_gauge;    // gauge lift used to place scaled objects
  RatVec upsilon_offsets;  // pairing of each matter line with the coweight
};

PthRootContext pctx_infinite();
PthRootContext pctx_prime(unsigned long p, IntVec upsilon_gauge = {},
                          RatVec upsilon_offsets = {});

// Pairing ⟨φ_i^+, υ′⟩ for matter line i (0 when unset).
Rat pctx_offset(const PthRootContext& c, int i);
// Gauge lift padded to the theory's rank.
IntVec pctx_gauge(const GaugeTheoryData& t, const PthRootContext& c);

// The same arrangement in p-th-root conventions: offsets and delta divided
// by p.  In ∞ mode the offsets are kept and delta becomes infinitesimal.
GaugeTheoryData sans_theory(const GaugeTheoryData& t, const PthRootContext& c);

// Level-slice scaling η ↦ p·η + υ and its inverse (finite p only).
EVec scale_up(const GaugeTheoryData& t, const PthRootContext& c, const EVec& eta);
EVec scale_down(const GaugeTheoryData& t, const PthRootContext& c, const EVec& xi);

// A matter wall {mid_i = n} survives reduction iff n ≡ ⟨φ_i^+, υ′⟩ (mod p).
bool retained(const GaugeTheoryData& t, const PthRootContext& c, int i, const Int& n);
// Same criterion for the root wall {alpha·ξ = n}.
bool retained_root(const PthRootContext& c, const IntVec& alpha, const Int& n);

// Sub-multiset of phi_product(eta, eta_prime) on the non-retained walls:
// the factors that become invertible in the completed category.
PhiFactors phi_hat0(const GaugeTheoryData& t, const PthRootContext& c,
                    const EVec& eta, const EVec& eta_prime);

// Image of a Weyl letter: the unique map with (wη)_p = w_p·η_p.
AffineMap gamma_weyl(const GaugeTheoryData& t, const PthRootContext& c,
                     const AffineMap& w);

// Word translated into base conventions together with the multiset of
// formally inverted Φ̂₀ denominator factors picked up at wall letters.
struct GammaWord {
  MorphismWord word;
  PhiFactors denominators;
};
GammaWord gamma_translate(const GaugeTheoryData& base, const PthRootContext& c,
                          const MorphismWord& sans_word);

// Operator form of the γ-image with the Φ̂₀ factors cancelled exactly
// against the wall products (each wall letter contributes the retained
// sub-product only); used to check that relations map to relations.
OperatorForm gamma_form(const GaugeTheoryData& base, const PthRootContext& c,
                        const MorphismWord& sans_word);
OperatorForm gamma_sum_form(const GaugeTheoryData& base, const PthRootContext& c,
                            const WordSum& ws);

// Multiset bijection between sans crossings (i,m) and retained base
// crossings (i, p·m + o_i); requires integral pairings.
bool check_crossing_bijection(const GaugeTheoryData& base, const PthRootContext& c,
                              const EVec& sans_eta, const EVec& sans_eta_prime);

}  // namespace alcove
