#pragma once

#include "alcove/theory.hpp"

namespace alcove {

// C* acting on C^n with all weights 1 and one flavor parameter per line.
// With the generic flavor below, the walls sit at n distinct offsets on a
// circle and the chamber classes form an n-cycle.
GaugeTheoryData make_cyclic_theory(int n);
RatVec cyclic_flavor(int n);  // psi_i = i/n

// GL(2) on C^2 ⊕ C^2: matter weights x, y for each copy, second copy carrying
// the flavor parameter.  At the flavor point 3/5, the wall offsets on each
// coordinate sit at {0, 2/5} mod 1 and three chamber classes A, B, C appear.
GaugeTheoryData make_gl2_theory();
RatVec gl2_flavor();

// GL(3) on C^3 (one fundamental): used for braid-length relation checks.
GaugeTheoryData make_gl3_theory();

// C* on C with weight 1, offset 0, delta 1/2.
GaugeTheoryData make_abelian_theory();

// (C*)^2, no roots: three matter lines with weights (1,0), (0,1), (1,1) and
// distinct fractional offsets.  Rank-2 abelian workbench for the relation
// suite: wall crossings in several directions, no Weyl letters beyond
// translations.
GaugeTheoryData make_abelian2_theory();

// Rank-2 theory with two orthogonal root pairs (A1 x A1): roots ±e1, ±e2
// with sign-flip Weyl generators and a Weyl-stable set of four matter lines.
// Smallest theory where the commuting (m = 2) braid relation between
// Demazure letters at a codimension-2 root crossing is non-vacuous.
GaugeTheoryData make_a11_theory();

// C* on C^2 with both weights 1, one flavor parameter splitting the two
// lines: the flavor wall picture is a single integer-periodic family.
GaugeTheoryData make_cstar2_theory();

// Rank-0 gauge group: no walls at all.
GaugeTheoryData make_trivial_theory();

}  // namespace alcove
