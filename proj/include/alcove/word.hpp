#pragma once

#include <vector>

#include "alcove/phi.hpp"
#include "alcove/theory.hpp"

namespace alcove {

// A morphism between unexceptional objects is stored as a word in the four
// generator kinds.  Tokens are applied left-to-right: toks.front() acts on
// the source object first.
enum class TokKind { Poly, Weyl, Wall, Demazure };

struct Token {
  TokKind kind = TokKind::Poly;
  PolyElem poly;   // Poly payload
  AffineMap w;     // Weyl payload
  EVec wall_to;    // Wall payload: the target object of the crossing
  int root = -1;   // Demazure payload: index into theory.roots
  Int level = 0;   // Demazure payload: affine level n of the root wall
};

struct MorphismWord {
  EVec source;
  EVec target;
  std::vector<Token> toks;
};

Token tok_poly(const PolyElem& f);
Token tok_weyl(const AffineMap& w);
Token tok_wall(const EVec& to);
Token tok_demazure(int root, const Int& level);

// Object reached after applying `tok` at `obj`.
EVec token_target(const GaugeTheoryData& t, const Token& tok, const EVec& obj);

MorphismWord word_identity(const GaugeTheoryData& t, const EVec& obj);
MorphismWord word_poly(const GaugeTheoryData& t, const EVec& obj, const PolyElem& f);
MorphismWord word_weyl(const GaugeTheoryData& t, const EVec& obj, const AffineMap& w);
MorphismWord word_wall(const GaugeTheoryData& t, const EVec& to, const EVec& from);
// Demazure generator attached to the root wall {alpha.xi = level}; `from`
// must sit infinitesimally close to that wall (a-part on it, b-part off it).
MorphismWord word_demazure(const GaugeTheoryData& t, int root, const Int& level,
                           const EVec& from);

// g after f (f acts first).  Errors with ObjectMismatch when endpoints differ.
MorphismWord word_compose(const GaugeTheoryData& t, const MorphismWord& g,
                          const MorphismWord& f);

// Degree: walls count crossings both ways, Demazure letters -2, polynomials
// twice their homogeneous degree (inhomogeneous dressings are an error).
Int word_degree(const GaugeTheoryData& t, const MorphismWord& w);

// Wall-crossing morphism factored at each chamber the straight segment
// from -> to passes through.  Falls back to the single-letter word when the
// endpoints carry infinitesimal tags or crossings collide.
MorphismWord straight_path_word(const GaugeTheoryData& t, const EVec& to,
                                const EVec& from);

// Dressed monopole operator m_lambda(f) based at the canonical generic point.
// lambda must be dominant and f invariant under the stabilizer of lambda in
// the finite Weyl group; violations raise Domain errors (NonDominant /
// NonInvariantDressing).  Theories without roots use the abelian layout.
MorphismWord monopole(const GaugeTheoryData& t, const IntVec& lambda,
                      const PolyElem& dressing);

// Deterministic point with all matter and root values non-integral.
EVec generic_base_point(const GaugeTheoryData& t);

// Closure of the finite Weyl generators (linear parts); Budget error when the
// closure exceeds `budget` elements.
std::vector<AffineMap> finite_weyl_elements(const GaugeTheoryData& t,
                                            size_t budget = 4096);

// Bounded enumeration of extended affine Weyl elements: products of the
// declared generators whose translation part stays within `window` in
// sup-norm (search pruned at window + 2).
std::vector<AffineMap> extended_weyl_elements(const GaugeTheoryData& t,
                                              int window, size_t budget = 20000);

// Spanning words for Hom(eta_prime, eta) up to the degree bound: all
// [Poly(monomial), Weyl(w), Wall(eta <- w.eta_prime)] with w drawn from the
// bounded enumeration above.
std::vector<MorphismWord> path_basis(const GaugeTheoryData& t, const EVec& eta,
                                     const EVec& eta_prime, int deg_bound,
                                     int window = 2);

}  // namespace alcove
