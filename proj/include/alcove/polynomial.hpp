#pragma once

#include "alcove/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace alcove {

// Sparse polynomial in x_1..x_n and h (slot n), coefficients in Q or F_p
// (char_p = 0 or a prime; F_p coefficients are kept reduced in [0, p)).
// Term order is lexicographic on exponent vectors, so iteration, printing and
// serialization are deterministic.
struct PolyElem {
  using Expo = std::vector<uint32_t>;  // length nvars()+1 (last slot: h)

  int n = 0;  // number of gauge variables
  unsigned long char_p = 0;
  std::map<Expo, Rat> terms;

  PolyElem() = default;
  PolyElem(int n_, unsigned long p_ = 0) : n(n_), char_p(p_) {}

  int slots() const { return n + 1; }

  static PolyElem zero(int n, unsigned long p = 0) { return PolyElem(n, p); }
  static PolyElem constant(int n, const Rat& c, unsigned long p = 0);
  static PolyElem variable(int n, int j, unsigned long p = 0);  // j in [0, n]: x_{j+1} or h when j == n
  static PolyElem hvar(int n, unsigned long p = 0) { return variable(n, n, p); }
  // c.x + eh*h + e0
  static PolyElem linear(int n, const IntVec& c, const Rat& eh, const Rat& e0, unsigned long p = 0);
  static PolyElem linear(int n, const RatVec& c, const Rat& eh, const Rat& e0, unsigned long p = 0);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // 0 if zero

  void add_term(const Expo& e, const Rat& c);

  PolyElem operator+(const PolyElem& o) const;
  PolyElem operator-(const PolyElem& o) const;
  PolyElem operator-() const;
  PolyElem operator*(const PolyElem& o) const;
  PolyElem scaled(const Rat& c) const;
  PolyElem pow(unsigned k) const;

  bool operator==(const PolyElem& o) const { return n == o.n && char_p == o.char_p && terms == o.terms; }
  bool operator!=(const PolyElem& o) const { return !(*this == o); }
  bool operator<(const PolyElem& o) const;  // arbitrary total order for keying

  // Substitution x_j -> images[j], h -> images[n]; images over the same ring.
  PolyElem subst(const std::vector<PolyElem>& images) const;
  PolyElem set_h(const Rat& value) const;

  // Exact division by a polynomial that is linear in the variables (affine
  // allowed); Error(Domain) if the remainder is nonzero.
  PolyElem div_exact_linear(const PolyElem& ell) const;
  // Same division, but returns nullopt instead of failing when inexact.
  std::optional<PolyElem> try_div_linear(const PolyElem& ell) const;

  int total_degree() const;  // -1 for zero
  // Degree if homogeneous (x's and h all weight 1); nullopt otherwise.
  std::optional<int> homogeneous_degree() const;

  // Reduce coefficients mod p (den must be prime to p) or switch char.
  PolyElem with_char(unsigned long p) const;

  // Primitive normalization scalar: c such that c*this has integer coprime
  // coefficients and positive leading (lex-first) coefficient.
  Rat primitive_scale() const;

  std::string str() const;
};

Rat rat_mod(const Rat& q, unsigned long p);  // representative in [0, p)

}  // namespace alcove
