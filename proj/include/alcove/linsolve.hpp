#pragma once

#include "alcove/rational.hpp"

namespace alcove {

// One linear condition  c.x + k REL 0  on rational points x, with constant
// part allowed a first-order infinitesimal (RatEps).  strict => REL is ">".
struct LinCon {
  RatVec c;
  RatEps k;
  bool strict = true;
};

// c.x + k == 0
struct LinEq {
  RatVec c;
  RatEps k;
};

struct LinSys {
  int nvars = 0;
  std::vector<LinCon> ineqs;
  std::vector<LinEq> eqs;
};

struct FMWitness {
  bool feasible = false;
  EVec point;  // length nvars when feasible
};

// Exact feasibility + deterministic interior witness (Fourier-Motzkin with
// midpoint back-substitution).
FMWitness fm_solve(const LinSys& sys);

// Eliminates variables keep..nvars-1, returning conditions on x_0..x_{keep-1}.
// Equalities must have been substituted away by the caller (or use
// fm_project_sys which handles them).
std::vector<LinCon> fm_project(int nvars, std::vector<LinCon> cons, int keep);
std::vector<LinCon> fm_project_sys(const LinSys& sys, int keep);

struct FMInterval {
  bool feasible = false;
  bool lo_unbounded = true, hi_unbounded = true;
  RatEps lo, hi;
  bool lo_strict = true, hi_strict = true;
};

// Exact range of the functional f.x + cst over the solution set.
FMInterval fm_range(const LinSys& sys, const RatVec& f, const RatEps& cst);

}  // namespace alcove
