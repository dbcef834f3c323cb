#include "alcove/linsolve.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace alcove {

namespace {

// Scales a condition so the first nonzero coefficient is +-1; drops nothing.
void normalize(LinCon& c) {
  for (const Rat& v : c.c) {
    if (v != 0) {
      Rat s = abs(v);
      for (Rat& w : c.c) w /= s;
      c.k = c.k / s;
      return;
    }
  }
}

bool const_holds(const LinCon& c) {
  RatEps z;
  return c.strict ? c.k > z : c.k >= z;
}

bool is_const(const LinCon& c, int upto) {
  for (int j = 0; j < upto; ++j)
    if (c.c[j] != 0) return false;
  return true;
}

// Eliminates variable j (conditions may only involve vars 0..j).
std::vector<LinCon> eliminate(const std::vector<LinCon>& cons, int j) {
  std::vector<LinCon> lows, ups, rest;
  for (const auto& c : cons) {
    if (c.c[j] > 0)
      lows.push_back(c);
    else if (c.c[j] < 0)
      ups.push_back(c);
    else
      rest.push_back(c);
  }
  std::map<std::pair<RatVec, std::pair<Rat, Rat>>, bool> seen;
  auto push = [&](LinCon c) {
    if (is_const(c, (int)c.c.size())) {
      if (!const_holds(c)) rest.push_back(c);  // keep contradictions
      return;
    }
    normalize(c);
    auto key = std::make_pair(c.c, std::make_pair(c.k.a, c.k.b));
    auto it = seen.find(key);
    if (it != seen.end()) {
      // identical condition; strict version implies the non-strict one
      if (it->second || !c.strict) return;
    }
    seen[key] = seen.count(key) ? (seen[key] && c.strict) : c.strict;
    rest.push_back(c);
  };
  for (const auto& lo : lows)
    for (const auto& up : ups) {
      // lo: c.x + k > 0 with c_j > 0 ; up: c'_j < 0.  Positive combination
      // (-c'_j)*lo + (c_j)*up kills x_j.
      LinCon n;
      n.c.assign(lo.c.size(), Rat(0));
      Rat a = -up.c[j], b = lo.c[j];
      for (size_t t = 0; t < lo.c.size(); ++t) n.c[t] = a * lo.c[t] + b * up.c[t];
      n.k = a * lo.k + b * up.k;
      n.strict = lo.strict || up.strict;
      push(n);
    }
  return rest;
}

}  // namespace

std::vector<LinCon> fm_project(int nvars, std::vector<LinCon> cons, int keep) {
  for (auto& c : cons)
    if ((int)c.c.size() != nvars) fail(ErrKind::Domain, "fm: bad arity");
  for (int j = nvars - 1; j >= keep; --j) cons = eliminate(cons, j);
  for (auto& c : cons) c.c.resize(keep);
  return cons;
}

namespace {

// Substitutes equalities away; returns (reduced inequality system over the
// same variable indexing with pivot variables fixed by back-fill closures).
struct EqElim {
  std::vector<LinCon> ineqs;
  // back-fill in reverse order: (pivot var, coeffs over remaining vars, k, div)
  struct Step {
    int var;
    RatVec c;
    RatEps k;
    Rat div;
  };
  std::vector<Step> steps;
  bool contradiction = false;
};

EqElim eliminate_eqs(const LinSys& sys) {
  EqElim out;
  out.ineqs = sys.ineqs;
  std::vector<LinEq> eqs = sys.eqs;
  while (!eqs.empty()) {
    LinEq eq = eqs.back();
    eqs.pop_back();
    int piv = -1;
    for (int j = (int)eq.c.size() - 1; j >= 0; --j)
      if (eq.c[j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) {
      if (eq.k != RatEps()) out.contradiction = true;
      continue;
    }
    // x_piv = -(k + sum_{t != piv} c_t x_t)/c_piv
    EqElim::Step st;
    st.var = piv;
    st.div = eq.c[piv];
    st.c = eq.c;
    st.c[piv] = 0;
    st.k = eq.k;
    auto subst = [&](RatVec& c, RatEps& k) {
      Rat f = c[piv];
      if (f == 0) return;
      c[piv] = 0;
      Rat scale = f / st.div;
      for (size_t t = 0; t < c.size(); ++t) c[t] -= scale * st.c[t];
      k -= scale * st.k;
    };
    for (auto& c : out.ineqs) subst(c.c, c.k);
    for (auto& e : eqs) subst(e.c, e.k);
    out.steps.push_back(st);
  }
  return out;
}

}  // namespace

std::vector<LinCon> fm_project_sys(const LinSys& sys, int keep) {
  EqElim ee = eliminate_eqs(sys);
  if (ee.contradiction) {
    LinCon never;
    never.c.assign(keep, Rat(0));
    never.k = RatEps(Rat(-1));
    never.strict = false;
    return {never};
  }
  // Equality pivots among the kept variables would leak; callers only project
  // systems whose equalities involve eliminated variables, but guard anyway.
  for (const auto& st : ee.steps)
    if (st.var < keep) {
      // Re-add as a pair of inequalities on the kept prefix after projection
      // of the tail; simplest correct route: convert to two ineqs up front.
      LinSys s2;
      s2.nvars = sys.nvars;
      s2.ineqs = sys.ineqs;
      for (const auto& e : sys.eqs) {
        LinCon ge{e.c, e.k, false};
        LinCon le{e.c, e.k, false};
        for (auto& v : le.c) v = -v;
        le.k = -e.k;
        s2.ineqs.push_back(ge);
        s2.ineqs.push_back(le);
      }
      return fm_project(s2.nvars, s2.ineqs, keep);
    }
  return fm_project(sys.nvars, ee.ineqs, keep);
}

FMWitness fm_solve(const LinSys& sys) {
  EqElim ee = eliminate_eqs(sys);
  FMWitness w;
  if (ee.contradiction) return w;
  int n = sys.nvars;
  // Variables fixed by equality substitution are handled at back-fill time.
  std::vector<bool> pivoted(n, false);
  for (const auto& st : ee.steps) pivoted[st.var] = true;

  // stages[j]: conditions on variables 0..j-1 (after eliminating j..n-1).
  std::vector<std::vector<LinCon>> stages(n + 1);
  stages[n] = ee.ineqs;
  for (int j = n - 1; j >= 0; --j) stages[j] = eliminate(stages[j + 1], j);
  for (const auto& c : stages[0])
    if (!const_holds(c)) return w;
  // Contradictory constants can also be parked at higher stages.
  for (int j = 1; j <= n; ++j)
    for (const auto& c : stages[j])
      if (is_const(c, n) && !const_holds(c)) return w;

  EVec x(n);
  for (int j = 0; j < n; ++j) {
    if (pivoted[j]) continue;  // filled later
    std::optional<RatEps> lo, hi;
    for (const auto& c : stages[j + 1]) {
      if (c.c[j] == 0) continue;
      RatEps v = c.k;
      for (int t = 0; t < j; ++t) v += c.c[t] * x[t];
      RatEps bound = -(v / c.c[j]);
      if (c.c[j] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      if (*lo < *hi)
        x[j] = (*lo + *hi) / Rat(2);
      else
        x[j] = *lo;  // equality; feasibility guaranteed by elimination
    } else if (lo) {
      x[j] = *lo + RatEps(Rat(1));
    } else if (hi) {
      x[j] = *hi - RatEps(Rat(1));
    } else {
      x[j] = RatEps();
    }
  }
  // Back-fill equality pivots in reverse elimination order.
  for (auto it = ee.steps.rbegin(); it != ee.steps.rend(); ++it) {
    RatEps v = it->k;
    for (size_t t = 0; t < it->c.size(); ++t)
      if (it->c[t] != 0) v += it->c[t] * x[t];
    x[it->var] = -(v / it->div);
  }
  w.feasible = true;
  w.point = std::move(x);
  return w;
}

FMInterval fm_range(const LinSys& sys, const RatVec& f, const RatEps& cst) {
  // New variable u in slot 0; shift x's up; add u - f.x - cst == 0.
  LinSys s;
  s.nvars = sys.nvars + 1;
  for (const auto& c : sys.ineqs) {
    LinCon d;
    d.c.assign(s.nvars, Rat(0));
    for (int j = 0; j < sys.nvars; ++j) d.c[j + 1] = c.c[j];
    d.k = c.k;
    d.strict = c.strict;
    s.ineqs.push_back(d);
  }
  for (const auto& e : sys.eqs) {
    LinEq d;
    d.c.assign(s.nvars, Rat(0));
    for (int j = 0; j < sys.nvars; ++j) d.c[j + 1] = e.c[j];
    d.k = e.k;
    s.eqs.push_back(d);
  }
  LinEq link;
  link.c.assign(s.nvars, Rat(0));
  link.c[0] = 1;
  for (int j = 0; j < sys.nvars; ++j) link.c[j + 1] = -f[j];
  link.k = -cst;
  s.eqs.push_back(link);

  auto cons = fm_project_sys(s, 1);
  FMInterval iv;
  for (const auto& c : cons) {
    if (c.c[0] == 0) {
      if (!const_holds(c)) return iv;  // infeasible
      continue;
    }
    RatEps bound = -(c.k / c.c[0]);
    if (c.c[0] > 0) {
      if (iv.lo_unbounded || bound > iv.lo || (bound == iv.lo && c.strict)) {
        iv.lo = bound;
        iv.lo_strict = c.strict;
        iv.lo_unbounded = false;
      }
    } else {
      if (iv.hi_unbounded || bound < iv.hi || (bound == iv.hi && c.strict)) {
        iv.hi = bound;
        iv.hi_strict = c.strict;
        iv.hi_unbounded = false;
      }
    }
  }
  if (!iv.lo_unbounded && !iv.hi_unbounded) {
    if (iv.lo > iv.hi) return iv;
    if (iv.lo == iv.hi && (iv.lo_strict || iv.hi_strict)) return iv;
  }
  iv.feasible = true;
  return iv;
}

}  // namespace alcove
