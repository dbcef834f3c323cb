#include "alcove/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace alcove {

Chamber chamber_of(const GaugeTheoryData& t, const EVec& eta) {
  if (classify(t, eta) == PointClass::Exceptional)
    fail(ErrKind::Domain, "ExceptionalPoint: point lies on a matter wall");
  Chamber c;
  c.a.resize(t.lines());
  for (int i = 0; i < t.lines(); ++i) c.a[i] = eval_mid(t, i, eta).floor();
  return c;
}

std::vector<LinCon> chamber_conditions(const GaugeTheoryData& t, const IntVec& a) {
  if ((int)a.size() != t.lines())
    fail(ErrKind::Domain, "floor vector has wrong length");
  std::vector<LinCon> cons;
  for (int i = 0; i < t.lines(); ++i) {
    RatVec c(t.rank);
    for (int j = 0; j < t.rank; ++j) c[j] = Rat(t.matter[i].gauge[j]);
    RatEps base = RatEps(t.matter[i].offset) + t.delta_eff;
    LinCon lower;  // g.xi + f + delta - a_i > 0
    lower.c = c;
    lower.k = base - RatEps(Rat(a[i]));
    cons.push_back(lower);
    LinCon upper;  // -(g.xi) + a_i + 1 - f - delta > 0
    upper.c.resize(t.rank);
    for (int j = 0; j < t.rank; ++j) upper.c[j] = -c[j];
    upper.k = RatEps(Rat(a[i] + 1)) - base;
    cons.push_back(upper);
  }
  return cons;
}

bool is_nonempty(const GaugeTheoryData& t, const IntVec& a) {
  return chamber_witness(t, a).feasible;
}

FMWitness chamber_witness(const GaugeTheoryData& t, const IntVec& a) {
  LinSys sys;
  sys.nvars = t.rank;
  sys.ineqs = chamber_conditions(t, a);
  return fm_solve(sys);
}

FloorAction floor_action(const GaugeTheoryData& t, const AffineMap& w) {
  auto m = wall_match(t, w);
  if (!m) fail(ErrKind::Domain, "element does not preserve the wall arrangement");
  FloorAction fa;
  fa.perm = m->perm;
  fa.shift = m->shift;
  return fa;
}

IntVec act_floor(const GaugeTheoryData& t, const AffineMap& w, const IntVec& a) {
  FloorAction fa = floor_action(t, w);
  IntVec out(a.size());
  for (size_t j = 0; j < a.size(); ++j) out[j] = a[fa.perm[j]] + fa.shift[j];
  return out;
}

static IntVec apply_action(const FloorAction& fa, const IntVec& a) {
  IntVec out(a.size());
  for (size_t j = 0; j < a.size(); ++j) out[j] = a[fa.perm[j]] + fa.shift[j];
  return out;
}

// fa(gen) applied after fa(cur): the floor action of gen∘cur.
static FloorAction compose_actions(const FloorAction& gen, const FloorAction& cur) {
  size_t d = gen.perm.size();
  FloorAction out;
  out.perm.resize(d);
  out.shift.resize(d);
  for (size_t j = 0; j < d; ++j) {
    out.perm[j] = cur.perm[gen.perm[j]];
    out.shift[j] = cur.shift[gen.perm[j]] + gen.shift[j];
  }
  return out;
}

FloorLattice floor_lattice(const GaugeTheoryData& t, size_t budget) {
  FloorLattice fl;
  fl.d = t.lines();
  fl.n = t.rank;
  // Columns of the map γ ↦ (g_i·γ)_i with coefficient tracking.
  std::vector<IntVec> cols, gams;
  for (int j = 0; j < t.rank; ++j) {
    IntVec col(fl.d);
    for (int i = 0; i < fl.d; ++i) col[i] = t.matter[i].gauge[j];
    IntVec gam(t.rank, Int(0));
    gam[j] = 1;
    cols.push_back(col);
    gams.push_back(gam);
  }
  std::vector<bool> used(cols.size(), false);
  for (int r = 0; r < fl.d; ++r) {
    // Euclidean elimination at row r among unused columns.
    while (true) {
      int na = -1, nb = -1;
      for (size_t c = 0; c < cols.size(); ++c) {
        if (used[c] || cols[c][r] == 0) continue;
        if (na == -1) {
          na = (int)c;
        } else {
          nb = (int)c;
          break;
        }
      }
      if (nb == -1) {
        if (na != -1) {
          if (cols[na][r] < 0) {
            for (auto& v : cols[na]) v = -v;
            for (auto& v : gams[na]) v = -v;
          }
          fl.basis.push_back(cols[na]);
          fl.pivot.push_back(r);
          fl.basis_gamma.push_back(gams[na]);
          used[na] = true;
        }
        break;
      }
      if (abs(cols[na][r]) < abs(cols[nb][r])) std::swap(na, nb);
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), cols[na][r].get_mpz_t(), cols[nb][r].get_mpz_t());
      for (int i = 0; i < fl.d; ++i) cols[na][i] -= q * cols[nb][i];
      for (int j = 0; j < t.rank; ++j) gams[na][j] -= q * gams[nb][j];
    }
  }
  // Finite quotient of the floor-action group by the translation sublattice.
  std::vector<std::pair<FloorAction, AffineMap>> gens;
  for (const auto* pool : {&t.weyl_gens, &t.lenzero_gens})
    for (const auto& w : *pool)
      for (const auto& g : {w, w.inverse()})
        gens.emplace_back(floor_action(t, g), g);
  auto key_of = [&fl](const FloorAction& fa) {
    std::pair<std::vector<int>, IntVec> key;
    key.first = fa.perm;
    key.second = reduce_floor(fl, fa.shift);
    return key;
  };
  std::set<std::pair<std::vector<int>, IntVec>> seen;
  FloorAction idact;
  idact.perm.resize(fl.d);
  for (int j = 0; j < fl.d; ++j) idact.perm[j] = j;
  idact.shift.assign(fl.d, Int(0));
  fl.quotient.push_back({idact, AffineMap::identity(t.rank)});
  seen.insert(key_of(idact));
  for (size_t head = 0; head < fl.quotient.size(); ++head) {
    QuotientElement cur = fl.quotient[head];
    for (const auto& [ga, gw] : gens) {
      FloorAction nxt = compose_actions(ga, cur.action);
      if (seen.insert(key_of(nxt)).second) {
        if (fl.quotient.size() >= budget)
          fail(ErrKind::Budget, "floor-action quotient exceeds budget");
        fl.quotient.push_back({nxt, gw.compose(cur.witness)});
      }
    }
  }
  return fl;
}

IntVec reduce_floor(const FloorLattice& fl, const IntVec& a, IntVec* gamma_out) {
  IntVec work = a;
  IntVec gamma(fl.n, Int(0));
  for (size_t c = 0; c < fl.basis.size(); ++c) {
    int r = fl.pivot[c];
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), work[r].get_mpz_t(), fl.basis[c][r].get_mpz_t());
    if (q == 0) continue;
    for (int i = 0; i < fl.d; ++i) work[i] -= q * fl.basis[c][i];
    for (int j = 0; j < fl.n; ++j) gamma[j] += q * fl.basis_gamma[c][j];
  }
  if (gamma_out) *gamma_out = gamma;
  return work;
}

static RatVec neg_ratvec(const IntVec& v) {
  RatVec r(v.size());
  for (size_t j = 0; j < v.size(); ++j) r[j] = Rat(-v[j]);
  return r;
}

// Shared scan over the quotient: minimal reduced image with its witness.
static std::pair<IntVec, AffineMap> canonical_impl(const GaugeTheoryData& t,
                                                   const FloorLattice& fl,
                                                   const IntVec& a) {
  (void)t;
  bool first = true;
  IntVec best;
  AffineMap best_w;
  for (const auto& q : fl.quotient) {
    IntVec moved = apply_action(q.action, a);
    IntVec gamma;
    IntVec red = reduce_floor(fl, moved, &gamma);
    if (first || red < best) {
      first = false;
      best = red;
      best_w = AffineMap::translation(neg_ratvec(gamma)).compose(q.witness);
    }
  }
  return {best, best_w};
}

IntVec canonical_floor(const GaugeTheoryData& t, const FloorLattice& fl,
                       const IntVec& a) {
  return canonical_impl(t, fl, a).first;
}

AffineMap canonical_witness(const GaugeTheoryData& t, const FloorLattice& fl,
                            const IntVec& a) {
  return canonical_impl(t, fl, a).second;
}

std::pair<IntVec, IntVec> canonical_pair(const GaugeTheoryData& t,
                                         const FloorLattice& fl, const IntVec& a,
                                         const IntVec& b) {
  (void)t;
  bool first = true;
  std::pair<IntVec, IntVec> best;
  for (const auto& q : fl.quotient) {
    IntVec ma = apply_action(q.action, a);
    IntVec mb = apply_action(q.action, b);
    IntVec gamma;
    IntVec ra = reduce_floor(fl, ma, &gamma);
    IntVec rb(mb.size());
    for (size_t j = 0; j < mb.size(); ++j) rb[j] = mb[j] - (ma[j] - ra[j]);
    std::pair<IntVec, IntVec> cand{ra, rb};
    if (first || cand < best) {
      first = false;
      best = cand;
    }
  }
  return best;
}

std::vector<AffineMap> chamber_stabilizer(const GaugeTheoryData& t,
                                          const FloorLattice& fl, const IntVec& a) {
  (void)t;
  std::vector<AffineMap> out;
  std::set<AffineMap> dedup;
  for (const auto& q : fl.quotient) {
    IntVec moved = apply_action(q.action, a);
    IntVec diff(moved.size());
    for (size_t j = 0; j < moved.size(); ++j) diff[j] = a[j] - moved[j];
    IntVec gamma;
    IntVec red = reduce_floor(fl, diff, &gamma);
    bool zero = true;
    for (const auto& v : red) zero &= (v == 0);
    if (!zero) continue;
    // diff = (g_i·gamma)_i, so translating by -gamma... careful with signs:
    // reduce_floor gives red = diff - (g·gamma), hence (g·gamma) = diff and
    // act_floor(t_gamma ∘ w, a) = moved + diff = a.
    RatVec tg(gamma.size());
    for (size_t j = 0; j < gamma.size(); ++j) tg[j] = Rat(gamma[j]);
    AffineMap s = AffineMap::translation(tg).compose(q.witness);
    if (dedup.insert(s).second) out.push_back(s);
  }
  return out;
}

static std::optional<Rat> parallel_ratio(const IntVec& base, const IntVec& other) {
  // other = c * base for some rational c; nullopt when not parallel.
  int k0 = -1;
  bool base_zero = true, other_zero = true;
  for (size_t k = 0; k < base.size(); ++k) {
    if (base[k] != 0) {
      base_zero = false;
      if (k0 < 0) k0 = (int)k;
    }
    if (other[k] != 0) other_zero = false;
  }
  if (base_zero || other_zero) return std::nullopt;
  for (size_t i = 0; i < base.size(); ++i)
    for (size_t j = i + 1; j < base.size(); ++j)
      if (base[i] * other[j] != base[j] * other[i]) return std::nullopt;
  Rat c(other[k0], base[k0]);
  c.canonicalize();
  return c;
}

std::optional<IntVec> neighbor_floor(const GaugeTheoryData& t, const IntVec& a,
                                     int line, int dir) {
  if (line < 0 || line >= t.lines()) fail(ErrKind::Domain, "line out of range");
  if (dir != 1 && dir != -1) fail(ErrKind::Domain, "dir must be +-1");
  Int w = a[line] + (dir > 0 ? 1 : 0);
  const MatterLine& mi = t.matter[line];
  IntVec b = a;
  std::vector<bool> pinned(t.lines(), false);
  for (int j = 0; j < t.lines(); ++j) {
    auto c = parallel_ratio(mi.gauge, t.matter[j].gauge);
    if (!c) continue;
    pinned[j] = true;
    // Value of mid_j on the wall locus {mid_i = w}.
    RatEps vj = RatEps(*c * Rat(w) + t.matter[j].offset - *c * mi.offset) +
                (Rat(1) - *c) * t.delta_eff;
    if (vj.is_int()) {
      int step = (*c > 0) == (dir > 0) ? 1 : -1;
      Int expected = step > 0 ? a[j] + 1 : a[j];
      if (Rat(expected) != vj.a) return std::nullopt;
      b[j] = a[j] + step;
    } else {
      if (vj.floor() != a[j]) return std::nullopt;  // locus outside the closure
    }
  }
  // Relative interior of the shared facet: rational wall equation plus the
  // strict conditions of the non-parallel lines.
  LinSys sys;
  sys.nvars = t.rank;
  LinEq eq;
  eq.c.resize(t.rank);
  for (int j = 0; j < t.rank; ++j) eq.c[j] = Rat(mi.gauge[j]);
  eq.k = RatEps(mi.offset + t.delta_eff.a - Rat(w));
  sys.eqs.push_back(eq);
  auto cons = chamber_conditions(t, a);
  for (int j = 0; j < t.lines(); ++j) {
    if (pinned[j]) continue;
    sys.ineqs.push_back(cons[2 * j]);
    sys.ineqs.push_back(cons[2 * j + 1]);
  }
  if (!fm_solve(sys).feasible) return std::nullopt;
  if (!is_nonempty(t, b)) return std::nullopt;
  return b;
}

LambdaSet enumerate_lambda_bar(const GaugeTheoryData& t, const PthRootContext& pctx,
                               size_t budget) {
  GaugeTheoryData tt = sans_theory(t, pctx);
  FloorLattice fl = floor_lattice(tt);
  LambdaSet ls;
  ls.conventions = tt;
  IntVec seed = chamber_of(tt, generic_base_point(tt)).a;
  std::set<IntVec> visited;
  std::vector<IntVec> queue{canonical_floor(tt, fl, seed)};
  visited.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    IntVec cur = queue[head];
    for (int i = 0; i < tt.lines(); ++i) {
      for (int dir : {1, -1}) {
        auto nb = neighbor_floor(tt, cur, i, dir);
        if (!nb) continue;
        IntVec cn = canonical_floor(tt, fl, *nb);
        if (visited.insert(cn).second) {
          if (visited.size() > budget)
            fail(ErrKind::Budget, "chamber enumeration exceeds budget");
          queue.push_back(cn);
        }
      }
    }
  }
  for (const auto& a : visited) {
    if (!pctx.infinite && pctx.p > 0 && count_points(tt, a, pctx.p) == 0) continue;
    ls.index[a] = (int)ls.reps.size();
    ls.reps.push_back(Chamber{a});
  }
  return ls;
}

// Constraints on integer υ equivalent to a_i < mid_i(υ/k) < a_i+1.
static std::vector<LinCon> scaled_conditions(const GaugeTheoryData& t,
                                             const IntVec& a, unsigned long k) {
  std::vector<LinCon> cons;
  Rat kk{Int(k)};
  for (int i = 0; i < t.lines(); ++i) {
    RatVec c(t.rank);
    for (int j = 0; j < t.rank; ++j) c[j] = Rat(t.matter[i].gauge[j]);
    RatEps base = kk * (RatEps(t.matter[i].offset) + t.delta_eff);
    LinCon lower;
    lower.c = c;
    lower.k = base - RatEps(kk * Rat(a[i]));
    cons.push_back(lower);
    LinCon upper;
    upper.c.resize(t.rank);
    for (int j = 0; j < t.rank; ++j) upper.c[j] = -c[j];
    upper.k = RatEps(kk * Rat(a[i] + 1)) - base;
    cons.push_back(upper);
  }
  return cons;
}

static std::vector<LinCon> substitute_first(const std::vector<LinCon>& cons,
                                            const Int& value) {
  std::vector<LinCon> out;
  out.reserve(cons.size());
  for (const auto& c : cons) {
    LinCon n;
    n.strict = c.strict;
    n.k = c.k + RatEps(c.c[0] * Rat(value));
    n.c.assign(c.c.begin() + 1, c.c.end());
    out.push_back(n);
  }
  return out;
}

static bool interval_of_first(const std::vector<LinCon>& cons, int nvars, Int& lo,
                              Int& hi) {
  LinSys sys;
  sys.nvars = nvars;
  sys.ineqs = cons;
  RatVec f(nvars, Rat(0));
  f[0] = 1;
  FMInterval iv = fm_range(sys, f, RatEps());
  if (!iv.feasible) return false;
  if (iv.lo_unbounded || iv.hi_unbounded)
    fail(ErrKind::Domain, "unbounded chamber: lattice count is infinite");
  lo = iv.lo_strict ? strict_above(iv.lo) : iv.lo.floor() + Int(iv.lo.is_int() ? 0 : 1);
  hi = iv.hi_strict ? strict_below(iv.hi) : iv.hi.floor();
  return lo <= hi;
}

static Int count_rec(const std::vector<LinCon>& cons, int nvars) {
  if (nvars == 0) {
    for (const auto& c : cons) {
      bool ok = c.strict ? (c.k > RatEps()) : (c.k >= RatEps());
      if (!ok) return 0;
    }
    return 1;
  }
  Int lo, hi;
  if (!interval_of_first(cons, nvars, lo, hi)) return 0;
  Int total = 0;
  for (Int v = lo; v <= hi; ++v)
    total += count_rec(substitute_first(cons, v), nvars - 1);
  return total;
}

Int count_points_serial(const GaugeTheoryData& t, const IntVec& a, unsigned long k) {
  if (k == 0) fail(ErrKind::Domain, "dilation must be positive");
  return count_rec(scaled_conditions(t, a, k), t.rank);
}

Int count_points(const GaugeTheoryData& t, const IntVec& a, unsigned long k) {
#ifdef _OPENMP
  if (k == 0) fail(ErrKind::Domain, "dilation must be positive");
  if (t.rank < 2) return count_points_serial(t, a, k);
  auto cons = scaled_conditions(t, a, k);
  Int lo, hi;
  if (!interval_of_first(cons, t.rank, lo, hi)) return 0;
  if (!Int(hi - lo).fits_slong_p())
    fail(ErrKind::Budget, "first-variable range too large");
  long width = (long)Int(hi - lo + 1).get_si();
  std::vector<Int> partial((size_t)width, Int(0));
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < width; ++idx) {
    Int v = lo + Int(idx);
    partial[(size_t)idx] = count_rec(substitute_first(cons, v), t.rank - 1);
  }
  Int total = 0;
  for (const auto& p : partial) total += p;
  return total;
#else
  return count_points_serial(t, a, k);
#endif
}

Int count_points_boxscan(const GaugeTheoryData& t, const IntVec& a,
                         unsigned long k) {
  if (k == 0) fail(ErrKind::Domain, "dilation must be positive");
  auto cons = scaled_conditions(t, a, k);
  // Bounding box per coordinate from the full system.
  std::vector<std::pair<Int, Int>> box(t.rank);
  LinSys sys;
  sys.nvars = t.rank;
  sys.ineqs = cons;
  for (int j = 0; j < t.rank; ++j) {
    RatVec f(t.rank, Rat(0));
    f[j] = 1;
    FMInterval iv = fm_range(sys, f, RatEps());
    if (!iv.feasible) return 0;
    if (iv.lo_unbounded || iv.hi_unbounded)
      fail(ErrKind::Domain, "unbounded chamber: lattice count is infinite");
    box[j] = {strict_above(iv.lo - RatEps(Rat(1))), strict_below(iv.hi + RatEps(Rat(1)))};
  }
  IntVec v(t.rank, Int(0));
  std::function<Int(int)> scan = [&](int j) -> Int {
    if (j == t.rank) {
      for (const auto& c : cons) {
        RatEps val = c.k;
        for (int m = 0; m < t.rank; ++m) val += c.c[m] * RatEps(Rat(v[m]));
        bool ok = c.strict ? (val > RatEps()) : (val >= RatEps());
        if (!ok) return 0;
      }
      return 1;
    }
    Int sub = 0;
    for (Int x = box[j].first; x <= box[j].second; ++x) {
      v[j] = x;
      sub += scan(j + 1);
    }
    return sub;
  };
  return scan(0);
}

std::vector<Int> ehrhart_profile(const GaugeTheoryData& t, const IntVec& a,
                                 const std::vector<unsigned long>& ks) {
  std::vector<Int> out;
  out.reserve(ks.size());
  for (auto k : ks) out.push_back(count_points(t, a, k));
  return out;
}

Rat QuasiPolynomial::eval(unsigned long k) const {
  unsigned long r = k % period;
  Rat x{Int(k)}, acc(0), pw(1);
  for (size_t e = 0; e < coeffs[r].size(); ++e) {
    acc += coeffs[r][e] * pw;
    pw *= x;
  }
  return acc;
}

static unsigned long quasi_period(const GaugeTheoryData& t) {
  Int period = 1;
  auto fold_den = [&period](const Rat& q) {
    Int den = q.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), period.get_mpz_t(), den.get_mpz_t());
    period = period / g * den;
  };
  for (const auto& m : t.matter) fold_den(m.offset + t.delta_eff.a);
  // Nonzero maximal minors of the gauge covector matrix.
  int n = t.rank, d = t.lines();
  std::vector<int> idx(n);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == n) {
      IntMat m(n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = t.matter[idx[r]].gauge[c];
      Int det = m.det();
      if (det == 0) return;
      if (det < 0) det = -det;
      Int g;
      mpz_gcd(g.get_mpz_t(), period.get_mpz_t(), det.get_mpz_t());
      period = period / g * det;
      return;
    }
    for (int i = from; i < d; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  if (n > 0 && n <= d) rec(0, 0);
  if (!period.fits_ulong_p()) fail(ErrKind::Budget, "quasi-polynomial period too large");
  return period.get_ui();
}

// Solve the (deg+1)x(deg+1) Vandermonde system exactly.
static RatVec fit_poly(const std::vector<unsigned long>& xs,
                       const std::vector<Int>& ys) {
  int m = (int)xs.size();
  std::vector<RatVec> A(m, RatVec(m + 1, Rat(0)));
  for (int r = 0; r < m; ++r) {
    Rat x{Int(xs[r])}, pw(1);
    for (int c = 0; c < m; ++c) {
      A[r][c] = pw;
      pw *= x;
    }
    A[r][m] = Rat(ys[r]);
  }
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) fail(ErrKind::FitFailed, "singular sample matrix");
    std::swap(A[col], A[piv]);
    for (int r = 0; r < m; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rat f = A[r][col] / A[col][col];
      for (int c = col; c <= m; ++c) A[r][c] -= f * A[col][c];
    }
  }
  RatVec out(m);
  for (int r = 0; r < m; ++r) out[r] = A[r][m] / A[r][r];
  return out;
}

QuasiPolynomial ehrhart_fit(const GaugeTheoryData& t, const IntVec& a,
                            const std::vector<unsigned long>& ks) {
  if (!is_nonempty(t, a)) {
    QuasiPolynomial qp;
    qp.period = 1;
    qp.coeffs = {RatVec{Rat(0)}};
    for (auto k : ks)
      if (count_points(t, a, k) != 0) fail(ErrKind::FitFailed, "empty chamber count");
    return qp;
  }
  QuasiPolynomial qp;
  qp.period = quasi_period(t);
  int deg = t.rank;
  qp.coeffs.resize(qp.period);
  for (unsigned long r = 0; r < qp.period; ++r) {
    std::vector<unsigned long> xs;
    std::vector<Int> ys;
    unsigned long k0 = (r == 0) ? qp.period : r;
    for (int s = 0; s < deg + 3; ++s) {
      unsigned long k = k0 + (unsigned long)s * qp.period;
      xs.push_back(k);
      ys.push_back(count_points(t, a, k));
    }
    std::vector<unsigned long> fit_x(xs.begin(), xs.begin() + deg + 1);
    std::vector<Int> fit_y(ys.begin(), ys.begin() + deg + 1);
    qp.coeffs[r] = fit_poly(fit_x, fit_y);
    for (size_t s = deg + 1; s < xs.size(); ++s)
      if (qp.eval(xs[s]) != Rat(ys[s]))
        fail(ErrKind::FitFailed, "quasi-polynomial residual at holdout sample");
  }
  for (auto k : ks)
    if (qp.eval(k) != Rat(count_points(t, a, k)))
      fail(ErrKind::FitFailed, "quasi-polynomial mismatch at requested dilation");
  return qp;
}

}  // namespace alcove
