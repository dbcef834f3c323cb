#include "alcove/theory.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alcove {

bool AffineMap::is_translation_by_int() const {
  if (!(lin == IntMat::identity(lin.n))) return false;
  for (const Rat& v : tr)
    if (!is_integer(v)) return false;
  return true;
}

RatEps eval_mid(const GaugeTheoryData& t, int i, const EVec& eta) {
  RatEps v = dot(t.matter[i].gauge, eta);
  v += RatEps(t.matter[i].offset);
  v += t.delta_eff;
  return v;
}

PointClass classify(const GaugeTheoryData& t, const EVec& eta) {
  for (int i = 0; i < t.lines(); ++i)
    if (eval_mid(t, i, eta).is_int()) return PointClass::Exceptional;
  for (const auto& r : t.roots)
    if (dot(r.alpha, eta).is_int()) return PointClass::Unexceptional;
  return PointClass::Generic;
}

EVec act(const AffineMap& w, const EVec& eta) { return w.apply(eta); }

std::optional<WallMatch> wall_match(const GaugeTheoryData& t, const AffineMap& w) {
  // mid_j(w.xi) = (g_j A).xi + g_j.t + f_j + delta; match against families
  // (g_i, f_i mod Z).
  int d = t.lines();
  WallMatch m;
  m.perm.assign(d, -1);
  m.shift.assign(d, Int(0));
  std::vector<bool> used(d, false);
  for (int j = 0; j < d; ++j) {
    IntVec gj = w.lin.pre_apply(t.matter[j].gauge);
    Rat off = dot(t.matter[j].gauge, w.tr) + t.matter[j].offset;
    bool found = false;
    for (int i = 0; i < d && !found; ++i) {
      if (used[i] || t.matter[i].gauge != gj) continue;
      Rat k = off - t.matter[i].offset;
      if (!is_integer(k)) continue;
      used[i] = true;
      m.perm[j] = i;
      m.shift[j] = Int(k.get_num());
      found = true;
    }
    if (!found) return std::nullopt;
  }
  return m;
}

std::vector<LinCon> alcove_conditions(const GaugeTheoryData& t) {
  std::vector<LinCon> out;
  for (const auto& r : t.roots) {
    RatVec a(t.rank);
    for (int j = 0; j < t.rank; ++j) a[j] = Rat(r.alpha[j]);
    if (r.simple) {
      LinCon ge;  // alpha(xi) >= 0
      ge.c = a;
      ge.k = RatEps();
      ge.strict = false;
      out.push_back(ge);
    }
    LinCon le;  // alpha(xi) <= 1
    le.c = a;
    for (Rat& v : le.c) v = -v;
    le.k = RatEps(Rat(1));
    le.strict = false;
    out.push_back(le);
  }
  return out;
}

namespace {

// Checks that w maps the fundamental alcove into itself (exactly: no point of
// the alcove violates any alcove condition after applying w).
bool preserves_alcove(const GaugeTheoryData& t, const AffineMap& w) {
  auto cons = alcove_conditions(t);
  if (cons.empty()) return true;
  for (const auto& c : cons) {
    // violated-after-map region: c(w.xi) < 0 strictly (c is ">= 0" form)
    LinSys sys;
    sys.nvars = t.rank;
    sys.ineqs = cons;
    LinCon bad;
    bad.c.assign(t.rank, Rat(0));
    RatEps k = c.k;
    for (int i = 0; i < t.rank; ++i) {
      if (c.c[i] == 0) continue;
      for (int j = 0; j < t.rank; ++j) bad.c[j] += c.c[i] * Rat(w.lin.at(i, j));
      k += c.c[i] * RatEps(w.tr[i]);
    }
    for (Rat& v : bad.c) v = -v;
    bad.k = -k;
    bad.strict = true;  // c(w.xi) + k < 0
    sys.ineqs.push_back(bad);
    if (fm_solve(sys).feasible) return false;
  }
  return true;
}

}  // namespace

void validate(const GaugeTheoryData& t) {
  if (t.rank < 0) fail(ErrKind::Domain, "negative rank");
  if (!(t.delta > 0 && t.delta < 1)) fail(ErrKind::Domain, "delta must lie strictly between 0 and 1");
  for (const auto& m : t.matter) {
    if ((int)m.gauge.size() != t.rank) fail(ErrKind::Domain, "matter covector arity mismatch");
    if (!m.flavor_cov.empty() && (int)m.flavor_cov.size() != t.flavor_rank)
      fail(ErrKind::Domain, "flavor covector arity mismatch");
  }
  for (const auto& r : t.roots) {
    if ((int)r.alpha.size() != t.rank || (int)r.coroot.size() != t.rank)
      fail(ErrKind::Domain, "root arity mismatch");
    if (dot(r.alpha, r.coroot) != 2) fail(ErrKind::Domain, "root/coroot pairing is not 2");
  }
  for (const auto& w : t.weyl_gens) {
    if (w.lin.n != t.rank) fail(ErrKind::Domain, "weyl generator arity mismatch");
    for (const Rat& v : w.tr)
      if (v != 0) fail(ErrKind::Domain, "weyl generator must be linear");
    if (!(w.lin.mul(w.lin) == IntMat::identity(t.rank)))
      fail(ErrKind::Domain, "weyl generator is not an involution");
    // multiset invariance of matter covectors
    std::multiset<IntVec> have, got;
    for (const auto& m : t.matter) {
      have.insert(m.gauge);
      got.insert(w.lin.pre_apply(m.gauge));
    }
    if (have != got) fail(ErrKind::Domain, "matter covectors are not Weyl-invariant as a multiset");
  }
  for (const auto& w : t.lenzero_gens) {
    if (w.lin.n != t.rank) fail(ErrKind::Domain, "length-zero generator arity mismatch");
    Int d = w.lin.det();
    if (d != 1 && d != -1) fail(ErrKind::Domain, "length-zero generator is not unimodular");
    if (!preserves_alcove(t, w) || !preserves_alcove(t, w.inverse()))
      fail(ErrKind::Domain, "length-zero generator does not preserve the fundamental alcove");
  }
}

GaugeTheoryData realize(const GaugeTheoryData& t, const RatVec& psi) {
  if ((int)psi.size() != t.flavor_rank) fail(ErrKind::Domain, "flavor point arity mismatch");
  GaugeTheoryData r = t;
  r.psi = psi;
  for (auto& m : r.matter) {
    m.offset = m.offset_const;
    if (!m.flavor_cov.empty()) m.offset += dot(m.flavor_cov, psi);
  }
  return r;
}

}  // namespace alcove
