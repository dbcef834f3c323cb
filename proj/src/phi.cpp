#include "alcove/phi.hpp"

#include <algorithm>

namespace alcove {

Int strict_above(const RatEps& v) { return v.floor() + 1; }
Int strict_below(const RatEps& v) { return -strict_above(-v); }

namespace {
void require_unexceptional(const GaugeTheoryData& t, const EVec& eta, const char* who) {
  if (!unexceptional(t, eta)) fail(ErrKind::Domain, std::string("ExceptionalPoint: ") + who);
}
}  // namespace

PhiFactors phi_product(const GaugeTheoryData& t, const EVec& eta, const EVec& eta_prime) {
  require_unexceptional(t, eta, "phi_product target");
  require_unexceptional(t, eta_prime, "phi_product source");
  PhiFactors out;
  for (int i = 0; i < t.lines(); ++i) {
    RatEps hi = eval_mid(t, i, eta);
    RatEps lo = eval_mid(t, i, eta_prime);
    if (!(lo < hi)) continue;
    for (Int n = strict_above(lo); n <= strict_below(hi); ++n) out.push_back({i, n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

PhiFactors phi_triple(const GaugeTheoryData& t, const EVec& eta, const EVec& eta_prime,
                      const EVec& eta_dblprime) {
  require_unexceptional(t, eta, "phi_triple arg 1");
  require_unexceptional(t, eta_prime, "phi_triple arg 2");
  require_unexceptional(t, eta_dblprime, "phi_triple arg 3");
  PhiFactors out;
  for (int i = 0; i < t.lines(); ++i) {
    RatEps a = eval_mid(t, i, eta);
    RatEps b = eval_mid(t, i, eta_prime);
    RatEps c = eval_mid(t, i, eta_dblprime);
    // (above, below, above): n < a, n > b, n < c  -> n in (b, min(a,c))
    {
      RatEps hi = std::min(a, c);
      if (b < hi)
        for (Int n = strict_above(b); n <= strict_below(hi); ++n) out.push_back({i, n});
    }
    // (below, above, below): n > a, n < b, n > c  -> n in (max(a,c), b)
    {
      RatEps lo = std::max(a, c);
      if (lo < b)
        for (Int n = strict_above(lo); n <= strict_below(b); ++n) out.push_back({i, n});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PhiFactors phi_merge(const PhiFactors& a, const PhiFactors& b) {
  PhiFactors out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool phi_equal(const PhiFactors& a, const PhiFactors& b) { return a == b; }

PhiFactors phi_diff(const PhiFactors& a, const PhiFactors& b) {
  PhiFactors out;
  size_t i = 0, j = 0;
  while (i < a.size()) {
    if (j < b.size() && b[j] == a[i]) {
      ++i;
      ++j;
    } else if (j < b.size() && b[j] < a[i]) {
      fail(ErrKind::Domain, "phi_diff: subtrahend not contained");
    } else {
      out.push_back(a[i]);
      ++i;
    }
  }
  if (j < b.size()) fail(ErrKind::Domain, "phi_diff: subtrahend not contained");
  return out;
}

PolyElem matter_form(const GaugeTheoryData& t, int i, unsigned long char_p) {
  return PolyElem::linear(t.rank, t.matter[i].gauge, t.matter[i].offset, Rat(0), char_p);
}

PolyElem phi_factor_poly(const GaugeTheoryData& t, const PhiFactor& f, unsigned long char_p) {
  return PolyElem::linear(t.rank, t.matter[f.line].gauge, t.matter[f.line].offset - Rat(f.n),
                          Rat(0), char_p);
}

PolyElem affine_root_poly(int rank, const IntVec& alpha, const Int& n, unsigned long char_p) {
  return PolyElem::linear(rank, alpha, Rat(-n), Rat(0), char_p);
}

PolyElem phi_expand(const GaugeTheoryData& t, const PhiFactors& fs, unsigned long char_p) {
  PolyElem out = PolyElem::constant(t.rank, 1, char_p);
  for (const PhiFactor& f : fs) out = out * phi_factor_poly(t, f, char_p);
  return out;
}

std::string phi_str(const PhiFactors& fs) {
  std::string s = "{";
  for (size_t k = 0; k < fs.size(); ++k) {
    if (k) s += ", ";
    s += "(" + std::to_string(fs[k].line) + "," + fs[k].n.get_str() + ")";
  }
  return s + "}";
}

PolyElem poly_weyl_act(const AffineMap& w, const PolyElem& f) {
  int n = f.n;
  if (w.rank() != n) fail(ErrKind::Domain, "weyl action rank mismatch");
  IntMat Ai = w.lin.inverse_unimodular();
  RatVec ti = Ai.apply(w.tr);
  std::vector<PolyElem> images;
  images.reserve(n + 1);
  for (int j = 0; j < n; ++j) {
    IntVec row(n, Int(0));
    for (int k = 0; k < n; ++k) row[k] = Ai.at(j, k);
    images.push_back(PolyElem::linear(n, row, -ti[j], Rat(0), f.char_p));
  }
  images.push_back(PolyElem::hvar(n, f.char_p));
  return f.subst(images);
}

RatFun rf_weyl_act(const AffineMap& w, const RatFun& f) {
  IntMat Ai = w.lin.inverse_unimodular();
  RatVec ti = Ai.apply(w.tr);
  for (Rat& v : ti) v = -v;
  return rf_subst_affine(f, Ai, ti);
}

PolyElem translate_poly(const IntVec& gamma, const PolyElem& f) {
  RatVec t(gamma.size());
  for (size_t i = 0; i < gamma.size(); ++i) t[i] = Rat(gamma[i]);
  return poly_weyl_act(AffineMap::translation(t), f);
}

AffineMap reflection_map(const RootDatum& rt, const Int& n) {
  int r = (int)rt.alpha.size();
  AffineMap s = AffineMap::identity(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) s.lin.at(i, j) -= rt.coroot[i] * rt.alpha[j];
  for (int i = 0; i < r; ++i) s.tr[i] = Rat(n * rt.coroot[i]);
  return s;
}

PolyElem demazure(const RootDatum& rt, const Int& n, const PolyElem& f) {
  AffineMap s = reflection_map(rt, n);
  PolyElem num = f - poly_weyl_act(s, f);
  PolyElem den = affine_root_poly(f.n, rt.alpha, n, f.char_p);
  return num.div_exact_linear(den);
}

}  // namespace alcove
