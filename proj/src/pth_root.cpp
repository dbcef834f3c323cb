#include "alcove/pth_root.hpp"

namespace alcove {

PthRootContext pctx_infinite() {
  PthRootContext c;
  c.infinite = true;
  return c;
}

PthRootContext pctx_prime(unsigned long p, IntVec upsilon_gauge,
                          RatVec upsilon_offsets) {
  if (p == 0) fail(ErrKind::Domain, "p-th-root context needs p >= 1");
  PthRootContext c;
  c.p = p;
  c.upsilon_gauge = std::move(upsilon_gauge);
  c.upsilon_offsets = std::move(upsilon_offsets);
  for (const auto& o : c.upsilon_offsets) {
    Rat scaled = o * Rat(Int(p));
    if (!is_integer(scaled))
      fail(ErrKind::Domain, "pairing offsets must lie in (1/p)Z");
  }
  return c;
}

Rat pctx_offset(const PthRootContext& c, int i) {
  if (i < 0) fail(ErrKind::Domain, "negative line index");
  if ((size_t)i < c.upsilon_offsets.size()) return c.upsilon_offsets[i];
  return Rat(0);
}

IntVec pctx_gauge(const GaugeTheoryData& t, const PthRootContext& c) {
  IntVec u(t.rank, Int(0));
  if (!c.upsilon_gauge.empty()) {
    if ((int)c.upsilon_gauge.size() != t.rank)
      fail(ErrKind::Domain, "gauge lift has wrong arity");
    u = c.upsilon_gauge;
  }
  return u;
}

static void need_finite(const PthRootContext& c, const char* what) {
  if (c.infinite || c.p == 0)
    fail(ErrKind::Domain, std::string(what) + " needs a finite prime");
}

GaugeTheoryData sans_theory(const GaugeTheoryData& t, const PthRootContext& c) {
  GaugeTheoryData s = t;
  if (c.infinite) {
    s.delta_eff = RatEps(Rat(0), t.delta);
    return s;
  }
  // p == 0 marks the trivial context: the arrangement is used as-is.
  if (c.p == 0) return s;
  Rat p(Int(c.p));
  IntVec u = pctx_gauge(t, c);
  for (int i = 0; i < t.lines(); ++i) {
    Rat shift = Rat(dot(t.matter[i].gauge, u)) - pctx_offset(c, i);
    s.matter[i].offset = (t.matter[i].offset + shift) / p;
    s.matter[i].offset_const = (t.matter[i].offset_const + shift) / p;
  }
  s.delta = t.delta / p;
  s.delta_eff = RatEps(t.delta / p);
  return s;
}

EVec scale_up(const GaugeTheoryData& t, const PthRootContext& c, const EVec& eta) {
  need_finite(c, "scale_up");
  if ((int)eta.size() != t.rank) fail(ErrKind::Domain, "point has wrong arity");
  IntVec u = pctx_gauge(t, c);
  Rat p(Int(c.p));
  EVec out(eta.size());
  for (size_t j = 0; j < eta.size(); ++j) out[j] = p * eta[j] + RatEps(Rat(u[j]));
  return out;
}

EVec scale_down(const GaugeTheoryData& t, const PthRootContext& c, const EVec& xi) {
  need_finite(c, "scale_down");
  if ((int)xi.size() != t.rank) fail(ErrKind::Domain, "point has wrong arity");
  IntVec u = pctx_gauge(t, c);
  Rat p(Int(c.p));
  EVec out(xi.size());
  for (size_t j = 0; j < xi.size(); ++j) out[j] = (xi[j] - RatEps(Rat(u[j]))) / p;
  return out;
}

static bool congruent_mod_p(const Rat& value, unsigned long p) {
  if (!is_integer(value)) return false;
  Int r = Int(value.get_num()) % Int(p);
  return r == 0;
}

bool retained(const GaugeTheoryData& t, const PthRootContext& c, int i, const Int& n) {
  need_finite(c, "retained");
  if (i < 0 || i >= t.lines()) fail(ErrKind::Domain, "line index out of range");
  return congruent_mod_p(Rat(n) - pctx_offset(c, i), c.p);
}

bool retained_root(const PthRootContext& c, const IntVec& alpha, const Int& n) {
  need_finite(c, "retained_root");
  Rat pairing(0);
  for (size_t j = 0; j < alpha.size() && j < c.upsilon_gauge.size(); ++j)
    pairing += Rat(alpha[j] * c.upsilon_gauge[j]);
  return congruent_mod_p(Rat(n) - pairing, c.p);
}

PhiFactors phi_hat0(const GaugeTheoryData& t, const PthRootContext& c,
                    const EVec& eta, const EVec& eta_prime) {
  need_finite(c, "phi_hat0");
  PhiFactors out;
  for (const auto& f : phi_product(t, eta, eta_prime))
    if (!retained(t, c, f.line, f.n)) out.push_back(f);
  return out;
}

AffineMap gamma_weyl(const GaugeTheoryData& t, const PthRootContext& c,
                     const AffineMap& w) {
  need_finite(c, "gamma_weyl");
  IntVec u = pctx_gauge(t, c);
  Rat p(Int(c.p));
  AffineMap out;
  out.lin = w.lin;
  out.tr.resize(w.tr.size());
  IntVec au = w.lin.apply_int(u);
  for (size_t j = 0; j < w.tr.size(); ++j)
    out.tr[j] = p * w.tr[j] + Rat(u[j]) - Rat(au[j]);
  return out;
}

GammaWord gamma_translate(const GaugeTheoryData& base, const PthRootContext& c,
                          const MorphismWord& sans_word) {
  need_finite(c, "gamma_translate");
  GaugeTheoryData sans = sans_theory(base, c);
  IntVec u = pctx_gauge(base, c);
  GammaWord out;
  out.word.source = scale_up(base, c, sans_word.source);
  out.word.target = scale_up(base, c, sans_word.target);
  if (!unexceptional(base, out.word.source) || !unexceptional(base, out.word.target))
    fail(ErrKind::Domain, "scaled endpoint lands on a wall (ExceptionalPoint)");
  EVec at = sans_word.source;
  for (const auto& tk : sans_word.toks) {
    switch (tk.kind) {
      case TokKind::Poly:
        out.word.toks.push_back(tok_poly(translate_poly(u, tk.poly)));
        break;
      case TokKind::Weyl:
        out.word.toks.push_back(tok_weyl(gamma_weyl(base, c, tk.w)));
        break;
      case TokKind::Wall: {
        EVec to = scale_up(base, c, tk.wall_to);
        EVec from = scale_up(base, c, at);
        if (!unexceptional(base, to) || !unexceptional(base, from))
          fail(ErrKind::Domain, "scaled wall endpoint lands on a wall");
        PhiFactors inv = phi_hat0(base, c, to, from);
        out.denominators = phi_merge(out.denominators, inv);
        out.word.toks.push_back(tok_wall(to));
        break;
      }
      case TokKind::Demazure: {
        const RootDatum& rt = base.roots[tk.root];
        Int pairing = 0;
        for (int j = 0; j < base.rank; ++j) pairing += rt.alpha[j] * u[j];
        out.word.toks.push_back(
            tok_demazure(tk.root, Int(c.p) * tk.level + pairing));
        break;
      }
    }
    at = token_target(sans, tk, at);
  }
  return out;
}

OperatorForm gamma_form(const GaugeTheoryData& base, const PthRootContext& c,
                        const MorphismWord& sans_word) {
  need_finite(c, "gamma_form");
  GaugeTheoryData sans = sans_theory(base, c);
  IntVec u = pctx_gauge(base, c);
  AffineMap id = AffineMap::identity(base.rank);
  OperatorForm cur;
  cur[{id, id}] = rf_one(base.rank);
  EVec at = sans_word.source;
  for (const auto& tk : sans_word.toks) {
    std::vector<std::tuple<RatFun, AffineMap, AffineMap>> terms;
    switch (tk.kind) {
      case TokKind::Poly:
        terms.emplace_back(rf_poly(translate_poly(u, tk.poly)), id, id);
        break;
      case TokKind::Weyl: {
        AffineMap wp = gamma_weyl(base, c, tk.w);
        terms.emplace_back(rf_one(base.rank), wp, wp);
        break;
      }
      case TokKind::Wall: {
        EVec to = scale_up(base, c, tk.wall_to);
        EVec from = scale_up(base, c, at);
        // (1/Φ̂₀)·r with the non-retained factors cancelled exactly: what is
        // left is the product over retained crossings.
        PolyElem kept = PolyElem::constant(base.rank, 1);
        for (const auto& f : phi_product(base, to, from))
          if (retained(base, c, f.line, f.n))
            kept = kept * phi_factor_poly(base, f);
        terms.emplace_back(rf_poly(kept), id, id);
        break;
      }
      case TokKind::Demazure: {
        const RootDatum& rt = base.roots[tk.root];
        Int pairing = 0;
        for (int j = 0; j < base.rank; ++j) pairing += rt.alpha[j] * u[j];
        Int level = Int(c.p) * tk.level + pairing;
        AffineMap s = reflection_map(rt, level);
        PolyElem ah = affine_root_poly(base.rank, rt.alpha, level);
        RatFun invr = rf_div(rf_one(base.rank), rf_poly(ah));
        terms.emplace_back(invr, s, s);
        terms.emplace_back(rf_neg(invr), id, id);
        break;
      }
    }
    OperatorForm next;
    for (const auto& [r2, m2, w2] : terms) {
      bool m2_id = m2.is_identity();
      for (const auto& [key, r1] : cur) {
        RatFun moved = m2_id ? r1 : rf_weyl_act(m2, r1);
        RatFun combined = rf_mul(r2, moved);
        if (combined.is_zero()) continue;
        OpKey k{m2.compose(key.first), w2.compose(key.second)};
        auto it = next.find(k);
        if (it == next.end())
          next[k] = combined;
        else {
          it->second = rf_add(it->second, combined);
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    cur = std::move(next);
    at = token_target(sans, tk, at);
  }
  return cur;
}

OperatorForm gamma_sum_form(const GaugeTheoryData& base, const PthRootContext& c,
                            const WordSum& ws) {
  OperatorForm out;
  for (const auto& [coef, w] : ws) {
    if (coef == 0) continue;
    for (const auto& [key, r] : gamma_form(base, c, w)) {
      RatFun scaled = rf_scale(r, coef);
      auto it = out.find(key);
      if (it == out.end())
        out[key] = scaled;
      else {
        it->second = rf_add(it->second, scaled);
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

bool check_crossing_bijection(const GaugeTheoryData& base, const PthRootContext& c,
                              const EVec& sans_eta, const EVec& sans_eta_prime) {
  need_finite(c, "check_crossing_bijection");
  for (int i = 0; i < base.lines(); ++i)
    if (!is_integer(pctx_offset(c, i)))
      fail(ErrKind::Domain, "crossing bijection needs integral pairings");
  GaugeTheoryData sans = sans_theory(base, c);
  EVec up = scale_up(base, c, sans_eta);
  EVec upp = scale_up(base, c, sans_eta_prime);
  PhiFactors expected;
  for (const auto& f : phi_product(sans, sans_eta, sans_eta_prime)) {
    PhiFactor g;
    g.line = f.line;
    g.n = Int(c.p) * f.n + Int(pctx_offset(c, f.line).get_num());
    expected.push_back(g);
  }
  std::sort(expected.begin(), expected.end());
  PhiFactors got;
  for (const auto& f : phi_product(base, up, upp))
    if (retained(base, c, f.line, f.n)) got.push_back(f);
  std::sort(got.begin(), got.end());
  return expected == got;
}

}  // namespace alcove
