#include "alcove/oracle.hpp"

#include <algorithm>

namespace alcove {

static void form_add(OperatorForm& f, const OpKey& k, const RatFun& r) {
  if (r.is_zero()) return;
  auto it = f.find(k);
  if (it == f.end()) {
    f[k] = r;
  } else {
    it->second = rf_add(it->second, r);
    if (it->second.is_zero()) f.erase(it);
  }
}

// Left-compose the token's term list onto an accumulated form.
static OperatorForm compose_terms(
    const OperatorForm& cur,
    const std::vector<std::tuple<RatFun, AffineMap, AffineMap>>& toks) {
  OperatorForm next;
  for (const auto& [r2, m2, w2] : toks) {
    bool m2_id = m2.is_identity();
    for (const auto& [key, r1] : cur) {
      RatFun moved = m2_id ? r1 : rf_weyl_act(m2, r1);
      RatFun combined = rf_mul(r2, moved);
      OpKey k{m2.compose(key.first), w2.compose(key.second)};
      form_add(next, k, combined);
    }
  }
  return next;
}

OperatorForm word_form(const GaugeTheoryData& t, const MorphismWord& w) {
  AffineMap id = AffineMap::identity(t.rank);
  OperatorForm cur;
  cur[{id, id}] = rf_one(t.rank);
  EVec at = w.source;
  for (const auto& tk : w.toks) {
    std::vector<std::tuple<RatFun, AffineMap, AffineMap>> terms;
    switch (tk.kind) {
      case TokKind::Poly:
        terms.emplace_back(rf_poly(tk.poly), id, id);
        break;
      case TokKind::Weyl:
        terms.emplace_back(rf_one(t.rank), tk.w, tk.w);
        break;
      case TokKind::Wall:
        terms.emplace_back(
            rf_poly(phi_expand(t, phi_product(t, tk.wall_to, at))), id, id);
        break;
      case TokKind::Demazure: {
        const RootDatum& rt = t.roots[tk.root];
        AffineMap s = reflection_map(rt, tk.level);
        PolyElem ah = affine_root_poly(t.rank, rt.alpha, tk.level);
        RatFun inv = rf_div(rf_one(t.rank), rf_poly(ah));
        terms.emplace_back(inv, s, s);
        terms.emplace_back(rf_neg(inv), id, id);
        break;
      }
    }
    cur = compose_terms(cur, terms);
    at = token_target(t, tk, at);
  }
  if (at != w.target) fail(ErrKind::Domain, "word does not reach its target object");
  return cur;
}

OperatorForm sum_form(const GaugeTheoryData& t, const WordSum& ws) {
  OperatorForm out;
  for (const auto& [c, w] : ws) {
    if (c == 0) continue;
    for (const auto& [key, r] : word_form(t, w)) form_add(out, key, rf_scale(r, c));
  }
  return out;
}

OperatorForm form_specialize(const OperatorForm& f, const OracleOpts& o) {
  if (o.char_p == 0 && !o.h_zero) return f;
  OperatorForm out;
  for (const auto& [key, r] : f) {
    RatFun g = r;
    if (o.char_p != 0) g = rf_with_char(g, o.char_p);
    OpKey k = key;
    if (o.h_zero) {
      g = rf_set_h(g, Rat(0));
      k.first = AffineMap{k.first.lin, RatVec(k.first.tr.size(), Rat(0))};
    }
    form_add(out, k, g);
  }
  return out;
}

FracVector form_apply(const OperatorForm& f, const PolyElem& m, const IntVec& lam) {
  FracVector out;
  for (const auto& [key, r] : f) {
    const AffineMap& M = key.first;
    const AffineMap& W = key.second;
    IntVec img = W.lin.apply_int(lam);
    for (size_t j = 0; j < img.size(); ++j) {
      if (!is_integer(W.tr[j]))
        fail(ErrKind::Domain, "operator translates the weight lattice non-integrally");
      img[j] += Int(W.tr[j].get_num());
    }
    PolyElem moved = poly_weyl_act(M, m.with_char(r.num.char_p));
    RatFun val = rf_mul_poly(r, moved);
    if (val.is_zero()) continue;
    auto it = out.find(img);
    if (it == out.end())
      out[img] = val;
    else
      it->second = rf_add(it->second, val);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

bool form_identical(const OperatorForm& a, const OperatorForm& b) {
  if (a.size() != b.size()) return false;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return false;
    if (ia->second != ib->second) return false;
  }
  return true;
}

std::vector<std::vector<uint32_t>> monomial_exponents(int nvars, int max_deg) {
  std::vector<std::vector<uint32_t>> out;
  if (nvars == 0) {
    out.push_back({});
    return out;
  }
  std::vector<uint32_t> cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = (uint32_t)e;
      rec(pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(0, max_deg);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> weight_box(int n, int radius) {
  std::vector<IntVec> out;
  IntVec cur(n, Int(0));
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = -left; v <= left; ++v) {
      cur[pos] = Int(v);
      rec(pos + 1, left - std::abs(v));
    }
    cur[pos] = 0;
  };
  rec(0, radius);
  std::sort(out.begin(), out.end());
  return out;
}

static Verdict compare_forms(const GaugeTheoryData& t, const OperatorForm& fa,
                             const OperatorForm& fb, const OracleOpts& o) {
  if (form_identical(fa, fb)) return Verdict::EqualUpToTruncation;
  int nv = t.rank + (o.h_zero ? 0 : 1);
  auto mons = monomial_exponents(nv, o.deg_bound);
  auto lams = weight_box(t.rank, o.weight_radius);
  for (const auto& lam : lams) {
    for (const auto& e : mons) {
      PolyElem m = PolyElem::constant(t.rank, 1, o.char_p);
      for (int j = 0; j < nv; ++j)
        for (uint32_t k = 0; k < e[j]; ++k)
          m = m * PolyElem::variable(t.rank, j, o.char_p);
      FracVector va = form_apply(fa, m, lam);
      FracVector vb = form_apply(fb, m, lam);
      if (!fv_equal(va, vb)) return Verdict::Different;
    }
  }
  return Verdict::EqualUpToTruncation;
}

Verdict equal_oracle(const GaugeTheoryData& t, const MorphismWord& a,
                     const MorphismWord& b, const OracleOpts& o) {
  if (a.source != b.source || a.target != b.target) return Verdict::Different;
  OperatorForm fa = form_specialize(word_form(t, a), o);
  OperatorForm fb = form_specialize(word_form(t, b), o);
  return compare_forms(t, fa, fb, o);
}

static void check_parallel(const WordSum& ws, const char* side) {
  for (size_t i = 1; i < ws.size(); ++i)
    if (ws[i].second.source != ws[0].second.source ||
        ws[i].second.target != ws[0].second.target)
      fail(ErrKind::Domain, std::string("non-parallel words in sum (") + side + ")");
}

Verdict equal_oracle_sums(const GaugeTheoryData& t, const WordSum& a,
                          const WordSum& b, const OracleOpts& o) {
  check_parallel(a, "lhs");
  check_parallel(b, "rhs");
  if (!a.empty() && !b.empty() &&
      (a[0].second.source != b[0].second.source ||
       a[0].second.target != b[0].second.target))
    return Verdict::Different;
  OperatorForm fa = form_specialize(sum_form(t, a), o);
  OperatorForm fb = form_specialize(sum_form(t, b), o);
  return compare_forms(t, fa, fb, o);
}

std::string verdict_str(Verdict v) {
  return v == Verdict::EqualUpToTruncation ? "EqualUpToTruncation" : "Different";
}

}  // namespace alcove
