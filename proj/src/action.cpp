#include "alcove/action.hpp"

#include <sstream>

namespace alcove {

FracVector fv_basis(int rank, const IntVec& lam, const PolyElem& coeff) {
  if ((int)lam.size() != rank) fail(ErrKind::Domain, "weight has wrong arity");
  FracVector v;
  if (!coeff.is_zero()) v[lam] = rf_poly(coeff);
  return v;
}

FracVector fv_add(const FracVector& a, const FracVector& b) {
  FracVector out = a;
  for (const auto& [lam, f] : b) {
    auto it = out.find(lam);
    if (it == out.end()) {
      out[lam] = f;
    } else {
      it->second = rf_add(it->second, f);
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

FracVector fv_scale(const FracVector& a, const Rat& c) {
  FracVector out;
  if (c == 0) return out;
  for (const auto& [lam, f] : a) out[lam] = rf_scale(f, c);
  return out;
}

FracVector fv_sub(const FracVector& a, const FracVector& b) {
  return fv_add(a, fv_scale(b, Rat(-1)));
}

bool fv_is_zero(const FracVector& a) {
  for (const auto& [lam, f] : a)
    if (!f.is_zero()) return false;
  return true;
}

bool fv_equal(const FracVector& a, const FracVector& b) {
  return fv_is_zero(fv_sub(a, b));
}

std::string fv_str(const FracVector& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, f] : a) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rf_str(f) << ")[t^(";
    for (size_t j = 0; j < lam.size(); ++j) {
      if (j) os << ",";
      os << lam[j].get_str();
    }
    os << ")]";
  }
  return os.str();
}

static IntVec map_weight(const AffineMap& w, const IntVec& lam) {
  IntVec img = w.lin.apply_int(lam);
  for (size_t j = 0; j < img.size(); ++j) {
    if (!is_integer(w.tr[j]))
      fail(ErrKind::Domain, "weyl letter translates the weight lattice non-integrally");
    img[j] += Int(w.tr[j].get_num());
  }
  return img;
}

FracVector act_token(const GaugeTheoryData& t, const Token& tok, const EVec& at,
                     const FracVector& v) {
  FracVector out;
  switch (tok.kind) {
    case TokKind::Poly: {
      for (const auto& [lam, f] : v) {
        RatFun g = rf_mul_poly(f, tok.poly.with_char(f.num.char_p));
        if (!g.is_zero()) out[lam] = g;
      }
      return out;
    }
    case TokKind::Weyl: {
      for (const auto& [lam, f] : v) {
        RatFun g = rf_weyl_act(tok.w, f);
        IntVec img = map_weight(tok.w, lam);
        auto it = out.find(img);
        if (it == out.end())
          out[img] = g;
        else
          it->second = rf_add(it->second, g);
      }
      for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
      return out;
    }
    case TokKind::Wall: {
      PolyElem phi = phi_expand(t, phi_product(t, tok.wall_to, at));
      for (const auto& [lam, f] : v) {
        RatFun g = rf_mul_poly(f, phi.with_char(f.num.char_p));
        if (!g.is_zero()) out[lam] = g;
      }
      return out;
    }
    case TokKind::Demazure: {
      const RootDatum& rt = t.roots[tok.root];
      AffineMap s = reflection_map(rt, tok.level);
      for (const auto& [lam, f] : v) {
        PolyElem ah = affine_root_poly(t.rank, rt.alpha, tok.level, f.num.char_p);
        RatFun swapped = rf_div(rf_weyl_act(s, f), rf_poly(ah));
        RatFun straight = rf_div(f, rf_poly(ah));
        IntVec img = map_weight(s, lam);
        auto add_at = [&out](const IntVec& key, const RatFun& val) {
          auto it = out.find(key);
          if (it == out.end())
            out[key] = val;
          else
            it->second = rf_add(it->second, val);
        };
        add_at(img, swapped);
        add_at(lam, rf_neg(straight));
      }
      for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
      return out;
    }
  }
  fail(ErrKind::Domain, "unreachable token kind");
}

FracVector act_frac(const GaugeTheoryData& t, const MorphismWord& w,
                    const FracVector& v) {
  FracVector cur = v;
  EVec at = w.source;
  for (const auto& tk : w.toks) {
    cur = act_token(t, tk, at, cur);
    at = token_target(t, tk, at);
  }
  if (at != w.target) fail(ErrKind::Domain, "word does not reach its target object");
  return cur;
}

PolyElem act_poly(const GaugeTheoryData& t, const MorphismWord& w,
                  const PolyElem& f) {
  PolyElem cur = f;
  EVec at = w.source;
  for (const auto& tk : w.toks) {
    switch (tk.kind) {
      case TokKind::Poly:
        cur = cur * tk.poly.with_char(cur.char_p);
        break;
      case TokKind::Weyl:
        cur = poly_weyl_act(tk.w, cur);
        break;
      case TokKind::Wall:
        cur = cur * phi_expand(t, phi_product(t, tk.wall_to, at), cur.char_p);
        break;
      case TokKind::Demazure:
        cur = demazure(t.roots[tk.root], tk.level, cur);
        break;
    }
    at = token_target(t, tk, at);
  }
  if (at != w.target) fail(ErrKind::Domain, "word does not reach its target object");
  return cur;
}

}  // namespace alcove
