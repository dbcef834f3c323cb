#include "alcove/frobenius.hpp"

#include <sstream>

namespace alcove {

namespace {

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec s(a.size());
  for (size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
  return s;
}

IntVec vec_neg(const IntVec& a) {
  IntVec s(a.size());
  for (size_t j = 0; j < a.size(); ++j) s[j] = -a[j];
  return s;
}

bool divisible(const IntVec& a, unsigned long p) {
  for (const Int& v : a)
    if (v % (long)p != 0) return false;
  return true;
}

IntVec vec_div(const IntVec& a, unsigned long p) {
  IntVec s(a.size());
  for (size_t j = 0; j < a.size(); ++j) s[j] = a[j] / (long)p;
  return s;
}

EVec shift_point(const EVec& base, const IntVec& nu) {
  EVec out(base.size());
  for (size_t j = 0; j < base.size(); ++j) out[j] = base[j] + RatEps(Rat(nu[j]));
  return out;
}

void require_h_free(const PolyElem& f, const char* where) {
  for (const auto& [e, c] : f.terms)
    if (e.back() != 0) fail(ErrKind::Domain, std::string(where) + ": h must be absent (classical ring)");
}

void require_abelian(const GaugeTheoryData& t, const char* where) {
  if (!t.roots.empty())
    fail(ErrKind::Domain, std::string("NonAbelianTheory: ") + where + " needs an abelian theory");
}

// Structure constant PhiBar(-nu-mu, -mu, 0) at h = 0,  coefficients mod p.
PolyElem structure_phi(const GaugeTheoryData& t, const IntVec& nu, const IntVec& mu,
                       unsigned long p) {
  EVec base = generic_base_point(t);
  EVec a = shift_point(base, vec_neg(vec_add(nu, mu)));
  EVec ap = shift_point(base, vec_neg(mu));
  PhiFactors tri = phi_triple(t, a, ap, base);
  return phi_expand(t, tri, p).set_h(Rat(0));
}

unsigned long mod_inverse(unsigned long a, unsigned long p) {
  // p prime, a not divisible by p: Fermat.
  unsigned long r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

PolyElem kappa0_monomial(const PolyElem& f, unsigned long p) {
  PolyElem out(f.n, p);
  for (const auto& [e, c] : f.terms) {
    bool ok = true;
    for (uint32_t m : e)
      if (m % p != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    PolyElem::Expo q(e.size());
    for (size_t j = 0; j < e.size(); ++j) q[j] = e[j] / (uint32_t)p;
    out.add_term(q, c);  // coefficients live in F_p, where c^{1/p} = c
  }
  return out;
}

}  // namespace

PolyElem artin_schreier(const PolyElem& f, unsigned long p) {
  if (p < 2) fail(ErrKind::Domain, "artin_schreier needs a prime p >= 2");
  PolyElem h = PolyElem::hvar(f.n, f.char_p);
  return f.pow((unsigned)p) - h.pow((unsigned)(p - 1)) * f;
}

PolyElem artin_schreier_subst(const PolyElem& f, unsigned long p) {
  std::vector<PolyElem> images;
  images.reserve(f.slots());
  for (int j = 0; j < f.n; ++j)
    images.push_back(artin_schreier(PolyElem::variable(f.n, j, f.char_p), p));
  images.push_back(PolyElem::hvar(f.n, f.char_p));
  return f.subst(images);
}

MorphismWord quantum_frobenius(const GaugeTheoryData& t, const MorphismWord& w,
                               unsigned long p) {
  require_abelian(t, "quantum_frobenius");
  const EVec& src = w.source;
  auto dilate = [&](const EVec& e) {
    EVec out(e.size());
    for (size_t j = 0; j < e.size(); ++j)
      out[j] = src[j] + Rat((long)p) * (e[j] - src[j]);
    return out;
  };
  MorphismWord acc = word_identity(t, dilate(src));
  EVec cur = src;
  for (const Token& tok : w.toks) {
    EVec nt = token_target(t, tok, cur);
    MorphismWord part;
    switch (tok.kind) {
      case TokKind::Poly:
        // Ring-map extension of phi -> AS(phi); equals AS on the linear dots.
        part = word_poly(t, dilate(cur), artin_schreier_subst(tok.poly, p));
        break;
      case TokKind::Weyl: {
        if (!(tok.w.lin == IntMat::identity(t.rank)))
          fail(ErrKind::Domain, "NonAbelianTheory: quantum_frobenius saw a Weyl reflection");
        RatVec tr = tok.w.tr;
        for (Rat& v : tr) v *= Rat((long)p);
        part = word_weyl(t, dilate(cur), AffineMap::translation(tr));
        break;
      }
      case TokKind::Wall:
        part = word_wall(t, dilate(nt), dilate(cur));
        break;
      case TokKind::Demazure:
        fail(ErrKind::Domain, "NonAbelianTheory: quantum_frobenius saw a Demazure letter");
    }
    acc = word_compose(t, part, acc);
    cur = nt;
  }
  return acc;
}

AbelianElem ab_term(const GaugeTheoryData& t, const IntVec& nu, const PolyElem& f,
                    unsigned long p) {
  if ((int)nu.size() != t.rank) fail(ErrKind::Domain, "ab_term: cocharacter has wrong arity");
  if (f.n != t.rank) fail(ErrKind::Domain, "ab_term: dressing has wrong arity");
  require_h_free(f, "ab_term");
  AbelianElem out;
  PolyElem g = f.with_char(p);
  if (!g.is_zero()) out[nu] = g;
  return out;
}

AbelianElem ab_add(const AbelianElem& a, const AbelianElem& b) {
  AbelianElem out = a;
  for (const auto& [nu, g] : b) {
    auto it = out.find(nu);
    if (it == out.end()) {
      out[nu] = g;
    } else {
      it->second = it->second + g;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

AbelianElem ab_mul(const GaugeTheoryData& t, const AbelianElem& a, const AbelianElem& b,
                   unsigned long p) {
  require_abelian(t, "ab_mul");
  AbelianElem out;
  for (const auto& [nu, f] : a)
    for (const auto& [mu, g] : b) {
      PolyElem term = f * g * structure_phi(t, nu, mu, p);
      if (term.is_zero()) continue;
      IntVec key = vec_add(nu, mu);
      auto it = out.find(key);
      if (it == out.end()) {
        out[key] = term;
      } else {
        it->second = it->second + term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

AbelianElem ab_pow(const GaugeTheoryData& t, const AbelianElem& a, unsigned k,
                   unsigned long p) {
  AbelianElem out = ab_term(t, IntVec(t.rank, Int(0)), PolyElem::constant(t.rank, Rat(1), p), p);
  for (unsigned i = 0; i < k; ++i) out = ab_mul(t, out, a, p);
  return out;
}

bool ab_equal(const AbelianElem& a, const AbelianElem& b) { return a == b; }

std::string ab_str(const AbelianElem& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [nu, f] : a) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.str() << ")*r[";
    for (size_t j = 0; j < nu.size(); ++j) os << (j ? "," : "") << nu[j].get_str();
    os << "]";
  }
  return os.str();
}

MorphismWord ab_term_word(const GaugeTheoryData& t, const IntVec& nu, const PolyElem& f) {
  require_abelian(t, "ab_term_word");
  MorphismWord m = monopole(t, nu, PolyElem::constant(t.rank, Rat(1), f.char_p));
  return word_compose(t, word_poly(t, m.target, f), m);
}

PolyElem kappa0(const GaugeTheoryData& t, const PolyElem& f, const FrobeniusContext& c) {
  require_h_free(f, "kappa0");
  PolyElem ff = f.with_char(c.p);
  if (!c.w_average) return kappa0_monomial(ff, c.p);
  std::vector<AffineMap> weyl = finite_weyl_elements(t);
  if (weyl.size() % c.p == 0)
    fail(ErrKind::Domain, "kappa0: averaging needs p coprime to |W|");
  PolyElem sum(f.n, c.p);
  for (const AffineMap& w : weyl)
    sum = sum + poly_weyl_act(w, kappa0_monomial(poly_weyl_act(w.inverse(), ff), c.p));
  unsigned long inv = mod_inverse(weyl.size() % c.p, c.p);
  return sum.scaled(Rat((long)inv)).with_char(c.p);
}

AbelianElem kappa(const GaugeTheoryData& t, const AbelianElem& a, const FrobeniusContext& c) {
  require_abelian(t, "kappa");
  AbelianElem out;
  for (const auto& [lam, f] : a) {
    if (!divisible(lam, c.p)) continue;
    PolyElem g = kappa0(t, f, c);
    if (g.is_zero()) continue;
    IntVec key = vec_div(lam, c.p);
    auto it = out.find(key);
    if (it == out.end()) {
      out[key] = g;
    } else {
      it->second = it->second + g;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

LocAbelianElem kappa_loc(const GaugeTheoryData& t, const LocAbelianElem& a,
                         const FrobeniusContext& c) {
  LocAbelianElem out;
  for (const auto& [lam, rf] : a) {
    if (!divisible(lam, c.p)) continue;
    PolyElem num = rf.num.with_char(c.p);
    RatFun piece;
    piece.num = PolyElem::zero(num.n, c.p);
    std::map<PolyElem, unsigned> den;
    for (const auto& [ell, m] : rf.den) {
      unsigned k = (m + (unsigned)c.p - 1) / (unsigned)c.p;
      unsigned extra = k * (unsigned)c.p - m;
      if (extra) num = num * ell.with_char(c.p).pow(extra);
      den[ell.with_char(c.p)] = k;
    }
    piece.num = kappa0(t, num, c);
    piece.den = piece.num.is_zero() ? std::map<PolyElem, unsigned>{} : den;
    if (piece.num.is_zero()) continue;
    IntVec key = vec_div(lam, c.p);
    auto it = out.find(key);
    if (it == out.end())
      out[key] = piece;
    else {
      it->second = rf_add(it->second, piece);
      if (it->second.num.is_zero()) out.erase(it);
    }
  }
  return out;
}

LocAbelianElem loc_mul(const GaugeTheoryData& t, const LocAbelianElem& a,
                       const LocAbelianElem& b, unsigned long p) {
  require_abelian(t, "loc_mul");
  LocAbelianElem out;
  for (const auto& [nu, f] : a)
    for (const auto& [mu, g] : b) {
      RatFun term = rf_mul_poly(rf_mul(f, g), structure_phi(t, nu, mu, p));
      if (term.num.is_zero()) continue;
      IntVec key = vec_add(nu, mu);
      auto it = out.find(key);
      if (it == out.end())
        out[key] = term;
      else {
        it->second = rf_add(it->second, term);
        if (it->second.num.is_zero()) out.erase(it);
      }
    }
  return out;
}

LocAbelianElem loc_scale(const LocAbelianElem& a, const RatFun& c) {
  LocAbelianElem out;
  for (const auto& [nu, f] : a) {
    RatFun term = rf_mul(f, c);
    if (!term.num.is_zero()) out[nu] = term;
  }
  return out;
}

bool loc_equal(const LocAbelianElem& a, const LocAbelianElem& b) {
  for (const auto& [nu, f] : a) {
    auto it = b.find(nu);
    if (it == b.end()) {
      if (!f.num.is_zero()) return false;
      continue;
    }
    if (!rf_sub(f, it->second).num.is_zero()) return false;
  }
  for (const auto& [nu, g] : b)
    if (a.find(nu) == a.end() && !g.num.is_zero()) return false;
  return true;
}

MonopoleElem kappa_nonabelian(const GaugeTheoryData& t, const MonopoleElem& m,
                              const FrobeniusContext& c) {
  if (!t.roots.empty() && !c.w_average)
    fail(ErrKind::Domain, "kappa_nonabelian needs a W-equivariant kappa0 (set w_average)");
  std::vector<AffineMap> weyl = finite_weyl_elements(t);
  std::map<IntVec, PolyElem> acc;
  for (const MonopoleTerm& term : m) {
    if ((int)term.lambda.size() != t.rank)
      fail(ErrKind::Domain, "NotInSpanningForm: cocharacter has wrong arity");
    require_h_free(term.f, "kappa_nonabelian");
    for (const auto& rt : t.roots) {
      if (!rt.simple) continue;
      Int pairing = 0;
      for (size_t j = 0; j < term.lambda.size(); ++j) pairing += rt.alpha[j] * term.lambda[j];
      if (pairing < 0) fail(ErrKind::Domain, "NotInSpanningForm: cocharacter is not dominant");
    }
    PolyElem f = term.f.with_char(c.p);
    for (const AffineMap& w : weyl) {
      if (w.lin.apply_int(term.lambda) != term.lambda) continue;
      if (poly_weyl_act(w, f) != f)
        fail(ErrKind::Domain, "NotInSpanningForm: dressing is not stabilizer-invariant");
    }
    if (!divisible(term.lambda, c.p)) continue;
    PolyElem g = kappa0(t, f, c);
    if (g.is_zero()) continue;
    IntVec key = vec_div(term.lambda, c.p);
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc[key] = g;
    } else {
      it->second = it->second + g;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  MonopoleElem out;
  for (const auto& [lam, f] : acc) out.push_back({lam, f});
  return out;
}

bool monopole_equal(const MonopoleElem& a, const MonopoleElem& b) {
  std::map<IntVec, PolyElem> ma, mb;
  for (const auto& t : a) {
    auto it = ma.find(t.lambda);
    if (it == ma.end())
      ma[t.lambda] = t.f;
    else
      it->second = it->second + t.f;
  }
  for (const auto& t : b) {
    auto it = mb.find(t.lambda);
    if (it == mb.end())
      mb[t.lambda] = t.f;
    else
      it->second = it->second + t.f;
  }
  for (auto it = ma.begin(); it != ma.end();)
    it = it->second.is_zero() ? ma.erase(it) : std::next(it);
  for (auto it = mb.begin(); it != mb.end();)
    it = it->second.is_zero() ? mb.erase(it) : std::next(it);
  return ma == mb;
}

}  // namespace alcove
