#include "alcove/ratfun.hpp"

#include <algorithm>

namespace alcove {

namespace {

// Normalizes a linear factor: returns the canonical factor and the scalar c
// with ell == c * canonical.
std::pair<PolyElem, Rat> normalize_factor(const PolyElem& ell) {
  if (ell.is_zero()) fail(ErrKind::Domain, "zero denominator factor");
  if (ell.total_degree() > 1) fail(ErrKind::Domain, "denominator factor is not linear");
  if (ell.char_p == 0) {
    Rat s = ell.primitive_scale();  // s*ell primitive, positive lead
    return {ell.scaled(s), Rat(1) / s};
  }
  // mod p: make the lex-first coefficient 1
  Rat lead = ell.terms.begin()->second;
  return {ell.scaled(Rat(1) / lead), lead};
}

// Cancels den factors into num where exactly divisible.
void cancel(RatFun& r) {
  if (r.num.is_zero()) {
    r.den.clear();
    return;
  }
  for (auto it = r.den.begin(); it != r.den.end();) {
    while (it->second > 0) {
      auto q = r.num.try_div_linear(it->first);
      if (!q) break;
      r.num = *q;
      --it->second;
    }
    if (it->second == 0)
      it = r.den.erase(it);
    else
      ++it;
  }
}

}  // namespace

RatFun rf_zero(int n, unsigned long p) { return RatFun{PolyElem::zero(n, p), {}}; }
RatFun rf_one(int n, unsigned long p) { return RatFun{PolyElem::constant(n, 1, p), {}}; }
RatFun rf_poly(const PolyElem& f) { return RatFun{f, {}}; }

RatFun rf_neg(const RatFun& a) { return RatFun{-a.num, a.den}; }

RatFun rf_scale(const RatFun& a, const Rat& c) {
  if (c == 0) return rf_zero(a.num.n, a.num.char_p);
  return RatFun{a.num.scaled(c), a.den};
}

RatFun rf_mul_poly(const RatFun& a, const PolyElem& f) {
  RatFun r{a.num * f, a.den};
  cancel(r);
  return r;
}

RatFun rf_mul(const RatFun& a, const RatFun& b) {
  RatFun r;
  r.num = a.num * b.num;
  r.den = a.den;
  for (const auto& [ell, m] : b.den) r.den[ell] += m;
  cancel(r);
  return r;
}

RatFun rf_div_linear(const RatFun& a, const PolyElem& ell) {
  auto [can, c] = normalize_factor(ell);
  if (can.is_constant()) return rf_scale(a, Rat(1) / (c * can.constant_value()));
  RatFun r = rf_scale(a, Rat(1) / c);
  r.den[can] += 1;
  cancel(r);
  return r;
}

RatFun rf_div(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) fail(ErrKind::Domain, "division by zero function");
  RatFun r = a;
  // numerator of b joins the denominator: must be a product of linear forms,
  // which we discover by greedy exact division after cancellation attempts.
  for (const auto& [ell, m] : b.den) {
    for (unsigned k = 0; k < m; ++k) r = rf_mul_poly(r, ell);
  }
  PolyElem rest = b.num;
  // strip constant content
  Rat s = rest.primitive_scale();
  r = rf_scale(r, s);
  rest = rest.scaled(s);
  while (!rest.is_constant()) {
    // find a linear factor of rest among its own structure: rest must itself
    // be linear for our closed class; higher-degree numerators are divided
    // out only if r.num is exactly divisible.
    if (rest.total_degree() == 1) {
      r = rf_div_linear(r, rest);
      rest = PolyElem::constant(rest.n, 1, rest.char_p);
      break;
    }
    fail(ErrKind::Domain, "division by a non-linear function");
  }
  if (rest.constant_value() != 1) r = rf_scale(r, Rat(1) / rest.constant_value());
  return r;
}

RatFun rf_add(const RatFun& a, const RatFun& b) {
  int n = a.num.n;
  unsigned long p = a.num.char_p;
  // union denominator
  std::map<PolyElem, unsigned> u = a.den;
  for (const auto& [ell, m] : b.den) {
    auto it = u.find(ell);
    if (it == u.end())
      u[ell] = m;
    else
      it->second = std::max(it->second, m);
  }
  auto complement = [&](const RatFun& x) {
    PolyElem c = PolyElem::constant(n, 1, p);
    for (const auto& [ell, m] : u) {
      unsigned have = 0;
      auto it = x.den.find(ell);
      if (it != x.den.end()) have = it->second;
      c = c * ell.pow(m - have);
    }
    return c;
  };
  RatFun r;
  r.num = a.num * complement(a) + b.num * complement(b);
  r.den = u;
  cancel(r);
  if (r.num.is_zero()) r.den.clear();
  return r;
}

RatFun rf_sub(const RatFun& a, const RatFun& b) { return rf_add(a, rf_neg(b)); }

RatFun rf_subst_affine(const RatFun& a, const IntMat& A, const RatVec& t) {
  int n = a.num.n;
  unsigned long p = a.num.char_p;
  std::vector<PolyElem> images;
  images.reserve(n + 1);
  for (int j = 0; j < n; ++j) {
    IntVec row(n, Int(0));
    for (int k = 0; k < n; ++k) row[k] = A.at(j, k);
    images.push_back(PolyElem::linear(n, row, t[j], Rat(0), p));
  }
  images.push_back(PolyElem::hvar(n, p));
  RatFun r;
  r.num = a.num.subst(images);
  for (const auto& [ell, m] : a.den) {
    PolyElem im = ell.subst(images);
    auto [can, c] = normalize_factor(im);
    if (can.is_constant()) {
      Rat v = c * can.constant_value();
      if (v == 0) fail(ErrKind::Domain, "denominator collapsed under substitution");
      Rat inv = Rat(1) / v;
      Rat scale = inv;
      for (unsigned k = 1; k < m; ++k) scale *= inv;
      r.num = r.num.scaled(scale);
    } else {
      Rat inv = Rat(1) / c;
      Rat scale = inv;
      for (unsigned k = 1; k < m; ++k) scale *= inv;
      r.num = r.num.scaled(scale);
      r.den[can] += m;
    }
  }
  cancel(r);
  return r;
}

RatFun rf_set_h(const RatFun& a, const Rat& value) {
  RatFun r;
  r.num = a.num.set_h(value);
  for (const auto& [ell, m] : a.den) {
    PolyElem im = ell.set_h(value);
    if (im.is_zero()) fail(ErrKind::Domain, "denominator vanishes at the h specialization");
    auto [can, c] = normalize_factor(im);
    if (can.is_constant()) {
      Rat v = c * can.constant_value();
      if (v == 0) fail(ErrKind::Domain, "denominator vanishes at the h specialization");
      Rat inv = Rat(1) / v;
      for (unsigned k = 0; k < m; ++k) r.num = r.num.scaled(inv);
    } else {
      Rat inv = Rat(1) / c;
      for (unsigned k = 0; k < m; ++k) r.num = r.num.scaled(inv);
      r.den[can] += m;
    }
  }
  cancel(r);
  return r;
}

RatFun rf_with_char(const RatFun& a, unsigned long p) {
  RatFun r;
  r.num = a.num.with_char(p);
  for (const auto& [ell, m] : a.den) {
    PolyElem im = ell.with_char(p);
    if (im.is_zero()) fail(ErrKind::Domain, "denominator vanishes mod p");
    auto [can, c] = normalize_factor(im);
    if (can.is_constant()) {
      Rat v = rat_mod(c * can.constant_value(), p);
      if (v == 0) fail(ErrKind::Domain, "denominator vanishes mod p");
      // multiply numerator by the inverse, m times
      Rat inv = Rat(1);
      // inverse via rat_mod of 1/v (den invertible mod p by construction)
      inv = rat_mod(Rat(1) / v, p);
      for (unsigned k = 0; k < m; ++k) r.num = r.num.scaled(inv).with_char(p);
    } else {
      Rat inv = Rat(1) / c;
      for (unsigned k = 0; k < m; ++k) r.num = r.num.scaled(inv);
      r.num = r.num.with_char(p);
      r.den[can] += m;
    }
  }
  cancel(r);
  return r;
}

std::string rf_str(const RatFun& a) {
  std::string s = "(" + a.num.str() + ")";
  if (!a.den.empty()) {
    s += " / ";
    for (const auto& [ell, m] : a.den) {
      s += "(" + ell.str() + ")";
      if (m > 1) s += "^" + std::to_string(m);
    }
  }
  return s;
}

}  // namespace alcove
