#include "alcove/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace alcove {

Rat rat_mod(const Rat& q, unsigned long p) {
  Int pp(p);
  Int den = q.get_den();
  if (mpz_divisible_p(den.get_mpz_t(), pp.get_mpz_t()))
    fail(ErrKind::Domain, "denominator not invertible mod " + std::to_string(p));
  Int dinv;
  if (!mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()))
    fail(ErrKind::Domain, "denominator not invertible mod " + std::to_string(p));
  Int r = q.get_num() * dinv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t());
  return Rat(r);
}

namespace {
Rat reduce(const Rat& c, unsigned long p) { return p == 0 ? c : rat_mod(c, p); }
}  // namespace

PolyElem PolyElem::constant(int n, const Rat& c, unsigned long p) {
  PolyElem f(n, p);
  f.add_term(Expo(n + 1, 0), c);
  return f;
}

PolyElem PolyElem::variable(int n, int j, unsigned long p) {
  PolyElem f(n, p);
  Expo e(n + 1, 0);
  e[j] = 1;
  f.add_term(e, Rat(1));
  return f;
}

PolyElem PolyElem::linear(int n, const IntVec& c, const Rat& eh, const Rat& e0, unsigned long p) {
  RatVec cr(c.size());
  for (size_t i = 0; i < c.size(); ++i) cr[i] = Rat(c[i]);
  return linear(n, cr, eh, e0, p);
}

PolyElem PolyElem::linear(int n, const RatVec& c, const Rat& eh, const Rat& e0, unsigned long p) {
  PolyElem f(n, p);
  for (int j = 0; j < n; ++j)
    if (c[j] != 0) {
      Expo e(n + 1, 0);
      e[j] = 1;
      f.add_term(e, c[j]);
    }
  if (eh != 0) {
    Expo e(n + 1, 0);
    e[n] = 1;
    f.add_term(e, eh);
  }
  if (e0 != 0) f.add_term(Expo(n + 1, 0), e0);
  return f;
}

bool PolyElem::is_constant() const {
  if (terms.empty()) return true;
  if (terms.size() != 1) return false;
  const Expo& e = terms.begin()->first;
  return std::all_of(e.begin(), e.end(), [](uint32_t v) { return v == 0; });
}

Rat PolyElem::constant_value() const {
  if (terms.empty()) return Rat(0);
  if (!is_constant()) fail(ErrKind::Domain, "polynomial is not constant");
  return terms.begin()->second;
}

void PolyElem::add_term(const Expo& e, const Rat& c) {
  Rat v = reduce(c, char_p);
  if (v == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, v);
    return;
  }
  it->second = reduce(it->second + v, char_p);
  if (it->second == 0) terms.erase(it);
}

PolyElem PolyElem::operator+(const PolyElem& o) const {
  if (n != o.n || char_p != o.char_p) fail(ErrKind::Domain, "ring mismatch");
  PolyElem r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

PolyElem PolyElem::operator-(const PolyElem& o) const {
  if (n != o.n || char_p != o.char_p) fail(ErrKind::Domain, "ring mismatch");
  PolyElem r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, -c);
  return r;
}

PolyElem PolyElem::operator-() const {
  PolyElem r(n, char_p);
  for (const auto& [e, c] : terms) r.add_term(e, -c);
  return r;
}

PolyElem PolyElem::operator*(const PolyElem& o) const {
  if (n != o.n || char_p != o.char_p) fail(ErrKind::Domain, "ring mismatch");
  PolyElem r(n, char_p);
  Expo e(n + 1);
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      for (int j = 0; j <= n; ++j) e[j] = e1[j] + e2[j];
      r.add_term(e, c1 * c2);
    }
  return r;
}

PolyElem PolyElem::scaled(const Rat& c) const {
  PolyElem r(n, char_p);
  if (c == 0) return r;
  for (const auto& [e, v] : terms) r.add_term(e, v * c);
  return r;
}

PolyElem PolyElem::pow(unsigned k) const {
  PolyElem r = constant(n, Rat(1), char_p);
  PolyElem b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool PolyElem::operator<(const PolyElem& o) const {
  if (n != o.n) return n < o.n;
  if (char_p != o.char_p) return char_p < o.char_p;
  auto it1 = terms.begin(), it2 = o.terms.begin();
  for (; it1 != terms.end() && it2 != o.terms.end(); ++it1, ++it2) {
    if (it1->first != it2->first) return it1->first < it2->first;
    int c = cmp(it1->second, it2->second);
    if (c != 0) return c < 0;
  }
  return it2 != o.terms.end();
}

PolyElem PolyElem::subst(const std::vector<PolyElem>& images) const {
  if ((int)images.size() != n + 1) fail(ErrKind::Domain, "substitution arity mismatch");
  PolyElem r(n, char_p);
  for (const auto& [e, c] : terms) {
    PolyElem t = constant(n, c, char_p);
    for (int j = 0; j <= n; ++j)
      if (e[j] > 0) t = t * images[j].pow(e[j]);
    r = r + t;
  }
  return r;
}

PolyElem PolyElem::set_h(const Rat& value) const {
  PolyElem r(n, char_p);
  Expo e2(n + 1);
  for (const auto& [e, c] : terms) {
    Rat v = c;
    if (e[n] > 0) {
      if (value == 0) continue;
      Rat pw(1);
      for (uint32_t k = 0; k < e[n]; ++k) pw *= value;
      v *= pw;
    }
    e2 = e;
    e2[n] = 0;
    r.add_term(e2, v);
  }
  return r;
}

std::optional<PolyElem> PolyElem::try_div_linear(const PolyElem& ell) const {
  if (ell.is_zero()) fail(ErrKind::Domain, "division by zero");
  if (n != ell.n || char_p != ell.char_p) fail(ErrKind::Domain, "ring mismatch");
  // pivot: lex-first variable slot with nonzero coefficient in ell
  int piv = -1;
  Rat pc;
  for (const auto& [e, c] : ell.terms) {
    for (int j = 0; j <= n; ++j)
      if (e[j] == 1) {
        uint32_t tot = 0;
        for (int k = 0; k <= n; ++k) tot += e[k];
        if (tot == 1 && (piv < 0 || j < piv)) {
          piv = j;
          pc = c;
        }
        break;
      }
  }
  if (piv < 0) {
    // ell is a nonzero constant
    return scaled(Rat(1) / ell.constant_value());
  }
  PolyElem rem = *this;
  PolyElem quot(n, char_p);
  while (true) {
    // highest pivot-degree terms
    uint32_t dmax = 0;
    for (const auto& [e, c] : rem.terms) dmax = std::max(dmax, e[piv]);
    if (dmax == 0) break;
    PolyElem lead(n, char_p);
    for (const auto& [e, c] : rem.terms)
      if (e[piv] == dmax) {
        Expo e2 = e;
        e2[piv] = dmax - 1;
        lead.add_term(e2, c / pc);
      }
    quot = quot + lead;
    rem = rem - lead * ell;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

PolyElem PolyElem::div_exact_linear(const PolyElem& ell) const {
  auto q = try_div_linear(ell);
  if (!q) fail(ErrKind::Domain, "inexact linear division");
  return *q;
}

int PolyElem::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) {
    int t = 0;
    for (uint32_t v : e) t += (int)v;
    d = std::max(d, t);
  }
  return d;
}

std::optional<int> PolyElem::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms) {
    int t = 0;
    for (uint32_t v : e) t += (int)v;
    if (d && *d != t) return std::nullopt;
    d = t;
  }
  return d ? d : std::optional<int>(0);
}

PolyElem PolyElem::with_char(unsigned long p) const {
  PolyElem r(n, p);
  for (const auto& [e, c] : terms) r.add_term(e, c);
  return r;
}

Rat PolyElem::primitive_scale() const {
  if (terms.empty()) return Rat(1);
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms) {
    Int nn = c.get_num();
    mpz_abs(nn.get_mpz_t(), nn.get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nn.get_mpz_t());
    Int dd = c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), dd.get_mpz_t());
  }
  Rat s = Rat(den_lcm) / Rat(num_gcd);
  if (terms.begin()->second < 0) s = -s;
  return s;
}

std::string PolyElem::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rat a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_var = false;
    std::ostringstream vs;
    for (int j = 0; j <= n; ++j) {
      if (e[j] == 0) continue;
      if (has_var) vs << "*";
      if (j < n)
        vs << "x" << (j + 1);
      else
        vs << "h";
      if (e[j] > 1) vs << "^" << e[j];
      has_var = true;
    }
    if (!has_var) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << vs.str();
    }
  }
  return os.str();
}

}  // namespace alcove
