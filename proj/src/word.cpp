#include "alcove/word.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alcove {

Token tok_poly(const PolyElem& f) {
  Token tk;
  tk.kind = TokKind::Poly;
  tk.poly = f;
  return tk;
}

Token tok_weyl(const AffineMap& w) {
  Token tk;
  tk.kind = TokKind::Weyl;
  tk.w = w;
  return tk;
}

Token tok_wall(const EVec& to) {
  Token tk;
  tk.kind = TokKind::Wall;
  tk.wall_to = to;
  return tk;
}

Token tok_demazure(int root, const Int& level) {
  Token tk;
  tk.kind = TokKind::Demazure;
  tk.root = root;
  tk.level = level;
  return tk;
}

EVec token_target(const GaugeTheoryData& t, const Token& tok, const EVec& obj) {
  switch (tok.kind) {
    case TokKind::Poly:
      return obj;
    case TokKind::Weyl:
      return act(tok.w, obj);
    case TokKind::Wall:
      return tok.wall_to;
    case TokKind::Demazure: {
      if (tok.root < 0 || tok.root >= (int)t.roots.size())
        fail(ErrKind::Domain, "demazure token references unknown root");
      return act(reflection_map(t.roots[tok.root], tok.level), obj);
    }
  }
  fail(ErrKind::Domain, "unreachable token kind");
}

static void require_unexceptional(const GaugeTheoryData& t, const EVec& p,
                                  const char* what) {
  if ((int)p.size() != t.rank)
    fail(ErrKind::Domain, std::string(what) + ": wrong coordinate count");
  if (!unexceptional(t, p))
    fail(ErrKind::Domain, std::string(what) + ": ExceptionalPoint");
}

MorphismWord word_identity(const GaugeTheoryData& t, const EVec& obj) {
  require_unexceptional(t, obj, "identity object");
  return MorphismWord{obj, obj, {}};
}

MorphismWord word_poly(const GaugeTheoryData& t, const EVec& obj, const PolyElem& f) {
  require_unexceptional(t, obj, "poly endomorphism object");
  if (f.n != t.rank) fail(ErrKind::Domain, "dressing polynomial has wrong arity");
  return MorphismWord{obj, obj, {tok_poly(f)}};
}

MorphismWord word_weyl(const GaugeTheoryData& t, const EVec& obj, const AffineMap& w) {
  require_unexceptional(t, obj, "weyl source object");
  if (!wall_match(t, w))
    fail(ErrKind::Domain, "weyl letter does not preserve the wall arrangement");
  EVec tgt = act(w, obj);
  require_unexceptional(t, tgt, "weyl target object");
  return MorphismWord{obj, tgt, {tok_weyl(w)}};
}

MorphismWord word_wall(const GaugeTheoryData& t, const EVec& to, const EVec& from) {
  require_unexceptional(t, from, "wall-crossing source");
  require_unexceptional(t, to, "wall-crossing target");
  return MorphismWord{from, to, {tok_wall(to)}};
}

static bool parallel_covectors(const IntVec& a, const IntVec& b) {
  bool an = false, bn = false;
  for (const auto& v : a) an |= (v != 0);
  for (const auto& v : b) bn |= (v != 0);
  if (!an || !bn) return false;
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

MorphismWord word_demazure(const GaugeTheoryData& t, int root, const Int& level,
                           const EVec& from) {
  if (root < 0 || root >= (int)t.roots.size())
    fail(ErrKind::Domain, "demazure letter references unknown root");
  require_unexceptional(t, from, "demazure source");
  const RootDatum& rt = t.roots[root];
  RatEps v = dot(rt.alpha, from);
  if (v.a != Rat(level) || v.b == 0)
    fail(ErrKind::Domain,
         "demazure source must sit infinitesimally next to the root wall");
  // Refuse walls where a matter hyperplane coincides with the root wall: the
  // simple-reflection generator is not defined across such a wall.
  for (int i = 0; i < t.lines(); ++i) {
    if (!parallel_covectors(t.matter[i].gauge, rt.alpha)) continue;
    if (is_integer(eval_mid(t, i, from).a))
      fail(ErrKind::Domain,
           "demazure wall coincides with a matter hyperplane (MatterOnWall)");
  }
  EVec tgt = act(reflection_map(rt, level), from);
  require_unexceptional(t, tgt, "demazure target");
  return MorphismWord{from, tgt, {tok_demazure(root, level)}};
}

MorphismWord word_compose(const GaugeTheoryData& t, const MorphismWord& g,
                          const MorphismWord& f) {
  (void)t;
  if (f.target != g.source) fail(ErrKind::Domain, "ObjectMismatch in composition");
  MorphismWord out;
  out.source = f.source;
  out.target = g.target;
  out.toks = f.toks;
  out.toks.insert(out.toks.end(), g.toks.begin(), g.toks.end());
  return out;
}

Int word_degree(const GaugeTheoryData& t, const MorphismWord& w) {
  Int deg = 0;
  EVec cur = w.source;
  for (const auto& tk : w.toks) {
    switch (tk.kind) {
      case TokKind::Poly: {
        auto hd = tk.poly.homogeneous_degree();
        if (!hd) fail(ErrKind::Domain, "inhomogeneous dressing has no degree");
        deg += Int(2 * *hd);
        break;
      }
      case TokKind::Weyl:
        break;
      case TokKind::Wall: {
        deg += Int(phi_product(t, tk.wall_to, cur).size());
        deg += Int(phi_product(t, cur, tk.wall_to).size());
        break;
      }
      case TokKind::Demazure:
        deg -= 2;
        break;
    }
    cur = token_target(t, tk, cur);
  }
  return deg;
}

static RatVec to_ratvec(const IntVec& v) {
  RatVec r(v.size());
  for (size_t j = 0; j < v.size(); ++j) r[j] = Rat(v[j]);
  return r;
}

static bool pure_rational(const EVec& p) {
  for (const auto& c : p)
    if (c.b != 0) return false;
  return true;
}

MorphismWord straight_path_word(const GaugeTheoryData& t, const EVec& to,
                                const EVec& from) {
  MorphismWord single = word_wall(t, to, from);
  if (!pure_rational(from) || !pure_rational(to)) return single;
  // Crossing parameters of the straight segment with every matter wall.
  std::vector<Rat> params;
  for (int i = 0; i < t.lines(); ++i) {
    Rat m0 = eval_mid(t, i, from).a;
    Rat m1 = eval_mid(t, i, to).a;
    if (m0 == m1) continue;
    Rat lo = std::min(m0, m1), hi = std::max(m0, m1);
    for (Int n = strict_above(RatEps(lo)); n <= strict_below(RatEps(hi)); ++n)
      params.push_back((Rat(n) - m0) / (m1 - m0));
  }
  std::sort(params.begin(), params.end());
  if (std::adjacent_find(params.begin(), params.end()) != params.end())
    return single;  // simultaneous crossings: keep the unfactored letter
  if (params.size() <= 1) return single;
  MorphismWord out;
  out.source = from;
  out.target = to;
  for (size_t k = 0; k + 1 < params.size(); ++k) {
    Rat s = (params[k] + params[k + 1]) / 2;
    EVec rep(from.size());
    for (size_t j = 0; j < from.size(); ++j)
      rep[j] = RatEps(from[j].a + s * (to[j].a - from[j].a));
    if (!unexceptional(t, rep)) return single;
    out.toks.push_back(tok_wall(rep));
  }
  out.toks.push_back(tok_wall(to));
  return out;
}

EVec generic_base_point(const GaugeTheoryData& t) {
  if (t.rank == 0) return {};
  for (int a = 0; a < 1000; ++a) {
    long M = 101 + 2 * a;
    EVec p(t.rank);
    for (int j = 0; j < t.rank; ++j)
      p[j] = RatEps(Rat(Int(37L * (a + 1) * (j + 1) % M), Int(M)));
    if (generic_point(t, p)) return p;
  }
  fail(ErrKind::Budget, "no generic base point found");
}

std::vector<AffineMap> finite_weyl_elements(const GaugeTheoryData& t,
                                            size_t budget) {
  std::vector<AffineMap> gens;
  for (const auto& w : t.weyl_gens) {
    gens.push_back(w);
    gens.push_back(w.inverse());
  }
  std::set<AffineMap> seen;
  std::vector<AffineMap> frontier{AffineMap::identity(t.rank)};
  seen.insert(frontier[0]);
  for (size_t head = 0; head < frontier.size(); ++head) {
    AffineMap cur = frontier[head];
    for (const auto& g : gens) {
      AffineMap nxt = g.compose(cur);
      if (seen.insert(nxt).second) {
        if (seen.size() > budget)
          fail(ErrKind::Budget, "finite Weyl closure exceeds budget");
        frontier.push_back(nxt);
      }
    }
  }
  return frontier;
}

std::vector<AffineMap> extended_weyl_elements(const GaugeTheoryData& t,
                                              int window, size_t budget) {
  std::vector<AffineMap> gens;
  for (const auto* pool : {&t.weyl_gens, &t.lenzero_gens})
    for (const auto& w : *pool) {
      gens.push_back(w);
      gens.push_back(w.inverse());
    }
  Rat prune(window + 2), keep(window);
  auto norm_ok = [](const AffineMap& m, const Rat& bound) {
    for (const auto& c : m.tr)
      if (abs(c) > bound) return false;
    return true;
  };
  std::set<AffineMap> seen;
  std::vector<AffineMap> frontier{AffineMap::identity(t.rank)};
  seen.insert(frontier[0]);
  for (size_t head = 0; head < frontier.size(); ++head) {
    AffineMap cur = frontier[head];
    for (const auto& g : gens) {
      AffineMap nxt = g.compose(cur);
      if (!norm_ok(nxt, prune)) continue;
      if (seen.insert(nxt).second) {
        if (seen.size() > budget)
          fail(ErrKind::Budget, "extended Weyl enumeration exceeds budget");
        frontier.push_back(nxt);
      }
    }
  }
  std::vector<AffineMap> out;
  for (const auto& m : seen)
    if (norm_ok(m, keep)) out.push_back(m);
  return out;
}

MorphismWord monopole(const GaugeTheoryData& t, const IntVec& lambda,
                      const PolyElem& dressing) {
  if ((int)lambda.size() != t.rank)
    fail(ErrKind::Domain, "cocharacter has wrong arity");
  if (dressing.n != t.rank)
    fail(ErrKind::Domain, "dressing polynomial has wrong arity");
  EVec z = generic_base_point(t);
  EVec zm(z.size());
  for (size_t j = 0; j < z.size(); ++j) zm[j] = RatEps(z[j].a - Rat(lambda[j]));
  if (t.roots.empty()) {
    MorphismWord out;
    out.source = z;
    out.target = z;
    out.toks = {tok_wall(zm), tok_weyl(AffineMap::translation(to_ratvec(lambda))),
                tok_poly(dressing)};
    return out;
  }
  for (const auto& rt : t.roots) {
    if (!rt.simple) continue;  // dominance is decided on the simple system
    Int pairing = 0;
    for (size_t j = 0; j < lambda.size(); ++j) pairing += rt.alpha[j] * lambda[j];
    if (pairing < 0) fail(ErrKind::Domain, "NonDominant cocharacter");
  }
  for (const auto& w : finite_weyl_elements(t)) {
    if (w.lin.apply_int(lambda) != lambda) continue;
    if (poly_weyl_act(w, dressing) != dressing)
      fail(ErrKind::Domain, "NonInvariantDressing for the cocharacter stabilizer");
  }
  EVec zeps(z.size());
  for (size_t j = 0; j < z.size(); ++j) zeps[j] = RatEps(z[j].a, Rat(-lambda[j]));
  MorphismWord out;
  out.source = z;
  out.target = z;
  out.toks = {tok_wall(zeps), tok_poly(dressing), tok_wall(zm),
              tok_weyl(AffineMap::translation(to_ratvec(lambda)))};
  return out;
}

static void enumerate_monomials(int nvars, int max_deg,
                                std::vector<std::vector<uint32_t>>& out) {
  std::vector<uint32_t> cur(nvars, 0);
  // iterate exponent vectors in lexicographic order with total degree bound
  while (true) {
    int total = 0;
    for (auto e : cur) total += (int)e;
    if (total <= max_deg) out.push_back(cur);
    int j = nvars - 1;
    while (j >= 0) {
      int rest = 0;
      for (int k = 0; k < j; ++k) rest += (int)cur[k];
      if ((int)cur[j] + 1 + rest <= max_deg) {
        cur[j]++;
        for (int k = j + 1; k < nvars; ++k) cur[k] = 0;
        break;
      }
      --j;
    }
    if (j < 0) break;
  }
}

std::vector<MorphismWord> path_basis(const GaugeTheoryData& t, const EVec& eta,
                                     const EVec& eta_prime, int deg_bound,
                                     int window) {
  require_unexceptional(t, eta, "path basis target");
  require_unexceptional(t, eta_prime, "path basis source");
  std::vector<MorphismWord> out;
  for (const auto& w : extended_weyl_elements(t, window)) {
    EVec moved = act(w, eta_prime);
    if (!unexceptional(t, moved)) continue;
    Int wall_deg = Int(phi_product(t, eta, moved).size()) +
                   Int(phi_product(t, moved, eta).size());
    if (wall_deg > Int(deg_bound)) continue;
    Int room2 = (Int(deg_bound) - wall_deg) / 2;
    int room = (int)room2.get_si();
    std::vector<std::vector<uint32_t>> mons;
    enumerate_monomials(t.rank + 1, room, mons);
    std::sort(mons.begin(), mons.end());
    for (const auto& e : mons) {
      MorphismWord word;
      word.source = eta_prime;
      word.target = eta;
      bool trivial = true;
      for (auto x : e) trivial &= (x == 0);
      if (!trivial) {
        PolyElem m = PolyElem::constant(t.rank, 1);
        for (int j = 0; j <= t.rank; ++j)
          for (uint32_t k = 0; k < e[j]; ++k)
            m = m * PolyElem::variable(t.rank, j);
        word.toks.push_back(tok_poly(m));
      }
      if (!w.is_identity()) word.toks.push_back(tok_weyl(w));
      word.toks.push_back(tok_wall(eta));
      out.push_back(word);
    }
  }
  return out;
}

}  // namespace alcove
