#include "alcove/schober.hpp"

#include <algorithm>

namespace alcove {

namespace {

// Generator of the subgroup of Q spanned by the (rational) entries.
Rat rational_gcd(const std::vector<Rat>& vals) {
  Int den(1);
  for (const Rat& v : vals)
    if (v != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  Int num(0);
  for (const Rat& v : vals)
    if (v != 0) {
      Int scaled = Int(v.get_num()) * (den / Int(v.get_den()));
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
    }
  if (num == 0) return Rat(0);
  Rat g(num, den);
  g.canonicalize();
  return g;
}

WallFamily canonical_family(RatVec v, Rat c) {
  int lead = -1;
  for (size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) {
      lead = (int)j;
      break;
    }
  if (lead >= 0 && v[lead] < 0) {
    for (Rat& x : v) x = -x;
    c = -c;
  }
  c -= Rat(rat_floor(c));
  return WallFamily{std::move(v), std::move(c)};
}

// Substitute a concrete small epsilon into an FM witness so that every listed
// condition still holds; exact.
RatVec rationalize_point(const std::vector<LinCon>& sys, const EVec& pt) {
  Rat eps(1);
  for (int iter = 0; iter < 256; ++iter) {
    RatVec q(pt.size());
    for (size_t j = 0; j < pt.size(); ++j) q[j] = pt[j].a + pt[j].b * eps;
    bool ok = true;
    for (const LinCon& con : sys) {
      Rat val = dot(con.c, q) + con.k.a + con.k.b * eps;
      if (con.strict ? !(val > 0) : !(val >= 0)) {
        ok = false;
        break;
      }
    }
    if (ok) return q;
    eps /= 2;
  }
  fail(ErrKind::Domain, "could not rationalize an interior witness");
}

int rat_rank(std::vector<RatVec> rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < cols && rank < (int)rows.size(); ++col) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = (int)r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if ((int)r == rank || rows[r][col] == 0) continue;
      Rat factor = rows[r][col] / rows[rank][col];
      for (size_t cc = col; cc < cols; ++cc) rows[r][cc] -= factor * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<WallFamily> circuit_hyperplanes(const GaugeTheoryData& t) {
  if (t.flavor_rank < 1)
    fail(ErrKind::Domain, "circuit_hyperplanes needs flavor_rank >= 1");
  const int f = t.flavor_rank, d = t.rank, n = t.lines();
  const int nvars = f + n + d;  // (psi | floor symbols | xi); xi eliminated
  std::vector<LinCon> rows;
  for (int i = 0; i < n; ++i) {
    const MatterLine& m = t.matter[i];
    RatVec lo(nvars, Rat(0)), hi(nvars, Rat(0));
    for (int j = 0; j < f; ++j) {
      Rat fc = j < (int)m.flavor_cov.size() ? Rat(m.flavor_cov[j]) : Rat(0);
      lo[j] = fc;
      hi[j] = -fc;
    }
    lo[f + i] = Rat(-1);
    hi[f + i] = Rat(1);
    for (int j = 0; j < d; ++j) {
      lo[f + n + j] = Rat(m.gauge[j]);
      hi[f + n + j] = Rat(-m.gauge[j]);
    }
    rows.push_back({lo, RatEps(m.offset_const), false});
    rows.push_back({hi, RatEps(Rat(1) - m.offset_const), false});
  }
  std::vector<LinCon> projected = fm_project(nvars, rows, f + n);
  std::set<WallFamily> out;
  for (const LinCon& row : projected) {
    RatVec mu(row.c.begin(), row.c.begin() + f);
    bool has_psi = false;
    for (const Rat& v : mu)
      if (v != 0) has_psi = true;
    if (!has_psi) continue;
    std::vector<Rat> alpha(row.c.begin() + f, row.c.begin() + f + n);
    Rat g = rational_gcd(alpha);
    if (g == 0)
      fail(ErrKind::Domain, "projected facet depends on psi but not on the floor symbols");
    for (Rat& v : mu) v /= g;
    out.insert(canonical_family(std::move(mu), row.k.a / g));
  }
  return std::vector<WallFamily>(out.begin(), out.end());
}

SchoberComplex::SchoberComplex(const GaugeTheoryData& t, size_t budget)
    : t_(t), budget_(budget), fams_(circuit_hyperplanes(t)) {}

std::vector<IntVec> SchoberComplex::lambda_real(const RatVec& psi) const {
  GaugeTheoryData rt = realize(t_, psi);
  LambdaSet ls = enumerate_lambda_bar(rt, pctx_infinite(), budget_);
  std::vector<IntVec> out;
  out.reserve(ls.reps.size());
  for (const Chamber& c : ls.reps) out.push_back(c.a);
  std::sort(out.begin(), out.end());
  return out;
}

FaceKey SchoberComplex::key_of(const RatVec& psi) const {
  if ((int)psi.size() != t_.flavor_rank)
    fail(ErrKind::Domain, "flavor point has wrong arity");
  FaceKey key(fams_.size());
  for (size_t j = 0; j < fams_.size(); ++j) {
    Rat val = fams_[j].value(psi);
    if (is_integer(val)) {
      key[j] = {true, Int(val.get_num())};
    } else {
      key[j] = {false, rat_floor(val)};
    }
  }
  return key;
}

std::vector<LinCon> SchoberComplex::key_system(const FaceKey& key) const {
  std::vector<LinCon> sys;
  for (size_t j = 0; j < fams_.size(); ++j) {
    const WallFamily& fam = fams_[j];
    RatVec neg(fam.mu.size());
    for (size_t k = 0; k < fam.mu.size(); ++k) neg[k] = -fam.mu[k];
    Rat lev(key[j].level);
    if (key[j].on) {
      sys.push_back({fam.mu, RatEps(fam.offset - lev), false});
      sys.push_back({neg, RatEps(lev - fam.offset), false});
    } else {
      sys.push_back({fam.mu, RatEps(fam.offset - lev), true});
      sys.push_back({neg, RatEps(lev + 1 - fam.offset), true});
    }
  }
  return sys;
}

FlavorFace SchoberComplex::materialize(const FaceKey& key) {
  if (key.size() != fams_.size()) fail(ErrKind::Domain, "face key has wrong arity");
  std::vector<LinCon> sys = key_system(key);
  LinSys ls;
  ls.nvars = t_.flavor_rank;
  ls.ineqs = sys;
  FMWitness wit = fm_solve(ls);
  if (!wit.feasible) fail(ErrKind::Domain, "face key is infeasible");

  FlavorFace face;
  face.key = key;
  face.witness = rationalize_point(sys, wit.point);
  std::vector<RatVec> eqrows;
  for (size_t j = 0; j < key.size(); ++j)
    if (key[j].on) {
      face.equalities.emplace_back((int)j, key[j].level);
      eqrows.push_back(fams_[j].mu);
    }
  face.dimension = t_.flavor_rank - rat_rank(eqrows);
  face.lambda_here = lambda_real(face.witness);

  // Lambda_C: union of Lambda^R over the star (faces whose closure contains
  // this one): relax each supporting equality to the wall or either side.
  std::set<IntVec> uni;
  size_t ecount = face.equalities.size();
  if (ecount > 20) fail(ErrKind::Budget, "too many supporting equalities");
  size_t combos = 1;
  for (size_t i = 0; i < ecount; ++i) combos *= 3;
  for (size_t mask = 0; mask < combos; ++mask) {
    FaceKey k2 = key;
    size_t m = mask;
    for (size_t i = 0; i < ecount; ++i, m /= 3) {
      int fam = face.equalities[i].first;
      Int lev = face.equalities[i].second;
      switch (m % 3) {
        case 0:
          k2[fam] = {true, lev};
          break;
        case 1:
          k2[fam] = {false, lev - 1};
          break;
        case 2:
          k2[fam] = {false, lev};
          break;
      }
    }
    std::vector<LinCon> sys2 = key_system(k2);
    LinSys ls2;
    ls2.nvars = t_.flavor_rank;
    ls2.ineqs = sys2;
    FMWitness w2 = fm_solve(ls2);
    if (!w2.feasible) continue;
    for (IntVec& cl : lambda_real(rationalize_point(sys2, w2.point))) uni.insert(std::move(cl));
  }
  face.lambda.assign(uni.begin(), uni.end());
  return face;
}

const FlavorFace& SchoberComplex::face(const FaceKey& key) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  FlavorFace built = materialize(key);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(key, std::move(built));
  return it->second;
}

const FlavorFace& SchoberComplex::face_of(const RatVec& psi) { return face(key_of(psi)); }

bool SchoberComplex::leq(const FaceKey& a, const FaceKey& b) {
  if (a.size() != b.size()) fail(ErrKind::Domain, "face keys have different arity");
  for (size_t j = 0; j < a.size(); ++j) {
    if (b[j].on) {
      if (!a[j].on || a[j].level != b[j].level) return false;
    } else {
      if (a[j].on) {
        if (a[j].level != b[j].level && a[j].level != b[j].level + 1) return false;
      } else if (a[j].level != b[j].level) {
        return false;
      }
    }
  }
  return true;
}

bool SchoberComplex::colinear(const FaceKey& c1, const FaceKey& c2, const FaceKey& c3) const {
  if (c1 == c2 || c2 == c3) return true;
  const int f = t_.flavor_rank;
  const int nv = 2 * f + 1;  // (u | v | s), p1 = u/(1-s), p3 = v/s
  std::vector<LinCon> sys;
  auto widen = [&](const std::vector<LinCon>& part, int mode) {
    for (const LinCon& con : part) {
      RatVec c(nv, Rat(0));
      RatEps k(Rat(0));
      switch (mode) {
        case 1:  // at p1, scaled by (1-s) > 0
          for (int j = 0; j < f; ++j) c[j] = con.c[j];
          c[2 * f] = -con.k.a;
          k = con.k;
          break;
        case 2:  // at p2 = u + v
          for (int j = 0; j < f; ++j) c[j] = con.c[j], c[f + j] = con.c[j];
          k = con.k;
          break;
        case 3:  // at p3, scaled by s > 0
          for (int j = 0; j < f; ++j) c[f + j] = con.c[j];
          c[2 * f] = con.k.a;
          break;
      }
      sys.push_back({std::move(c), k, con.strict});
    }
  };
  widen(key_system(c1), 1);
  widen(key_system(c2), 2);
  widen(key_system(c3), 3);
  {
    RatVec c(nv, Rat(0));
    c[2 * f] = 1;
    sys.push_back({c, RatEps(Rat(0)), true});  // s > 0
    RatVec c2v(nv, Rat(0));
    c2v[2 * f] = -1;
    sys.push_back({c2v, RatEps(Rat(1)), true});  // s < 1
  }
  LinSys ls;
  ls.nvars = nv;
  ls.ineqs = std::move(sys);
  return fm_solve(ls).feasible;
}

std::vector<const FlavorFace*> SchoberComplex::segment_face_sequence(const RatVec& psi1,
                                                                     const RatVec& psi2,
                                                                     bool allow_perturb) {
  const int f = t_.flavor_rank;
  if ((int)psi1.size() != f || (int)psi2.size() != f)
    fail(ErrKind::Domain, "flavor point has wrong arity");
  if (psi1 == psi2) return {&face_of(psi1)};
  const size_t nf = fams_.size();
  std::vector<Rat> A(nf), B(nf);
  RatVec dir(f);
  for (int j = 0; j < f; ++j) dir[j] = psi2[j] - psi1[j];
  std::vector<int> degenerate;
  for (size_t j = 0; j < nf; ++j) {
    A[j] = fams_[j].value(psi1);
    B[j] = dot(fams_[j].mu, dir);
    if (B[j] == 0 && is_integer(A[j])) degenerate.push_back((int)j);
  }

  // A segment inside a wall has no well-defined chamber sequence; displace the
  // whole segment by an infinitesimal eps*w off every such wall.  (Crossings
  // that merely coincide at a corner need no perturbation: the shared
  // parameter yields the corner face exactly.)
  RatVec w(f, Rat(0));
  if (!degenerate.empty()) {
    if (!allow_perturb)
      fail(ErrKind::Domain, "DegenerateSegment: the segment lies inside a wall");
    for (long tt = 1;; ++tt) {
      if (tt == 4096) fail(ErrKind::Budget, "no generic perturbation direction found");
      for (int j = 0; j < f; ++j) w[j] = j == 0 ? Rat(1) : w[j - 1] * Rat(tt);
      bool ok = true;
      for (int j : degenerate)
        if (dot(fams_[j].mu, w) == 0) ok = false;
      if (ok) break;
    }
  }

  // value of family j along the displaced segment: (A_j + eps*C_j) + B_j * s
  std::vector<Rat> C(nf);
  for (size_t j = 0; j < nf; ++j) C[j] = dot(fams_[j].mu, w);
  auto value_at = [&](size_t j, const RatEps& s) { return RatEps(A[j], C[j]) + B[j] * s; };
  auto key_at = [&](const RatEps& s) {
    FaceKey key(nf);
    for (size_t j = 0; j < nf; ++j) {
      RatEps val = value_at(j, s);
      if (val.is_int())
        key[j] = {true, Int(val.a.get_num())};
      else
        key[j] = {false, val.floor()};
    }
    return key;
  };

  RatEps zero(Rat(0)), one(Rat(1));
  std::set<RatEps> breaks;
  for (size_t j = 0; j < nf; ++j) {
    if (B[j] == 0) continue;
    RatEps v0 = value_at(j, zero), v1 = value_at(j, one);
    RatEps lo = v0 < v1 ? v0 : v1, hi = v0 < v1 ? v1 : v0;
    for (Int n = lo.floor() + 1; RatEps(Rat(n)) < hi; ++n) {
      if (!(RatEps(Rat(n)) > lo)) continue;
      breaks.insert((RatEps(Rat(n)) - RatEps(A[j], C[j])) / B[j]);
    }
  }

  std::vector<RatEps> pts;
  pts.push_back(zero);
  pts.insert(pts.end(), breaks.begin(), breaks.end());
  pts.push_back(one);
  std::vector<FaceKey> keys;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    keys.push_back(key_at(pts[i]));
    keys.push_back(key_at((pts[i] + pts[i + 1]) / Rat(2)));
  }
  keys.push_back(key_at(one));
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::vector<const FlavorFace*> out;
  out.reserve(keys.size());
  for (const FaceKey& k : keys) out.push_back(&face(k));
  return out;
}

std::set<std::pair<int, Int>> SchoberComplex::separating_walls(const RatVec& psi1,
                                                               const RatVec& psi2) const {
  std::set<std::pair<int, Int>> out;
  for (size_t j = 0; j < fams_.size(); ++j) {
    Rat a = fams_[j].value(psi1), b = fams_[j].value(psi2);
    Rat lo = std::min(a, b), hi = std::max(a, b);
    for (Int n = rat_floor(lo) + 1; Rat(n) < hi; ++n) {
      if (Rat(n) <= lo) continue;
      out.emplace((int)j, n);
    }
  }
  return out;
}

ojson SchoberComplex::export_json(const RatVec& lo, const RatVec& hi) {
  const int f = t_.flavor_rank;
  if ((int)lo.size() != f || (int)hi.size() != f)
    fail(ErrKind::Domain, "box bounds have wrong arity");
  for (int j = 0; j < f; ++j)
    if (lo[j] > hi[j]) fail(ErrKind::Domain, "box is empty");

  // Wall levels and open slots per family over the box.
  std::vector<std::vector<FaceCoord>> options(fams_.size());
  for (size_t j = 0; j < fams_.size(); ++j) {
    Rat mn = fams_[j].offset, mx = fams_[j].offset;
    for (int k = 0; k < f; ++k) {
      Rat a = fams_[j].mu[k] * lo[k], b = fams_[j].mu[k] * hi[k];
      mn += std::min(a, b);
      mx += std::max(a, b);
    }
    Int m_hi = is_integer(mx) ? rat_floor(mx) - 1 : rat_floor(mx);
    for (Int m = rat_floor(mn); m <= m_hi; ++m) options[j].push_back({false, m});
    for (Int n = -rat_floor(-mn); Rat(n) <= mx; ++n) options[j].push_back({true, n});
  }
  size_t total = 1;
  for (const auto& opt : options) {
    total *= std::max<size_t>(opt.size(), 1);
    if (total > budget_) fail(ErrKind::Budget, "face export budget exceeded");
  }

  ojson doc;
  doc["flavor_rank"] = f;
  doc["families"] = ojson::array();
  for (const WallFamily& fam : fams_) {
    ojson jf;
    jf["mu"] = jratvec(fam.mu);
    jf["offset"] = rat_str(fam.offset);
    doc["families"].push_back(jf);
  }
  doc["faces"] = ojson::array();

  std::vector<size_t> idx(fams_.size(), 0);
  bool done = fams_.empty() && true;
  std::vector<LinCon> box;
  for (int j = 0; j < f; ++j) {
    RatVec cl(f, Rat(0)), ch(f, Rat(0));
    cl[j] = 1;
    ch[j] = -1;
    box.push_back({cl, RatEps(-lo[j]), false});
    box.push_back({ch, RatEps(hi[j]), false});
  }
  auto emit = [&](const FaceKey& key) {
    std::vector<LinCon> sys = key_system(key);
    sys.insert(sys.end(), box.begin(), box.end());
    LinSys ls;
    ls.nvars = f;
    ls.ineqs = sys;
    if (!fm_solve(ls).feasible) return;
    const FlavorFace& fc = face(key);
    ojson jf;
    jf["equalities"] = ojson::array();
    for (const auto& [fam, lev] : fc.equalities)
      jf["equalities"].push_back(ojson::array({fam, jint(lev)}));
    jf["dimension"] = fc.dimension;
    jf["witness"] = jratvec(fc.witness);
    jf["lambda_here"] = ojson::array();
    for (const IntVec& v : fc.lambda_here) jf["lambda_here"].push_back(jintvec(v));
    jf["lambda"] = ojson::array();
    for (const IntVec& v : fc.lambda) jf["lambda"].push_back(jintvec(v));
    doc["faces"].push_back(jf);
  };
  if (fams_.empty()) {
    emit(FaceKey{});
  } else {
    while (!done) {
      FaceKey key(fams_.size());
      for (size_t j = 0; j < fams_.size(); ++j)
        key[j] = options[j].empty() ? FaceCoord{false, Int(0)} : options[j][idx[j]];
      emit(key);
      size_t j = 0;
      for (; j < fams_.size(); ++j) {
        if (options[j].empty()) continue;
        if (++idx[j] < options[j].size()) break;
        idx[j] = 0;
      }
      if (j == fams_.size()) done = true;
    }
  }
  return doc;
}

}  // namespace alcove
