#include "alcove/examples.hpp"

namespace alcove {

namespace {

AffineMap perm_map(int n, const std::vector<int>& p) {
  AffineMap w;
  w.lin = IntMat(n);
  for (int i = 0; i < n; ++i) w.lin.at(i, p[i]) = 1;
  w.tr.assign(n, Rat(0));
  return w;
}

}  // namespace

GaugeTheoryData make_cyclic_theory(int n) {
  if (n < 1) fail(ErrKind::Domain, "cyclic theory needs at least one line");
  GaugeTheoryData t;
  t.rank = 1;
  t.flavor_rank = n;
  for (int i = 0; i < n; ++i) {
    MatterLine m;
    m.gauge = IntVec{Int(1)};
    m.flavor_cov.assign(n, Int(0));
    m.flavor_cov[i] = 1;
    m.offset_const = Rat(0);
    m.offset = Rat(0);
    t.matter.push_back(m);
  }
  t.delta = Rat(1, 2 * n + 1);
  t.delta_eff = RatEps(t.delta);
  t.psi = cyclic_flavor(n);
  validate(t);
  return realize(t, t.psi);
}

RatVec cyclic_flavor(int n) {
  RatVec psi(n);
  for (int i = 0; i < n; ++i) psi[i] = Rat(i, n);
  return psi;
}

GaugeTheoryData make_gl2_theory() {
  GaugeTheoryData t;
  t.rank = 2;
  t.flavor_rank = 1;
  for (int copy = 0; copy < 2; ++copy)
    for (int coord = 0; coord < 2; ++coord) {
      MatterLine m;
      m.gauge.assign(2, Int(0));
      m.gauge[coord] = 1;
      m.flavor_cov = IntVec{Int(copy)};
      m.offset_const = Rat(-1, 5);
      m.offset = m.offset_const;
      t.matter.push_back(m);
    }
  t.roots.push_back(RootDatum{IntVec{Int(1), Int(-1)}, IntVec{Int(1), Int(-1)}, true});
  t.roots.push_back(RootDatum{IntVec{Int(-1), Int(1)}, IntVec{Int(-1), Int(1)}, false});
  t.weyl_gens.push_back(perm_map(2, {1, 0}));
  t.delta = Rat(1, 5);
  t.delta_eff = RatEps(t.delta);
  t.psi = gl2_flavor();
  validate(t);
  return realize(t, t.psi);
}

RatVec gl2_flavor() { return RatVec{Rat(3, 5)}; }

GaugeTheoryData make_gl3_theory() {
  GaugeTheoryData t;
  t.rank = 3;
  t.flavor_rank = 0;
  for (int coord = 0; coord < 3; ++coord) {
    MatterLine m;
    m.gauge.assign(3, Int(0));
    m.gauge[coord] = 1;
    m.offset_const = Rat(0);
    m.offset = Rat(0);
    t.matter.push_back(m);
  }
  auto add_root = [&](int i, int j, bool simple) {
    RootDatum r;
    r.alpha.assign(3, Int(0));
    r.alpha[i] = 1;
    r.alpha[j] = -1;
    r.coroot = r.alpha;
    r.simple = simple;
    t.roots.push_back(r);
    r.alpha[i] = -1;
    r.alpha[j] = 1;
    r.coroot = r.alpha;
    r.simple = false;
    t.roots.push_back(r);
  };
  add_root(0, 1, true);
  add_root(1, 2, true);
  add_root(0, 2, false);
  t.weyl_gens.push_back(perm_map(3, {1, 0, 2}));
  t.weyl_gens.push_back(perm_map(3, {0, 2, 1}));
  t.delta = Rat(1, 3);
  t.delta_eff = RatEps(t.delta);
  validate(t);
  return t;
}

GaugeTheoryData make_abelian_theory() {
  GaugeTheoryData t;
  t.rank = 1;
  MatterLine m;
  m.gauge = IntVec{Int(1)};
  m.offset_const = Rat(0);
  m.offset = Rat(0);
  t.matter.push_back(m);
  t.delta = Rat(1, 2);
  t.delta_eff = RatEps(t.delta);
  validate(t);
  return t;
}

GaugeTheoryData make_abelian2_theory() {
  GaugeTheoryData t;
  t.rank = 2;
  auto add_line = [&](long g1, long g2, const Rat& f) {
    MatterLine m;
    m.gauge = IntVec{Int(g1), Int(g2)};
    m.offset_const = f;
    m.offset = f;
    t.matter.push_back(m);
  };
  add_line(1, 0, Rat(0));
  add_line(0, 1, Rat(1, 3));
  add_line(1, 1, Rat(2, 7));
  t.delta = Rat(2, 5);
  t.delta_eff = RatEps(t.delta);
  validate(t);
  return t;
}

GaugeTheoryData make_a11_theory() {
  GaugeTheoryData t;
  t.rank = 2;
  auto add_line = [&](long g1, long g2, const Rat& f) {
    MatterLine m;
    m.gauge = IntVec{Int(g1), Int(g2)};
    m.offset_const = f;
    m.offset = f;
    t.matter.push_back(m);
  };
  add_line(1, 0, Rat(1, 7));
  add_line(-1, 0, Rat(1, 7));
  add_line(0, 1, Rat(2, 7));
  add_line(0, -1, Rat(2, 7));
  auto add_root_pair = [&](int coord) {
    RootDatum r;
    r.alpha.assign(2, Int(0));
    r.alpha[coord] = 1;
    r.coroot.assign(2, Int(0));
    r.coroot[coord] = 2;
    r.simple = true;
    t.roots.push_back(r);
    r.alpha[coord] = -1;
    r.coroot[coord] = -2;
    r.simple = false;
    t.roots.push_back(r);
  };
  add_root_pair(0);
  add_root_pair(1);
  auto flip = [&](int coord) {
    AffineMap w = AffineMap::identity(2);
    w.lin.at(coord, coord) = -1;
    return w;
  };
  t.weyl_gens.push_back(flip(0));
  t.weyl_gens.push_back(flip(1));
  t.delta = Rat(1, 5);
  t.delta_eff = RatEps(t.delta);
  validate(t);
  return t;
}

GaugeTheoryData make_cstar2_theory() {
  GaugeTheoryData t;
  t.rank = 1;
  t.flavor_rank = 1;
  for (int i = 0; i < 2; ++i) {
    MatterLine m;
    m.gauge = IntVec{Int(1)};
    m.flavor_cov = IntVec{Int(i)};
    m.offset_const = Rat(0);
    m.offset = Rat(0);
    t.matter.push_back(m);
  }
  t.delta = Rat(1, 3);
  t.delta_eff = RatEps(t.delta);
  t.psi = RatVec{Rat(2, 7)};
  validate(t);
  return realize(t, t.psi);
}

GaugeTheoryData make_trivial_theory() {
  GaugeTheoryData t;
  t.rank = 0;
  t.delta = Rat(1, 2);
  t.delta_eff = RatEps(t.delta);
  validate(t);
  return t;
}

}  // namespace alcove
