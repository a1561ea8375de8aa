#include "zignorm/degeneracy.hpp"

#include <algorithm>
#include <iterator>

#include "zignorm/error.hpp"

namespace zignorm {

Insertion insert_identity_cospans(const Diagram& a, const Monotone& positions) {
  if (a.is_null() || a.dimension() == 0)
    raise(ErrorKind::ArgumentError, "insert_identity_cospans: diagram must have dimension >= 1");
  if (!positions.well_formed() || positions.source_size != a.length())
    raise(ErrorKind::ArgumentError, "insert_identity_cospans: positions must be a monotone out of [length]");
  if (!positions.is_injective())
    raise(ErrorKind::ArgumentError, "insert_identity_cospans: positions must be injective");

  const std::size_t m = positions.target_size;
  const Monotone reg = wraith_dual(positions);

  std::vector<Diagram> regulars;
  regulars.reserve(m + 1);
  for (std::size_t i = 0; i <= m; ++i) regulars.push_back(a.regular(reg(i)));

  std::vector<Diagram> singulars;
  std::vector<DiagramMap> fwd, bwd;
  singulars.reserve(m);
  std::size_t j = 0;
  for (std::size_t h = 0; h < m; ++h) {
    if (j < a.length() && positions(j) == h) {
      singulars.push_back(a.singular(j));
      fwd.push_back(a.forward(j));
      bwd.push_back(a.backward(j));
      ++j;
    } else {
      const Diagram& o = a.regular(reg(h));
      singulars.push_back(o);
      fwd.push_back(identity_map(o));
      bwd.push_back(identity_map(o));
    }
  }
  Diagram target = Diagram::zigzag(std::move(regulars), std::move(singulars), std::move(fwd),
                                   std::move(bwd));

  std::vector<DiagramMap> reg_slices;
  reg_slices.reserve(m + 1);
  for (std::size_t i = 0; i <= m; ++i) reg_slices.push_back(identity_map(a.regular(reg(i))));
  std::vector<DiagramMap> sing_slices;
  sing_slices.reserve(a.length());
  for (std::size_t t = 0; t < a.length(); ++t) sing_slices.push_back(identity_map(a.singular(t)));

  DiagramMap map = DiagramMap::zigzag_map(a, target, positions, std::move(reg_slices),
                                          std::move(sing_slices));
  return {std::move(target), std::move(map)};
}

DiagramMap residue_singular_slice(const DiagramMap& f, std::size_t target_height) {
  auto [p, q] = preimage_interval(f.singular_monotone(), target_height);
  if (p == q) return compose_maps(f.regular_slice(target_height), f.target().forward(target_height));
  if (q - p != 1)
    raise(ErrorKind::ArgumentError, "residue_singular_slice: height hit more than once");
  return f.singular_slice(p);
}

WitnessPtr is_degeneracy(const DiagramMap& f) {
  if (f.is_null()) return nullptr;
  if (f.dimension() == 0) {
    if (!(f.source_generator() == f.target_generator())) return nullptr;
    auto w = std::make_shared<DegeneracyWitness>();
    w->map = f;
    return w;
  }
  if (!f.singular_monotone().is_injective()) return nullptr;
  auto w = std::make_shared<DegeneracyWitness>();
  w->map = f;
  w->simple = f.singular_monotone();
  const std::size_t m = f.target().length();
  w->regular_children.reserve(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    WitnessPtr c = is_degeneracy(f.regular_slice(i));
    if (!c) return nullptr;
    w->regular_children.push_back(std::move(c));
  }
  w->singular_children.reserve(m);
  for (std::size_t h = 0; h < m; ++h) {
    WitnessPtr c = is_degeneracy(residue_singular_slice(f, h));
    if (!c) return nullptr;
    w->singular_children.push_back(std::move(c));
  }
  return w;
}

SimpleParallelFactorisation factor_simple_parallel(const DegeneracyWitness& w) {
  const DiagramMap& f = w.map;
  if (f.dimension() == 0) return {identity_map(f.source()), f};
  Insertion ins = insert_identity_cospans(f.source(), w.simple);
  std::vector<DiagramMap> regs;
  regs.reserve(w.regular_children.size());
  for (const auto& c : w.regular_children) regs.push_back(c->map);
  std::vector<DiagramMap> sings;
  sings.reserve(w.singular_children.size());
  for (const auto& c : w.singular_children) sings.push_back(c->map);
  DiagramMap parallel =
      DiagramMap::zigzag_map(ins.target, f.target(), Monotone::identity(f.target().length()),
                             std::move(regs), std::move(sings));
  if (strict_validation()) {
    if (auto r = validate_map(parallel); !r)
      raise(ErrorKind::ValidationError, "factor_simple_parallel: residue invalid at " + r.path);
    if (!(compose_maps(ins.map, parallel) == f))
      raise(ErrorKind::ValidationError, "factor_simple_parallel: factors do not recompose");
  }
  return {std::move(ins.map), std::move(parallel)};
}

std::optional<DiagramMap> factor_through_degeneracy(const DiagramMap& h, const DiagramMap& d) {
  if (h.is_null() || d.is_null()) raise(ErrorKind::ArgumentError, "factor_through_degeneracy: null map");
  if (!(h.target() == d.target())) return std::nullopt;
  if (h.dimension() == 0) {
    if (!thin_map_exists(h.source_generator(), d.source_generator())) return std::nullopt;
    return DiagramMap::thin(h.source_generator(), d.source_generator());
  }
  const Monotone& mu_h = h.singular_monotone();
  const Monotone& mu_d = d.singular_monotone();
  // the shape must factor: image(mu_h) inside image(mu_d)
  std::vector<std::size_t> z_values;
  z_values.reserve(mu_h.source_size);
  for (std::size_t j = 0; j < mu_h.source_size; ++j) {
    auto it = std::lower_bound(mu_d.values.begin(), mu_d.values.end(), mu_h(j));
    if (it == mu_d.values.end() || *it != mu_h(j)) return std::nullopt;
    z_values.push_back(static_cast<std::size_t>(it - mu_d.values.begin()));
  }
  Monotone mu_z;
  mu_z.source_size = mu_h.source_size;
  mu_z.target_size = mu_d.source_size;
  mu_z.values = std::move(z_values);

  std::vector<DiagramMap> sings;
  sings.reserve(mu_z.source_size);
  for (std::size_t j = 0; j < mu_z.source_size; ++j) {
    auto s = factor_through_degeneracy(h.singular_slice(j), d.singular_slice(mu_z(j)));
    if (!s) return std::nullopt;
    sings.push_back(std::move(*s));
  }

  const Monotone d_reg = wraith_dual(mu_d);
  std::vector<DiagramMap> regs;
  regs.reserve(d.source().length() + 1);
  for (std::size_t i = 0; i <= d.source().length(); ++i) {
    auto [lo, hi] = preimage_interval(d_reg, i);
    if (lo == hi)
      raise(ErrorKind::ArgumentError, "factor_through_degeneracy: regular monotone not surjective");
    auto s = factor_through_degeneracy(h.regular_slice(lo), d.regular_slice(lo));
    if (!s) return std::nullopt;
    regs.push_back(std::move(*s));
  }

  DiagramMap z = DiagramMap::zigzag_map(h.source(), d.source(), std::move(mu_z), std::move(regs),
                                        std::move(sings));
  if (!(compose_maps(z, d) == h)) return std::nullopt;
  return z;
}

namespace {

struct GapState {
  Diagram apex;
  std::vector<DiagramMap> to_x;  // apex -> X(r i), i = x_lo, x_lo+1, ...
  std::vector<DiagramMap> to_y;
  std::size_t x_lo = 0;
  std::size_t y_lo = 0;
};

}  // namespace

DegeneracyPullback pullback_degeneracies(const DegeneracyWitness& wf, const DegeneracyWitness& wg) {
  const DiagramMap& f = wf.map;
  const DiagramMap& g = wg.map;
  if (!(f.target() == g.target()))
    raise(ErrorKind::ArgumentError, "pullback_degeneracies: maps must share their target");
  if (f.dimension() == 0) {
    // degeneracies of dimension 0 are identities in the skeletal base
    return {f.source(), identity_map(f.source()), identity_map(g.source())};
  }
  const Diagram& x = f.source();
  const Diagram& y = g.source();
  const Diagram& t = f.target();
  const Monotone& mf = f.singular_monotone();
  const Monotone& mg = g.singular_monotone();
  const Monotone rf = wraith_dual(mf);
  const Monotone rg = wraith_dual(mg);

  std::vector<std::size_t> common;  // heights of t kept by both
  std::set_intersection(mf.values.begin(), mf.values.end(), mg.values.begin(), mg.values.end(),
                        std::back_inserter(common));
  const std::size_t c = common.size();

  auto index_in = [](const Monotone& m, std::size_t value) {
    auto it = std::lower_bound(m.values.begin(), m.values.end(), value);
    return static_cast<std::size_t>(it - m.values.begin());
  };

  // pullbacks at the surviving singular heights
  std::vector<Diagram> p_singulars(c);
  std::vector<DiagramMap> alpha(c), beta(c);
  for (std::size_t k = 0; k < c; ++k) {
    const std::size_t ht = common[k];
    DegeneracyPullback sub =
        pullback_degeneracies(*wf.singular_children[ht], *wg.singular_children[ht]);
    p_singulars[k] = sub.apex;
    alpha[k] = sub.to_first;
    beta[k] = sub.to_second;
  }

  // one merged regular object per gap between surviving heights
  auto row = [&](std::size_t rt) {
    DegeneracyPullback sub = pullback_degeneracies(*wf.regular_children[rt], *wg.regular_children[rt]);
    return sub;
  };

  auto mediate = [&](const DiagramMap& into_t, const DiagramMap& diagonal) {
    auto m = factor_through_degeneracy(into_t, diagonal);
    if (!m)
      raise(ErrorKind::ValidationError, "pullback_degeneracies: mediator does not exist");
    return *m;
  };

  std::vector<GapState> gaps(c + 1);
  for (std::size_t k = 0; k <= c; ++k) {
    const std::size_t lo = (k == 0) ? 0 : common[k - 1] + 1;
    const std::size_t hi = (k == c) ? t.length() : common[k];
    DegeneracyPullback first = row(lo);
    GapState state;
    state.apex = first.apex;
    state.to_x = {first.to_first};
    state.to_y = {first.to_second};
    state.x_lo = rf(lo);
    state.y_lo = rg(lo);
    for (std::size_t ht = lo; ht < hi; ++ht) {
      // residue slices of f and g into the dropped height ht
      const DiagramMap u = wf.singular_children[ht]->map;
      const DiagramMap v = wg.singular_children[ht]->map;
      DegeneracyPullback mid =
          pullback_degeneracies(*wf.singular_children[ht], *wg.singular_children[ht]);
      const DiagramMap diagonal = compose_maps(mid.to_first, u);

      const bool f_keeps = mf.hits(ht);
      const bool g_keeps = mg.hits(ht);
      // route from the accumulated apex into the residue sources
      DiagramMap c_u = f_keeps
                           ? compose_maps(state.to_x.back(), x.forward(index_in(mf, ht)))
                           : state.to_x.back();
      DiagramMap m1 = mediate(compose_maps(c_u, u), diagonal);

      DegeneracyPullback next = row(ht + 1);
      DiagramMap n_u = f_keeps
                           ? compose_maps(next.to_first, x.backward(index_in(mf, ht)))
                           : next.to_first;
      DiagramMap m2 = mediate(compose_maps(n_u, u), diagonal);

      WitnessPtr w1 = is_degeneracy(m1);
      WitnessPtr w2 = is_degeneracy(m2);
      if (!w1 || !w2)
        raise(ErrorKind::ValidationError, "pullback_degeneracies: merge mediator is not a degeneracy");
      DegeneracyPullback merged = pullback_degeneracies(*w1, *w2);

      GapState out;
      out.apex = merged.apex;
      out.x_lo = state.x_lo;
      out.y_lo = state.y_lo;
      for (const auto& mx : state.to_x) out.to_x.push_back(compose_maps(merged.to_first, mx));
      for (const auto& my : state.to_y) out.to_y.push_back(compose_maps(merged.to_first, my));
      if (f_keeps) out.to_x.push_back(compose_maps(merged.to_second, next.to_first));
      if (g_keeps) out.to_y.push_back(compose_maps(merged.to_second, next.to_second));
      state = std::move(out);
    }
    gaps[k] = std::move(state);
  }

  // assemble the apex zigzag
  std::vector<Diagram> p_regulars;
  p_regulars.reserve(c + 1);
  for (const auto& gp : gaps) p_regulars.push_back(gp.apex);
  std::vector<DiagramMap> fwd(c), bwd(c);
  for (std::size_t k = 0; k < c; ++k) {
    const std::size_t ht = common[k];
    const std::size_t jx = index_in(mf, ht);
    const DiagramMap diagonal = compose_maps(alpha[k], f.singular_slice(jx));
    DiagramMap via_fwd = compose_maps(compose_maps(gaps[k].to_x.back(), x.forward(jx)),
                                      f.singular_slice(jx));
    fwd[k] = mediate(via_fwd, diagonal);
    DiagramMap via_bwd = compose_maps(compose_maps(gaps[k + 1].to_x.front(), x.backward(jx)),
                                      f.singular_slice(jx));
    bwd[k] = mediate(via_bwd, diagonal);
  }
  Diagram apex = Diagram::zigzag(std::move(p_regulars), std::move(p_singulars), std::move(fwd),
                                 std::move(bwd));

  // the two projections
  Monotone iota_x;
  iota_x.source_size = c;
  iota_x.target_size = x.length();
  Monotone iota_y;
  iota_y.source_size = c;
  iota_y.target_size = y.length();
  for (std::size_t k = 0; k < c; ++k) {
    iota_x.values.push_back(index_in(mf, common[k]));
    iota_y.values.push_back(index_in(mg, common[k]));
  }
  const Monotone px = wraith_dual(iota_x);
  const Monotone py = wraith_dual(iota_y);

  std::vector<DiagramMap> p_regs(x.length() + 1), q_regs(y.length() + 1);
  for (std::size_t i = 0; i <= x.length(); ++i) {
    const std::size_t k = px(i);
    p_regs[i] = gaps[k].to_x.at(i - gaps[k].x_lo);
  }
  for (std::size_t i = 0; i <= y.length(); ++i) {
    const std::size_t k = py(i);
    q_regs[i] = gaps[k].to_y.at(i - gaps[k].y_lo);
  }
  DiagramMap p = DiagramMap::zigzag_map(apex, x, std::move(iota_x), std::move(p_regs), alpha);
  DiagramMap q = DiagramMap::zigzag_map(apex, y, std::move(iota_y), std::move(q_regs), beta);

  if (strict_validation()) {
    if (auto r = validate_diagram(apex); !r)
      raise(ErrorKind::ValidationError, "pullback_degeneracies: apex invalid at " + r.path);
    if (!(compose_maps(p, f) == compose_maps(q, g)))
      raise(ErrorKind::ValidationError, "pullback_degeneracies: square does not commute");
  }
  return {std::move(apex), std::move(p), std::move(q)};
}

DegeneracyPullback pullback_degeneracies(const DiagramMap& f, const DiagramMap& g) {
  WitnessPtr wf = is_degeneracy(f);
  if (!wf) raise(ErrorKind::ArgumentError, "pullback_degeneracies: first map is not a degeneracy");
  WitnessPtr wg = is_degeneracy(g);
  if (!wg) raise(ErrorKind::ArgumentError, "pullback_degeneracies: second map is not a degeneracy");
  return pullback_degeneracies(*wf, *wg);
}

}  // namespace zignorm
