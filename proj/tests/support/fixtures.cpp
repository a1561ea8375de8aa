#include "fixtures.hpp"

#include "zignorm/error.hpp"

namespace zignorm::fixtures {

Diagram pt(const Generator& g) { return Diagram::point(g); }

Diagram diag1(const std::vector<Generator>& regulars, const std::vector<Generator>& singulars) {
  std::vector<Diagram> regs, sings;
  std::vector<DiagramMap> fwd, bwd;
  for (const auto& g : regulars) regs.push_back(pt(g));
  for (std::size_t j = 0; j < singulars.size(); ++j) {
    sings.push_back(pt(singulars[j]));
    fwd.push_back(DiagramMap::thin(regulars[j], singulars[j]));
    bwd.push_back(DiagramMap::thin(regulars[j + 1], singulars[j]));
  }
  return Diagram::zigzag(std::move(regs), std::move(sings), std::move(fwd), std::move(bwd));
}

DiagramMap map1(const Diagram& src, const Diagram& tgt, std::vector<std::size_t> mono) {
  Monotone mu;
  mu.source_size = src.length();
  mu.target_size = tgt.length();
  mu.values = std::move(mono);
  const Monotone reg = wraith_dual(mu);
  std::vector<DiagramMap> regs, sings;
  for (std::size_t i = 0; i <= tgt.length(); ++i)
    regs.push_back(DiagramMap::thin(src.regular(reg(i)).generator(), tgt.regular(i).generator()));
  for (std::size_t j = 0; j < src.length(); ++j)
    sings.push_back(DiagramMap::thin(src.singular(j).generator(), tgt.singular(mu(j)).generator()));
  return DiagramMap::zigzag_map(src, tgt, std::move(mu), std::move(regs), std::move(sings));
}

DiagramMap globular_map(const Diagram& src, const Diagram& tgt, std::vector<std::size_t> mono,
                        std::vector<DiagramMap> singular_slices) {
  Monotone mu;
  mu.source_size = src.length();
  mu.target_size = tgt.length();
  mu.values = std::move(mono);
  const Monotone reg = wraith_dual(mu);
  std::vector<DiagramMap> regs;
  for (std::size_t i = 0; i <= tgt.length(); ++i) {
    if (!(src.regular(reg(i)) == tgt.regular(i)))
      raise(ErrorKind::ArgumentError, "globular_map: regular objects do not line up");
    regs.push_back(identity_map(tgt.regular(i)));
  }
  return DiagramMap::zigzag_map(src, tgt, std::move(mu), std::move(regs),
                                std::move(singular_slices));
}

namespace {
const Generator kA{"a", 0};
const Generator kF{"f", 1};
const Generator kM2{"m", 2};
const Generator kC{"c", 0};
const Generator kU{"u", 1};
const Generator kBullet{"b", 0};
}  // namespace

Diagram composite_with_unit() { return diag1({kA, kA, kA}, {kF, kA}); }
Diagram composite_normal_form() { return diag1({kA, kA}, {kF}); }

DiagramMap sample_zigzag_map() {
  Diagram x = diag1({kC, kC, kC, kC}, {kC, kC, kC});
  Diagram y = diag1({kC, kC, kC, kC, kC}, {kC, kC, kC, kC});
  return map1(x, y, {0, 2, 2});
}

Diagram surface_diagram() {
  Diagram r0 = diag1({kA, kA, kA, kA}, {kF, kF, kF});
  Diagram s0 = diag1({kA, kA, kA, kA}, {kF, kM2, kM2});
  Diagram r1 = diag1({kA, kA, kA, kA, kA}, {kF, kF, kF, kF});
  Diagram s1 = diag1({kA, kA, kA, kA}, {kM2, kF, kF});
  Diagram r2 = diag1({kA, kA, kA, kA}, {kF, kF, kF});
  Diagram s2 = diag1({kA, kA, kA, kA, kA}, {kF, kF, kM2, kF});
  Diagram r3 = diag1({kA, kA, kA, kA}, {kF, kF, kF});
  return Diagram::zigzag(
      {r0, r1, r2, r3}, {s0, s1, s2},
      {map1(r0, s0, {0, 1, 2}), map1(r1, s1, {0, 0, 1, 2}), map1(r2, s2, {0, 1, 3})},
      {map1(r1, s0, {0, 1, 1, 2}), map1(r2, s1, {0, 1, 2}), map1(r3, s2, {0, 1, 3})});
}

Diagram essential_target() { return diag1({kC, kC}, {kC}); }

DiagramMap essential_leg_point() {
  Diagram b = Diagram::zigzag({pt(kC)}, {}, {}, {});
  return map1(b, essential_target(), {});
}

DiagramMap essential_leg_fold() {
  Diagram t = diag1({kC, kC, kC}, {kC, kC});
  return map1(t, essential_target(), {0, 0});
}

Sink collapse_sink() {
  Diagram w = Diagram::zigzag({pt(kA)}, {}, {}, {});
  Diagram u1 = diag1({kA, kA}, {kU});
  DiagramMap ins = map1(w, u1, {});
  DiagramMap wid = identity_map(w);
  Diagram t = Diagram::zigzag({w, w, w, w}, {u1, w, w}, {ins, wid, wid}, {ins, wid, wid});
  Diagram a = Diagram::zigzag({w, w, w, w}, {u1, u1, w}, {ins, ins, wid}, {ins, ins, wid});
  Monotone mu;
  mu.source_size = 3;
  mu.target_size = 3;
  mu.values = {0, 0, 2};
  std::vector<DiagramMap> regs{wid, wid, wid, wid};
  std::vector<DiagramMap> sings{identity_map(u1), identity_map(u1), wid};
  DiagramMap f = DiagramMap::zigzag_map(a, t, std::move(mu), std::move(regs), std::move(sings));
  return Sink{t, {f}};
}

namespace {

struct EhParts {
  Generator x, y;
  Diagram p1;          // length-0 1-diagram on the bullet
  Diagram x1, y1, xy1; // 1-diagrams holding the cells
};

EhParts eh_parts(std::size_t cell_dimension) {
  EhParts parts;
  parts.x = Generator{"x", cell_dimension};
  parts.y = Generator{"y", cell_dimension};
  parts.p1 = Diagram::zigzag({pt(kBullet)}, {}, {}, {});
  parts.x1 = diag1({kBullet, kBullet}, {parts.x});
  parts.y1 = diag1({kBullet, kBullet}, {parts.y});
  parts.xy1 = diag1({kBullet, kBullet, kBullet}, {parts.x, parts.y});
  return parts;
}

/// length-1 2-level holding one 1-diagram between trivial boundaries
Diagram two_level(const Diagram& p1, const Diagram& inner) {
  DiagramMap leg = map1(p1, inner, std::vector<std::size_t>(0));
  return Diagram::zigzag({p1, p1}, {inner}, {leg}, {leg});
}

/// length-2 2-level stacking two 1-diagrams
Diagram two_stack(const Diagram& p1, const Diagram& lower, const Diagram& upper) {
  return Diagram::zigzag({p1, p1, p1}, {lower, upper},
                         {map1(p1, lower, {}), map1(p1, upper, {})},
                         {map1(p1, lower, {}), map1(p1, upper, {})});
}

}  // namespace

Diagram eh_typing_x() {
  EhParts p = eh_parts(2);
  return two_level(p.p1, p.x1);
}

Diagram eh_typing_y() {
  EhParts p = eh_parts(2);
  return two_level(p.p1, p.y1);
}

Diagram eh_diagram() {
  EhParts p = eh_parts(2);
  Diagram l = two_stack(p.p1, p.x1, p.y1);
  Diagram r = two_stack(p.p1, p.y1, p.x1);
  Diagram m = two_level(p.p1, p.xy1);
  DiagramMap fwd = globular_map(l, m, {0, 0}, {map1(p.x1, p.xy1, {0}), map1(p.y1, p.xy1, {1})});
  DiagramMap bwd = globular_map(r, m, {0, 0}, {map1(p.y1, p.xy1, {1}), map1(p.x1, p.xy1, {0})});
  return Diagram::zigzag({l, r}, {m}, {fwd}, {bwd});
}

Signature eh_signature() {
  std::vector<Signature::Entry> entries;
  entries.push_back({kBullet, pt(kBullet)});
  entries.push_back({Generator{"x", 2}, eh_typing_x()});
  entries.push_back({Generator{"y", 2}, eh_typing_y()});
  return Signature::make(std::move(entries));
}

namespace {

struct SylParts {
  EhParts eh;         // with 3-cells
  Diagram p2;         // length-0 2-diagram
  Diagram x2, y2;     // 3-cell levels as length-1 2-diagrams
  Diagram sc2;        // x, y side by side in the 1-direction
  Diagram sl2, sr2;   // x, y at distinct 2-heights, both depth orders
  Diagram cxy, cyx;   // 3-diagrams stacking the cells in the 3-direction
  Diagram wl, wc, wr; // length-1 3-diagrams around the braiding moment
};

/// map of length-0 diagrams into a 2-level whose regulars all equal its source
DiagramMap ins2(const Diagram& p2, const Diagram& tgt) {
  std::vector<DiagramMap> regs;
  for (std::size_t i = 0; i <= tgt.length(); ++i) regs.push_back(identity_map(tgt.regular(i)));
  return DiagramMap::zigzag_map(p2, tgt, Monotone::empty(tgt.length()), std::move(regs), {});
}

SylParts syl_parts() {
  SylParts s;
  s.eh = eh_parts(3);
  s.p2 = Diagram::zigzag({s.eh.p1}, {}, {}, {});
  s.x2 = two_level(s.eh.p1, s.eh.x1);
  s.y2 = two_level(s.eh.p1, s.eh.y1);
  s.sc2 = two_level(s.eh.p1, s.eh.xy1);
  s.sl2 = two_stack(s.eh.p1, s.eh.x1, s.eh.y1);
  s.sr2 = two_stack(s.eh.p1, s.eh.y1, s.eh.x1);
  auto three_stack = [&](const Diagram& lower, const Diagram& upper) {
    return Diagram::zigzag({s.p2, s.p2, s.p2}, {lower, upper},
                           {ins2(s.p2, lower), ins2(s.p2, upper)},
                           {ins2(s.p2, lower), ins2(s.p2, upper)});
  };
  auto three_level = [&](const Diagram& inner) {
    return Diagram::zigzag({s.p2, s.p2}, {inner}, {ins2(s.p2, inner)}, {ins2(s.p2, inner)});
  };
  s.cxy = three_stack(s.x2, s.y2);
  s.cyx = three_stack(s.y2, s.x2);
  s.wl = three_level(s.sl2);
  s.wc = three_level(s.sc2);
  s.wr = three_level(s.sr2);
  return s;
}

}  // namespace

Diagram syllepsis_typing_x() {
  SylParts s = syl_parts();
  return Diagram::zigzag({s.p2, s.p2}, {s.x2}, {ins2(s.p2, s.x2)}, {ins2(s.p2, s.x2)});
}

Diagram syllepsis_typing_y() {
  SylParts s = syl_parts();
  return Diagram::zigzag({s.p2, s.p2}, {s.y2}, {ins2(s.p2, s.y2)}, {ins2(s.p2, s.y2)});
}

Diagram syllepsis_diagram() {
  SylParts s = syl_parts();
  // x sits in front (depth 0) of wl; y sits in front of wr
  DiagramMap x2_into_sl2 = globular_map(s.x2, s.sl2, {0}, {identity_map(s.eh.x1)});
  DiagramMap y2_into_sl2 = globular_map(s.y2, s.sl2, {1}, {identity_map(s.eh.y1)});
  DiagramMap x2_into_sr2 = globular_map(s.x2, s.sr2, {1}, {identity_map(s.eh.x1)});
  DiagramMap y2_into_sr2 = globular_map(s.y2, s.sr2, {0}, {identity_map(s.eh.y1)});
  DiagramMap x2_into_sc2 = globular_map(s.x2, s.sc2, {0}, {map1(s.eh.x1, s.eh.xy1, {0})});
  DiagramMap y2_into_sc2 = globular_map(s.y2, s.sc2, {0}, {map1(s.eh.y1, s.eh.xy1, {1})});

  DiagramMap phi_l = globular_map(s.cxy, s.wl, {0, 0}, {x2_into_sl2, y2_into_sl2});
  DiagramMap phi_l_back = globular_map(s.cyx, s.wl, {0, 0}, {y2_into_sl2, x2_into_sl2});
  DiagramMap phi_c = globular_map(s.cxy, s.wc, {0, 0}, {x2_into_sc2, y2_into_sc2});
  DiagramMap phi_c_back = globular_map(s.cyx, s.wc, {0, 0}, {y2_into_sc2, x2_into_sc2});
  DiagramMap phi_r = globular_map(s.cxy, s.wr, {0, 0}, {x2_into_sr2, y2_into_sr2});
  DiagramMap phi_r_back = globular_map(s.cyx, s.wr, {0, 0}, {y2_into_sr2, x2_into_sr2});

  Diagram vl = Diagram::zigzag({s.cxy, s.cyx}, {s.wl}, {phi_l}, {phi_l_back});
  Diagram vc = Diagram::zigzag({s.cxy, s.cyx}, {s.wc}, {phi_c}, {phi_c_back});
  Diagram vr = Diagram::zigzag({s.cxy, s.cyx}, {s.wr}, {phi_r}, {phi_r_back});

  DiagramMap sl2_into_sc2 =
      globular_map(s.sl2, s.sc2, {0, 0}, {map1(s.eh.x1, s.eh.xy1, {0}), map1(s.eh.y1, s.eh.xy1, {1})});
  DiagramMap sr2_into_sc2 =
      globular_map(s.sr2, s.sc2, {0, 0}, {map1(s.eh.y1, s.eh.xy1, {1}), map1(s.eh.x1, s.eh.xy1, {0})});
  DiagramMap wl_into_wc = globular_map(s.wl, s.wc, {0}, {sl2_into_sc2});
  DiagramMap wr_into_wc = globular_map(s.wr, s.wc, {0}, {sr2_into_sc2});
  DiagramMap psi_l = globular_map(vl, vc, {0}, {wl_into_wc});
  DiagramMap psi_r = globular_map(vr, vc, {0}, {wr_into_wc});
  return Diagram::zigzag({vl, vr}, {vc}, {psi_l}, {psi_r});
}

Signature syllepsis_signature() {
  std::vector<Signature::Entry> entries;
  entries.push_back({kBullet, pt(kBullet)});
  entries.push_back({Generator{"x", 3}, syllepsis_typing_x()});
  entries.push_back({Generator{"y", 3}, syllepsis_typing_y()});
  return Signature::make(std::move(entries));
}

}  // namespace zignorm::fixtures
