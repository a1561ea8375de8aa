#include "zignorm/normalisation.hpp"

#include <utility>

#include "zignorm/error.hpp"

namespace zignorm {

namespace {

bool is_identity_cospan(const Diagram& p, std::size_t h) {
  return is_isomorphism(p.forward(h)) && is_isomorphism(p.backward(h));
}

}  // namespace

NormalisationResult normalise_relative(const Sink& sink) {
  const Diagram& t = sink.target;
  if (t.is_null()) raise(ErrorKind::ArgumentError, "normalise_relative: null target");
  for (const auto& leg : sink.legs)
    if (leg.is_null() || !(leg.target() == t))
      raise(ErrorKind::ArgumentError, "normalise_relative: leg does not point at the sink target");
  if (strict_validation()) {
    if (auto r = validate_sink(sink); !r)
      raise(ErrorKind::ArgumentError, "normalise_relative: invalid sink at " + r.path + ": " + r.message);
  }

  if (t.dimension() == 0) {
    NormalisationResult out;
    out.normal_form = t;
    out.normaliser = identity_map(t);
    out.simple_part = out.normaliser;
    out.parallel_part = out.normaliser;
    out.witness = is_degeneracy(out.normaliser);
    out.factorisations = sink.legs;
    return out;
  }

  const std::size_t len = t.length();
  const std::size_t nlegs = sink.legs.size();
  std::vector<Monotone> leg_mono(nlegs), leg_reg(nlegs);
  for (std::size_t i = 0; i < nlegs; ++i) {
    leg_mono[i] = sink.legs[i].singular_monotone();
    leg_reg[i] = wraith_dual(leg_mono[i]);
  }

  // step 1: normalise every regular height against the regular slices
  std::vector<NormalisationResult> reg(len + 1);
  for (std::size_t h = 0; h <= len; ++h) {
    Sink level{t.regular(h), {}};
    level.legs.reserve(nlegs);
    for (std::size_t i = 0; i < nlegs; ++i) level.legs.push_back(sink.legs[i].regular_slice(h));
    reg[h] = normalise_relative(level);
  }

  // step 2: normalise every singular height against the cospan composites
  // and the incoming singular slices
  std::vector<NormalisationResult> sing(len);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incoming(len);
  for (std::size_t h = 0; h < len; ++h) {
    Sink level{t.singular(h), {}};
    level.legs.push_back(compose_maps(reg[h].normaliser, t.forward(h)));
    level.legs.push_back(compose_maps(reg[h + 1].normaliser, t.backward(h)));
    for (std::size_t i = 0; i < nlegs; ++i) {
      auto [p, q] = preimage_interval(leg_mono[i], h);
      for (std::size_t j = p; j < q; ++j) {
        incoming[h].emplace_back(i, j);
        level.legs.push_back(sink.legs[i].singular_slice(j));
      }
    }
    sing[h] = normalise_relative(level);
  }

  // step 3: assemble the intermediate object P with its parallel degeneracy
  std::vector<Diagram> p_regs, p_sings;
  std::vector<DiagramMap> p_fwd, p_bwd;
  p_regs.reserve(len + 1);
  for (std::size_t h = 0; h <= len; ++h) p_regs.push_back(reg[h].normal_form);
  p_sings.reserve(len);
  for (std::size_t h = 0; h < len; ++h) {
    p_sings.push_back(sing[h].normal_form);
    p_fwd.push_back(sing[h].factorisations[0]);
    p_bwd.push_back(sing[h].factorisations[1]);
  }
  Diagram p = Diagram::zigzag(std::move(p_regs), std::move(p_sings), std::move(p_fwd),
                              std::move(p_bwd));

  std::vector<DiagramMap> dp_regs, dp_sings;
  dp_regs.reserve(len + 1);
  for (std::size_t h = 0; h <= len; ++h) dp_regs.push_back(reg[h].normaliser);
  dp_sings.reserve(len);
  for (std::size_t h = 0; h < len; ++h) dp_sings.push_back(sing[h].normaliser);
  DiagramMap d_p = DiagramMap::zigzag_map(p, t, Monotone::identity(len), std::move(dp_regs),
                                          std::move(dp_sings));

  // a parallel degeneracy keeps the incoming maps' singular monotones
  std::vector<DiagramMap> into_p(nlegs);
  for (std::size_t i = 0; i < nlegs; ++i) {
    const Diagram& a = sink.legs[i].source();
    std::vector<DiagramMap> regs(len + 1), sings(a.length());
    for (std::size_t h = 0; h <= len; ++h) regs[h] = reg[h].factorisations[i];
    for (std::size_t h = 0; h < len; ++h) {
      for (std::size_t r = 0; r < incoming[h].size(); ++r) {
        auto [leg_index, source_height] = incoming[h][r];
        if (leg_index == i) sings[source_height] = sing[h].factorisations[2 + r];
      }
    }
    into_p[i] = DiagramMap::zigzag_map(a, p, leg_mono[i], std::move(regs), std::move(sings));
  }

  // step 4: drop identity cospans whose singular object no leg hits
  std::vector<std::size_t> kept;
  for (std::size_t h = 0; h < len; ++h) {
    bool hit = false;
    for (std::size_t i = 0; i < nlegs && !hit; ++i) hit = leg_mono[i].hits(h);
    if (hit || !is_identity_cospan(p, h))
      kept.push_back(h);
  }

  NormalisationResult out;
  if (kept.size() == len) {
    out.normal_form = p;
    out.simple_part = identity_map(p);
    out.parallel_part = d_p;
    out.normaliser = d_p;
    out.factorisations = std::move(into_p);
  } else {
    Monotone positions;
    positions.source_size = kept.size();
    positions.target_size = len;
    positions.values = kept;
    const Monotone pos_reg = wraith_dual(positions);
    std::vector<Diagram> n_regs, n_sings;
    std::vector<DiagramMap> n_fwd, n_bwd;
    for (std::size_t r = 0; r <= kept.size(); ++r)
      n_regs.push_back(p.regular(preimage_interval(pos_reg, r).first));
    for (std::size_t r = 0; r < kept.size(); ++r) {
      n_sings.push_back(p.singular(kept[r]));
      n_fwd.push_back(p.forward(kept[r]));
      n_bwd.push_back(p.backward(kept[r]));
    }
    Diagram n = Diagram::zigzag(std::move(n_regs), std::move(n_sings), std::move(n_fwd),
                                std::move(n_bwd));
    Insertion ins = insert_identity_cospans(n, positions);
    if (!(ins.target == p))
      raise(ErrorKind::ValidationError, "normalise_relative: simple part does not reinsert P");
    out.normal_form = std::move(n);
    out.simple_part = ins.map;
    out.parallel_part = d_p;
    out.normaliser = compose_maps(ins.map, d_p);
    out.factorisations.reserve(nlegs);
    for (std::size_t i = 0; i < nlegs; ++i) {
      auto z = factor_through_degeneracy(into_p[i], ins.map);
      if (!z)
        raise(ErrorKind::ValidationError,
              "normalise_relative: removed a height inside a leg's image");
      out.factorisations.push_back(std::move(*z));
    }
  }
  out.witness = is_degeneracy(out.normaliser);
  if (!out.witness)
    raise(ErrorKind::ValidationError, "normalise_relative: normaliser is not a degeneracy");
  if (strict_validation()) {
    if (auto r = validate_diagram(out.normal_form); !r)
      raise(ErrorKind::ValidationError, "normalise_relative: normal form invalid at " + r.path);
    for (std::size_t i = 0; i < nlegs; ++i)
      if (!(compose_maps(out.factorisations[i], out.normaliser) == sink.legs[i]))
        raise(ErrorKind::ValidationError, "normalise_relative: factorisation does not recompose");
  }
  return out;
}

NormalisationResult normalise(const Diagram& t) { return normalise_relative(Sink{t, {}}); }

}  // namespace zignorm
