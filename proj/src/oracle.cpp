#include "zignorm/oracle.hpp"

#include <unordered_map>
#include <utility>

#include "zignorm/error.hpp"

namespace zignorm {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Diagram, Diagram>& p) const {
    return p.first.hash() * 0x9e3779b97f4a7c15ull + p.second.hash();
  }
};

void check_sizes(const Diagram& d, const OracleBudget& budget) {
  if (d.dimension() > budget.max_dimension)
    raise(ErrorKind::BudgetExceeded, "oracle: dimension exceeds budget");
  if (d.dimension() == 0) return;
  if (d.length() > budget.max_length)
    raise(ErrorKind::BudgetExceeded, "oracle: level length exceeds budget");
  for (const auto& r : d.regulars()) check_sizes(r, budget);
  for (const auto& s : d.singulars()) check_sizes(s, budget);
}

void check_budget(const Diagram& d, const OracleBudget& budget) {
  check_sizes(d, budget);
  if (collect_generators(d).size() > budget.max_generators)
    raise(ErrorKind::BudgetExceeded, "oracle: generator count exceeds budget");
}

/// Equation checks only; assumes endpoints and slice validity by construction.
bool equations_hold(const DiagramMap& f) {
  const Diagram& x = f.source();
  const Diagram& y = f.target();
  const Monotone& mono = f.singular_monotone();
  for (std::size_t i = 0; i < y.length(); ++i) {
    auto [p, q] = preimage_interval(mono, i);
    if (p < q) {
      if (!(compose_maps(x.forward(p), f.singular_slice(p)) ==
            compose_maps(f.regular_slice(i), y.forward(i))))
        return false;
      if (!(compose_maps(x.backward(q - 1), f.singular_slice(q - 1)) ==
            compose_maps(f.regular_slice(i + 1), y.backward(i))))
        return false;
      for (std::size_t j = p; j + 1 < q; ++j)
        if (!(compose_maps(x.backward(j), f.singular_slice(j)) ==
              compose_maps(x.forward(j + 1), f.singular_slice(j + 1))))
          return false;
    } else {
      if (!(compose_maps(f.regular_slice(i), y.forward(i)) ==
            compose_maps(f.regular_slice(i + 1), y.backward(i))))
        return false;
    }
  }
  return true;
}

class Enumerator {
 public:
  explicit Enumerator(const OracleBudget& budget) : budget_(budget) {}

  void tick() {
    if (++steps_ > budget_.max_steps)
      raise(ErrorKind::BudgetExceeded, "oracle: step budget exhausted");
  }

  const std::vector<DiagramMap>& maps(const Diagram& x, const Diagram& y) {
    auto key = std::make_pair(x, y);
    auto it = map_cache_.find(key);
    if (it != map_cache_.end()) return it->second;
    std::vector<DiagramMap> out;
    if (x.dimension() == 0) {
      if (thin_map_exists(x.generator(), y.generator()))
        out.push_back(DiagramMap::thin(x.generator(), y.generator()));
    } else {
      for (const Monotone& mu : enumerate_monotones(x.length(), y.length())) {
        const Monotone reg = wraith_dual(mu);
        std::vector<const std::vector<DiagramMap>*> reg_opts, sing_opts;
        bool feasible = true;
        for (std::size_t i = 0; i <= y.length() && feasible; ++i) {
          reg_opts.push_back(&maps(x.regular(reg(i)), y.regular(i)));
          feasible = !reg_opts.back()->empty();
        }
        for (std::size_t j = 0; j < x.length() && feasible; ++j) {
          sing_opts.push_back(&maps(x.singular(j), y.singular(mu(j))));
          feasible = !sing_opts.back()->empty();
        }
        if (!feasible) continue;
        std::vector<std::size_t> pick(reg_opts.size() + sing_opts.size(), 0);
        while (true) {
          tick();
          std::vector<DiagramMap> regs, sings;
          for (std::size_t i = 0; i < reg_opts.size(); ++i) regs.push_back((*reg_opts[i])[pick[i]]);
          for (std::size_t j = 0; j < sing_opts.size(); ++j)
            sings.push_back((*sing_opts[j])[pick[reg_opts.size() + j]]);
          DiagramMap candidate =
              DiagramMap::zigzag_map(x, y, mu, std::move(regs), std::move(sings));
          if (equations_hold(candidate)) out.push_back(std::move(candidate));
          // advance the odometer
          std::size_t k = 0;
          for (; k < pick.size(); ++k) {
            const std::size_t limit =
                k < reg_opts.size() ? reg_opts[k]->size() : sing_opts[k - reg_opts.size()]->size();
            if (++pick[k] < limit) break;
            pick[k] = 0;
          }
          if (k == pick.size()) break;
        }
      }
    }
    return map_cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  /// The unique leg making the slice square commute, if any.
  std::optional<DiagramMap> parallel_leg(const DegeneracyEntry& er, const DegeneracyEntry& es,
                                         const DiagramMap& t_leg) {
    DiagramMap need = compose_maps(er.map, t_leg);
    for (const DiagramMap& leg : maps(er.source, es.source)) {
      tick();
      if (compose_maps(leg, es.map) == need) return leg;
    }
    return std::nullopt;
  }

  const std::vector<DegeneracyEntry>& degeneracies(const Diagram& t) {
    auto it = deg_cache_.find(t);
    if (it != deg_cache_.end()) return it->second;
    std::vector<DegeneracyEntry> out;
    if (t.dimension() == 0) {
      out.push_back({t, identity_map(t)});
    } else {
      const std::size_t len = t.length();
      std::vector<const std::vector<DegeneracyEntry>*> reg_opts, sing_opts;
      for (std::size_t i = 0; i <= len; ++i) reg_opts.push_back(&degeneracies(t.regular(i)));
      for (std::size_t h = 0; h < len; ++h) sing_opts.push_back(&degeneracies(t.singular(h)));

      // per height: the legs compatible with each (regular, singular) choice
      struct Legs {
        std::vector<std::optional<DiagramMap>> fwd;  // [ir * |Ds| + is]
        std::vector<std::optional<DiagramMap>> bwd;  // [ir1 * |Ds| + is]
      };
      std::vector<Legs> tables(len);
      for (std::size_t h = 0; h < len; ++h) {
        const auto& ds = *sing_opts[h];
        tables[h].fwd.resize(reg_opts[h]->size() * ds.size());
        tables[h].bwd.resize(reg_opts[h + 1]->size() * ds.size());
        for (std::size_t ir = 0; ir < reg_opts[h]->size(); ++ir)
          for (std::size_t is = 0; is < ds.size(); ++is)
            tables[h].fwd[ir * ds.size() + is] =
                parallel_leg((*reg_opts[h])[ir], ds[is], t.forward(h));
        for (std::size_t ir = 0; ir < reg_opts[h + 1]->size(); ++ir)
          for (std::size_t is = 0; is < ds.size(); ++is)
            tables[h].bwd[ir * ds.size() + is] =
                parallel_leg((*reg_opts[h + 1])[ir], ds[is], t.backward(h));
      }

      // depth-first assembly: alternate singular and next-regular choices,
      // pruning as soon as a cospan has no compatible leg
      std::vector<std::size_t> reg_pick(len + 1), sing_pick(len);
      auto emit = [&]() {
        tick();
        std::vector<Diagram> p_regs, p_sings;
        std::vector<DiagramMap> e_regs, e_sings, fwd(len), bwd(len);
        for (std::size_t i = 0; i <= len; ++i) {
          p_regs.push_back((*reg_opts[i])[reg_pick[i]].source);
          e_regs.push_back((*reg_opts[i])[reg_pick[i]].map);
        }
        for (std::size_t h = 0; h < len; ++h) {
          const auto& ds = *sing_opts[h];
          p_sings.push_back(ds[sing_pick[h]].source);
          e_sings.push_back(ds[sing_pick[h]].map);
          fwd[h] = *tables[h].fwd[reg_pick[h] * ds.size() + sing_pick[h]];
          bwd[h] = *tables[h].bwd[reg_pick[h + 1] * ds.size() + sing_pick[h]];
        }
        Diagram p = Diagram::zigzag(p_regs, p_sings, fwd, bwd);
        DiagramMap parallel =
            DiagramMap::zigzag_map(p, t, Monotone::identity(len), e_regs, e_sings);
        std::vector<std::size_t> removable;
        for (std::size_t h = 0; h < len; ++h)
          if (p.forward(h) == identity_map(p.regular(h)) &&
              p.backward(h) == identity_map(p.regular(h + 1)))
            removable.push_back(h);
        const std::size_t subsets = std::size_t{1} << removable.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
          tick();
          std::vector<bool> removed(len, false);
          for (std::size_t b = 0; b < removable.size(); ++b)
            if (mask & (std::size_t{1} << b)) removed[removable[b]] = true;
          Monotone positions;
          positions.target_size = len;
          for (std::size_t h = 0; h < len; ++h)
            if (!removed[h]) positions.values.push_back(h);
          positions.source_size = positions.values.size();
          const Monotone pos_reg = wraith_dual(positions);
          std::vector<Diagram> n_regs, n_sings;
          std::vector<DiagramMap> n_fwd, n_bwd;
          std::vector<DiagramMap> i_regs, i_sings;
          for (std::size_t r = 0; r <= positions.source_size; ++r)
            n_regs.push_back(p.regular(preimage_interval(pos_reg, r).first));
          for (std::size_t r = 0; r < positions.source_size; ++r) {
            const std::size_t h = positions(r);
            n_sings.push_back(p.singular(h));
            n_fwd.push_back(p.forward(h));
            n_bwd.push_back(p.backward(h));
            i_sings.push_back(identity_map(p.singular(h)));
          }
          for (std::size_t i = 0; i <= len; ++i) i_regs.push_back(identity_map(p.regular(i)));
          Diagram n = Diagram::zigzag(n_regs, n_sings, n_fwd, n_bwd);
          DiagramMap simple = DiagramMap::zigzag_map(n, p, positions, i_regs, i_sings);
          DiagramMap composite = compose_maps(simple, parallel);
          bool duplicate = false;
          for (const auto& seen : out)
            if (seen.map == composite) {
              duplicate = true;
              break;
            }
          if (!duplicate) out.push_back({std::move(n), std::move(composite)});
        }
      };
      auto assemble = [&](auto&& self, std::size_t h) -> void {
        if (h == len) {
          emit();
          return;
        }
        const auto& ds = *sing_opts[h];
        for (std::size_t is = 0; is < ds.size(); ++is) {
          if (!tables[h].fwd[reg_pick[h] * ds.size() + is]) continue;
          sing_pick[h] = is;
          for (std::size_t ir = 0; ir < reg_opts[h + 1]->size(); ++ir) {
            if (!tables[h].bwd[ir * ds.size() + is]) continue;
            reg_pick[h + 1] = ir;
            self(self, h + 1);
          }
        }
      };
      for (std::size_t ir = 0; ir < reg_opts[0]->size(); ++ir) {
        reg_pick[0] = ir;
        assemble(assemble, 0);
      }
    }
    return deg_cache_.emplace(t, std::move(out)).first->second;
  }

  std::optional<DiagramMap> factor(const DiagramMap& h, const DiagramMap& e) {
    for (const DiagramMap& z : maps(h.source(), e.source())) {
      tick();
      if (compose_maps(z, e) == h) return z;
    }
    return std::nullopt;
  }

 private:
  OracleBudget budget_;
  std::size_t steps_ = 0;
  std::unordered_map<std::pair<Diagram, Diagram>, std::vector<DiagramMap>, PairHash> map_cache_;
  std::unordered_map<Diagram, std::vector<DegeneracyEntry>> deg_cache_;
};

}  // namespace

std::vector<DiagramMap> oracle_enumerate_maps(const Diagram& x, const Diagram& y,
                                              const OracleBudget& budget) {
  check_budget(x, budget);
  check_budget(y, budget);
  Enumerator en(budget);
  return en.maps(x, y);
}

std::vector<DegeneracyEntry> oracle_enumerate_degeneracies(const Diagram& t,
                                                           const OracleBudget& budget) {
  check_budget(t, budget);
  Enumerator en(budget);
  return en.degeneracies(t);
}

std::optional<DiagramMap> oracle_factorisation(const DiagramMap& h, const DiagramMap& e,
                                               const OracleBudget& budget) {
  Enumerator en(budget);
  return en.factor(h, e);
}

DegeneracyEntry oracle_meet(const DiagramMap& f, const DiagramMap& g, const OracleBudget& budget) {
  if (!(f.target() == g.target()))
    raise(ErrorKind::ArgumentError, "oracle_meet: maps must share their target");
  check_budget(f.target(), budget);
  Enumerator en(budget);
  std::vector<DegeneracyEntry> lower;
  for (const auto& e : en.degeneracies(f.target()))
    if (en.factor(e.map, f) && en.factor(e.map, g)) lower.push_back(e);
  for (const auto& candidate : lower) {
    bool greatest = true;
    for (const auto& other : lower)
      if (!en.factor(other.map, candidate.map)) {
        greatest = false;
        break;
      }
    if (greatest) return candidate;
  }
  raise(ErrorKind::ValidationError, "oracle_meet: no greatest lower bound found");
}

OracleResult oracle_normalise(const Sink& sink, const OracleBudget& budget) {
  const Diagram& t = sink.target;
  check_budget(t, budget);
  for (const auto& leg : sink.legs) {
    if (leg.is_null() || !(leg.target() == t))
      raise(ErrorKind::ArgumentError, "oracle_normalise: leg does not point at the sink target");
    check_budget(leg.source(), budget);
  }
  Enumerator en(budget);
  struct Filtered {
    const DegeneracyEntry* entry;
    std::vector<DiagramMap> factorisations;
  };
  std::vector<Filtered> admitted;
  for (const auto& e : en.degeneracies(t)) {
    Filtered f{&e, {}};
    bool ok = true;
    for (const auto& leg : sink.legs) {
      auto z = en.factor(leg, e.map);
      if (!z) {
        ok = false;
        break;
      }
      f.factorisations.push_back(std::move(*z));
    }
    if (ok) admitted.push_back(std::move(f));
  }
  if (admitted.empty())
    raise(ErrorKind::ValidationError, "oracle_normalise: identity must always be admitted");
  const Filtered* minimum = nullptr;
  for (const auto& candidate : admitted) {
    bool least = true;
    for (const auto& other : admitted)
      if (!en.factor(candidate.entry->map, other.entry->map)) {
        least = false;
        break;
      }
    if (least) {
      if (minimum)
        raise(ErrorKind::ValidationError, "oracle_normalise: smallest element is not unique");
      minimum = &candidate;
    }
  }
  if (!minimum) raise(ErrorKind::ValidationError, "oracle_normalise: poset has no smallest element");
  return {minimum->entry->source, minimum->entry->map, minimum->factorisations};
}

}  // namespace zignorm
