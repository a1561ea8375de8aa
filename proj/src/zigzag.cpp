#include "zignorm/zigzag.hpp"

#include <atomic>
#include <functional>

#include "zignorm/error.hpp"

namespace zignorm {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  // 64-bit splitmix-style mixing
  v += 0x9e3779b97f4a7c15ull + seed;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
  return v ^ (v >> 31);
}

std::size_t hash_generator(const Generator& g) {
  return hash_combine(std::hash<std::string>{}(g.name), g.dimension);
}

std::size_t hash_monotone(const Monotone& m) {
  std::size_t h = hash_combine(m.source_size, m.target_size);
  for (std::size_t v : m.values) h = hash_combine(h, v);
  return h;
}

std::atomic<bool> g_strict{false};

}  // namespace

void set_strict_validation(bool on) { g_strict.store(on); }
bool strict_validation() { return g_strict.load(); }

bool thin_map_exists(const Generator& a, const Generator& b) {
  return a == b || a.dimension < b.dimension;
}

struct Diagram::Data {
  std::size_t dimension = 0;
  Generator generator;  // dimension 0 only
  std::vector<Diagram> regulars;
  std::vector<Diagram> singulars;
  std::vector<DiagramMap> forward;
  std::vector<DiagramMap> backward;
  std::size_t hash = 0;
};

struct DiagramMap::Data {
  std::size_t dimension = 0;
  Diagram source;
  Diagram target;
  Monotone singular_monotone;  // dimension >= 1
  std::vector<DiagramMap> regular_slices;
  std::vector<DiagramMap> singular_slices;
  std::size_t hash = 0;
};

Diagram Diagram::point(Generator g) {
  auto data = std::make_shared<Data>();
  data->dimension = 0;
  data->hash = hash_combine(0, hash_generator(g));
  data->generator = std::move(g);
  return Diagram(std::move(data));
}

Diagram Diagram::zigzag(std::vector<Diagram> regulars, std::vector<Diagram> singulars,
                        std::vector<DiagramMap> forward, std::vector<DiagramMap> backward) {
  if (regulars.empty()) raise(ErrorKind::ArgumentError, "zigzag needs at least one regular object");
  auto data = std::make_shared<Data>();
  data->dimension = regulars.front().dimension() + 1;
  std::size_t h = hash_combine(1, data->dimension);
  for (const auto& d : regulars) h = hash_combine(h, d.hash());
  for (const auto& d : singulars) h = hash_combine(h, d.hash());
  for (const auto& f : forward) h = hash_combine(h, f.hash());
  for (const auto& f : backward) h = hash_combine(h, f.hash());
  data->hash = h;
  data->regulars = std::move(regulars);
  data->singulars = std::move(singulars);
  data->forward = std::move(forward);
  data->backward = std::move(backward);
  return Diagram(std::move(data));
}

std::size_t Diagram::dimension() const { return data_->dimension; }

std::size_t Diagram::length() const { return data_->singulars.size(); }

const Generator& Diagram::generator() const {
  if (data_->dimension != 0) raise(ErrorKind::ArgumentError, "generator() on positive-dimensional diagram");
  return data_->generator;
}

const std::vector<Diagram>& Diagram::regulars() const { return data_->regulars; }
const std::vector<Diagram>& Diagram::singulars() const { return data_->singulars; }
const std::vector<DiagramMap>& Diagram::forward() const { return data_->forward; }
const std::vector<DiagramMap>& Diagram::backward() const { return data_->backward; }
const Diagram& Diagram::regular(std::size_t i) const { return data_->regulars.at(i); }
const Diagram& Diagram::singular(std::size_t j) const { return data_->singulars.at(j); }
const DiagramMap& Diagram::forward(std::size_t j) const { return data_->forward.at(j); }
const DiagramMap& Diagram::backward(std::size_t j) const { return data_->backward.at(j); }

std::size_t Diagram::hash() const { return data_ ? data_->hash : 0; }

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  if (a.data_->hash != b.data_->hash) return false;
  if (a.data_->dimension != b.data_->dimension) return false;
  if (a.data_->dimension == 0) return a.data_->generator == b.data_->generator;
  return a.data_->regulars == b.data_->regulars && a.data_->singulars == b.data_->singulars &&
         a.data_->forward == b.data_->forward && a.data_->backward == b.data_->backward;
}

DiagramMap DiagramMap::thin(Generator source, Generator target) {
  auto data = std::make_shared<Data>();
  data->dimension = 0;
  data->hash = hash_combine(2, hash_combine(hash_generator(source), hash_generator(target)));
  data->source = Diagram::point(std::move(source));
  data->target = Diagram::point(std::move(target));
  return DiagramMap(std::move(data));
}

DiagramMap DiagramMap::zigzag_map(Diagram source, Diagram target, Monotone singular_monotone,
                                  std::vector<DiagramMap> regular_slices,
                                  std::vector<DiagramMap> singular_slices) {
  auto data = std::make_shared<Data>();
  data->dimension = source.dimension();
  std::size_t h = hash_combine(3, data->dimension);
  h = hash_combine(h, source.hash());
  h = hash_combine(h, target.hash());
  h = hash_combine(h, hash_monotone(singular_monotone));
  for (const auto& f : regular_slices) h = hash_combine(h, f.hash());
  for (const auto& f : singular_slices) h = hash_combine(h, f.hash());
  data->hash = h;
  data->source = std::move(source);
  data->target = std::move(target);
  data->singular_monotone = std::move(singular_monotone);
  data->regular_slices = std::move(regular_slices);
  data->singular_slices = std::move(singular_slices);
  return DiagramMap(std::move(data));
}

std::size_t DiagramMap::dimension() const { return data_->dimension; }
const Diagram& DiagramMap::source() const { return data_->source; }
const Diagram& DiagramMap::target() const { return data_->target; }

const Monotone& DiagramMap::singular_monotone() const { return data_->singular_monotone; }
Monotone DiagramMap::regular_monotone() const { return wraith_dual(data_->singular_monotone); }
const std::vector<DiagramMap>& DiagramMap::regular_slices() const { return data_->regular_slices; }
const std::vector<DiagramMap>& DiagramMap::singular_slices() const { return data_->singular_slices; }
const DiagramMap& DiagramMap::regular_slice(std::size_t i) const { return data_->regular_slices.at(i); }
const DiagramMap& DiagramMap::singular_slice(std::size_t j) const { return data_->singular_slices.at(j); }

const Generator& DiagramMap::source_generator() const { return data_->source.generator(); }
const Generator& DiagramMap::target_generator() const { return data_->target.generator(); }

std::size_t DiagramMap::hash() const { return data_ ? data_->hash : 0; }

bool operator==(const DiagramMap& a, const DiagramMap& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  if (a.data_->hash != b.data_->hash) return false;
  if (a.data_->dimension != b.data_->dimension) return false;
  if (!(a.data_->source == b.data_->source) || !(a.data_->target == b.data_->target)) return false;
  if (a.data_->dimension == 0) return true;
  return a.data_->singular_monotone == b.data_->singular_monotone &&
         a.data_->regular_slices == b.data_->regular_slices &&
         a.data_->singular_slices == b.data_->singular_slices;
}

namespace {

std::string at(const std::string& prefix, const std::string& step) {
  return prefix.empty() ? step : prefix + " / " + step;
}

ValidationReport validate_map_at(const DiagramMap& f, const std::string& path);

ValidationReport validate_diagram_at(const Diagram& d, const std::string& path) {
  if (d.is_null()) return ValidationReport::bad(path, "null diagram");
  if (d.dimension() == 0) {
    if (d.generator().name.empty()) return ValidationReport::bad(path, "generator name is empty");
    return ValidationReport::good();
  }
  const std::size_t k = d.length();
  if (d.regulars().size() != k + 1)
    return ValidationReport::bad(path, "zigzag needs length+1 regular objects");
  if (d.forward().size() != k || d.backward().size() != k)
    return ValidationReport::bad(path, "zigzag needs one forward and one backward map per height");
  for (std::size_t i = 0; i <= k; ++i) {
    if (d.regular(i).is_null() || d.regular(i).dimension() + 1 != d.dimension())
      return ValidationReport::bad(at(path, "regular[" + std::to_string(i) + "]"),
                                   "object has wrong dimension");
    if (auto r = validate_diagram_at(d.regular(i), at(path, "regular[" + std::to_string(i) + "]")); !r)
      return r;
  }
  for (std::size_t j = 0; j < k; ++j) {
    const std::string height = std::to_string(j);
    if (d.singular(j).is_null() || d.singular(j).dimension() + 1 != d.dimension())
      return ValidationReport::bad(at(path, "singular[" + height + "]"), "object has wrong dimension");
    if (auto r = validate_diagram_at(d.singular(j), at(path, "singular[" + height + "]")); !r) return r;
    const DiagramMap& fwd = d.forward(j);
    if (fwd.is_null() || !(fwd.source() == d.regular(j)) || !(fwd.target() == d.singular(j)))
      return ValidationReport::bad(at(path, "forward[" + height + "]"), "cospan leg has wrong endpoints");
    if (auto r = validate_map_at(fwd, at(path, "forward[" + height + "]")); !r) return r;
    const DiagramMap& bwd = d.backward(j);
    if (bwd.is_null() || !(bwd.source() == d.regular(j + 1)) || !(bwd.target() == d.singular(j)))
      return ValidationReport::bad(at(path, "backward[" + height + "]"), "cospan leg has wrong endpoints");
    if (auto r = validate_map_at(bwd, at(path, "backward[" + height + "]")); !r) return r;
  }
  return ValidationReport::good();
}

ValidationReport validate_map_at(const DiagramMap& f, const std::string& path) {
  if (f.is_null()) return ValidationReport::bad(path, "null map");
  if (f.source().is_null() || f.target().is_null())
    return ValidationReport::bad(path, "map with null endpoint");
  if (f.source().dimension() != f.dimension() || f.target().dimension() != f.dimension())
    return ValidationReport::bad(path, "endpoint dimensions disagree with map dimension");
  if (f.dimension() == 0) {
    if (!thin_map_exists(f.source_generator(), f.target_generator()))
      return ValidationReport::bad(
          path, "no base map " + f.source_generator().name + " -> " + f.target_generator().name);
    return ValidationReport::good();
  }
  const Diagram& x = f.source();
  const Diagram& y = f.target();
  const Monotone& mono = f.singular_monotone();
  if (!mono.well_formed() || mono.source_size != x.length() || mono.target_size != y.length())
    return ValidationReport::bad(path, "singular monotone does not match endpoint lengths");
  const Monotone reg = wraith_dual(mono);
  if (f.regular_slices().size() != y.length() + 1)
    return ValidationReport::bad(path, "regular slice count must be target length + 1");
  if (f.singular_slices().size() != x.length())
    return ValidationReport::bad(path, "singular slice count must be source length");
  for (std::size_t i = 0; i <= y.length(); ++i) {
    const std::string where = at(path, "regular slice " + std::to_string(i));
    const DiagramMap& slice = f.regular_slice(i);
    if (slice.is_null()) return ValidationReport::bad(where, "null slice");
    if (!(slice.source() == x.regular(reg(i))) || !(slice.target() == y.regular(i)))
      return ValidationReport::bad(where, "slice endpoints disagree with monotone data");
    if (auto r = validate_map_at(slice, where); !r) return r;
  }
  for (std::size_t j = 0; j < x.length(); ++j) {
    const std::string where = at(path, "singular slice " + std::to_string(j));
    const DiagramMap& slice = f.singular_slice(j);
    if (slice.is_null()) return ValidationReport::bad(where, "null slice");
    if (!(slice.source() == x.singular(j)) || !(slice.target() == y.singular(mono(j))))
      return ValidationReport::bad(where, "slice endpoints disagree with monotone data");
    if (auto r = validate_map_at(slice, where); !r) return r;
  }
  // The commutation laws: boundary squares and interior triangles at
  // nonempty preimages, the wedge at empty ones.
  for (std::size_t i = 0; i < y.length(); ++i) {
    const std::string height = "target height " + std::to_string(i);
    auto [p, q] = preimage_interval(mono, i);
    if (p < q) {
      if (!(compose_maps(x.forward(p), f.singular_slice(p)) ==
            compose_maps(f.regular_slice(i), y.forward(i))))
        return ValidationReport::bad(at(path, height), "left boundary square does not commute");
      if (!(compose_maps(x.backward(q - 1), f.singular_slice(q - 1)) ==
            compose_maps(f.regular_slice(i + 1), y.backward(i))))
        return ValidationReport::bad(at(path, height), "right boundary square does not commute");
      for (std::size_t j = p; j + 1 < q; ++j) {
        if (!(compose_maps(x.backward(j), f.singular_slice(j)) ==
              compose_maps(x.forward(j + 1), f.singular_slice(j + 1))))
          return ValidationReport::bad(at(path, height),
                                       "interior triangle at source height " + std::to_string(j) +
                                           " does not commute");
      }
    } else {
      if (!(compose_maps(f.regular_slice(i), y.forward(i)) ==
            compose_maps(f.regular_slice(i + 1), y.backward(i))))
        return ValidationReport::bad(at(path, height), "wedge does not commute");
    }
  }
  return ValidationReport::good();
}

}  // namespace

ValidationReport validate_diagram(const Diagram& d) { return validate_diagram_at(d, ""); }

ValidationReport validate_map(const DiagramMap& f) {
  if (auto r = validate_diagram_at(f.is_null() ? Diagram() : f.source(), "source"); !r) return r;
  if (auto r = validate_diagram_at(f.is_null() ? Diagram() : f.target(), "target"); !r) return r;
  return validate_map_at(f, "");
}

ValidationReport validate_sink(const Sink& s) {
  if (auto r = validate_diagram_at(s.target, "target"); !r) return r;
  for (std::size_t i = 0; i < s.legs.size(); ++i) {
    const std::string where = "leg " + std::to_string(i);
    if (s.legs[i].is_null()) return ValidationReport::bad(where, "null leg");
    if (!(s.legs[i].target() == s.target))
      return ValidationReport::bad(where, "leg target differs from sink target");
    if (auto r = validate_map_at(s.legs[i], where); !r) return r;
  }
  return ValidationReport::good();
}

DiagramMap compose_maps(const DiagramMap& f, const DiagramMap& g) {
  if (f.is_null() || g.is_null()) raise(ErrorKind::CompositionError, "compose_maps: null map");
  if (!(f.target() == g.source()))
    raise(ErrorKind::CompositionError, "compose_maps: endpoints do not match");
  if (f.dimension() == 0) return DiagramMap::thin(f.source_generator(), g.target_generator());
  const Monotone mono = compose(f.singular_monotone(), g.singular_monotone());
  const Monotone g_reg = g.regular_monotone();
  std::vector<DiagramMap> regs;
  regs.reserve(g.target().length() + 1);
  for (std::size_t i = 0; i <= g.target().length(); ++i)
    regs.push_back(compose_maps(f.regular_slice(g_reg(i)), g.regular_slice(i)));
  std::vector<DiagramMap> sings;
  sings.reserve(f.source().length());
  for (std::size_t j = 0; j < f.source().length(); ++j)
    sings.push_back(compose_maps(f.singular_slice(j), g.singular_slice(f.singular_monotone()(j))));
  return DiagramMap::zigzag_map(f.source(), g.target(), mono, std::move(regs), std::move(sings));
}

DiagramMap identity_map(const Diagram& d) {
  if (d.is_null()) raise(ErrorKind::ArgumentError, "identity_map: null diagram");
  if (d.dimension() == 0) return DiagramMap::thin(d.generator(), d.generator());
  std::vector<DiagramMap> regs;
  regs.reserve(d.length() + 1);
  for (const auto& r : d.regulars()) regs.push_back(identity_map(r));
  std::vector<DiagramMap> sings;
  sings.reserve(d.length());
  for (const auto& s : d.singulars()) sings.push_back(identity_map(s));
  return DiagramMap::zigzag_map(d, d, Monotone::identity(d.length()), std::move(regs),
                                std::move(sings));
}

bool is_isomorphism(const DiagramMap& f) {
  if (f.dimension() == 0) return f.source_generator() == f.target_generator();
  if (!f.singular_monotone().is_identity()) return false;
  for (const auto& s : f.regular_slices())
    if (!is_isomorphism(s)) return false;
  for (const auto& s : f.singular_slices())
    if (!is_isomorphism(s)) return false;
  return true;
}

namespace {
const Generator kShapePoint{"pt", 0};
}

Diagram project_shape(const Diagram& d) {
  if (d.dimension() == 0) return Diagram::point(kShapePoint);
  std::vector<Diagram> regs, sings;
  std::vector<DiagramMap> fwd, bwd;
  for (const auto& r : d.regulars()) regs.push_back(project_shape(r));
  for (const auto& s : d.singulars()) sings.push_back(project_shape(s));
  for (const auto& m : d.forward()) fwd.push_back(project_shape(m));
  for (const auto& m : d.backward()) bwd.push_back(project_shape(m));
  return Diagram::zigzag(std::move(regs), std::move(sings), std::move(fwd), std::move(bwd));
}

DiagramMap project_shape(const DiagramMap& f) {
  if (f.dimension() == 0) return DiagramMap::thin(kShapePoint, kShapePoint);
  std::vector<DiagramMap> regs, sings;
  for (const auto& s : f.regular_slices()) regs.push_back(project_shape(s));
  for (const auto& s : f.singular_slices()) sings.push_back(project_shape(s));
  return DiagramMap::zigzag_map(project_shape(f.source()), project_shape(f.target()),
                                f.singular_monotone(), std::move(regs), std::move(sings));
}

Diagram lift_to_dimension(Diagram d, std::size_t dimension) {
  if (d.dimension() > dimension)
    raise(ErrorKind::ArgumentError, "lift_to_dimension: diagram already exceeds target dimension");
  while (d.dimension() < dimension) d = Diagram::zigzag({d}, {}, {}, {});
  return d;
}

namespace {
void collect(const Diagram& d, std::vector<Generator>& out) {
  if (d.dimension() == 0) {
    for (const auto& g : out)
      if (g == d.generator()) return;
    out.push_back(d.generator());
    return;
  }
  for (const auto& r : d.regulars()) collect(r, out);
  for (const auto& s : d.singulars()) collect(s, out);
}
}  // namespace

std::vector<Generator> collect_generators(const Diagram& d) {
  std::vector<Generator> out;
  collect(d, out);
  return out;
}

}  // namespace zignorm
