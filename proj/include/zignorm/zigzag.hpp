#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "zignorm/ordmaps.hpp"

namespace zignorm {

/// A named cell with a dimension.  Generators form the thin skeletal base
/// category: a 0-map a -> b exists iff a == b or dim(a) < dim(b), and is
/// determined by its endpoints.
struct Generator {
  std::string name;
  std::size_t dimension = 0;

  bool operator==(const Generator&) const = default;
};

/// True when the base category has a morphism a -> b.
bool thin_map_exists(const Generator& a, const Generator& b);

class DiagramMap;

/// An n-diagram: a 0-diagram is a generator; an n-diagram is a zigzag of
/// (n-1)-diagrams
///
///   regular[0] -> singular[0] <- regular[1] -> ... <- regular[k]
///
/// connected by (n-1)-dimensional maps.  Values are immutable and share
/// structure freely.
class Diagram {
 public:
  Diagram() = default;

  static Diagram point(Generator g);
  static Diagram zigzag(std::vector<Diagram> regulars, std::vector<Diagram> singulars,
                        std::vector<DiagramMap> forward, std::vector<DiagramMap> backward);

  bool is_null() const { return data_ == nullptr; }
  std::size_t dimension() const;
  bool is_point() const { return dimension() == 0; }
  /// Number of singular heights; only meaningful for dimension >= 1.
  std::size_t length() const;

  const Generator& generator() const;
  const std::vector<Diagram>& regulars() const;
  const std::vector<Diagram>& singulars() const;
  const std::vector<DiagramMap>& forward() const;
  const std::vector<DiagramMap>& backward() const;
  const Diagram& regular(std::size_t i) const;
  const Diagram& singular(std::size_t j) const;
  const DiagramMap& forward(std::size_t j) const;
  const DiagramMap& backward(std::size_t j) const;

  std::size_t hash() const;

  friend bool operator==(const Diagram& a, const Diagram& b);
  friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }

 private:
  struct Data;
  explicit Diagram(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// A zigzag map between diagrams of equal dimension.  A 0-map is determined
/// by its generator endpoints.  An n-map carries the singular monotone
/// together with regular and singular slices; the regular monotone is always
/// derived via wraith_dual and never stored.
class DiagramMap {
 public:
  DiagramMap() = default;

  static DiagramMap thin(Generator source, Generator target);
  static DiagramMap zigzag_map(Diagram source, Diagram target, Monotone singular_monotone,
                               std::vector<DiagramMap> regular_slices,
                               std::vector<DiagramMap> singular_slices);

  bool is_null() const { return data_ == nullptr; }
  std::size_t dimension() const;
  const Diagram& source() const;
  const Diagram& target() const;

  const Monotone& singular_monotone() const;
  Monotone regular_monotone() const;
  const std::vector<DiagramMap>& regular_slices() const;
  const std::vector<DiagramMap>& singular_slices() const;
  const DiagramMap& regular_slice(std::size_t i) const;
  const DiagramMap& singular_slice(std::size_t j) const;

  const Generator& source_generator() const;
  const Generator& target_generator() const;

  std::size_t hash() const;

  friend bool operator==(const DiagramMap& a, const DiagramMap& b);
  friend bool operator!=(const DiagramMap& a, const DiagramMap& b) { return !(a == b); }

 private:
  struct Data;
  explicit DiagramMap(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// A target diagram with a finite indexed family of incoming maps.
struct Sink {
  Diagram target;
  std::vector<DiagramMap> legs;
};

struct ValidationReport {
  bool ok = true;
  std::string path;
  std::string message;

  explicit operator bool() const { return ok; }
  static ValidationReport good() { return {}; }
  static ValidationReport bad(std::string path, std::string message) {
    return {false, std::move(path), std::move(message)};
  }
};

/// Structural validation of all zigzag laws, recursively.  Never throws; the
/// report names the first failing location.
ValidationReport validate_diagram(const Diagram& d);
ValidationReport validate_map(const DiagramMap& f);
ValidationReport validate_sink(const Sink& s);

/// Diagrammatic-order composition of zigzag maps (f then g).
DiagramMap compose_maps(const DiagramMap& f, const DiagramMap& g);

DiagramMap identity_map(const Diagram& d);

/// In the skeletal thin base, isomorphisms are exactly the identity maps.
bool is_isomorphism(const DiagramMap& f);

/// Projection to the untyped shape: every generator collapses to a single
/// point, exhibiting the diagram as an object of the iterated zigzag
/// category over the terminal base.
Diagram project_shape(const Diagram& d);
DiagramMap project_shape(const DiagramMap& f);

/// Wrap a diagram in length-0 zigzags until it has the requested dimension.
Diagram lift_to_dimension(Diagram d, std::size_t dimension);

/// All generators appearing anywhere in the diagram, in first-visit order.
std::vector<Generator> collect_generators(const Diagram& d);

/// When enabled, kernel operations re-validate their products eagerly.
void set_strict_validation(bool on);
bool strict_validation();

}  // namespace zignorm

namespace std {
template <>
struct hash<zignorm::Diagram> {
  size_t operator()(const zignorm::Diagram& d) const { return d.hash(); }
};
template <>
struct hash<zignorm::DiagramMap> {
  size_t operator()(const zignorm::DiagramMap& f) const { return f.hash(); }
};
}  // namespace std
