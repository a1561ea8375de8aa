#include "zignorm/globularity.hpp"

#include <mutex>
#include <unordered_map>

#include "zignorm/normalisation.hpp"

namespace zignorm {

bool is_globular_map(const DiagramMap& f) {
  if (f.dimension() == 0) return true;
  for (const auto& s : f.regular_slices())
    if (!is_isomorphism(s)) return false;
  for (const auto& s : f.singular_slices())
    if (!is_globular_map(s)) return false;
  return true;
}

bool is_globular_object(const Diagram& d) {
  if (d.dimension() == 0) return true;
  for (const auto& r : d.regulars())
    if (!is_globular_object(r)) return false;
  for (const auto& s : d.singulars())
    if (!is_globular_object(s)) return false;
  for (const auto& m : d.forward())
    if (!is_globular_map(m)) return false;
  for (const auto& m : d.backward())
    if (!is_globular_map(m)) return false;
  return true;
}

namespace {

// "normalising" quantifies over an external property, so the normal forms of
// slice targets are cached per sub-diagram.
const DiagramMap& cached_normaliser(const Diagram& d) {
  static std::mutex mu;
  static std::unordered_map<Diagram, DiagramMap> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, normalise(d).normaliser).first;
  return it->second;
}

}  // namespace

bool is_regularly_normalising(const DiagramMap& f) {
  if (f.dimension() == 0) return true;
  for (const auto& s : f.regular_slices())
    if (!(s == cached_normaliser(s.target()))) return false;
  for (const auto& s : f.singular_slices())
    if (!is_regularly_normalising(s)) return false;
  return true;
}

}  // namespace zignorm
