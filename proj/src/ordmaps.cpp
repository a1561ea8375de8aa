#include "zignorm/ordmaps.hpp"

#include <algorithm>
#include <numeric>

#include "zignorm/error.hpp"

namespace zignorm {

Monotone Monotone::identity(std::size_t n) {
  Monotone m;
  m.source_size = n;
  m.target_size = n;
  m.values.resize(n);
  std::iota(m.values.begin(), m.values.end(), std::size_t{0});
  return m;
}

Monotone Monotone::empty(std::size_t m) {
  Monotone f;
  f.source_size = 0;
  f.target_size = m;
  return f;
}

Monotone Monotone::of(std::vector<std::size_t> values, std::size_t target_size) {
  Monotone f;
  f.source_size = values.size();
  f.target_size = target_size;
  f.values = std::move(values);
  if (!f.well_formed())
    raise(ErrorKind::ArgumentError, "monotone values not weakly increasing within target");
  return f;
}

bool Monotone::is_identity() const {
  if (source_size != target_size) return false;
  for (std::size_t i = 0; i < source_size; ++i)
    if (values[i] != i) return false;
  return true;
}

bool Monotone::is_injective() const {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] == values[i - 1]) return false;
  return true;
}

bool Monotone::well_formed() const {
  if (values.size() != source_size) return false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= target_size) return false;
    if (i > 0 && values[i] < values[i - 1]) return false;
  }
  return true;
}

bool Monotone::hits(std::size_t target) const {
  return std::binary_search(values.begin(), values.end(), target);
}

Monotone compose(const Monotone& f, const Monotone& g) {
  if (f.target_size != g.source_size)
    raise(ErrorKind::DimensionMismatch, "compose: target of first map is not source of second");
  Monotone h;
  h.source_size = f.source_size;
  h.target_size = g.target_size;
  h.values.reserve(f.source_size);
  for (std::size_t v : f.values) h.values.push_back(g.values[v]);
  return h;
}

Monotone face(std::size_t i, std::size_t n) {
  if (i > n) raise(ErrorKind::IndexError, "face: index out of range");
  Monotone d;
  d.source_size = n;
  d.target_size = n + 1;
  d.values.reserve(n);
  for (std::size_t j = 0; j < n; ++j) d.values.push_back(j < i ? j : j + 1);
  return d;
}

Monotone wraith_dual(const Monotone& f) {
  const std::size_t n = f.source_size;
  const std::size_t m = f.target_size;
  Monotone g;
  g.source_size = m + 1;
  g.target_size = n + 1;
  g.values.reserve(m + 1);
  // min { j | f(j) >= i } with fallback n; computed by a single sweep.
  std::size_t j = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    while (j < n && f.values[j] < i) ++j;
    g.values.push_back(j);
  }
  return g;
}

Monotone wraith_inverse(const Monotone& g) {
  if (g.source_size == 0 || g.target_size == 0)
    raise(ErrorKind::ArgumentError, "wraith_inverse: orders must be nonempty");
  if (g.values.front() != 0 || g.values.back() != g.target_size - 1)
    raise(ErrorKind::ArgumentError, "wraith_inverse: map must preserve endpoints");
  const std::size_t m = g.source_size - 1;
  const std::size_t n = g.target_size - 1;
  Monotone f;
  f.source_size = n;
  f.target_size = m;
  f.values.reserve(n);
  std::size_t i = 0;
  for (std::size_t j = 0; j < n; ++j) {
    while (i < m && g.values[i + 1] <= j) ++i;
    f.values.push_back(i);
  }
  return f;
}

std::pair<std::size_t, std::size_t> preimage_interval(const Monotone& f, std::size_t i) {
  if (i >= f.target_size) raise(ErrorKind::IndexError, "preimage_interval: index out of range");
  auto lo = std::lower_bound(f.values.begin(), f.values.end(), i);
  auto hi = std::upper_bound(f.values.begin(), f.values.end(), i);
  return {static_cast<std::size_t>(lo - f.values.begin()),
          static_cast<std::size_t>(hi - f.values.begin())};
}

std::vector<Monotone> enumerate_monotones(std::size_t n, std::size_t m) {
  std::vector<Monotone> out;
  if (n == 0) {
    out.push_back(Monotone::empty(m));
    return out;
  }
  if (m == 0) return out;
  std::vector<std::size_t> values(n, 0);
  while (true) {
    Monotone f;
    f.source_size = n;
    f.target_size = m;
    f.values = values;
    out.push_back(std::move(f));
    // next weakly increasing sequence in lexicographic order
    std::size_t k = n;
    while (k > 0 && values[k - 1] == m - 1) --k;
    if (k == 0) break;
    ++values[k - 1];
    for (std::size_t t = k; t < n; ++t) values[t] = values[k - 1];
  }
  return out;
}

std::vector<std::size_t> face_decomposition(const Monotone& f) {
  if (!f.is_injective())
    raise(ErrorKind::ArgumentError, "face_decomposition: map is not injective");
  std::vector<std::size_t> omitted;
  std::size_t j = 0;
  for (std::size_t i = 0; i < f.target_size; ++i) {
    if (j < f.source_size && f.values[j] == i)
      ++j;
    else
      omitted.push_back(i);
  }
  return omitted;
}

}  // namespace zignorm
