#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace zignorm {

/// An order-preserving map between the finite total orders [n] and [m],
/// where [n] = {0, ..., n-1}. The empty order [0] has a unique map into
/// every target.
struct Monotone {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::vector<std::size_t> values;  // weakly increasing, each < target_size

  static Monotone identity(std::size_t n);
  /// The unique map [0] -> [m].
  static Monotone empty(std::size_t m);
  static Monotone of(std::vector<std::size_t> values, std::size_t target_size);

  std::size_t operator()(std::size_t i) const { return values[i]; }
  bool is_identity() const;
  bool is_injective() const;
  /// True if the map is weakly increasing with all values < target_size.
  bool well_formed() const;
  bool hits(std::size_t target) const;

  bool operator==(const Monotone&) const = default;
};

/// Diagrammatic-order composition: (f then g), requires f.target_size == g.source_size.
Monotone compose(const Monotone& f, const Monotone& g);

/// The injective map [n] -> [n+1] omitting i from its image.
Monotone face(std::size_t i, std::size_t n);

/// The regular map interleaved with f: for f : [n] -> [m] the result
/// g : [m+1] -> [n+1] is given by g(i) = min({ j | f(j) >= i } u { n }).
/// It preserves the initial and final elements.
Monotone wraith_dual(const Monotone& f);

/// Inverse direction: recover f : [n] -> [m] from an endpoint-preserving
/// g : [m+1] -> [n+1] via f(j) = min{ i | g(i+1) > j }.
Monotone wraith_inverse(const Monotone& g);

/// The contiguous half-open interval of indices j with f(j) == i.  An empty
/// preimage is returned as [p, p) where p counts the entries below i, which
/// locates the regular position of the gap.
std::pair<std::size_t, std::size_t> preimage_interval(const Monotone& f, std::size_t i);

/// All monotone maps [n] -> [m] in lexicographic order of value sequences.
std::vector<Monotone> enumerate_monotones(std::size_t n, std::size_t m);

/// For injective f, the ascending face indices o_1 < ... < o_k with
/// f = face(o_1) then face(o_2) then ... (diagrammatic order).
std::vector<std::size_t> face_decomposition(const Monotone& f);

}  // namespace zignorm
