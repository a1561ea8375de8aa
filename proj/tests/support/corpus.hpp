#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "zignorm/zigzag.hpp"

namespace zignorm::testing {

struct CorpusOptions {
  std::size_t max_dimension = 3;
  std::size_t max_length = 3;
  std::size_t max_legs = 2;
  // node-count cap; keeps brute-force enumeration tractable
  std::size_t max_weight = 36;
};

/// Seeded generator of valid diagrams, sinks and maps.  Diagrams are built
/// from identity and content cospans (insertions with raised labels), so they
/// are globular by construction; legs are composites of insertions, folds and
/// label raises.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed, CorpusOptions options = {});

  Diagram diagram(std::size_t dimension);
  Diagram diagram();  // random dimension in [1, max_dimension]
  DiagramMap leg(const Diagram& target);
  Sink sink();
  Sink sink(const Diagram& target);

  std::mt19937_64& rng() { return rng_; }
  const std::vector<Generator>& pool() const { return pool_; }

 private:
  std::size_t pick(std::size_t bound);  // uniform in [0, bound)
  bool chance(double p);
  Diagram unchecked_diagram(std::size_t dimension);
  Generator random_generator(std::size_t max_dim);
  std::optional<Generator> higher_generator(const Generator& g);

  std::pair<Diagram, DiagramMap> fatten(const Diagram& k);  // k -> fattened
  std::pair<Diagram, DiagramMap> thin_out(const Diagram& s);  // thinned -> s

  std::mt19937_64 rng_;
  CorpusOptions options_;
  std::vector<Generator> pool_;
};

}  // namespace zignorm::testing
