#pragma once

#include <optional>
#include <vector>

#include "zignorm/zigzag.hpp"

namespace zignorm {

/// Enumeration guards; exceeding any of them raises BudgetExceeded.
struct OracleBudget {
  std::size_t max_dimension = 3;
  std::size_t max_length = 3;
  std::size_t max_generators = 4;
  std::size_t max_steps = 20'000'000;
};

struct DegeneracyEntry {
  Diagram source;
  DiagramMap map;
};

struct OracleResult {
  Diagram normal_form;
  DiagramMap normaliser;
  std::vector<DiagramMap> factorisations;
};

/// Every valid zigzag map x -> y, by exhaustive search over monotones and
/// slice assignments filtered through the commutation laws.
std::vector<DiagramMap> oracle_enumerate_maps(const Diagram& x, const Diagram& y,
                                              const OracleBudget& budget = {});

/// Every degeneracy map into t exactly once, by recursive search: parallel
/// candidates per height assembled against the cospans, then every subset of
/// removable identity cospans.
std::vector<DegeneracyEntry> oracle_enumerate_degeneracies(const Diagram& t,
                                                           const OracleBudget& budget = {});

/// Brute-force factorisation of h through e (unique when it exists).
std::optional<DiagramMap> oracle_factorisation(const DiagramMap& h, const DiagramMap& e,
                                               const OracleBudget& budget = {});

/// The greatest lower bound of two degeneracies in Deg(T), found by
/// filtering the enumeration with pairwise factorisation checks.
DegeneracyEntry oracle_meet(const DiagramMap& f, const DiagramMap& g,
                            const OracleBudget& budget = {});

/// The smallest element of Deg_S(T), computed literally from the enumeration.
OracleResult oracle_normalise(const Sink& sink, const OracleBudget& budget = {});

}  // namespace zignorm
