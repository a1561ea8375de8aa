#pragma once

#include <vector>

#include "zignorm/degeneracy.hpp"
#include "zignorm/zigzag.hpp"

namespace zignorm {

/// Outcome of (relative) normalisation: the normal form N, the normalising
/// degeneracy d : N -> T with its witness and top-level simple/parallel
/// factors, and one factorisation through d per sink leg.
struct NormalisationResult {
  Diagram normal_form;
  DiagramMap normaliser;
  DiagramMap simple_part;    // N -> P
  DiagramMap parallel_part;  // P -> T
  WitnessPtr witness;
  std::vector<DiagramMap> factorisations;
};

/// Recursive sink normalisation.  Returns the smallest element of Deg_S(T):
/// level sinks are normalised recursively on regular then singular heights,
/// the results assemble into a parallel degeneracy, and identity cospans
/// outside every leg's image are removed by a simple degeneracy.
NormalisationResult normalise_relative(const Sink& sink);

/// Absolute normalisation: the empty sink.
NormalisationResult normalise(const Diagram& t);

}  // namespace zignorm
