#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "zignorm/zigzag.hpp"

namespace zignorm {

struct DegeneracyWitness;
using WitnessPtr = std::shared_ptr<const DegeneracyWitness>;

/// Evidence that a map is a degeneracy: the injective shape monotone of its
/// simple part plus, per target height, witnesses for the slices of the
/// parallel residue.  The singular child at a height omitted by the simple
/// part witnesses the wedge composite into that height's singular object.
struct DegeneracyWitness {
  DiagramMap map;
  Monotone simple;                           // dimension >= 1 only
  std::vector<WitnessPtr> regular_children;  // target length + 1
  std::vector<WitnessPtr> singular_children; // target length
};

struct Insertion {
  Diagram target;
  DiagramMap map;
};

/// The cocartesian lift of an injective monotone: the target carries an
/// identity cospan at every height omitted by `positions`, and the map has
/// identity slices.
Insertion insert_identity_cospans(const Diagram& a, const Monotone& positions);

/// The parallel residue's slice into the given target height: the map's own
/// singular slice where the height is hit exactly once, the wedge composite
/// where the preimage is empty.
DiagramMap residue_singular_slice(const DiagramMap& f, std::size_t target_height);

/// Decides whether f is a degeneracy map and produces the witness; returns
/// null when it is not.  Total on valid maps.
WitnessPtr is_degeneracy(const DiagramMap& f);

struct SimpleParallelFactorisation {
  DiagramMap simple;    // insertion A -> A'
  DiagramMap parallel;  // vertical residue A' -> B
};

/// The unique simple-then-parallel factorisation of a witnessed degeneracy.
SimpleParallelFactorisation factor_simple_parallel(const DegeneracyWitness& w);

/// For a degeneracy d : N -> M and any map h : Z -> M, the unique
/// factorisation z : Z -> N with (z then d) == h, when it exists.
std::optional<DiagramMap> factor_through_degeneracy(const DiagramMap& h, const DiagramMap& d);

struct DegeneracyPullback {
  Diagram apex;
  DiagramMap to_first;
  DiagramMap to_second;
};

/// The pullback of two degeneracies with common target; the projections are
/// again degeneracies and the square is the meet in Deg(T).
DegeneracyPullback pullback_degeneracies(const DegeneracyWitness& wf, const DegeneracyWitness& wg);
DegeneracyPullback pullback_degeneracies(const DiagramMap& f, const DiagramMap& g);

}  // namespace zignorm
