#pragma once

#include "zignorm/typecheck.hpp"
#include "zignorm/zigzag.hpp"

namespace zignorm::fixtures {

// small construction helpers shared by fixtures and tests

Diagram pt(const Generator& g);
/// 1-diagram with thin cospan legs derived from the generator labels.
Diagram diag1(const std::vector<Generator>& regulars, const std::vector<Generator>& singulars);
/// 1-dimensional map: all slices are thin maps determined by their endpoints.
DiagramMap map1(const Diagram& src, const Diagram& tgt, std::vector<std::size_t> mono);
/// Map whose regular slices are all identities (the globular case); singular
/// slices supplied by the caller.
DiagramMap globular_map(const Diagram& src, const Diagram& tgt, std::vector<std::size_t> mono,
                        std::vector<DiagramMap> singular_slices);

inline Generator gen(const char* name, std::size_t dim) { return Generator{name, dim}; }

// the strict-unitality example: [f, id-cospan] and its normal form [f]
Diagram composite_with_unit();
Diagram composite_normal_form();

// a valid length-3 -> length-4 zigzag map over a single generator
DiagramMap sample_zigzag_map();

// the 2-diagram with singular content of cardinality 10
Diagram surface_diagram();

// the essential-identity configuration: M with legs p : B -> M, q : T -> M
Diagram essential_target();
DiagramMap essential_leg_point();
DiagramMap essential_leg_fold();

// a sink realising the walkthrough collapse pattern: T of length 3 whose
// heights 1 and 2 become identity cospans, with only height 1 removable
Sink collapse_sink();

// Eckmann-Hilton: 3-diagram over one 0-cell and two 2-cells
Diagram eh_diagram();
Diagram eh_typing_x();
Diagram eh_typing_y();
Signature eh_signature();

// Syllepsis: 5-diagram over one 0-cell and two 3-cells
Diagram syllepsis_diagram();
Diagram syllepsis_typing_x();
Diagram syllepsis_typing_y();
Signature syllepsis_signature();

}  // namespace zignorm::fixtures
