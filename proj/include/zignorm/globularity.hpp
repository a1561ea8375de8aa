#pragma once

#include "zignorm/zigzag.hpp"

namespace zignorm {

/// All regular slices are isomorphisms and all singular slices are globular;
/// every 0-map is globular.
bool is_globular_map(const DiagramMap& f);

/// A zigzag of globular objects and globular maps; every 0-diagram is
/// globular.
bool is_globular_object(const Diagram& d);

/// All regular slices are normalising maps (each equals the absolute
/// normaliser of its target) and all singular slices are regularly
/// normalising.
bool is_regularly_normalising(const DiagramMap& f);

}  // namespace zignorm
