#pragma once

#include <ostream>

#include "arbor/arboreal.hpp"
#include "arbor/localization.hpp"

namespace arbor {

/// Graphviz digraph: one node per object, one edge per non-identity class.
/// Isomorphisms are drawn bold, images of quiver morphisms solid, the rest
/// dashed.
void write_category_dot(const LocalizedCategory& lc, std::ostream& out);

/// Hasse diagram of the face poset, edges from a cell to its codimension-one
/// faces. When `report` is given, loose top cells are filled.
void write_face_poset_dot(const ArborealComplex& complex, std::ostream& out,
                          const LooseReport* report = nullptr);

}  // namespace arbor
