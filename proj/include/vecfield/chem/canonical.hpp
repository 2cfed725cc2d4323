#pragma once

#include <cstdint>

#include "vecfield/chem/molecule.hpp"

namespace vecfield {

using StructureDigest = std::uint64_t;

// Weisfeiler-Leman (1-WL) colour refinement over the element-labelled,
// bond-order-labelled graph. Invariant under atom reordering and rigid
// motion (coordinates are ignored). Like any 1-WL key it cannot separate
// some regular graphs, e.g. one six-ring versus two three-rings.
StructureDigest canonical_hash(const Molecule& mol);

}  // namespace vecfield
