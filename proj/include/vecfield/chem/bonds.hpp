#pragma once

#include <cstddef>
#include <vector>

#include "vecfield/chem/molecule.hpp"

namespace vecfield {

inline constexpr double kDefaultBondTolerance = 1.5;

// Distance-based bond perception: atoms i and j are bonded (order 1) iff
// |x_i - x_j| <= rho * (r_i + r_j). Uses a uniform cell list so the cost is
// near-linear in the atom count. Bonds are returned sorted with a < b.
Molecule infer_bonds(const Molecule& mol, double rho = kDefaultBondTolerance);

// Greedy bond-order assignment: visit bonds from shortest to longest and
// raise each order while both atoms remain below their target valence.
Molecule complete_valences(const Molecule& mol);

// Connected-component id per atom (ids ordered by lowest atom index).
std::vector<std::size_t> fragment_labels(const Molecule& mol);
std::size_t fragment_count(const Molecule& mol);

// Atom indices of the largest connected fragment (ties: lowest first atom).
std::vector<std::size_t> largest_fragment(const Molecule& mol);

}  // namespace vecfield
