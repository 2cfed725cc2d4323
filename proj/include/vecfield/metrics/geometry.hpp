#pragma once

#include <cstddef>
#include <vector>

#include "vecfield/chem/molecule.hpp"

namespace vecfield {

struct Geometry {
  std::vector<double> bond_lengths;  // Angstrom, one per bond
  std::vector<double> bond_angles;   // degrees, one per pair of bonds sharing an atom
  std::vector<int> valencies;        // bond-order sum per atom
  std::vector<int> ring_sizes;       // smallest set of smallest rings
};

// Reads the bonds already present on `mol`; no perception is done here.
Geometry extract_geometry(const Molecule& mol);

// Cycles of a minimum cycle basis of the bond graph, each as an ordered list
// of atom indices. Candidate cycles (Horton) are reduced by Gaussian
// elimination over GF(2) in edge space. Sorted by length.
std::vector<std::vector<std::size_t>> smallest_rings(const Molecule& mol);

}  // namespace vecfield
