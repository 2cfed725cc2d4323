#pragma once

#include <cstddef>
#include <vector>

#include "vecfield/chem/molecule.hpp"

namespace vecfield {

// Minimum-cost perfect matching on an n x n row-major cost matrix
// (Hungarian method, O(n^3)). Returns the column assigned to each row.
std::vector<std::size_t> min_cost_assignment(const std::vector<double>& cost, std::size_t n);

struct RmsdResult {
  bool matched = false;   // element multisets agree
  double rmsd = 0.0;      // Angstrom; meaningful only when matched
  ElementCounts deltas{}; // count(a) - count(b) per element
};

// Per-element optimal one-to-one assignment by squared distance, then the RMSD
// over all pairs. No rigid alignment is applied. Two empty molecules match
// with rmsd 0.
RmsdResult rmsd(const Molecule& a, const Molecule& b);

}  // namespace vecfield
