#pragma once

// Exhaustive per-element assignment search; feasible for a handful of atoms.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "vecfield/chem/molecule.hpp"

namespace oracle {

inline double permutation_rmsd(const vecfield::Molecule& a, const vecfield::Molecule& b) {
  double total = 0.0;
  for (vecfield::Element e : vecfield::kAllElements) {
    std::vector<vecfield::Vec3> pa, pb;
    for (const auto& atom : a.atoms()) if (atom.element == e) pa.push_back(atom.position);
    for (const auto& atom : b.atoms()) if (atom.element == e) pb.push_back(atom.position);
    std::vector<std::size_t> perm(pb.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
      double s = 0.0;
      for (std::size_t i = 0; i < pa.size(); ++i) s += vecfield::norm2(pa[i] - pb[perm[i]]);
      best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += best;
  }
  return std::sqrt(total / static_cast<double>(a.size()));
}

}  // namespace oracle
