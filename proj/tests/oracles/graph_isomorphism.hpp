#pragma once

// Brute-force labelled-graph isomorphism by trying every atom permutation
// that preserves elements. Only for small molecules.

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "vecfield/chem/molecule.hpp"

namespace oracle {

inline bool isomorphic(const vecfield::Molecule& x, const vecfield::Molecule& y) {
  const std::size_t n = x.size();
  if (n != y.size() || x.bonds().size() != y.bonds().size()) return false;
  auto matrix = [n](const vecfield::Molecule& m) {
    std::vector<int> adj(n * n, 0);
    for (const auto& b : m.bonds()) adj[b.a * n + b.b] = adj[b.b * n + b.a] = b.order;
    return adj;
  };
  const auto ax = matrix(x);
  const auto ay = matrix(y);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = x.atoms()[i].element == y.atoms()[perm[i]].element;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) ok = ax[i * n + j] == ay[perm[i] * n + perm[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
