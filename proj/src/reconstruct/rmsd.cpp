#include "vecfield/reconstruct/rmsd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vecfield {

std::vector<std::size_t> min_cost_assignment(const std::vector<double>& cost, std::size_t n) {
  if (cost.size() != n * n) throw std::invalid_argument("min_cost_assignment: cost matrix must be n x n");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // Potentials formulation with 1-based rows/columns; column 0 is a sentinel.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[row_of[j] - 1] = j - 1;
  return assignment;
}

RmsdResult rmsd(const Molecule& a, const Molecule& b) {
  RmsdResult result;
  const ElementCounts ca = a.element_counts();
  const ElementCounts cb = b.element_counts();
  result.matched = true;
  for (std::size_t e = 0; e < kMaxElements; ++e) {
    result.deltas[e] = ca[e] - cb[e];
    if (result.deltas[e] != 0) result.matched = false;
  }
  if (!result.matched) {
    result.rmsd = std::numeric_limits<double>::quiet_NaN();
    return result;
  }
  if (a.empty()) return result;

  double total = 0.0;
  for (Element e : kAllElements) {
    std::vector<Vec3> pa, pb;
    for (const Atom& atom : a.atoms()) {
      if (atom.element == e) pa.push_back(atom.position);
    }
    for (const Atom& atom : b.atoms()) {
      if (atom.element == e) pb.push_back(atom.position);
    }
    const std::size_t n = pa.size();
    if (n == 0) continue;
    std::vector<double> cost(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = norm2(pa[i] - pb[j]);
    }
    const auto assignment = min_cost_assignment(cost, n);
    for (std::size_t i = 0; i < n; ++i) total += cost[i * n + assignment[i]];
  }
  result.rmsd = std::sqrt(total / static_cast<double>(a.size()));
  return result;
}

}  // namespace vecfield
