#pragma once

#include <array>
#include <cstddef>

#include "vecfield/chem/element.hpp"

namespace vecfield {

// Query points per element channel.
using QueryBudget = std::array<int, kMaxElements>;

// C 200, H 200, O 30, N 30, F 15.
QueryBudget qm9_budget();
// C 1000, H 1000, O 100, N 150, F/S/Cl/Br 20.
QueryBudget geom_budget();

QueryBudget scaled_budget(const QueryBudget& budget, double factor);

struct ReconstructionConfig {
  double eta = 0.1;     // Euler step size
  double tau = 1e-7;    // field-norm convergence threshold
  int t_max = 500;      // maximum Euler steps per particle
  double eps_db = 0.1;  // DBSCAN radius, Angstrom
  int n_min = 3;        // DBSCAN minimum samples (including the point itself)
  QueryBudget budget = qm9_budget();
  std::size_t element_count = kQm9Elements;

  bool adaptive = false;    // draw query points from an oversampled pool
  int pool_multiplier = 4;  // pool size = multiplier x budget
  int knn_k = 8;
  double softmax_temp = 0.0;  // <= 0 selects the mean score

  double rho = 1.5;      // bond tolerance applied to the recovered atoms
  double padding = 2.0;  // bounding-box margin around the molecule, Angstrom

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

}  // namespace vecfield
