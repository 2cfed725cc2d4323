#include "vecfield/reconstruct/config.hpp"

#include <cmath>
#include <stdexcept>

namespace vecfield {

QueryBudget qm9_budget() { return {200, 200, 30, 30, 15, 0, 0, 0}; }

QueryBudget geom_budget() { return {1000, 1000, 100, 150, 20, 20, 20, 20}; }

QueryBudget scaled_budget(const QueryBudget& budget, double factor) {
  QueryBudget out{};
  for (std::size_t i = 0; i < budget.size(); ++i) {
    out[i] = static_cast<int>(std::lround(budget[i] * factor));
  }
  return out;
}

void ReconstructionConfig::validate() const {
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
  if (!(eps_db > 0.0)) throw std::invalid_argument("eps_db must be positive");
  if (n_min < 1) throw std::invalid_argument("n_min must be >= 1");
  if (element_count == 0 || element_count > kMaxElements) throw std::invalid_argument("element_count must be in [1, 8]");
  for (int b : budget) {
    if (b < 0) throw std::invalid_argument("query budgets must be >= 0");
  }
  if (pool_multiplier < 1) throw std::invalid_argument("pool_multiplier must be >= 1");
  if (knn_k < 2) throw std::invalid_argument("knn_k must be >= 2");
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (!(padding >= 0.0)) throw std::invalid_argument("padding must be >= 0");
}

}  // namespace vecfield
