#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

namespace vecfield {

// Label -> probability. Probabilities are non-negative and sum to one.
using Categorical = std::map<std::string, double>;

// Normalizes label counts. Throws std::domain_error when the total is zero.
Categorical normalize(const std::map<std::string, std::size_t>& counts);

// Throws std::invalid_argument on negative entries or a sum off by > 1e-12.
void validate(const Categorical& p);

// Integral of |F_a - F_b| between the empirical CDFs, computed by a merged
// walk over the sorted samples. Throws std::domain_error on an empty side.
double wasserstein1(std::span<const double> a, std::span<const double> b);

// 0.5 * sum |p_i - q_i| over the union of labels.
double total_variation(const Categorical& p, const Categorical& q);

}  // namespace vecfield
