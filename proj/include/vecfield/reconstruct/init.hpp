#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vecfield/provider/provider.hpp"
#include "vecfield/reconstruct/box.hpp"
#include "vecfield/reconstruct/config.hpp"
#include "vecfield/reconstruct/trajectory.hpp"

namespace vecfield {

// Uniform points in `box`, deterministic in seed.
std::vector<Vec3> uniform_points(const Box& box, std::size_t count, std::uint64_t seed);

// budget[k] i.i.d. uniform particles per element of the set. Each element
// draws from its own seed stream. Throws std::domain_error on a zero-volume box.
TrajectoryBatch init_uniform(const QueryBudget& budget, std::size_t element_count, const Box& box,
                             std::uint64_t seed);

// Variance of field magnitudes among each candidate's knn_k nearest
// neighbours in one-dimensional magnitude space (the candidate excluded).
std::vector<double> adaptive_scores(std::span<const double> magnitudes, int knn_k);

// Draws `budget` pool points without replacement with probabilities
// softmax(score / temp) (temp <= 0 uses the mean score; all-equal scores
// reduce to a uniform subsample). Output is in draw order.
std::vector<Vec3> adaptive_select(const FieldProvider& provider, std::span<const Vec3> pool, Element k,
                                  std::size_t budget, int knn_k, double softmax_temp, std::uint64_t seed);

// Pool of pool_multiplier x budget[k] uniform points per element, reduced by
// adaptive_select.
TrajectoryBatch init_adaptive(const FieldProvider& provider, const ReconstructionConfig& cfg, const Box& box,
                              std::uint64_t seed);

}  // namespace vecfield
