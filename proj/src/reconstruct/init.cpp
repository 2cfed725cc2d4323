#include "vecfield/reconstruct/init.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vecfield/core/rng.hpp"

namespace vecfield {

namespace {

void check_box(const Box& box) {
  if (!(box.volume() > 0.0) || !std::isfinite(box.volume())) {
    throw std::domain_error("bounding box must have positive finite volume");
  }
}

std::uint64_t element_seed(std::uint64_t seed, Element e, std::uint64_t salt) {
  return hash_combine(hash_combine(seed, salt), index_of(e));
}

}  // namespace

std::vector<Vec3> uniform_points(const Box& box, std::size_t count, std::uint64_t seed) {
  check_box(box);
  Rng rng(seed);
  std::vector<Vec3> pts(count);
  for (Vec3& p : pts) {
    const double ux = rng.uniform();
    const double uy = rng.uniform();
    const double uz = rng.uniform();
    p = box.from_unit({ux, uy, uz});
  }
  return pts;
}

TrajectoryBatch init_uniform(const QueryBudget& budget, std::size_t element_count, const Box& box,
                             std::uint64_t seed) {
  check_box(box);
  TrajectoryBatch batch;
  for (Element e : element_set(element_count)) {
    ParticleGroup group{e, {}};
    const auto n = static_cast<std::size_t>(std::max(0, budget[index_of(e)]));
    for (const Vec3& p : uniform_points(box, n, element_seed(seed, e, 0x756e69))) group.particles.push_back({p});
    batch.groups.push_back(std::move(group));
  }
  return batch;
}

std::vector<double> adaptive_scores(std::span<const double> magnitudes, int knn_k) {
  if (knn_k < 2) throw std::invalid_argument("knn_k must be >= 2");
  const std::size_t n = magnitudes.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return magnitudes[a] < magnitudes[b]; });
  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = magnitudes[order[i]];

  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(knn_k), n > 0 ? n - 1 : 0);
  std::vector<double> scores(n, 0.0);
  for (std::size_t p = 0; p < n; ++p) {
    // Grow a window around p, taking whichever side is closer in magnitude.
    std::size_t lo = p;
    std::size_t hi = p;
    for (std::size_t taken = 0; taken < k; ++taken) {
      const bool can_left = lo > 0;
      const bool can_right = hi + 1 < n;
      if (can_left && (!can_right || sorted[p] - sorted[lo - 1] <= sorted[hi + 1] - sorted[p])) {
        --lo;
      } else {
        ++hi;
      }
    }
    if (k == 0) continue;
    double mean = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) {
      if (i != p) mean += sorted[i];
    }
    mean /= static_cast<double>(k);
    double var = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) {
      if (i != p) var += (sorted[i] - mean) * (sorted[i] - mean);
    }
    scores[order[p]] = var / static_cast<double>(k);
  }
  return scores;
}

std::vector<Vec3> adaptive_select(const FieldProvider& provider, std::span<const Vec3> pool, Element k,
                                  std::size_t budget, int knn_k, double softmax_temp, std::uint64_t seed) {
  if (knn_k < 2) throw std::invalid_argument("knn_k must be >= 2");
  if (budget > pool.size()) throw std::domain_error("adaptive_select: budget exceeds pool size");
  if (budget == 0) return {};

  std::vector<double> magnitudes(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) magnitudes[i] = norm(provider.sample(pool[i], k));
  const auto scores = adaptive_scores(magnitudes, knn_k);

  double temp = softmax_temp;
  if (!(temp > 0.0)) temp = std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(scores.size());
  const double smax = *std::max_element(scores.begin(), scores.end());
  std::vector<double> weight(pool.size(), 1.0);
  if (temp > 0.0 && std::isfinite(temp)) {
    for (std::size_t i = 0; i < pool.size(); ++i) weight[i] = std::exp((scores[i] - smax) / temp);
  }

  // Efraimidis-Spirakis keys: the top-`budget` keys are a weighted draw
  // without replacement.
  Rng rng(seed);
  std::vector<double> key(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const double u = 1.0 - rng.uniform();  // (0, 1]
    key[i] = weight[i] > 0.0 ? std::log(u) / weight[i] : -std::numeric_limits<double>::infinity();
  }
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });

  std::vector<Vec3> out;
  out.reserve(budget);
  for (std::size_t i = 0; i < budget; ++i) out.push_back(pool[idx[i]]);
  return out;
}

TrajectoryBatch init_adaptive(const FieldProvider& provider, const ReconstructionConfig& cfg, const Box& box,
                              std::uint64_t seed) {
  check_box(box);
  TrajectoryBatch batch;
  for (Element e : element_set(cfg.element_count)) {
    ParticleGroup group{e, {}};
    const auto n = static_cast<std::size_t>(std::max(0, cfg.budget[index_of(e)]));
    if (n > 0) {
      const auto pool = uniform_points(box, n * static_cast<std::size_t>(cfg.pool_multiplier),
                                       element_seed(seed, e, 0x706f6f6c));
      for (const Vec3& p : adaptive_select(provider, pool, e, n, cfg.knn_k, cfg.softmax_temp,
                                           element_seed(seed, e, 0x73656c))) {
        group.particles.push_back({p});
      }
    }
    batch.groups.push_back(std::move(group));
  }
  return batch;
}

}  // namespace vecfield
