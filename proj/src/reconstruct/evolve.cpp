#include "vecfield/reconstruct/evolve.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace vecfield {

namespace detail {

void advance_particle(const FieldProvider& provider, Element k, Particle& p, const ReconstructionConfig& cfg,
                      std::vector<std::pair<int, Vec3>>* path, int stride) {
  if (p.state != ParticleState::Active) return;
  Vec3 q = p.position;
  int t = p.iterations;
  for (; t < cfg.t_max; ++t) {
    if (path && t % stride == 0) path->emplace_back(t, q);
    const Vec3 v = provider.sample(q, k);
    if (!is_finite(v)) {
      p.state = ParticleState::Diverged;
      break;
    }
    if (norm(v) < cfg.tau) {
      p.state = ParticleState::Converged;
      break;
    }
    q += v * cfg.eta;
    if (!is_finite(q)) {
      p.state = ParticleState::Diverged;
      ++t;
      break;
    }
  }
  if (p.state == ParticleState::Active) p.state = ParticleState::Exhausted;
  p.position = q;
  p.iterations = t;
  if (path && (path->empty() || path->back().first != t)) path->emplace_back(t, q);
}

}  // namespace detail

TrajectoryBatch evolve(const FieldProvider& provider, TrajectoryBatch batch, const ReconstructionConfig& cfg,
                       TrajectoryRecord* record) {
  cfg.validate();
  if (record) record->prepare(batch);
  // Flatten (group, particle) so the schedule balances across elements.
  std::vector<std::pair<std::size_t, std::size_t>> work;
  work.reserve(batch.particle_count());
  for (std::size_t g = 0; g < batch.groups.size(); ++g) {
    for (std::size_t i = 0; i < batch.groups[g].particles.size(); ++i) work.emplace_back(g, i);
  }
  const auto n = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t w = 0; w < n; ++w) {
    const auto [g, i] = work[w];
    auto* path = record ? &record->paths[g][i] : nullptr;
    detail::advance_particle(provider, batch.groups[g].element, batch.groups[g].particles[i], cfg, path,
                             record ? record->stride : 1);
  }
  return batch;
}

}  // namespace vecfield
