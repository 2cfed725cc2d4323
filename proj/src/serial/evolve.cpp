// Sequential reference for evolve.
#include "vecfield/reconstruct/evolve.hpp"

namespace vecfield::serial {

TrajectoryBatch evolve(const FieldProvider& provider, TrajectoryBatch batch, const ReconstructionConfig& cfg,
                       TrajectoryRecord* record) {
  cfg.validate();
  if (record) record->prepare(batch);
  for (std::size_t g = 0; g < batch.groups.size(); ++g) {
    auto& group = batch.groups[g];
    for (std::size_t i = 0; i < group.particles.size(); ++i) {
      detail::advance_particle(provider, group.element, group.particles[i], cfg,
                               record ? &record->paths[g][i] : nullptr, record ? record->stride : 1);
    }
  }
  return batch;
}

}  // namespace vecfield::serial
