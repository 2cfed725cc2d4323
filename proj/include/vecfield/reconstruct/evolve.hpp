#pragma once

#include "vecfield/provider/provider.hpp"
#include "vecfield/reconstruct/config.hpp"
#include "vecfield/reconstruct/trajectory.hpp"

namespace vecfield {

// Euler ascent q <- q + eta v_k(q) for every Active particle until
// |v_k(q)| < tau (Converged) or t_max steps (Exhausted). A non-finite field
// value or position marks the particle Diverged. Particles are independent and
// processed in parallel; results match serial::evolve bit for bit.
TrajectoryBatch evolve(const FieldProvider& provider, TrajectoryBatch batch, const ReconstructionConfig& cfg,
                       TrajectoryRecord* record = nullptr);

namespace serial {
TrajectoryBatch evolve(const FieldProvider& provider, TrajectoryBatch batch, const ReconstructionConfig& cfg,
                       TrajectoryRecord* record = nullptr);
}  // namespace serial

namespace detail {

// Advances a single particle; shared by the parallel and serial drivers.
// When `path` is given, positions at multiples of `stride` and the final
// position are appended to it.
void advance_particle(const FieldProvider& provider, Element k, Particle& p, const ReconstructionConfig& cfg,
                      std::vector<std::pair<int, Vec3>>* path = nullptr, int stride = 1);

}  // namespace detail

}  // namespace vecfield
