#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vecfield/chem/element.hpp"
#include "vecfield/core/vec3.hpp"

namespace vecfield {

enum class ParticleState : std::uint8_t { Active, Converged, Exhausted, Diverged };

struct Particle {
  Vec3 position;
  int iterations = 0;  // Euler steps taken
  ParticleState state = ParticleState::Active;
};

struct ParticleGroup {
  Element element;
  std::vector<Particle> particles;
};

struct TrajectoryBatch {
  std::vector<ParticleGroup> groups;  // one per element channel, canonical order

  std::size_t particle_count() const;
  std::size_t count(ParticleState state) const;
};

// Positions sampled every `stride` steps while a particle is active, plus its
// final position.
struct TrajectoryRecord {
  int stride = 10;
  // [group][particle] -> (step, position)
  std::vector<std::vector<std::vector<std::pair<int, Vec3>>>> paths;

  void prepare(const TrajectoryBatch& batch);
  // CSV with header step,element,particle,x,y,z.
  std::string csv(const TrajectoryBatch& batch) const;
};

}  // namespace vecfield
