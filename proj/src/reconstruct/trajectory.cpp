#include "vecfield/reconstruct/trajectory.hpp"

#include <cstdio>

namespace vecfield {

std::size_t TrajectoryBatch::particle_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.particles.size();
  return n;
}

std::size_t TrajectoryBatch::count(ParticleState state) const {
  std::size_t n = 0;
  for (const auto& g : groups) {
    for (const auto& p : g.particles) n += p.state == state ? 1 : 0;
  }
  return n;
}

void TrajectoryRecord::prepare(const TrajectoryBatch& batch) {
  paths.assign(batch.groups.size(), {});
  for (std::size_t g = 0; g < batch.groups.size(); ++g) paths[g].assign(batch.groups[g].particles.size(), {});
}

std::string TrajectoryRecord::csv(const TrajectoryBatch& batch) const {
  std::string out = "step,element,particle,x,y,z\n";
  char buf[192];
  for (std::size_t g = 0; g < paths.size(); ++g) {
    const std::string el(symbol(batch.groups[g].element));
    for (std::size_t i = 0; i < paths[g].size(); ++i) {
      for (const auto& [step, p] : paths[g][i]) {
        std::snprintf(buf, sizeof buf, "%d,%s,%zu,%.9g,%.9g,%.9g\n", step, el.c_str(), i, p.x, p.y, p.z);
        out += buf;
      }
    }
  }
  return out;
}

}  // namespace vecfield
