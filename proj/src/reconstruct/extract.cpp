#include "vecfield/reconstruct/extract.hpp"

#include <algorithm>
#include <vector>

#include "vecfield/reconstruct/dbscan.hpp"

namespace vecfield {

Extraction extract_atoms(const TrajectoryBatch& batch, const ReconstructionConfig& cfg) {
  Extraction out;
  std::vector<Atom> atoms;
  for (const ParticleGroup& group : batch.groups) {
    std::vector<Vec3> points;
    for (const Particle& p : group.particles) {
      if (p.state == ParticleState::Converged) points.push_back(p.position);
    }
    if (points.empty()) continue;
    const std::vector<int> labels = dbscan(points, cfg.eps_db, cfg.n_min);
    const int clusters = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<Vec3> sums(clusters);
    std::vector<std::size_t> counts(clusters, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (labels[i] == kNoise) {
        ++out.noise;
        continue;
      }
      sums[labels[i]] += points[i];
      ++counts[labels[i]];
      ++out.clustered;
    }
    for (int c = 0; c < clusters; ++c) {
      atoms.push_back({group.element, sums[c] * (1.0 / static_cast<double>(counts[c]))});
    }
  }
  out.molecule = Molecule(std::move(atoms));
  return out;
}

}  // namespace vecfield
