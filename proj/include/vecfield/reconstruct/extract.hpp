#pragma once

#include <cstddef>

#include "vecfield/chem/molecule.hpp"
#include "vecfield/reconstruct/config.hpp"
#include "vecfield/reconstruct/trajectory.hpp"

namespace vecfield {

struct Extraction {
  Molecule molecule;           // one atom per cluster, no bonds
  std::size_t clustered = 0;   // converged particles assigned to a cluster
  std::size_t noise = 0;       // converged particles labelled noise
};

// Clusters the converged particles of each element separately and places one
// atom of that element at the arithmetic mean of every cluster. Atoms follow
// group order, then cluster id. Exhausted and diverged particles are ignored.
Extraction extract_atoms(const TrajectoryBatch& batch, const ReconstructionConfig& cfg);

}  // namespace vecfield
