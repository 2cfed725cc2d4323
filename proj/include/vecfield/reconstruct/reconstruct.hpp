#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "vecfield/provider/provider.hpp"
#include "vecfield/reconstruct/box.hpp"
#include "vecfield/reconstruct/config.hpp"
#include "vecfield/reconstruct/rmsd.hpp"
#include "vecfield/reconstruct/trajectory.hpp"

namespace vecfield {

inline constexpr std::size_t kHistogramBins = 10;

struct ReconstructionStats {
  // Iteration counts of converged particles in kHistogramBins equal-width bins
  // over [0, t_max].
  std::array<std::size_t, kHistogramBins> iterations_histogram{};
  std::size_t particles = 0;
  std::size_t converged = 0;
  std::size_t exhausted = 0;
  std::size_t diverged = 0;
  std::size_t clustered = 0;
  double noise_particle_fraction = 0.0;  // particles not assigned to any atom
  double wall_time_ms = 0.0;
};

struct Reconstruction {
  Molecule molecule;  // recovered atoms with inferred bonds
  TrajectoryBatch batch;
  ReconstructionStats stats;
};

// Initialization (uniform or adaptive) -> evolve -> per-element clustering ->
// bond inference. Deterministic in seed.
Reconstruction reconstruct_detailed(const FieldProvider& provider, const ReconstructionConfig& cfg,
                                    const Box& box, std::uint64_t seed, TrajectoryRecord* record = nullptr);

Molecule reconstruct(const FieldProvider& provider, const ReconstructionConfig& cfg, const Box& box,
                     std::uint64_t seed);

// One row of a round-trip report.
struct ReconstructionReport {
  std::string name;
  RmsdResult score;
  ReconstructionStats stats;

  bool success() const { return score.matched; }
};

ReconstructionReport score_reconstruction(std::string name, const Reconstruction& rec, const Molecule& truth);

// {"name", "success", "rmsd", "atom_count_deltas", "iterations_histogram",
//  "noise_particle_fraction", "wall_time_ms"}; rmsd is null on a mismatch and
// wall_time_ms is left out when include_timing is false.
std::string to_json(const ReconstructionReport& report, bool include_timing = true, int indent = -1);

}  // namespace vecfield
