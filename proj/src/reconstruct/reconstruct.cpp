#include "vecfield/reconstruct/reconstruct.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <nlohmann/json.hpp>

#include "vecfield/chem/bonds.hpp"
#include "vecfield/reconstruct/evolve.hpp"
#include "vecfield/reconstruct/extract.hpp"
#include "vecfield/reconstruct/init.hpp"

namespace vecfield {

Reconstruction reconstruct_detailed(const FieldProvider& provider, const ReconstructionConfig& cfg,
                                    const Box& box, std::uint64_t seed, TrajectoryRecord* record) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  TrajectoryBatch batch = cfg.adaptive ? init_adaptive(provider, cfg, box, seed)
                                       : init_uniform(cfg.budget, cfg.element_count, box, seed);
  batch = evolve(provider, std::move(batch), cfg, record);
  Extraction extraction = extract_atoms(batch, cfg);

  Reconstruction rec;
  rec.molecule = infer_bonds(extraction.molecule, cfg.rho);

  ReconstructionStats& s = rec.stats;
  s.particles = batch.particle_count();
  s.converged = batch.count(ParticleState::Converged);
  s.exhausted = batch.count(ParticleState::Exhausted);
  s.diverged = batch.count(ParticleState::Diverged);
  s.clustered = extraction.clustered;
  s.noise_particle_fraction =
      s.particles == 0 ? 0.0 : static_cast<double>(s.particles - s.clustered) / static_cast<double>(s.particles);
  for (const ParticleGroup& g : batch.groups) {
    for (const Particle& p : g.particles) {
      if (p.state != ParticleState::Converged) continue;
      const auto bin = static_cast<std::size_t>(static_cast<double>(p.iterations) * kHistogramBins / cfg.t_max);
      ++s.iterations_histogram[std::min(bin, kHistogramBins - 1)];
    }
  }
  rec.batch = std::move(batch);
  s.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

Molecule reconstruct(const FieldProvider& provider, const ReconstructionConfig& cfg, const Box& box,
                     std::uint64_t seed) {
  return reconstruct_detailed(provider, cfg, box, seed).molecule;
}

ReconstructionReport score_reconstruction(std::string name, const Reconstruction& rec, const Molecule& truth) {
  return {std::move(name), rmsd(rec.molecule, truth), rec.stats};
}

std::string to_json(const ReconstructionReport& report, bool include_timing, int indent) {
  nlohmann::ordered_json j;
  j["name"] = report.name;
  j["success"] = report.success();
  if (report.success()) {
    j["rmsd"] = report.score.rmsd;
  } else {
    j["rmsd"] = nullptr;
  }
  nlohmann::ordered_json deltas = nlohmann::ordered_json::object();
  for (Element e : kAllElements) {
    const int d = report.score.deltas[index_of(e)];
    if (d != 0) deltas[std::string(symbol(e))] = d;
  }
  j["atom_count_deltas"] = deltas;
  j["iterations_histogram"] = report.stats.iterations_histogram;
  j["noise_particle_fraction"] = report.stats.noise_particle_fraction;
  if (include_timing) j["wall_time_ms"] = report.stats.wall_time_ms;
  return j.dump(indent);
}

}  // namespace vecfield
