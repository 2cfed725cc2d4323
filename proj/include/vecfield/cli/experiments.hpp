#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vecfield/chem/molecule.hpp"
#include "vecfield/field/params.hpp"
#include "vecfield/metrics/report.hpp"
#include "vecfield/provider/provider.hpp"
#include "vecfield/reconstruct/reconstruct.hpp"

namespace vecfield {

// How a molecule's field is presented to the reconstruction:
//   analytic            exact construction
//   grid:L:spacing      trilinear grid centred on the molecule
//   noisy:sigma         analytic plus smooth Gaussian noise
//   spurious:strength   analytic plus ghost attractors in absent channels
struct ProviderKind {
  enum class Type { Analytic, Grid, Noisy, Spurious };
  Type type = Type::Analytic;
  int grid_size = 5;
  double grid_spacing = 3.0;
  double sigma = 0.0;
  double strength = 0.5;

  // Throws std::invalid_argument with the accepted forms on bad input.
  static ProviderKind parse(std::string_view text);
  std::string str() const;
};

inline constexpr int kGhostSitesPerElement = 2;
inline constexpr double kGhostOffset = 0.3;

ProviderPtr make_provider(const Molecule& mol, const ProviderKind& kind, const FieldParams& params,
                          std::size_t element_count, std::uint64_t seed);

// Field variant with an optional "+exclusive" suffix, e.g. "Tanh+exclusive".
// Names are matched case-insensitively. Throws std::invalid_argument listing
// the valid names.
FieldParams parse_variant_spec(std::string_view text, FieldParams base = {});
std::string variant_spec(const FieldParams& params);

struct RoundTripSummary {
  std::vector<ReconstructionReport> reports;
  std::vector<Molecule> recovered;
  double success_rate = 0.0;     // percent
  double mean_rmsd = 0.0;        // over successful molecules; NaN if none
  std::size_t spurious_atoms = 0;  // recovered atoms of elements absent from the input
};

// Reconstructs every molecule of the corpus from its provider. Molecule i
// uses seed hash_combine(seed, i) for the provider and the particles, so the
// result does not depend on thread count or scheduling.
RoundTripSummary run_roundtrip(std::span<const Molecule> corpus, const ProviderKind& kind,
                               const FieldParams& params, const ReconstructionConfig& cfg, std::uint64_t seed);

}  // namespace vecfield
