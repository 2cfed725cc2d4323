#pragma once

#include <cstdint>

#include "vecfield/provider/provider.hpp"

namespace vecfield {

struct NoiseSpec {
  double sigma = 0.0;  // per-component standard deviation
  std::uint64_t seed = 0;
  double correlation_length = 1.0;  // lattice spacing of the noise field, Angstrom

  void validate() const;
};

// Smooth Gaussian noise field n(q) for one element channel: hashed N(0, I)
// vectors on a cubic lattice, blended with smoothstep weights and rescaled by
// 1/sqrt(sum w^2) so every point has an exact N(0, I) marginal. Deterministic
// in (seed, element, q).
Vec3 lattice_noise(const Vec3& q, Element k, std::uint64_t seed, double correlation_length);

// Adds sigma * lattice_noise to every vector of the wrapped provider.
class NoisyProvider final : public FieldProvider {
 public:
  NoisyProvider(ProviderPtr base, NoiseSpec spec);

  Vec3 sample(const Vec3& q, Element k) const override;
  QueryStats query(std::span<const Vec3> points, Element k, std::span<Vec3> out) const override;
  using FieldProvider::query;

  const NoiseSpec& spec() const { return spec_; }

 private:
  ProviderPtr base_;
  NoiseSpec spec_;
};

// sigma == 0 returns `base` itself.
ProviderPtr wrap_noise(ProviderPtr base, const NoiseSpec& spec);

}  // namespace vecfield
