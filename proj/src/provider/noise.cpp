#include "vecfield/provider/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vecfield/core/rng.hpp"

namespace vecfield {

namespace {

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

// Three standard normals attached to a lattice node.
Vec3 node_gaussian(std::uint64_t seed, Element k, long long ix, long long iy, long long iz) {
  std::uint64_t h = hash_combine(seed, 0x6e6f697365ULL + index_of(k));
  h = hash_combine(h, static_cast<std::uint64_t>(ix));
  h = hash_combine(h, static_cast<std::uint64_t>(iy));
  h = hash_combine(h, static_cast<std::uint64_t>(iz));
  double g[4];
  for (int pair = 0; pair < 2; ++pair) {
    const double u1 = 1.0 - to_unit_interval(mix64(h + 2 * pair));  // (0, 1]
    const double u2 = to_unit_interval(mix64(h + 2 * pair + 1));
    const double r = std::sqrt(-2.0 * std::log(u1));
    g[2 * pair] = r * std::cos(2.0 * std::numbers::pi * u2);
    g[2 * pair + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
  }
  return {g[0], g[1], g[2]};
}

}  // namespace

void NoiseSpec::validate() const {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("noise sigma must be finite and >= 0");
  if (!(correlation_length > 0.0)) throw std::invalid_argument("noise correlation length must be positive");
}

Vec3 lattice_noise(const Vec3& q, Element k, std::uint64_t seed, double correlation_length) {
  const Vec3 g = q * (1.0 / correlation_length);
  const double fx = std::floor(g.x);
  const double fy = std::floor(g.y);
  const double fz = std::floor(g.z);
  const double sx = smoothstep(g.x - fx);
  const double sy = smoothstep(g.y - fy);
  const double sz = smoothstep(g.z - fz);
  const auto ix = static_cast<long long>(fx);
  const auto iy = static_cast<long long>(fy);
  const auto iz = static_cast<long long>(fz);

  Vec3 acc;
  double w2 = 0.0;
  for (int dz = 0; dz < 2; ++dz) {
    const double wz = dz ? sz : 1.0 - sz;
    for (int dy = 0; dy < 2; ++dy) {
      const double wy = dy ? sy : 1.0 - sy;
      for (int dx = 0; dx < 2; ++dx) {
        const double w = (dx ? sx : 1.0 - sx) * wy * wz;
        if (w == 0.0) continue;
        acc += node_gaussian(seed, k, ix + dx, iy + dy, iz + dz) * w;
        w2 += w * w;
      }
    }
  }
  return acc * (1.0 / std::sqrt(w2));
}

NoisyProvider::NoisyProvider(ProviderPtr base, NoiseSpec spec) : base_(std::move(base)), spec_(spec) {
  if (!base_) throw std::invalid_argument("NoisyProvider: null base provider");
  spec_.validate();
}

Vec3 NoisyProvider::sample(const Vec3& q, Element k) const {
  const Vec3 clean = base_->sample(q, k);
  if (spec_.sigma == 0.0) return clean;
  return clean + lattice_noise(q, k, spec_.seed, spec_.correlation_length) * spec_.sigma;
}

QueryStats NoisyProvider::query(std::span<const Vec3> points, Element k, std::span<Vec3> out) const {
  const QueryStats stats = base_->query(points, k, out);
  if (spec_.sigma == 0.0) return stats;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] += lattice_noise(points[i], k, spec_.seed, spec_.correlation_length) * spec_.sigma;
  }
  return stats;
}

ProviderPtr wrap_noise(ProviderPtr base, const NoiseSpec& spec) {
  spec.validate();
  if (spec.sigma == 0.0) return base;
  return std::make_shared<NoisyProvider>(std::move(base), spec);
}

}  // namespace vecfield
