#pragma once

#include <cstdint>
#include <random>

#include "vecfield/core/vec3.hpp"

namespace vecfield {

// SplitMix64 finalizer; used to derive independent sub-seeds and for
// stateless hashing of lattice coordinates.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return mix64(seed ^ mix64(value));
}

// 53-bit uniform in [0, 1) from a 64-bit word.
constexpr double to_unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  double uniform() { return to_unit_interval(engine_()); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() { return normal_(engine_); }
  std::uint64_t next() { return engine_(); }

  // Uniformly distributed unit vector.
  Vec3 direction() {
    for (;;) {
      Vec3 v{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      const double n2 = norm2(v);
      if (n2 > 1e-6 && n2 <= 1.0) return v * (1.0 / std::sqrt(n2));
    }
  }

  // Haar-random rotation.
  Mat3 rotation() { return rotation_from_quaternion(normal(), normal(), normal(), normal()); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace vecfield
