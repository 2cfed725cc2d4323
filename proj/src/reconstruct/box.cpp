#include "vecfield/reconstruct/box.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vecfield {

Vec3 Box::from_unit(const Vec3& u) const {
  const Vec3 local{(2.0 * u.x - 1.0) * half_extent.x, (2.0 * u.y - 1.0) * half_extent.y,
                   (2.0 * u.z - 1.0) * half_extent.z};
  return center + axes * local;
}

bool Box::contains(const Vec3& p, double tol) const {
  const Vec3 local = axes.transposed() * (p - center);
  return std::abs(local.x) <= half_extent.x + tol && std::abs(local.y) <= half_extent.y + tol &&
         std::abs(local.z) <= half_extent.z + tol;
}

Box Box::transformed(const Mat3& rotation, const Vec3& translation) const {
  return {rotation * center + translation, half_extent, rotation * axes};
}

Box Box::around(const Molecule& mol, double padding) {
  if (mol.empty()) return {{}, {padding, padding, padding}};
  constexpr double inf = std::numeric_limits<double>::infinity();
  Vec3 lo{inf, inf, inf};
  Vec3 hi{-inf, -inf, -inf};
  for (const Atom& a : mol.atoms()) {
    for (int i = 0; i < 3; ++i) {
      lo[i] = std::min(lo[i], a.position[i]);
      hi[i] = std::max(hi[i], a.position[i]);
    }
  }
  const Vec3 pad{padding, padding, padding};
  return from_corners(lo - pad, hi + pad);
}

Box Box::from_corners(const Vec3& lo, const Vec3& hi) { return {(lo + hi) * 0.5, (hi - lo) * 0.5}; }

}  // namespace vecfield
