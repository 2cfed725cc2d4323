#pragma once

#include "vecfield/chem/molecule.hpp"

namespace vecfield {

// Box centre + R * (half_extent * u) for u in [-1, 1]^3. `axes` is identity
// for an axis-aligned box; rotating it lets a box follow a rigid motion.
struct Box {
  Vec3 center;
  Vec3 half_extent;
  Mat3 axes = Mat3::identity();

  double volume() const { return 8.0 * half_extent.x * half_extent.y * half_extent.z; }
  Vec3 from_unit(const Vec3& u) const;  // u in [0, 1]^3
  bool contains(const Vec3& p, double tol = 1e-12) const;
  Box transformed(const Mat3& rotation, const Vec3& translation) const;

  // Axis-aligned bounding box of the atoms, grown by `padding` per side.
  static Box around(const Molecule& mol, double padding);
  // Axis-aligned box from two corners.
  static Box from_corners(const Vec3& lo, const Vec3& hi);
};

}  // namespace vecfield
