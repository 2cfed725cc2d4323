#pragma once

#include <string>
#include <vector>

#include "vecfield/chem/molecule.hpp"
#include "vecfield/field/params.hpp"

namespace vecfield {

// Square planar patch: `resolution` x `resolution` points spanning
// [-half_extent, half_extent] along two axes orthogonal to `normal`.
struct PlaneSpec {
  Vec3 point;
  Vec3 normal{0, 0, 1};
  double half_extent = 3.0;
  int resolution = 64;

  void validate() const;
};

std::vector<Vec3> plane_points(const PlaneSpec& plane);

struct SliceRow {
  Vec3 position;
  Element element;
  Vec3 vector;
  double magnitude;
};

// Rows ordered by point (row-major over the plane), then element.
std::vector<SliceRow> field_slice(const Molecule& mol, const PlaneSpec& plane, const FieldParams& params,
                                  std::span<const Element> elements);

// CSV with header x,y,z,element,vx,vy,vz,magnitude.
std::string slice_csv(const std::vector<SliceRow>& rows);

}  // namespace vecfield
