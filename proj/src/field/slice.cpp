#include "vecfield/field/slice.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "vecfield/field/field.hpp"

namespace vecfield {

void PlaneSpec::validate() const {
  if (!is_finite(point) || !is_finite(normal)) throw std::invalid_argument("plane: non-finite point or normal");
  if (norm(normal) < 1e-12) throw std::invalid_argument("plane: normal must be non-zero");
  if (!(half_extent > 0.0)) throw std::invalid_argument("plane: half extent must be positive");
  if (resolution < 1) throw std::invalid_argument("plane: resolution must be at least 1");
}

std::vector<Vec3> plane_points(const PlaneSpec& plane) {
  plane.validate();
  const Vec3 n = plane.normal * (1.0 / norm(plane.normal));
  // Any vector not parallel to n seeds the in-plane basis.
  const Vec3 seed = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 u = cross(n, seed);
  u = u * (1.0 / norm(u));
  const Vec3 w = cross(n, u);

  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(plane.resolution) * plane.resolution);
  const int r = plane.resolution;
  for (int i = 0; i < r; ++i) {
    const double a = r == 1 ? 0.0 : -plane.half_extent + 2.0 * plane.half_extent * i / (r - 1);
    for (int j = 0; j < r; ++j) {
      const double b = r == 1 ? 0.0 : -plane.half_extent + 2.0 * plane.half_extent * j / (r - 1);
      pts.push_back(plane.point + u * a + w * b);
    }
  }
  return pts;
}

std::vector<SliceRow> field_slice(const Molecule& mol, const PlaneSpec& plane, const FieldParams& params,
                                  std::span<const Element> elements) {
  const auto pts = plane_points(plane);
  const MoleculeField field(mol, params);
  std::vector<SliceRow> rows;
  rows.reserve(pts.size() * elements.size());
  for (const Vec3& p : pts) {
    for (Element e : elements) {
      const Vec3 v = field.evaluate(p, e);
      rows.push_back({p, e, v, norm(v)});
    }
  }
  return rows;
}

std::string slice_csv(const std::vector<SliceRow>& rows) {
  std::string out = "x,y,z,element,vx,vy,vz,magnitude\n";
  char buf[256];
  for (const SliceRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%s,%.9g,%.9g,%.9g,%.9g\n", r.position.x, r.position.y,
                  r.position.z, std::string(symbol(r.element)).c_str(), r.vector.x, r.vector.y, r.vector.z,
                  r.magnitude);
    out += buf;
  }
  return out;
}

}  // namespace vecfield
