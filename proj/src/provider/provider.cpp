#include "vecfield/provider/provider.hpp"

#include <stdexcept>

namespace vecfield {

QueryStats FieldProvider::query(std::span<const Vec3> points, Element k, std::span<Vec3> out) const {
  if (out.size() != points.size()) throw std::invalid_argument("query: output size mismatch");
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = sample(points[i], k);
  return {};
}

std::vector<Vec3> FieldProvider::query(std::span<const Vec3> points, Element k) const {
  if (points.empty()) throw std::invalid_argument("query: empty point list");
  std::vector<Vec3> out(points.size());
  query(points, k, out);
  return out;
}

}  // namespace vecfield
