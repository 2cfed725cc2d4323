#pragma once

#include <span>
#include <vector>

#include "vecfield/core/vec3.hpp"

namespace vecfield {

inline constexpr int kNoise = -1;

// Density clustering. A point is core when at least n_min points (itself
// included) lie within eps. Clusters are the connected components of core
// points under the eps relation, numbered by their lowest core index. A
// non-core point within eps of a core point joins the cluster of its nearest
// core neighbour (ties: lower index); everything else is kNoise. Neighbour
// search uses a uniform cell list with cell size eps.
std::vector<int> dbscan(std::span<const Vec3> points, double eps, int n_min);

}  // namespace vecfield
