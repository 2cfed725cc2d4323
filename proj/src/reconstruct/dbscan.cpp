#include "vecfield/reconstruct/dbscan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace vecfield {

namespace {

struct Cell {
  std::int64_t x, y, z;
  bool operator==(const Cell&) const = default;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    std::uint64_t h = static_cast<std::uint64_t>(c.x) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(c.y) * 0xc2b2ae3d27d4eb4fULL + (h << 6);
    h ^= static_cast<std::uint64_t>(c.z) * 0x165667b19e3779f9ULL + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

class CellList {
 public:
  CellList(std::span<const Vec3> points, double cell) : points_(points), cell_(cell) {
    for (std::size_t i = 0; i < points.size(); ++i) cells_[cell_of(points[i])].push_back(i);
  }

  template <typename F>
  void for_each_neighbor(std::size_t i, double eps, F&& f) const {
    const Cell c = cell_of(points_[i]);
    const double eps2 = eps * eps;
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          auto it = cells_.find({c.x + dx, c.y + dy, c.z + dz});
          if (it == cells_.end()) continue;
          for (std::size_t j : it->second) {
            const double d2 = norm2(points_[i] - points_[j]);
            if (d2 <= eps2) f(j, d2);
          }
        }
      }
    }
  }

 private:
  Cell cell_of(const Vec3& p) const {
    return {static_cast<std::int64_t>(std::floor(p.x / cell_)), static_cast<std::int64_t>(std::floor(p.y / cell_)),
            static_cast<std::int64_t>(std::floor(p.z / cell_))};
  }

  std::span<const Vec3> points_;
  double cell_;
  std::unordered_map<Cell, std::vector<std::size_t>, CellHash> cells_;
};

std::size_t root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

std::vector<int> dbscan(std::span<const Vec3> points, double eps, int n_min) {
  if (!(eps > 0.0)) throw std::invalid_argument("dbscan: eps must be positive");
  if (n_min < 1) throw std::invalid_argument("dbscan: n_min must be >= 1");
  const std::size_t n = points.size();
  std::vector<int> labels(n, kNoise);
  if (n == 0) return labels;

  const CellList cells(points, eps);
  std::vector<char> core(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int count = 0;
    cells.for_each_neighbor(i, eps, [&](std::size_t, double) { ++count; });
    core[i] = count >= n_min;
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!core[i]) continue;
    cells.for_each_neighbor(i, eps, [&](std::size_t j, double) {
      if (!core[j]) return;
      const std::size_t a = root(parent, i);
      const std::size_t b = root(parent, j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });
  }

  std::unordered_map<std::size_t, int> ids;
  for (std::size_t i = 0; i < n; ++i) {
    if (!core[i]) continue;
    auto [it, inserted] = ids.emplace(root(parent, i), static_cast<int>(ids.size()));
    labels[i] = it->second;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (core[i]) continue;
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = n;
    cells.for_each_neighbor(i, eps, [&](std::size_t j, double d2) {
      if (!core[j]) return;
      if (d2 < best || (d2 == best && j < best_j)) {
        best = d2;
        best_j = j;
      }
    });
    if (best_j < n) labels[i] = labels[best_j];
  }
  return labels;
}

}  // namespace vecfield
