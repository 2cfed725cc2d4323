#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "vecfield/provider/provider.hpp"

namespace vecfield {

inline constexpr double kDefaultGridSpacing = 3.0;
inline constexpr int kDefaultGridSize = 5;

// L^3 anchors x K element channels of sampled field vectors; the stand-in for
// a learned latent grid. Anchor (ix, iy, iz) sits at origin + spacing * (ix, iy, iz).
struct LatentGrid {
  int size = 0;  // L, anchors per axis
  std::size_t elements = 0;  // K
  double spacing = kDefaultGridSpacing;
  Vec3 origin;
  std::vector<Vec3> samples;  // z-major, then y, x, element

  std::size_t index(int ix, int iy, int iz, std::size_t k) const {
    return ((static_cast<std::size_t>(iz) * size + iy) * size + ix) * elements + k;
  }
  const Vec3& at(int ix, int iy, int iz, std::size_t k) const { return samples[index(ix, iy, iz, k)]; }
  Vec3 anchor(int ix, int iy, int iz) const { return origin + Vec3{double(ix), double(iy), double(iz)} * spacing; }
  double extent() const { return spacing * (size - 1); }

  // Trilinear interpolation of channel k. Points outside the grid are clamped
  // to its boundary and reported through `clamped`.
  Vec3 interpolate(const Vec3& q, std::size_t k, bool* clamped = nullptr) const;

  void validate() const;
};

// Samples the analytic field (params.variant, params.exclusive) on a grid
// centred on the molecule centroid. Throws std::invalid_argument naming the
// required L when the molecule does not fit.
LatentGrid build_grid(const Molecule& mol, int size, double spacing, const FieldParams& params,
                      std::size_t element_count = kQm9Elements);

// Binary layout: "VFGRID1\0", uint32 L, uint32 K, float64 spacing,
// float64 origin[3], then L^3*K*3 float64 values; all little-endian.
void write_grid(std::ostream& out, const LatentGrid& grid);
LatentGrid read_grid(std::istream& in);
void write_grid_file(const std::filesystem::path& path, const LatentGrid& grid);
LatentGrid read_grid_file(const std::filesystem::path& path);

class GridProvider final : public FieldProvider {
 public:
  explicit GridProvider(LatentGrid grid);

  Vec3 sample(const Vec3& q, Element k) const override;
  QueryStats query(std::span<const Vec3> points, Element k, std::span<Vec3> out) const override;
  using FieldProvider::query;

  const LatentGrid& grid() const { return grid_; }

 private:
  LatentGrid grid_;
};

}  // namespace vecfield
