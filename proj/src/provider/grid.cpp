#include "vecfield/provider/grid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace vecfield {

namespace {

constexpr std::array<char, 8> kMagic{'V', 'F', 'G', 'R', 'I', 'D', '1', '\0'};

// Fractional grid coordinate along one axis, clamped to [0, L-1]. Values
// within 1e-12 of an integer snap to it so anchors reproduce stored samples.
double axis_coordinate(double q, double origin, double spacing, int size, bool& clamped) {
  double f = (q - origin) / spacing;
  const double r = std::round(f);
  if (std::abs(f - r) < 1e-12) f = r;
  if (f < 0.0) {
    clamped = true;
    return 0.0;
  }
  if (f > size - 1) {
    clamped = true;
    return size - 1;
  }
  return f;
}

template <typename T>
void put(std::ostream& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  std::array<unsigned char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T))) {
    throw std::runtime_error("grid file truncated");
  }
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

void LatentGrid::validate() const {
  if (size < 2) throw std::invalid_argument("grid size L must be at least 2");
  if (!(spacing > 0.0)) throw std::invalid_argument("grid spacing must be positive");
  if (elements == 0 || elements > kMaxElements) throw std::invalid_argument("grid element count must be in [1, 8]");
  const std::size_t expected = static_cast<std::size_t>(size) * size * size * elements;
  if (samples.size() != expected) {
    throw std::invalid_argument("grid holds " + std::to_string(samples.size()) + " samples, expected " +
                                std::to_string(expected));
  }
}

Vec3 LatentGrid::interpolate(const Vec3& q, std::size_t k, bool* clamped) const {
  bool was_clamped = false;
  const double fx = axis_coordinate(q.x, origin.x, spacing, size, was_clamped);
  const double fy = axis_coordinate(q.y, origin.y, spacing, size, was_clamped);
  const double fz = axis_coordinate(q.z, origin.z, spacing, size, was_clamped);
  if (clamped) *clamped = was_clamped;

  const int ix = std::min(static_cast<int>(fx), size - 2);
  const int iy = std::min(static_cast<int>(fy), size - 2);
  const int iz = std::min(static_cast<int>(fz), size - 2);
  const double tx = fx - ix;
  const double ty = fy - iy;
  const double tz = fz - iz;

  Vec3 acc;
  for (int dz = 0; dz < 2; ++dz) {
    const double wz = dz ? tz : 1.0 - tz;
    for (int dy = 0; dy < 2; ++dy) {
      const double wy = dy ? ty : 1.0 - ty;
      for (int dx = 0; dx < 2; ++dx) {
        const double w = (dx ? tx : 1.0 - tx) * wy * wz;
        if (w == 0.0) continue;
        acc += at(ix + dx, iy + dy, iz + dz, k) * w;
      }
    }
  }
  return acc;
}

LatentGrid build_grid(const Molecule& mol, int size, double spacing, const FieldParams& params,
                      std::size_t element_count) {
  if (size < 2) throw std::invalid_argument("grid size L must be at least 2");
  if (!(spacing > 0.0)) throw std::invalid_argument("grid spacing must be positive");
  const auto elements = element_set(element_count);

  const Vec3 center = mol.centroid();
  const double half = 0.5 * spacing * (size - 1);
  double max_dev = 0.0;
  for (const Atom& a : mol.atoms()) {
    const Vec3 d = a.position - center;
    max_dev = std::max({max_dev, std::abs(d.x), std::abs(d.y), std::abs(d.z)});
  }
  if (max_dev > half) {
    const int required = static_cast<int>(std::ceil(2.0 * max_dev / spacing)) + 1;
    throw std::invalid_argument("molecule extends " + std::to_string(max_dev) + " A from its centroid but grid half-extent is " +
                                std::to_string(half) + " A; need L >= " + std::to_string(required));
  }

  LatentGrid grid;
  grid.size = size;
  grid.elements = element_count;
  grid.spacing = spacing;
  grid.origin = center - Vec3{half, half, half};
  grid.samples.resize(static_cast<std::size_t>(size) * size * size * element_count);

  const MoleculeField field(mol, params);
  const std::ptrdiff_t planes = size;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t iz = 0; iz < planes; ++iz) {
    for (int iy = 0; iy < size; ++iy) {
      for (int ix = 0; ix < size; ++ix) {
        const Vec3 p = grid.anchor(ix, iy, static_cast<int>(iz));
        for (std::size_t k = 0; k < element_count; ++k) {
          grid.samples[grid.index(ix, iy, static_cast<int>(iz), k)] = field.evaluate(p, elements[k]);
        }
      }
    }
  }
  return grid;
}

void write_grid(std::ostream& out, const LatentGrid& grid) {
  grid.validate();
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.size));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.elements));
  put<double>(out, grid.spacing);
  put<double>(out, grid.origin.x);
  put<double>(out, grid.origin.y);
  put<double>(out, grid.origin.z);
  for (const Vec3& v : grid.samples) {
    put<double>(out, v.x);
    put<double>(out, v.y);
    put<double>(out, v.z);
  }
  if (!out) throw std::runtime_error("failed writing grid");
}

LatentGrid read_grid(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw std::runtime_error("not a VFGRID1 file");
  LatentGrid grid;
  grid.size = static_cast<int>(get<std::uint32_t>(in));
  grid.elements = get<std::uint32_t>(in);
  grid.spacing = get<double>(in);
  grid.origin.x = get<double>(in);
  grid.origin.y = get<double>(in);
  grid.origin.z = get<double>(in);
  if (grid.size < 2 || grid.size > 4096 || grid.elements == 0 || grid.elements > kMaxElements) {
    throw std::runtime_error("grid header out of range");
  }
  grid.samples.resize(static_cast<std::size_t>(grid.size) * grid.size * grid.size * grid.elements);
  for (Vec3& v : grid.samples) {
    v.x = get<double>(in);
    v.y = get<double>(in);
    v.z = get<double>(in);
  }
  grid.validate();
  return grid;
}

void write_grid_file(const std::filesystem::path& path, const LatentGrid& grid) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_grid(out, grid);
}

LatentGrid read_grid_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_grid(in);
}

GridProvider::GridProvider(LatentGrid grid) : grid_(std::move(grid)) { grid_.validate(); }

Vec3 GridProvider::sample(const Vec3& q, Element k) const {
  if (index_of(k) >= grid_.elements) return {};
  return grid_.interpolate(q, index_of(k));
}

QueryStats GridProvider::query(std::span<const Vec3> points, Element k, std::span<Vec3> out) const {
  if (out.size() != points.size()) throw std::invalid_argument("query: output size mismatch");
  QueryStats stats;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (index_of(k) >= grid_.elements) {
      out[i] = {};
      continue;
    }
    bool clamped = false;
    out[i] = grid_.interpolate(points[i], index_of(k), &clamped);
    if (clamped) ++stats.clamped;
  }
  return stats;
}

}  // namespace vecfield
