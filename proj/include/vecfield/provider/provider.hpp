#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "vecfield/chem/molecule.hpp"
#include "vecfield/field/field.hpp"

namespace vecfield {

struct QueryStats {
  std::size_t clamped = 0;  // queries moved onto a grid boundary before interpolation
};

// Source of per-element field vectors at arbitrary points. Implementations
// are immutable after construction and safe to query from many threads.
class FieldProvider {
 public:
  virtual ~FieldProvider() = default;

  virtual Vec3 sample(const Vec3& q, Element k) const = 0;

  // Fills out[i] for points[i]. out.size() must equal points.size().
  virtual QueryStats query(std::span<const Vec3> points, Element k, std::span<Vec3> out) const;

  // Throws std::invalid_argument on an empty point list.
  std::vector<Vec3> query(std::span<const Vec3> points, Element k) const;
};

using ProviderPtr = std::shared_ptr<const FieldProvider>;

// Delegates to the analytic construction for a known molecule.
class AnalyticProvider final : public FieldProvider {
 public:
  AnalyticProvider(const Molecule& mol, const FieldParams& params) : field_(mol, params) {}

  Vec3 sample(const Vec3& q, Element k) const override { return field_.evaluate(q, k); }
  const MoleculeField& field() const { return field_; }

 private:
  MoleculeField field_;
};

}  // namespace vecfield
