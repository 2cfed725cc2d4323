#pragma once

#include <span>
#include <vector>

#include "vecfield/chem/molecule.hpp"
#include "vecfield/field/params.hpp"

namespace vecfield {

// Atoms whose softmax weight relative to the nearest one falls below 2^-60
// are skipped; their contribution is under 1e-18 in absolute terms.
inline constexpr double kSoftmaxCutoff = 41.58883083359672;  // 60 ln 2

// softmax(-d_j / sigma_sf) with max-subtraction. Throws on empty input.
std::vector<double> softmax_weights(std::span<const double> distances, double sigma_sf);

// Gaussian-Clip magnitude exp(-d~^2 / (2 sigma_mag^2)) d~ with d~ = min(d, d_clip).
double magnitude_weight(double d, const FieldParams& params);

// Magnitude term of params.variant.
double variant_magnitude(double d, const FieldParams& params);

// sup_d variant_magnitude(d); every field vector is bounded by it.
double magnitude_bound(const FieldParams& params);

// sum_j w_j^softmax w_j^mag (a_j - q) / (|a_j - q| + eps) over `atoms`,
// using the magnitude term of params.variant. Zero for an empty span.
Vec3 attraction(const Vec3& q, std::span<const Vec3> atoms, const FieldParams& params);

struct FieldValue {
  Vec3 vector;
  bool absent_type = false;  // no atom of the requested element in the molecule
};

// Gaussian-Clip field for element k, irrespective of params.variant. Absent
// elements yield the exclusive repulsion when params.exclusive is set and the
// zero vector otherwise; both raise absent_type.
FieldValue ground_truth_field(const Vec3& q, const Molecule& mol, Element k, const FieldParams& params);

// Same contract for the construction selected by params.variant.
FieldValue variant_field(const Vec3& q, const Molecule& mol, Element k, const FieldParams& params);

// Negated type-agnostic attraction over every atom: points away from the
// molecule, so particles of an absent type have no equilibrium near any atom.
// Throws std::invalid_argument if k_absent is present in mol.
Vec3 exclusive_field(const Vec3& q, const Molecule& mol, Element k_absent, const FieldParams& params);

struct FieldSample {
  Vec3 query;
  std::vector<Vec3> vectors;  // one per element of the configured set
};

// Per-element atom coordinates prepared once for repeated evaluation.
class MoleculeField {
 public:
  MoleculeField(const Molecule& mol, const FieldParams& params);

  const FieldParams& params() const { return params_; }
  bool present(Element k) const { return !by_element_[index_of(k)].empty(); }

  // Field for element k using params.variant and params.exclusive.
  Vec3 evaluate(const Vec3& q, Element k) const;

  FieldSample sample(const Vec3& q, std::span<const Element> elements) const;

 private:
  FieldParams params_;
  std::vector<Vec3> all_;
  std::vector<std::vector<Vec3>> by_element_;
};

// Evaluates every query against all `element_count` channels. Queries are
// processed in parallel (OpenMP); each result equals the serial evaluation
// bit for bit. Throws on an empty query list.
std::vector<FieldSample> field_batch(std::span<const Vec3> queries, const Molecule& mol,
                                     const FieldParams& params, std::size_t element_count = kQm9Elements);

namespace serial {
std::vector<FieldSample> field_batch(std::span<const Vec3> queries, const Molecule& mol,
                                     const FieldParams& params, std::size_t element_count = kQm9Elements);
}  // namespace serial

}  // namespace vecfield
