// Sequential reference for field_batch; kept for determinism tests and the
// benchmark baseline.
#include <stdexcept>

#include "vecfield/field/field.hpp"

namespace vecfield::serial {

std::vector<FieldSample> field_batch(std::span<const Vec3> queries, const Molecule& mol,
                                     const FieldParams& params, std::size_t element_count) {
  if (queries.empty()) throw std::invalid_argument("field_batch: empty query list");
  const auto elements = element_set(element_count);
  const MoleculeField field(mol, params);
  std::vector<FieldSample> out;
  out.reserve(queries.size());
  for (const Vec3& q : queries) out.push_back(field.sample(q, elements));
  return out;
}

}  // namespace vecfield::serial
