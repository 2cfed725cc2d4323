#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vecfield/provider/provider.hpp"

namespace vecfield {

using GhostSites = std::array<std::vector<Vec3>, kMaxElements>;

// Places `per_element` ghost sites for every element of the set that is absent
// from `mol`: each at a randomly chosen atom shifted by `offset` Angstrom in a
// random direction. Mimics a decoder leaking attraction into empty channels.
GhostSites make_ghost_sites(const Molecule& mol, std::size_t element_count, int per_element, double offset,
                            std::uint64_t seed);

// base(q, k) + strength * attraction(q, sites[k]). Used to test whether the
// exclusive repulsion suppresses spurious attractors.
class GhostAttractorProvider final : public FieldProvider {
 public:
  GhostAttractorProvider(ProviderPtr base, GhostSites sites, double strength, const FieldParams& params);

  Vec3 sample(const Vec3& q, Element k) const override;

 private:
  ProviderPtr base_;
  GhostSites sites_;
  double strength_;
  FieldParams params_;
};

}  // namespace vecfield
