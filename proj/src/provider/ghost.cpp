#include "vecfield/provider/ghost.hpp"

#include <stdexcept>

#include "vecfield/core/rng.hpp"

namespace vecfield {

GhostSites make_ghost_sites(const Molecule& mol, std::size_t element_count, int per_element, double offset,
                            std::uint64_t seed) {
  GhostSites sites;
  if (mol.empty()) return sites;
  Rng rng(seed);
  for (Element e : element_set(element_count)) {
    if (mol.contains(e)) continue;
    for (int i = 0; i < per_element; ++i) {
      const auto& host = mol.atoms()[rng.next() % mol.size()];
      sites[index_of(e)].push_back(host.position + rng.direction() * offset);
    }
  }
  return sites;
}

GhostAttractorProvider::GhostAttractorProvider(ProviderPtr base, GhostSites sites, double strength,
                                               const FieldParams& params)
    : base_(std::move(base)), sites_(std::move(sites)), strength_(strength), params_(params) {
  if (!base_) throw std::invalid_argument("GhostAttractorProvider: null base provider");
  params_.validate();
}

Vec3 GhostAttractorProvider::sample(const Vec3& q, Element k) const {
  const Vec3 v = base_->sample(q, k);
  const auto& s = sites_[index_of(k)];
  if (s.empty()) return v;
  return v + attraction(q, s, params_) * strength_;
}

}  // namespace vecfield
