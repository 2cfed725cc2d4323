#include "vecfield/chem/canonical.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "vecfield/core/rng.hpp"

namespace vecfield {

namespace {

std::uint64_t hash_sorted(std::uint64_t seed, std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  std::uint64_t h = mix64(seed ^ values.size());
  for (std::uint64_t v : values) h = hash_combine(h, v);
  return h;
}

std::size_t distinct(const std::vector<std::uint64_t>& colors) {
  return std::set<std::uint64_t>(colors.begin(), colors.end()).size();
}

}  // namespace

StructureDigest canonical_hash(const Molecule& mol) {
  const std::size_t n = mol.size();
  std::vector<std::vector<std::pair<std::size_t, int>>> adjacency(n);
  for (const Bond& b : mol.bonds()) {
    adjacency[b.a].emplace_back(b.b, b.order);
    adjacency[b.b].emplace_back(b.a, b.order);
  }

  std::vector<std::uint64_t> color(n);
  for (std::size_t i = 0; i < n; ++i) color[i] = mix64(0x51ed2701ULL + index_of(mol.atoms()[i].element));

  std::size_t classes = distinct(color);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint64_t> neighborhood;
      neighborhood.reserve(adjacency[i].size());
      for (auto [j, order] : adjacency[i]) neighborhood.push_back(hash_combine(color[j], static_cast<std::uint64_t>(order)));
      next[i] = hash_sorted(color[i], std::move(neighborhood));
    }
    color = std::move(next);
    const std::size_t refined = distinct(color);
    if (refined == classes) break;
    classes = refined;
  }

  std::uint64_t digest = hash_sorted(mix64(n) ^ mol.bonds().size(), color);
  return digest;
}

}  // namespace vecfield
