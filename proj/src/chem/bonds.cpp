#include "vecfield/chem/bonds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace vecfield {

namespace {

struct CellKey {
  long long x, y, z;
  bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(k.y) * 0xc2b2ae3d27d4eb4fULL;
    h ^= static_cast<std::uint64_t>(k.z) * 0x165667b19e3779f9ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

CellKey cell_of(const Vec3& p, double cell) {
  return {static_cast<long long>(std::floor(p.x / cell)), static_cast<long long>(std::floor(p.y / cell)),
          static_cast<long long>(std::floor(p.z / cell))};
}

int target_valence(Element e, int current) {
  for (int v : allowed_valences(e)) {
    if (v >= current) return v;
  }
  return current;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

Molecule infer_bonds(const Molecule& mol, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("bond tolerance rho must be positive");
  const auto& atoms = mol.atoms();
  double max_radius = 0.0;
  for (const Atom& a : atoms) max_radius = std::max(max_radius, covalent_radius(a.element));
  const double cell = std::max(rho * 2.0 * max_radius, 1e-3);

  std::unordered_map<CellKey, std::vector<std::size_t>, CellKeyHash> grid;
  for (std::size_t i = 0; i < atoms.size(); ++i) grid[cell_of(atoms[i].position, cell)].push_back(i);

  std::vector<Bond> bonds;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const CellKey c = cell_of(atoms[i].position, cell);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        for (long long dz = -1; dz <= 1; ++dz) {
          auto it = grid.find({c.x + dx, c.y + dy, c.z + dz});
          if (it == grid.end()) continue;
          for (std::size_t j : it->second) {
            if (j <= i) continue;
            const double cutoff = rho * (covalent_radius(atoms[i].element) + covalent_radius(atoms[j].element));
            if (distance(atoms[i].position, atoms[j].position) <= cutoff) bonds.push_back({i, j, 1});
          }
        }
      }
    }
  }
  std::sort(bonds.begin(), bonds.end(), [](const Bond& l, const Bond& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });
  return Molecule(atoms, std::move(bonds));
}

Molecule complete_valences(const Molecule& mol) {
  std::vector<Bond> bonds = mol.bonds();
  const auto& atoms = mol.atoms();
  std::vector<int> valence = mol.valences();
  std::vector<int> deficit(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    deficit[i] = std::max(0, target_valence(atoms[i].element, valence[i]) - valence[i]);
  }

  std::vector<std::size_t> order(bonds.size());
  std::iota(order.begin(), order.end(), 0);
  auto length = [&](std::size_t k) { return distance(atoms[bonds[k].a].position, atoms[bonds[k].b].position); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return length(l) < length(r); });

  for (std::size_t k : order) {
    Bond& b = bonds[k];
    const int inc = std::min({deficit[b.a], deficit[b.b], 3 - b.order});
    if (inc <= 0) continue;
    b.order += inc;
    deficit[b.a] -= inc;
    deficit[b.b] -= inc;
  }
  return Molecule(atoms, std::move(bonds));
}

std::vector<std::size_t> fragment_labels(const Molecule& mol) {
  const std::size_t n = mol.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Bond& b : mol.bonds()) {
    const std::size_t ra = find_root(parent, b.a);
    const std::size_t rb = find_root(parent, b.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::size_t> label(n);
  std::unordered_map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find_root(parent, i);
    auto [it, inserted] = ids.emplace(r, ids.size());
    label[i] = it->second;
  }
  return label;
}

std::size_t fragment_count(const Molecule& mol) {
  const auto labels = fragment_labels(mol);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<std::size_t> largest_fragment(const Molecule& mol) {
  const auto labels = fragment_labels(mol);
  if (labels.empty()) return {};
  std::vector<std::size_t> sizes(*std::max_element(labels.begin(), labels.end()) + 1, 0);
  for (std::size_t l : labels) ++sizes[l];
  const std::size_t best =
      static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == best) out.push_back(i);
  }
  return out;
}

}  // namespace vecfield
