#include "vecfield/metrics/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <queue>

#include "vecfield/chem/bonds.hpp"

namespace vecfield {

namespace {

using Bits = std::vector<std::uint64_t>;

struct Graph {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;  // (neighbour, edge id)
};

Graph make_graph(const Molecule& mol) {
  Graph g;
  g.adj.resize(mol.size());
  for (std::size_t e = 0; e < mol.bonds().size(); ++e) {
    const Bond& b = mol.bonds()[e];
    g.adj[b.a].emplace_back(b.b, e);
    g.adj[b.b].emplace_back(b.a, e);
  }
  return g;
}

struct Candidate {
  std::vector<std::size_t> atoms;
  Bits edges;
};

// Path root -> x in a BFS tree, as (atoms from root to x, edge ids).
void tree_path(std::size_t x, const std::vector<std::size_t>& parent, const std::vector<std::size_t>& via,
               std::size_t root, std::vector<std::size_t>& atoms, std::vector<std::size_t>& edges) {
  atoms.clear();
  edges.clear();
  while (x != root) {
    atoms.push_back(x);
    edges.push_back(via[x]);
    x = parent[x];
  }
  atoms.push_back(root);
  std::reverse(atoms.begin(), atoms.end());
}

bool reduce(Bits& v, const std::vector<Bits>& basis, const std::vector<std::size_t>& pivots) {
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const std::size_t p = pivots[r];
    if (v[p / 64] >> (p % 64) & 1U) {
      for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= basis[r][w];
    }
  }
  for (std::uint64_t w : v) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t lowest_bit(const Bits& v) {
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
  }
  return v.size() * 64;
}

}  // namespace

std::vector<std::vector<std::size_t>> smallest_rings(const Molecule& mol) {
  const std::size_t n = mol.size();
  const std::size_t m = mol.bonds().size();
  const std::size_t rank = m + fragment_count(mol) - n;  // cyclomatic number
  std::vector<std::vector<std::size_t>> rings;
  if (n == 0 || rank == 0) return rings;

  const Graph g = make_graph(mol);
  const std::size_t words = (m + 63) / 64;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<Candidate> candidates;
  std::vector<std::size_t> parent(n), via(n), depth(n);
  std::vector<std::size_t> pa, ea, pb, eb;
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(parent.begin(), parent.end(), kNone);
    parent[root] = root;
    depth[root] = 0;
    std::queue<std::size_t> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      const std::size_t x = bfs.front();
      bfs.pop();
      for (auto [y, e] : g.adj[x]) {
        if (parent[y] != kNone) continue;
        parent[y] = x;
        via[y] = e;
        depth[y] = depth[x] + 1;
        bfs.push(y);
      }
    }
    for (std::size_t e = 0; e < m; ++e) {
      const std::size_t x = mol.bonds()[e].a;
      const std::size_t y = mol.bonds()[e].b;
      if (parent[x] == kNone || via[x] == e || via[y] == e) continue;
      tree_path(x, parent, via, root, pa, ea);
      tree_path(y, parent, via, root, pb, eb);
      // The two tree paths may only share the root.
      bool disjoint = true;
      for (std::size_t i = 1; i < pa.size() && disjoint; ++i) {
        disjoint = std::find(pb.begin() + 1, pb.end(), pa[i]) == pb.end();
      }
      if (!disjoint) continue;
      Candidate c;
      c.atoms = pa;
      for (auto it = pb.rbegin(); it + 1 != pb.rend(); ++it) c.atoms.push_back(*it);
      c.edges.assign(words, 0);
      for (std::size_t id : ea) c.edges[id / 64] ^= std::uint64_t{1} << (id % 64);
      for (std::size_t id : eb) c.edges[id / 64] ^= std::uint64_t{1} << (id % 64);
      c.edges[e / 64] ^= std::uint64_t{1} << (e % 64);
      candidates.push_back(std::move(c));
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& l, const Candidate& r) { return l.atoms.size() < r.atoms.size(); });

  std::vector<Bits> basis;
  std::vector<std::size_t> pivots;
  for (const Candidate& c : candidates) {
    Bits v = c.edges;
    if (!reduce(v, basis, pivots)) continue;
    pivots.push_back(lowest_bit(v));
    basis.push_back(std::move(v));
    rings.push_back(c.atoms);
    if (rings.size() == rank) break;
  }
  return rings;
}

Geometry extract_geometry(const Molecule& mol) {
  Geometry geo;
  const auto& atoms = mol.atoms();
  std::vector<std::vector<std::size_t>> neighbours(mol.size());
  for (const Bond& b : mol.bonds()) {
    geo.bond_lengths.push_back(distance(atoms[b.a].position, atoms[b.b].position));
    neighbours[b.a].push_back(b.b);
    neighbours[b.b].push_back(b.a);
  }
  for (std::size_t c = 0; c < mol.size(); ++c) {
    const auto& nb = neighbours[c];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vec3 u = atoms[nb[i]].position - atoms[c].position;
        const Vec3 v = atoms[nb[j]].position - atoms[c].position;
        const double cosine = std::clamp(dot(u, v) / (norm(u) * norm(v)), -1.0, 1.0);
        geo.bond_angles.push_back(std::acos(cosine) * 180.0 / std::numbers::pi);
      }
    }
  }
  geo.valencies = mol.valences();
  for (const auto& ring : smallest_rings(mol)) geo.ring_sizes.push_back(static_cast<int>(ring.size()));
  return geo;
}

}  // namespace vecfield
