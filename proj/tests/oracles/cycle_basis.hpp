#pragma once

// Minimum cycle basis by exhaustion: enumerate every simple cycle, sort by
// length and keep each one that is independent (over GF(2), in edge space)
// of those already kept. Exponential; only for small ring systems.

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "vecfield/chem/molecule.hpp"

namespace oracle {

inline std::vector<int> ring_sizes(const vecfield::Molecule& mol) {
  const std::size_t n = mol.size();
  std::vector<std::vector<std::size_t>> adj(n);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_id;
  for (const auto& b : mol.bonds()) {
    adj[b.a].push_back(b.b);
    adj[b.b].push_back(b.a);
    edge_id[{std::min(b.a, b.b), std::max(b.a, b.b)}] = edge_id.size();
  }
  const std::size_t m = edge_id.size();

  // Each cycle is found from its smallest vertex, in one direction only.
  std::vector<std::vector<bool>> cycles;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  auto edge_vector = [&](const std::vector<std::size_t>& cyc) {
    std::vector<bool> v(m, false);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const std::size_t a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      v[edge_id.at({std::min(a, b), std::max(a, b)})] = true;
    }
    return v;
  };
  auto dfs = [&](auto&& self, std::size_t start, std::size_t u) -> void {
    for (std::size_t w : adj[u]) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) cycles.push_back(edge_vector(path));
      if (w <= start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  auto length = [](const std::vector<bool>& v) { return std::count(v.begin(), v.end(), true); };
  std::stable_sort(cycles.begin(), cycles.end(),
                   [&](const auto& a, const auto& b) { return length(a) < length(b); });

  std::vector<std::vector<bool>> basis;  // reduced rows, each with a distinct pivot
  std::vector<std::size_t> pivots;
  std::vector<int> sizes;
  for (const auto& c : cycles) {
    std::vector<bool> v = c;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (!v[pivots[r]]) continue;
      for (std::size_t e = 0; e < m; ++e) v[e] = v[e] != basis[r][e];
    }
    const auto it = std::find(v.begin(), v.end(), true);
    if (it == v.end()) continue;
    const std::size_t p = static_cast<std::size_t>(it - v.begin());
    for (auto& row : basis) {
      if (!row[p]) continue;
      for (std::size_t e = 0; e < m; ++e) row[e] = row[e] != v[e];
    }
    basis.push_back(v);
    pivots.push_back(p);
    sizes.push_back(static_cast<int>(length(c)));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace oracle
