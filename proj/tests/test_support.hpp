#pragma once

#include "genset/family.hpp"
#include "genset/graph.hpp"

#include <vector>

namespace genset::testing {

inline SetFamily family_from_bits(int n, const std::vector<std::uint64_t>& bits) {
  std::vector<SubsetMask> masks;
  for (auto b : bits) masks.emplace_back(b);
  return family_of(n, masks);
}

inline std::vector<std::uint64_t> bits_of(const SetFamily& f) {
  std::vector<std::uint64_t> out;
  for (auto s : f.members()) out.push_back(s.bits());
  return out;
}

inline Graph graph_from(const std::vector<std::vector<bool>>& adj) {
  Graph g(adj.size());
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (std::size_t v = u + 1; v < adj.size(); ++v)
      if (adj[u][v]) g.add_edge(u, v);
  return g;
}

inline std::vector<std::vector<bool>> adjacency_of(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

using S = SubsetMask;

}  // namespace genset::testing
