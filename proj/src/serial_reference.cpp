#include "genset/serial.hpp"

#include <functional>

namespace genset::serial {

std::vector<std::uint8_t> reachable_depths(const SetFamily& family, int k) {
  const std::uint64_t total = std::uint64_t{1} << family.n();
  std::vector<std::uint8_t> depth(total, 0xff);
  depth[0] = 0;
  for (int j = 1; j <= std::min(k, family.n()); ++j) {
    std::vector<std::uint8_t> next = depth;
    for (std::uint64_t x = 1; x < total; ++x) {
      if (depth[x] != 0xff) continue;
      for (SubsetMask g : family.members()) {
        if (g.empty() || (g.bits() & ~x)) continue;
        if (depth[x & ~g.bits()] <= j - 1) {
          next[x] = static_cast<std::uint8_t>(j);
          break;
        }
      }
    }
    depth = std::move(next);
  }
  return depth;
}

BigInt count_cliques(const Graph& g, int r) {
  if (r == 0) return 1;
  const std::size_t m = g.vertex_count();
  std::vector<std::size_t> clique;
  std::uint64_t count = 0;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    if (static_cast<int>(clique.size()) == r) {
      ++count;
      return;
    }
    for (std::size_t v = start; v < m; ++v) {
      bool ok = true;
      for (std::size_t u : clique) ok = ok && g.has_edge(u, v);
      if (!ok) continue;
      clique.push_back(v);
      grow(v + 1);
      clique.pop_back();
    }
  };
  grow(0);
  return count;
}

BigInt erdos_max(int l, int s, int r) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) edges.emplace_back(i, j);
  BigInt best = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << edges.size()); ++code) {
    Graph g(static_cast<std::size_t>(l));
    for (std::size_t e = 0; e < edges.size(); ++e)
      if ((code >> e) & 1u) g.add_edge(edges[e].first, edges[e].second);
    if (count_cliques(g, s + 1) > 0) continue;
    BigInt c = count_cliques(g, r);
    if (c > best) best = c;
  }
  return best;
}

Rational small_union_probability(const SetFamily& family, int t, int threshold) {
  const std::size_t m = family.size();
  std::vector<std::size_t> pick;
  std::uint64_t hits = 0, total = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    if (static_cast<int>(pick.size()) == t) {
      std::uint64_t acc = 0;
      for (std::size_t i : pick) acc |= family[i].bits();
      ++total;
      if (std::popcount(acc) <= threshold) ++hits;
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      pick.push_back(i);
      walk(i + 1);
      pick.pop_back();
    }
  };
  walk(0);
  return Rational(BigInt(hits), BigInt(total));
}

BigInt count_disjoint_tuples(const SetFamily& family, int k) {
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::uint64_t, int)> walk = [&](std::size_t start, std::uint64_t used, int size) {
    ++count;
    if (size == k) return;
    for (std::size_t i = start; i < family.size(); ++i)
      if ((family[i].bits() & used) == 0) walk(i + 1, used | family[i].bits(), size + 1);
  };
  walk(0, 0, 0);
  return count;
}

}  // namespace genset::serial
