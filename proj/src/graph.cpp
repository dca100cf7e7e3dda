#include "genset/graph.hpp"

#include "genset/common.hpp"

#include <string>

namespace genset {

Graph::Graph(std::size_t vertex_count)
    : m_(vertex_count), words_((vertex_count + 63) / 64), rows_(m_ * words_, 0) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= m_ || v >= m_) {
    throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside " +
                       std::to_string(m_) + " vertices");
  }
  if (u == v) throw InvalidInput("self loop at vertex " + std::to_string(u));
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(u)) d += std::popcount(w);
  return d;
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t twice = 0;
  for (std::uint64_t w : rows_) twice += std::popcount(w);
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < m_; ++u) {
    auto r = row(u);
    for (std::size_t w = u / 64; w < words_; ++w) {
      std::uint64_t bits = r[w];
      if (w == u / 64) bits &= ~((std::uint64_t{2} << (u % 64)) - 1);  // keep v > u
      for (; bits; bits &= bits - 1) out.emplace_back(u, w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) g.add_edge(i, j);
  return g;
}

Graph complete_graph(std::size_t m) {
  Graph g(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t m) {
  Graph g(m);
  if (m < 3) throw InvalidInput("cycle needs at least 3 vertices");
  for (std::size_t u = 0; u < m; ++u) g.add_edge(u, (u + 1) % m);
  return g;
}

}  // namespace genset
