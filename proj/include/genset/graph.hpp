#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace genset {

/// Simple undirected graph with one adjacency bit row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t vertex_count() const { return m_; }
  std::size_t words_per_row() const { return words_; }

  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  std::span<const std::uint64_t> row(std::size_t u) const { return {rows_.data() + u * words_, words_}; }
  std::span<std::uint64_t> mutable_row(std::size_t u) { return {rows_.data() + u * words_, words_}; }

  std::size_t degree(std::size_t u) const;
  std::uint64_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Graph induced on the listed vertices, renumbered in list order.
  Graph induced(std::span<const std::size_t> vertices) const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

Graph complete_graph(std::size_t m);
Graph cycle_graph(std::size_t m);

}  // namespace genset
