#pragma once

#include "genset/family.hpp"
#include "genset/graph.hpp"

#include <optional>
#include <vector>

namespace genset {

/// Vertices are family members in family order; edges join disjoint pairs.
struct DisjointnessGraph {
  Graph graph;
  std::vector<SubsetMask> labels;
};

DisjointnessGraph disjointness_graph(const SetFamily& family, const Caps& caps = default_caps());

/// Exact number of r-cliques. r = 0 gives 1 and r = 1 gives the vertex count.
BigInt count_cliques(const Graph& g, int r, const Caps& caps = default_caps());

/// Clique counts for every size 0..r_max in one pass.
std::vector<BigInt> clique_profile(const Graph& g, int r_max, const Caps& caps = default_caps());

/// count_cliques(g, r) / C(m, r), reduced.
Rational clique_density(const Graph& g, int r, const Caps& caps = default_caps());

struct TuranParams {
  int r = 1;
  int s = 1;
  int T = 1;
};

/// s(s-1)...(s-r+1) / s^r.
Rational turan_eta(int r, int s);

/// Complete s-partite graph K_s(T), part-major vertex order.
Graph turan_blowup_graph(int s, int T, const Caps& caps = default_caps());

/// C(s, r) * T^r.
BigInt turan_clique_closed_form(int s, int T, int r);

struct BlowupSpec {
  int a = 2;  // part count
  int t = 1;  // part size
};

/// Classes of a complete a-partite subgraph with parts of size t; only the
/// cross-class pairs must be edges. Classes are ordered by their smallest
/// vertex and each class is sorted. Exhaustive backtracking, graphs up to
/// caps.blowup_m vertices.
std::optional<std::vector<std::vector<std::size_t>>> find_blowup(const Graph& g, BlowupSpec spec,
                                                                  const Caps& caps = default_caps());

struct ErdosMaxResult {
  int l = 0, s = 0, r = 0;
  BigInt max_count;     // over all labeled K_{s+1}-free graphs on l vertices
  BigInt turan_count;   // the balanced s-partite graph on l vertices
  bool attained_by_turan = false;
  std::uint64_t graphs_visited = 0;  // complete edge assignments reached
};

/// Enumerates labeled graphs on l <= 7 vertices edge by edge, cutting any
/// branch as soon as a K_{s+1} appears.
ErdosMaxResult erdos_max_check(int l, int s, int r, const Caps& caps = default_caps());

/// Balanced complete s-partite graph on l vertices (empty parts allowed when s > l).
Graph turan_graph(int l, int s);

struct DenseSubsetResult {
  bool exact = true;
  BigInt dense_count;    // l-subsets meeting the threshold (exact mode) or hits (sampling)
  BigInt total;          // C(m, l) (exact mode) or samples drawn
  Rational fraction;     // dense_count / total
  double standard_error = 0;  // sampling mode only
};

struct SamplingMode {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Share of l-vertex subsets U whose induced r-clique density reaches threshold.
DenseSubsetResult dense_subset_fraction(const Graph& g, int l, int r, const Rational& threshold,
                                        std::optional<SamplingMode> sampling = std::nullopt,
                                        const Caps& caps = default_caps());

/// SplitMix64 step, used to derive independent per-chunk seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace genset
