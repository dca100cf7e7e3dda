#pragma once

// Straightforward single-threaded versions of the parallel kernels. They
// follow the definitions directly and are kept for cross-checking and
// benchmarking, not for production use.

#include "genset/family.hpp"
#include "genset/graph.hpp"

#include <vector>

namespace genset::serial {

/// Per-mask minimum part count (0xff when above k), straight from the recurrence.
std::vector<std::uint8_t> reachable_depths(const SetFamily& family, int k);

/// r-cliques by plain index-ordered recursion over the bit rows.
BigInt count_cliques(const Graph& g, int r);

/// Max K_r count over all K_{s+1}-free labeled graphs on l vertices, no pruning.
BigInt erdos_max(int l, int s, int r);

/// Exact probability by plain enumeration of all t-subsets.
Rational small_union_probability(const SetFamily& family, int t, int threshold);

/// Plain recursion over member indices.
BigInt count_disjoint_tuples(const SetFamily& family, int k);

}  // namespace genset::serial
