#pragma once

#include "genset/family.hpp"

#include <optional>
#include <string>
#include <vector>

namespace genset {

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000'000ull;
  double time_budget_seconds = 600.0;
  int max_n_k2 = 6;     // feasibility cap for k = 2
  int max_n_other = 5;  // feasibility cap for every other k
  std::size_t split_target = 256;  // open subproblems handed to the worker pool
};

/// Outcome of the exact minimum-generator search for one (n, k).
///
/// When `conclusive`, `minimum` is certified: `witness` is a k-generator of
/// that size and every smaller size was exhausted. Otherwise the sizes below
/// `lower_bound` are excluded and `witness` has size `upper_bound`.
struct SearchReport {
  int n = 0;
  int k = 0;
  BigInt trivial_bound;
  BigInt canonical_size;
  bool conclusive = false;
  std::optional<std::uint64_t> minimum;
  std::uint64_t lower_bound = 0;
  std::uint64_t upper_bound = 0;
  SetFamily witness;
  std::uint64_t nodes_explored = 0;
  double seconds = 0;
  bool conjecture_holds = false;
  std::string note;
};

/// Iterative deepening on family size from trivial_lower_bound(n, k), with a
/// branch-and-bound search for a generator of each size. The canonical
/// generator closes the range from above.
SearchReport min_generator_size(int n, int k, const SearchOptions& options = {});

/// min_generator_size for every k <= k_max, k <= n <= n_max, k-major.
std::vector<SearchReport> verify_conjecture_range(int n_max, int k_max, const SearchOptions& options = {});

namespace detail {

struct FixedSizeResult {
  enum class Status { kFound, kExhausted, kAborted } status = Status::kExhausted;
  std::vector<SubsetMask> family;
  std::uint64_t nodes = 0;
};

/// Searches for a k-generator with at most `size` members over [n], n <= 6.
FixedSizeResult search_fixed_size(int n, int k, int size, const SearchOptions& options);

/// Set of generated masks of [n], n <= 6, as a 64-bit word (bit x = mask x).
std::uint64_t generated_word(int n, int k, std::span<const std::uint8_t> members);

}  // namespace detail

}  // namespace genset
