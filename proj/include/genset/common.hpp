#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace genset {

/// Bad parameters or malformed input.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured cap or work budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resource caps shared by every module. All of them are overridable from the CLI.
struct Caps {
  int dp_n = 26;                       // tables with 2^n entries
  int base_n = 18;                     // k-base checks
  std::uint64_t graph_m = 1u << 16;    // vertices in a materialized graph
  std::uint64_t family_m = 1u << 26;   // members in a constructed family
  std::uint64_t work_budget = 4'000'000'000ull;  // enumeration nodes
  std::uint64_t node_budget = 1'000'000'000ull;  // search nodes
  double time_budget_seconds = 600.0;
  int blowup_m = 64;
  int erdos_l = 7;
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

/// Worker count for the OpenMP kernels; 0 leaves the runtime default.
void set_threads(int threads);
int max_threads();

}  // namespace genset
