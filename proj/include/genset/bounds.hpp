#pragma once

#include "genset/family.hpp"

#include <optional>
#include <vector>

namespace genset {

/// A bound value: exact when every exponent involved is an integer, otherwise
/// a high-precision float with its mantissa width recorded.
struct BoundValue {
  std::optional<Rational> exact;
  HighFloat approx;
  int precision_bits = kHighFloatBits;

  bool is_exact() const { return exact.has_value(); }
};

/// Parameters of the union-size probability bound.
///
/// `delta` is the slack in m >= 2^{(1/(k+1) + delta) n}; `threshold` is the
/// union-size cutoff, floor(n/(k+1)) for the union-bound check.
struct BoundParams {
  int n = 1;
  int k = 1;
  BigInt m = 1;
  Rational delta = 0;
  int t = 1;
  int threshold = 0;
};

struct RegimeInfo {
  bool in_regime = false;   // m >= 2^{(1/(k+1) + delta) n}
  HighFloat implied_delta;  // log2(m)/n - 1/(k+1)
};

void validate(const BoundParams& p);
RegimeInfo regime(int n, int k, const BigInt& m, const Rational& delta);

/// (k+1) 2^{n(1-delta t)} C(m,t)^{k+1} / (k+1)!
BoundValue lemma4_bound(const BoundParams& p);

/// 2^{n(1 - delta t)} on its own.
BoundValue delta_factor(int n, const Rational& delta, int t);

/// 2^n (2^{n/(k+1)} / m)^t
BoundValue analytic_union_bound(int n, int k, const BigInt& m, int t);

/// sum over S <= [n] with |S| <= threshold of C(2^{|S|}, t) / C(m, t).
Rational subset_sum_union_bound(int n, int threshold, const BigInt& m, int t);

struct ProbabilityEstimate {
  bool exact = true;
  Rational value;          // exact probability, or hits/trials when sampled
  BigInt hits;             // t-subsets (exact) or trials (sampled) meeting the cutoff
  BigInt trials;           // C(m, t) or the trial count
  double standard_error = 0;
  std::uint64_t seed = 0;
};

struct SampledMode {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
};

/// Probability that a uniform t-subset of distinct members has |union| <= threshold.
ProbabilityEstimate small_union_probability(const SetFamily& family, int t, int threshold,
                                            std::optional<SampledMode> sampled = std::nullopt,
                                            const Caps& caps = default_caps());

struct UnionBoundReport {
  int threshold = 0;
  RegimeInfo regime;
  ProbabilityEstimate probability;
  Rational subset_sum_bound;
  BoundValue analytic_bound;
  BoundValue delta_bound;
  bool bound_holds = false;  // probability <= analytic_bound
};

UnionBoundReport union_bound_check(const SetFamily& family, int k, const Rational& delta, int t,
                                   std::optional<SampledMode> sampled = std::nullopt,
                                   const Caps& caps = default_caps());

enum class GeneratorStatus { kVerified, kRefuted, kAssumed };

struct CoverageReport {
  BigInt tuples;
  BigInt two_to_n;
  bool holds = false;
  GeneratorStatus status = GeneratorStatus::kAssumed;
};

/// count_disjoint_tuples(F, k) against 2^n. With `verify`, the generator
/// property is checked first and recorded.
CoverageReport coverage_inequality_check(const SetFamily& family, int k, bool verify,
                                         const Caps& caps = default_caps());

struct BoundRow {
  int n = 0;
  int k = 0;
  BigInt trivial_bound;
  HighFloat factorial_constant;  // (k!)^{1/k} 2^{n/k}
  HighFloat k_constant;          // k 2^{n/k}
  BigInt canonical_size;
};

std::vector<BoundRow> bound_table(int n_min, int n_max, int k_min, int k_max);

/// Lower bound on the number of l-subsets with r-clique density >= eta + eps/2
/// in an m-vertex graph whose density is >= eta + eps, from double counting:
/// (eps/2) / (1 - eta - eps/2) * C(m, l), which is at least (eps/2) C(m, l).
Rational double_counting_bound(const Rational& eta, const Rational& epsilon, std::uint64_t m, std::uint64_t l);

const char* to_string(GeneratorStatus s);

}  // namespace genset
