#include "genset/bounds.hpp"

#include "genset/generator_check.hpp"
#include "genset/kneser.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <random>

namespace genset {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BoundValue exact_value(const Rational& q) {
  BoundValue v;
  v.exact = q;
  v.approx = to_high(q);
  return v;
}

BoundValue approx_value(const HighFloat& x) {
  BoundValue v;
  v.approx = x;
  return v;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

HighFloat pow2_high(const Rational& e) { return boost::multiprecision::pow(HighFloat(2), to_high(e)); }

bool at_most(const ProbabilityEstimate& p, const BoundValue& bound) {
  if (p.exact && bound.is_exact()) return p.value <= *bound.exact;
  return to_high(p.value) <= bound.approx;
}

}  // namespace

void validate(const BoundParams& p) {
  check_ground_set(p.n);
  if (p.k < 1) throw InvalidInput("k must be >= 1");
  if (p.m < 1) throw InvalidInput("m must be >= 1");
  if (p.t < 1) throw InvalidInput("t must be >= 1");
  if (p.threshold < 0 || p.threshold > p.n) throw InvalidInput("threshold must lie in 0..n");
}

RegimeInfo regime(int n, int k, const BigInt& m, const Rational& delta) {
  RegimeInfo info;
  const HighFloat log2m = boost::multiprecision::log(HighFloat(m)) / boost::multiprecision::log(HighFloat(2));
  info.implied_delta = log2m / n - HighFloat(1) / (k + 1);
  const Rational e = Rational(n) * (Rational(1, k + 1) + delta);
  const BigInt p = numerator(e), q = denominator(e);
  if (p <= 0) {
    info.in_regime = true;
  } else if (q <= 64 && p <= 1'000'000) {
    info.in_regime = ipow(m, q.convert_to<std::uint64_t>()) >= pow2(p.convert_to<std::uint64_t>());
  } else {
    info.in_regime = log2m >= to_high(e);
  }
  return info;
}

BoundValue delta_factor(int n, const Rational& delta, int t) {
  const Rational e = Rational(n) * (Rational(1) - delta * t);
  if (is_integer(e)) return exact_value(pow2_rational(numerator(e)));
  return approx_value(pow2_high(e));
}

BoundValue lemma4_bound(const BoundParams& p) {
  validate(p);
  // (k+1)/(k+1)! = 1/k!
  const Rational factor(ipow(binomial(p.m, static_cast<std::uint64_t>(p.t)), static_cast<std::uint64_t>(p.k + 1)),
                        factorial(static_cast<std::uint64_t>(p.k)));
  const BoundValue power = delta_factor(p.n, p.delta, p.t);
  if (power.is_exact()) return exact_value(factor * *power.exact);
  return approx_value(to_high(factor) * power.approx);
}

BoundValue analytic_union_bound(int n, int k, const BigInt& m, int t) {
  check_ground_set(n);
  if (k < 1) throw InvalidInput("k must be >= 1");
  if (m < 1) throw InvalidInput("m must be >= 1");
  if (t < 0) throw InvalidInput("t must be >= 0");
  if (t == 0) return exact_value(Rational(pow2(static_cast<std::uint64_t>(n))));
  if (n % (k + 1) == 0) {
    const std::uint64_t e = static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(t) * (n / (k + 1));
    return exact_value(Rational(pow2(e), ipow(m, static_cast<std::uint64_t>(t))));
  }
  const HighFloat ratio = pow2_high(Rational(n, k + 1)) / HighFloat(m);
  return approx_value(pow2_high(Rational(n)) * boost::multiprecision::pow(ratio, t));
}

Rational subset_sum_union_bound(int n, int threshold, const BigInt& m, int t) {
  check_ground_set(n);
  if (t < 1 || m < t) throw InvalidInput("subset-sum bound needs 1 <= t <= m");
  BigInt numer = 0;
  for (int s = 0; s <= std::min(threshold, n); ++s) {
    numer += binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s)) *
             binomial(pow2(static_cast<std::uint64_t>(s)), static_cast<std::uint64_t>(t));
  }
  return Rational(numer, binomial(m, static_cast<std::uint64_t>(t)));
}

ProbabilityEstimate small_union_probability(const SetFamily& family, int t, int threshold,
                                            std::optional<SampledMode> sampled, const Caps& caps) {
  const std::size_t m = family.size();
  if (t < 1 || static_cast<std::size_t>(t) > m) throw InvalidInput("need 1 <= t <= |F|");
  if (threshold < 0 || threshold > family.n()) throw InvalidInput("threshold must lie in 0..n");
  std::vector<std::uint64_t> members;
  for (SubsetMask s : family.members()) members.push_back(s.bits());

  ProbabilityEstimate out;
  if (!sampled) {
    const BigInt total = binomial(m, static_cast<std::uint64_t>(t));
    if (total > caps.work_budget) {
      throw BudgetExceeded("C(m,t) = " + total.str() + " exceeds the exact-mode budget; use sampled mode");
    }
    std::uint64_t hits = 0;
    const std::int64_t firsts = static_cast<std::int64_t>(m) - t + 1;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : hits)
    for (std::int64_t first = 0; first < firsts; ++first) {
      std::function<void(std::size_t, int, std::uint64_t)> walk = [&](std::size_t start, int depth,
                                                                       std::uint64_t acc) {
        if (std::popcount(acc) > threshold) return;  // unions only grow
        if (depth == t) {
          ++hits;
          return;
        }
        for (std::size_t i = start; i + static_cast<std::size_t>(t - depth) <= m; ++i)
          walk(i + 1, depth + 1, acc | members[i]);
      };
      walk(static_cast<std::size_t>(first) + 1, 1, members[static_cast<std::size_t>(first)]);
    }
    out.exact = true;
    out.hits = hits;
    out.trials = total;
    out.value = Rational(out.hits, out.trials);
    return out;
  }

  if (sampled->trials == 0) throw InvalidInput("sampled mode needs at least one trial");
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (sampled->trials + kChunk - 1) / kChunk;
  std::uint64_t hits = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : hits)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    std::mt19937_64 rng(splitmix64(sampled->seed ^ splitmix64(static_cast<std::uint64_t>(c))));
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(sampled->trials, begin + kChunk);
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      std::uint64_t acc = 0;
      for (int i = 0; i < t; ++i) {
        std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), m - 1);
        std::swap(idx[static_cast<std::size_t>(i)], idx[pick(rng)]);
        acc |= members[idx[static_cast<std::size_t>(i)]];
      }
      hits += std::popcount(acc) <= threshold ? 1 : 0;
    }
  }
  out.exact = false;
  out.hits = hits;
  out.trials = sampled->trials;
  out.value = Rational(out.hits, out.trials);
  out.seed = sampled->seed;
  const double p = static_cast<double>(hits) / static_cast<double>(sampled->trials);
  out.standard_error = std::sqrt(p * (1 - p) / static_cast<double>(sampled->trials));
  return out;
}

UnionBoundReport union_bound_check(const SetFamily& family, int k, const Rational& delta, int t,
                                   std::optional<SampledMode> sampled, const Caps& caps) {
  if (k < 1) throw InvalidInput("union_bound_check needs k >= 1");
  const BigInt m = family.size();
  UnionBoundReport r;
  r.threshold = family.n() / (k + 1);
  r.regime = regime(family.n(), k, m, delta);
  r.probability = small_union_probability(family, t, r.threshold, sampled, caps);
  r.subset_sum_bound = subset_sum_union_bound(family.n(), r.threshold, m, t);
  r.analytic_bound = analytic_union_bound(family.n(), k, m, t);
  r.delta_bound = delta_factor(family.n(), delta, t);
  r.bound_holds = at_most(r.probability, r.analytic_bound);
  return r;
}

CoverageReport coverage_inequality_check(const SetFamily& family, int k, bool verify, const Caps& caps) {
  CoverageReport r;
  if (verify) {
    r.status = is_k_generator(family, k, caps).holds ? GeneratorStatus::kVerified : GeneratorStatus::kRefuted;
  }
  r.tuples = count_disjoint_tuples(family, k, caps);
  r.two_to_n = pow2(static_cast<std::uint64_t>(family.n()));
  r.holds = r.tuples >= r.two_to_n;
  return r;
}

std::vector<BoundRow> bound_table(int n_min, int n_max, int k_min, int k_max) {
  check_ground_set(n_min);
  check_ground_set(n_max);
  if (n_min > n_max || k_min < 1 || k_min > k_max) throw InvalidInput("empty or invalid table range");
  std::vector<BoundRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = k_min; k <= std::min(k_max, n); ++k) {
      BoundRow row;
      row.n = n;
      row.k = k;
      row.trivial_bound = trivial_lower_bound(n, k);
      const HighFloat base = pow2_high(Rational(n, k));
      row.factorial_constant =
          boost::multiprecision::pow(HighFloat(factorial(static_cast<std::uint64_t>(k))), HighFloat(1) / k) * base;
      row.k_constant = HighFloat(k) * base;
      row.canonical_size = canonical_size(n, k);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Rational double_counting_bound(const Rational& eta, const Rational& epsilon, std::uint64_t m, std::uint64_t l) {
  if (epsilon <= 0) throw InvalidInput("epsilon must be positive");
  const Rational slack = Rational(1) - eta - epsilon / 2;
  if (slack <= 0) throw InvalidInput("need eta + epsilon/2 < 1");
  return epsilon / 2 / slack * Rational(binomial(m, l));
}

const char* to_string(GeneratorStatus s) {
  switch (s) {
    case GeneratorStatus::kVerified: return "verified";
    case GeneratorStatus::kRefuted: return "refuted";
    case GeneratorStatus::kAssumed: return "assumed";
  }
  return "assumed";
}

}  // namespace genset
