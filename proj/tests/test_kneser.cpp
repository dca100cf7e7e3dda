#include "genset/kneser.hpp"

#include "genset/bounds.hpp"
#include "genset/serial.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <functional>
#include <set>

using namespace genset;
using genset::testing::adjacency_of;
using genset::testing::graph_from;
using genset::testing::S;

TEST(DisjointnessGraph, Examples) {
  auto g = disjointness_graph(family_of(2, {S::of({1}), S::of({2}), S::of({1, 2})}));
  EXPECT_EQ(g.graph.edge_count(), 1u);
  EXPECT_TRUE(g.graph.has_edge(0, 1));  // {1} and {2}
  EXPECT_EQ(g.labels[2], S::of({1, 2}));

  auto e = disjointness_graph(family_of(3, {S{}, S::of({1, 2})}));
  EXPECT_TRUE(e.graph.has_edge(0, 1));
}

TEST(DisjointnessGraph, EdgesAreExactlyDisjointPairs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    auto bits = oracle::random_family(rng, n, 1 + static_cast<int>(rng() % 100), true);
    auto dg = disjointness_graph(genset::testing::family_from_bits(n, bits));
    for (std::size_t u = 0; u < bits.size(); ++u) {
      EXPECT_FALSE(dg.graph.has_edge(u, u));
      for (std::size_t v = 0; v < bits.size(); ++v)
        if (u != v) { ASSERT_EQ(dg.graph.has_edge(u, v), (bits[u] & bits[v]) == 0); }
    }
  }
}

TEST(DisjointnessGraph, CanonicalEdgeCountClosedForm) {
  for (int q = 1; q <= 12; ++q) {
    auto dg = disjointness_graph(canonical_generator(2 * q, 2));
    const std::uint64_t side = (std::uint64_t{1} << q) - 1;
    EXPECT_EQ(dg.graph.edge_count(), 2 * oracle::disjoint_pairs_in_class(q) + side * side) << q;
  }
  EXPECT_EQ(disjointness_graph(canonical_generator(20, 2)).graph.edge_count(), 1'103'531u);
}

TEST(DisjointnessGraph, VertexCap) {
  Caps caps;
  caps.graph_m = 100;
  EXPECT_THROW(disjointness_graph(canonical_generator(14, 2), caps), BudgetExceeded);
}

TEST(CountCliques, TuranExamples) {
  Graph k32 = turan_blowup_graph(3, 2);
  EXPECT_EQ(k32.vertex_count(), 6u);
  EXPECT_EQ(k32.edge_count(), 12u);
  EXPECT_EQ(count_cliques(k32, 2), 12);
  EXPECT_EQ(count_cliques(k32, 3), 8);
  EXPECT_EQ(count_cliques(k32, 4), 0);
  EXPECT_EQ(count_cliques(k32, 1), 6);
  EXPECT_EQ(count_cliques(k32, 0), 1);
}

TEST(CountCliques, CanonicalTwelveThreeTriangles) {
  // Independent triple loop over the family.
  auto f = canonical_generator(12, 3);
  std::uint64_t expect = 0;
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = a + 1; b < f.size(); ++b)
      for (std::size_t c = b + 1; c < f.size(); ++c)
        expect += f[a].disjoint(f[b]) && f[a].disjoint(f[c]) && f[b].disjoint(f[c]);
  EXPECT_EQ(expect, 5655u);
  EXPECT_EQ(count_cliques(disjointness_graph(f).graph, 3), expect);
}

TEST(CountCliques, MatchesSerialAndOracleOnRandomGraphs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 140);
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    auto adj = oracle::random_graph(rng, m, m > 40 ? std::min(p, 0.4) : p);
    Graph g = graph_from(adj);
    const int r_max = m > 40 ? 4 : 6;
    auto profile = clique_profile(g, r_max);
    for (int r = 0; r <= r_max; ++r) {
      EXPECT_EQ(profile[r], count_cliques(g, r));
      EXPECT_EQ(profile[r], serial::count_cliques(g, r));
      if (m <= 30) { EXPECT_EQ(profile[r], oracle::cliques(adj, r)); }
    }
  }
}

TEST(CountCliques, WorkBudget) {
  Caps caps;
  caps.work_budget = 100;
  EXPECT_THROW(count_cliques(complete_graph(200), 4, caps), BudgetExceeded);
}

TEST(CliqueDensity, Examples) {
  auto dg = disjointness_graph(canonical_generator(20, 2));
  EXPECT_EQ(clique_density(dg.graph, 2), Rational(1'103'531, 2'092'035));
  EXPECT_EQ(clique_density(complete_graph(5), 3), 1);
  EXPECT_EQ(clique_density(Graph(5), 2), 0);
  EXPECT_THROW(clique_density(Graph(2), 3), InvalidInput);
}

TEST(TuranEta, Examples) {
  EXPECT_EQ(turan_eta(2, 2), Rational(1, 2));
  EXPECT_EQ(turan_eta(3, 3), Rational(2, 9));
  for (int s = 1; s <= 10; ++s) EXPECT_EQ(turan_eta(1, s), 1);
  EXPECT_THROW(turan_eta(3, 2), InvalidInput);
}

TEST(TuranBlowup, ClosedFormAgreesWithCounting) {
  EXPECT_EQ(turan_clique_closed_form(3, 2, 2), 12);
  EXPECT_EQ(turan_clique_closed_form(4, 3, 4), 81);
  EXPECT_EQ(turan_blowup_graph(2, 1).edge_count(), 1u);
  for (int s = 1; s <= 5; ++s)
    for (int T = 1; T <= 6; ++T) {
      Graph g = turan_blowup_graph(s, T);
      EXPECT_EQ(g.edge_count(), static_cast<std::uint64_t>(s * (s - 1) / 2 * T * T));
      EXPECT_EQ(turan_clique_closed_form(s, T, 1), s * T);
      for (int r = 1; r <= s; ++r) EXPECT_EQ(count_cliques(g, r), turan_clique_closed_form(s, T, r));
    }
}

TEST(TuranBlowup, DensityApproachesEta) {
  for (int s = 1; s <= 4; ++s)
    for (int r = 1; r <= s; ++r) {
      const Rational density(turan_clique_closed_form(s, 50, r), binomial(static_cast<std::uint64_t>(s * 50), r));
      const Rational gap = density - turan_eta(r, s);
      EXPECT_LT(abs(gap), Rational(1, 50));
      EXPECT_GE(gap, 0);  // the finite Turán graph sits above its limit
    }
}

TEST(FindBlowup, Examples) {
  auto parts = find_blowup(turan_blowup_graph(3, 2), {3, 2});
  ASSERT_TRUE(parts);
  EXPECT_EQ(*parts, (std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}, {4, 5}}));

  EXPECT_FALSE(find_blowup(cycle_graph(5), {2, 2}));
  EXPECT_TRUE(find_blowup(cycle_graph(4), {2, 2}));

  auto edge = find_blowup(cycle_graph(5), {2, 1});
  ASSERT_TRUE(edge);
  EXPECT_EQ(*edge, (std::vector<std::vector<std::size_t>>{{0}, {1}}));
  EXPECT_FALSE(find_blowup(Graph(6), {2, 1}));
  EXPECT_THROW(find_blowup(Graph(65), {2, 1}), BudgetExceeded);
  EXPECT_THROW(find_blowup(Graph(5), {1, 1}), InvalidInput);
}

namespace {

// Exhaustive existence check: assign every vertex to one of a classes or none.
bool blowup_exists(const std::vector<std::vector<bool>>& adj, int a, int t) {
  const int m = static_cast<int>(adj.size());
  std::vector<int> label(m, -1);
  std::vector<int> sizes(a, 0);
  std::function<bool(int)> assign = [&](int v) {
    if (v == m) return std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == t; });
    for (int c = -1; c < a; ++c) {
      if (c >= 0) {
        if (sizes[c] == t) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) ok = label[u] < 0 || label[u] == c || adj[u][v];
        if (!ok) continue;
        ++sizes[c];
      }
      label[v] = c;
      if (assign(v + 1)) return true;
      if (c >= 0) --sizes[c];
    }
    label[v] = -1;
    return false;
  };
  return assign(0);
}

}  // namespace

TEST(FindBlowup, AgreesWithExhaustiveAssignment) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 7);
    auto adj = oracle::random_graph(rng, m, 0.4 + 0.5 * static_cast<double>(rng() % 10) / 10.0);
    const int a = 2 + static_cast<int>(rng() % 2), t = 1 + static_cast<int>(rng() % 3);
    auto found = find_blowup(graph_from(adj), {a, t});
    ASSERT_EQ(found.has_value(), blowup_exists(adj, a, t)) << trial;
    if (!found) continue;
    ASSERT_EQ(found->size(), static_cast<std::size_t>(a));
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < found->size(); ++i) {
      ASSERT_EQ((*found)[i].size(), static_cast<std::size_t>(t));
      for (std::size_t v : (*found)[i]) ASSERT_TRUE(seen.insert(v).second);
      for (std::size_t j = i + 1; j < found->size(); ++j)
        for (std::size_t u : (*found)[i])
          for (std::size_t v : (*found)[j]) ASSERT_TRUE(adj[u][v]);
    }
  }
}

TEST(ErdosMaxCheck, Examples) {
  auto e52 = erdos_max_check(5, 2, 2);
  EXPECT_EQ(e52.max_count, 6);
  EXPECT_TRUE(e52.attained_by_turan);
  auto e62 = erdos_max_check(6, 2, 2);
  EXPECT_EQ(e62.max_count, 9);
  EXPECT_TRUE(e62.attained_by_turan);
  // K_4 minus an edge is the densest K_4-free graph on 4 vertices: 2 triangles.
  auto e433 = erdos_max_check(4, 3, 3);
  EXPECT_EQ(e433.max_count, 2);
  EXPECT_EQ(e433.turan_count, 2);
  EXPECT_TRUE(e433.attained_by_turan);
  EXPECT_EQ(count_cliques(turan_graph(4, 3), 3), 2);
  EXPECT_THROW(erdos_max_check(8, 2, 2), BudgetExceeded);
  EXPECT_THROW(erdos_max_check(5, 2, 3), InvalidInput);
}

TEST(ErdosMaxCheck, MatchesUnprunedEnumeration) {
  for (int l = 1; l <= 5; ++l)
    for (int s = 1; s <= 3; ++s)
      for (int r = 1; r <= s; ++r) {
        auto e = erdos_max_check(l, s, r);
        EXPECT_EQ(e.max_count, serial::erdos_max(l, s, r)) << l << s << r;
        EXPECT_EQ(e.turan_count, count_cliques(turan_graph(l, s), r));
      }
}

TEST(DenseSubsetFraction, Trivial) {
  auto full = dense_subset_fraction(complete_graph(8), 4, 2, Rational(1));
  EXPECT_EQ(full.fraction, 1);
  EXPECT_EQ(full.total, 70);
  auto none = dense_subset_fraction(Graph(8), 4, 2, Rational(1, 100));
  EXPECT_EQ(none.fraction, 0);
  EXPECT_THROW(dense_subset_fraction(Graph(8), 9, 2, Rational(1)), InvalidInput);
}

TEST(DenseSubsetFraction, ExactMatchesDirectEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto adj = oracle::random_graph(rng, 10, 0.5);
    Graph g = graph_from(adj);
    const Rational threshold(1, 2);
    auto res = dense_subset_fraction(g, 5, 3, threshold);
    std::uint64_t dense = 0;
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
      if (std::popcount(mask) != 5) continue;
      std::vector<std::vector<bool>> sub;
      std::vector<int> vs;
      for (int v = 0; v < 10; ++v)
        if (mask >> v & 1u) vs.push_back(v);
      sub.assign(5, std::vector<bool>(5));
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) sub[i][j] = adj[vs[i]][vs[j]];
      dense += Rational(oracle::cliques(sub, 3), 10) >= threshold;
    }
    EXPECT_EQ(res.dense_count, dense);
  }
}

// Double counting: if the r-clique density is >= eta + eps, then at least
// (eps/2) C(m,l) of the l-subsets have density >= eta + eps/2.
TEST(DenseSubsetFraction, DoubleCountingInequality) {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 12 + static_cast<int>(rng() % 3);
    Graph g = graph_from(oracle::random_graph(rng, m, 0.3 + 0.6 * static_cast<double>(rng() % 10) / 10.0));
    const int r = 2 + static_cast<int>(rng() % 2);
    const int l = r + 2 + static_cast<int>(rng() % 3);
    const Rational density = clique_density(g, r);
    const Rational eta = r == 2 ? turan_eta(2, 2) : turan_eta(3, 3);
    if (density <= eta) continue;
    const Rational eps = density - eta;
    if (eta + eps / 2 >= 1) continue;
    auto res = dense_subset_fraction(g, l, r, eta + eps / 2);
    EXPECT_GE(Rational(res.dense_count), double_counting_bound(eta, eps, m, l));
    EXPECT_GE(Rational(res.dense_count), eps / 2 * Rational(binomial(m, l)));
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

TEST(DenseSubsetFraction, SamplingIsReproducibleAndClose) {
  std::mt19937_64 rng(47);
  Graph g = graph_from(oracle::random_graph(rng, 14, 0.5));
  auto exact = dense_subset_fraction(g, 6, 3, Rational(1, 4));
  auto a = dense_subset_fraction(g, 6, 3, Rational(1, 4), SamplingMode{20000, 99});
  set_threads(1);
  auto b = dense_subset_fraction(g, 6, 3, Rational(1, 4), SamplingMode{20000, 99});
  set_threads(0);
  EXPECT_EQ(a.dense_count, b.dense_count);
  EXPECT_FALSE(a.exact);
  EXPECT_LT(std::abs(to_double(a.fraction) - to_double(exact.fraction)), 4 * a.standard_error + 1e-9);
}
