#include "genset/kneser.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <atomic>
#include <cmath>
#include <random>

namespace genset {
namespace {

std::uint64_t above(int v) { return v >= 63 ? 0 : ~((std::uint64_t{2} << v) - 1); }

// r-cliques inside `cand` for a graph of at most 64 vertices, counted once each.
std::uint64_t small_cliques(std::span<const std::uint64_t> adj, std::uint64_t cand, int r) {
  if (r == 0) return 1;
  if (r == 1) return static_cast<std::uint64_t>(std::popcount(cand));
  std::uint64_t total = 0;
  for (std::uint64_t bits = cand; bits; bits &= bits - 1) {
    const int v = std::countr_zero(bits);
    total += small_cliques(adj, cand & adj[v] & above(v), r - 1);
  }
  return total;
}

void check_vertex_cap(std::uint64_t m, const Caps& caps) {
  if (m > caps.graph_m) {
    throw BudgetExceeded("graph with " + std::to_string(m) + " vertices exceeds cap " + std::to_string(caps.graph_m));
  }
}

// Smallest-last (degeneracy) order.
std::vector<std::size_t> degeneracy_order(const Graph& g) {
  const std::size_t m = g.vertex_count();
  std::vector<std::size_t> degree(m);
  std::size_t max_degree = 0;
  for (std::size_t v = 0; v < m; ++v) max_degree = std::max(max_degree, degree[v] = g.degree(v));
  std::vector<std::vector<std::size_t>> buckets(max_degree + 1);
  for (std::size_t v = m; v-- > 0;) buckets[degree[v]].push_back(v);
  std::vector<bool> removed(m, false);
  std::vector<std::size_t> order;
  order.reserve(m);
  std::size_t low = 0;
  while (order.size() < m) {
    while (buckets[low].empty()) ++low;
    const std::size_t v = buckets[low].back();
    buckets[low].pop_back();
    if (removed[v] || degree[v] != low) continue;  // stale entry
    removed[v] = true;
    order.push_back(v);
    auto row = g.row(v);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) {
        const std::size_t u = w * 64 + std::countr_zero(bits);
        if (removed[u]) continue;
        buckets[--degree[u]].push_back(u);
        if (degree[u] < low) low = degree[u];
      }
    }
  }
  return order;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

DisjointnessGraph disjointness_graph(const SetFamily& family, const Caps& caps) {
  check_vertex_cap(family.size(), caps);
  DisjointnessGraph out{Graph(family.size()), {family.members().begin(), family.members().end()}};
  const std::int64_t m = static_cast<std::int64_t>(family.size());
  const auto& labels = out.labels;
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t u = 0; u < m; ++u) {
    auto row = out.graph.mutable_row(static_cast<std::size_t>(u));
    for (std::int64_t v = 0; v < m; ++v) {
      if (u != v && labels[u].disjoint(labels[v])) row[v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  return out;
}

std::vector<BigInt> clique_profile(const Graph& g, int r_max, const Caps& caps) {
  if (r_max < 0) throw InvalidInput("clique size must be >= 0");
  const std::size_t m = g.vertex_count();
  std::vector<BigInt> profile(static_cast<std::size_t>(r_max) + 1, 0);
  profile[0] = 1;
  if (r_max == 0) return profile;
  profile[1] = m;
  if (r_max == 1 || m == 0) return profile;

  // Orient every edge toward the later vertex in degeneracy order.
  const std::vector<std::size_t> order = degeneracy_order(g);
  std::vector<std::size_t> rank(m);
  for (std::size_t i = 0; i < m; ++i) rank[order[i]] = i;
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> out(m * words, 0);
  for (std::size_t i = 0; i < m; ++i) {
    auto row = g.row(order[i]);
    for (std::size_t w = 0; w < words; ++w)
      for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) {
        const std::size_t j = rank[w * 64 + std::countr_zero(bits)];
        if (j > i) out[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
      }
  }

  std::atomic<std::uint64_t> shared_nodes{0};
  std::atomic<bool> aborted{false};
  std::vector<unsigned __int128> totals(profile.size(), 0);
  const std::int64_t count = static_cast<std::int64_t>(m);

#pragma omp parallel
  {
    std::vector<unsigned __int128> local(profile.size(), 0);
    std::vector<std::uint64_t> stack(static_cast<std::size_t>(r_max + 1) * words, 0);
    std::uint64_t local_nodes = 0;

    auto expand = [&](auto&& self, int depth) -> void {
      // stack level `depth` holds the common out-neighbourhood of a (depth-1)-clique.
      const std::uint64_t* cand = stack.data() + static_cast<std::size_t>(depth) * words;
      std::uint64_t size = 0;
      for (std::size_t w = 0; w < words; ++w) size += std::popcount(cand[w]);
      local[depth] += size;
      if (depth == r_max || size == 0) return;
      if (++local_nodes >= 4096) {
        if (shared_nodes.fetch_add(local_nodes, std::memory_order_relaxed) + local_nodes > caps.work_budget)
          aborted.store(true, std::memory_order_relaxed);
        local_nodes = 0;
      }
      if (aborted.load(std::memory_order_relaxed)) return;
      std::uint64_t* next = stack.data() + static_cast<std::size_t>(depth + 1) * words;
      for (std::size_t w = 0; w < words; ++w) {
        for (std::uint64_t bits = cand[w]; bits; bits &= bits - 1) {
          const std::size_t v = w * 64 + std::countr_zero(bits);
          const std::uint64_t* ov = out.data() + v * words;
          bool any = false;
          for (std::size_t x = 0; x < words; ++x) any |= (next[x] = cand[x] & ov[x]) != 0;
          if (any) self(self, depth + 1);
        }
      }
    };

#pragma omp for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) {
      if (aborted.load(std::memory_order_relaxed)) continue;
      std::copy_n(out.data() + static_cast<std::size_t>(i) * words, words, stack.data() + 2 * words);
      expand(expand, 2);
    }
#pragma omp critical
    for (std::size_t d = 0; d < local.size(); ++d) totals[d] += local[d];
  }
  if (aborted.load()) {
    throw BudgetExceeded("clique counting exceeded work budget of " + std::to_string(caps.work_budget));
  }
  for (std::size_t d = 2; d < profile.size(); ++d) profile[d] = from_u128(totals[d]);
  return profile;
}

BigInt count_cliques(const Graph& g, int r, const Caps& caps) {
  if (r < 0) throw InvalidInput("clique size must be >= 0");
  return clique_profile(g, r, caps)[static_cast<std::size_t>(r)];
}

Rational clique_density(const Graph& g, int r, const Caps& caps) {
  if (r < 1) throw InvalidInput("clique size must be >= 1");
  if (g.vertex_count() < static_cast<std::size_t>(r)) {
    throw InvalidInput("clique density needs at least r=" + std::to_string(r) + " vertices");
  }
  return Rational(count_cliques(g, r, caps), binomial(g.vertex_count(), static_cast<std::uint64_t>(r)));
}

Rational turan_eta(int r, int s) {
  if (r < 1 || s < 1 || r > s) throw InvalidInput("turan_eta needs 1 <= r <= s");
  BigInt falling = 1;
  for (int i = 0; i < r; ++i) falling *= s - i;
  return Rational(falling, ipow(BigInt(s), static_cast<std::uint64_t>(r)));
}

Graph turan_blowup_graph(int s, int T, const Caps& caps) {
  if (s < 1 || T < 1) throw InvalidInput("turan_blowup_graph needs s >= 1 and T >= 1");
  const std::uint64_t m = static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(T);
  check_vertex_cap(m, caps);
  Graph g(m);
  for (std::uint64_t u = 0; u < m; ++u)
    for (std::uint64_t v = u + 1; v < m; ++v)
      if (u / T != v / T) g.add_edge(u, v);
  return g;
}

BigInt turan_clique_closed_form(int s, int T, int r) {
  if (r < 0 || s < 1 || T < 1 || r > s) throw InvalidInput("closed form needs 0 <= r <= s, T >= 1");
  return binomial(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(r)) *
         ipow(BigInt(T), static_cast<std::uint64_t>(r));
}

std::optional<std::vector<std::vector<std::size_t>>> find_blowup(const Graph& g, BlowupSpec spec, const Caps& caps) {
  if (spec.a < 2 || spec.t < 1) throw InvalidInput("blow-up needs a >= 2 and t >= 1");
  const std::size_t m = g.vertex_count();
  if (m > static_cast<std::size_t>(std::min(caps.blowup_m, 64))) {
    throw BudgetExceeded("find_blowup supports at most " + std::to_string(std::min(caps.blowup_m, 64)) +
                         " vertices, graph has " + std::to_string(m));
  }
  std::vector<std::uint64_t> adj(m);
  for (std::size_t v = 0; v < m; ++v) adj[v] = g.row(v)[0];
  const int a = spec.a, t = spec.t;
  std::vector<std::vector<std::size_t>> classes(static_cast<std::size_t>(a));
  std::uint64_t nodes = 0;

  auto tick = [&] {
    if (++nodes > caps.work_budget) throw BudgetExceeded("find_blowup exceeded work budget");
  };

  // `future`: vertices still usable by later classes (adjacent to everything placed, above the current class min).
  std::function<bool(int, std::uint64_t)> place;
  std::function<bool(int, std::uint64_t, std::uint64_t)> grow =
      [&](int ci, std::uint64_t pool, std::uint64_t future) -> bool {
    tick();
    auto& cls = classes[static_cast<std::size_t>(ci)];
    if (static_cast<int>(cls.size()) == t) return place(ci + 1, future);
    if (std::popcount(future) < (a - ci - 1) * t) return false;
    if (std::popcount(pool) < t - static_cast<int>(cls.size())) return false;
    for (std::uint64_t bits = pool; bits; bits &= bits - 1) {
      const int u = std::countr_zero(bits);
      cls.push_back(static_cast<std::size_t>(u));
      const std::uint64_t bit = std::uint64_t{1} << u;
      if (grow(ci, pool & above(u), future & adj[u] & ~bit)) return true;
      cls.pop_back();
    }
    return false;
  };
  place = [&](int ci, std::uint64_t common) -> bool {
    if (ci == a) return true;
    if (std::popcount(common) < (a - ci) * t) return false;
    for (std::uint64_t bits = common; bits; bits &= bits - 1) {
      const int v0 = std::countr_zero(bits);
      auto& cls = classes[static_cast<std::size_t>(ci)];
      cls.assign(1, static_cast<std::size_t>(v0));
      if (grow(ci, common & above(v0), common & adj[v0] & above(v0))) return true;
      cls.clear();
    }
    return false;
  };

  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  if (!place(0, all)) return std::nullopt;
  return classes;
}

Graph turan_graph(int l, int s) {
  if (l < 0 || s < 1) throw InvalidInput("turan_graph needs l >= 0 and s >= 1");
  std::vector<int> part(static_cast<std::size_t>(l));
  const int small = l / s, larger = l % s;
  int v = 0;
  for (int p = 0; p < s; ++p)
    for (int i = 0; i < small + (p < larger ? 1 : 0); ++i) part[static_cast<std::size_t>(v++)] = p;
  Graph g(static_cast<std::size_t>(l));
  for (int u = 0; u < l; ++u)
    for (int w = u + 1; w < l; ++w)
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(w)]) g.add_edge(u, w);
  return g;
}

namespace {

// Elementary symmetric polynomial e_r of the balanced part sizes: K_r count of the Turán graph.
BigInt turan_graph_cliques(int l, int s, int r) {
  std::vector<BigInt> e(static_cast<std::size_t>(r) + 1, 0);
  e[0] = 1;
  const int small = l / s, larger = l % s;
  for (int p = 0; p < s; ++p) {
    const int size = small + (p < larger ? 1 : 0);
    for (int j = r; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * size;
  }
  return e[static_cast<std::size_t>(r)];
}

struct ErdosWalker {
  int l, s, r;
  std::vector<std::pair<int, int>> edges;
  std::uint64_t best = 0;
  std::uint64_t visited = 0;

  bool creates_forbidden(const std::array<std::uint64_t, 8>& adj, int i, int j) const {
    // A new K_{s+1} through edge ij needs a K_{s-1} among the common neighbours.
    return small_cliques(std::span<const std::uint64_t>(adj.data(), static_cast<std::size_t>(l)), adj[i] & adj[j],
                         s - 1) > 0;
  }

  void walk(std::size_t e, std::array<std::uint64_t, 8>& adj) {
    if (e == edges.size()) {
      ++visited;
      const std::uint64_t all = (std::uint64_t{1} << l) - 1;
      best = std::max(best, small_cliques(std::span<const std::uint64_t>(adj.data(), static_cast<std::size_t>(l)),
                                          all, r));
      return;
    }
    walk(e + 1, adj);
    const auto [i, j] = edges[e];
    if (creates_forbidden(adj, i, j)) return;
    adj[i] |= std::uint64_t{1} << j;
    adj[j] |= std::uint64_t{1} << i;
    walk(e + 1, adj);
    adj[i] &= ~(std::uint64_t{1} << j);
    adj[j] &= ~(std::uint64_t{1} << i);
  }
};

}  // namespace

ErdosMaxResult erdos_max_check(int l, int s, int r, const Caps& caps) {
  if (l < 1 || l > std::min(caps.erdos_l, 8)) {
    throw BudgetExceeded("erdos_max_check supports 1 <= l <= " + std::to_string(std::min(caps.erdos_l, 8)));
  }
  if (s < 1 || r < 1 || r > s) throw InvalidInput("erdos_max_check needs 1 <= r <= s");

  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < l; ++j)
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);

  // Fix the first few edges serially, then walk the suffixes in parallel.
  const std::size_t prefix_len = std::min<std::size_t>(edges.size(), 8);
  std::vector<std::array<std::uint64_t, 8>> prefixes;
  {
    ErdosWalker w{l, s, r, edges};
    std::array<std::uint64_t, 8> adj{};
    std::function<void(std::size_t)> gen = [&](std::size_t e) {
      if (e == prefix_len) {
        prefixes.push_back(adj);
        return;
      }
      gen(e + 1);
      const auto [i, j] = edges[e];
      if (w.creates_forbidden(adj, i, j)) return;
      adj[i] |= std::uint64_t{1} << j;
      adj[j] |= std::uint64_t{1} << i;
      gen(e + 1);
      adj[i] &= ~(std::uint64_t{1} << j);
      adj[j] &= ~(std::uint64_t{1} << i);
    };
    gen(0);
  }

  std::uint64_t best = 0, visited = 0;
  const std::int64_t count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) reduction(max : best) reduction(+ : visited)
  for (std::int64_t p = 0; p < count; ++p) {
    ErdosWalker w{l, s, r, edges};
    auto adj = prefixes[static_cast<std::size_t>(p)];
    w.walk(prefix_len, adj);
    best = std::max(best, w.best);
    visited += w.visited;
  }

  ErdosMaxResult res;
  res.l = l;
  res.s = s;
  res.r = r;
  res.max_count = best;
  res.turan_count = turan_graph_cliques(l, s, r);
  res.attained_by_turan = res.turan_count == res.max_count;
  res.graphs_visited = visited;
  return res;
}

DenseSubsetResult dense_subset_fraction(const Graph& g, int l, int r, const Rational& threshold,
                                        std::optional<SamplingMode> sampling, const Caps& caps) {
  const std::size_t m = g.vertex_count();
  if (r < 1 || l < r || static_cast<std::size_t>(l) > m) throw InvalidInput("dense_subset_fraction needs 1 <= r <= l <= m");
  if (l > 64) throw InvalidInput("dense_subset_fraction supports l <= 64");

  const BigInt per_subset = binomial(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(r));
  const BigInt num = boost::multiprecision::numerator(threshold);
  const BigInt den = boost::multiprecision::denominator(threshold);
  auto is_dense = [&](std::span<const std::size_t> verts) {
    std::array<std::uint64_t, 64> adj{};
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (g.has_edge(verts[i], verts[j])) {
          adj[i] |= std::uint64_t{1} << j;
          adj[j] |= std::uint64_t{1} << i;
        }
    const std::uint64_t all = l == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << l) - 1;
    const BigInt cliques = small_cliques(std::span<const std::uint64_t>(adj.data(), static_cast<std::size_t>(l)), all, r);
    return cliques * den >= num * per_subset;
  };

  DenseSubsetResult res;
  if (!sampling) {
    const BigInt total = binomial(m, static_cast<std::uint64_t>(l));
    if (total > caps.work_budget) {
      throw BudgetExceeded("C(m,l) = " + total.str() + " exceeds the exact-mode budget; use sampling");
    }
    std::uint64_t dense = 0;
    const std::int64_t firsts = static_cast<std::int64_t>(m - static_cast<std::size_t>(l) + 1);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : dense)
    for (std::int64_t first = 0; first < firsts; ++first) {
      std::vector<std::size_t> verts(static_cast<std::size_t>(l));
      verts[0] = static_cast<std::size_t>(first);
      std::function<void(int)> pick = [&](int pos) {
        if (pos == l) {
          dense += is_dense(verts) ? 1 : 0;
          return;
        }
        for (std::size_t v = verts[pos - 1] + 1; v + static_cast<std::size_t>(l - pos) <= m; ++v) {
          verts[pos] = v;
          pick(pos + 1);
        }
      };
      pick(1);
    }
    res.exact = true;
    res.dense_count = dense;
    res.total = total;
    res.fraction = Rational(res.dense_count, res.total);
    return res;
  }

  if (sampling->samples == 0) throw InvalidInput("sampling needs at least one sample");
  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t chunks = (sampling->samples + kChunk - 1) / kChunk;
  std::uint64_t hits = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : hits)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    std::mt19937_64 rng(splitmix64(sampling->seed ^ splitmix64(static_cast<std::uint64_t>(c))));
    std::vector<std::size_t> idx(m);
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(sampling->samples, begin + kChunk);
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      for (std::size_t i = 0; i < m; ++i) idx[i] = i;
      for (int i = 0; i < l; ++i) {
        std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), m - 1);
        std::swap(idx[static_cast<std::size_t>(i)], idx[pick(rng)]);
      }
      std::sort(idx.begin(), idx.begin() + l);
      hits += is_dense(std::span<const std::size_t>(idx.data(), static_cast<std::size_t>(l))) ? 1 : 0;
    }
  }
  res.exact = false;
  res.dense_count = hits;
  res.total = sampling->samples;
  res.fraction = Rational(res.dense_count, res.total);
  const double p = static_cast<double>(hits) / static_cast<double>(sampling->samples);
  res.standard_error = std::sqrt(p * (1 - p) / static_cast<double>(sampling->samples));
  return res;
}

}  // namespace genset
