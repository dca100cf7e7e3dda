#include "genset/generator_check.hpp"

#include <algorithm>
#include <atomic>

namespace genset {
namespace {

enum class Join { kDisjoint, kUnion };

void check_table_n(int n, int cap, const char* what) {
  check_ground_set(n);
  if (n > cap) {
    throw BudgetExceeded(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

std::vector<std::uint64_t> nonempty_bits(const SetFamily& family) {
  std::vector<std::uint64_t> out;
  out.reserve(family.size());
  for (SubsetMask s : family.members())
    if (!s.empty()) out.push_back(s.bits());
  return out;
}

// Layer-by-layer closure from {0}. Each layer either pushes the previous
// frontier through every member or, for disjoint joins, pulls each unreached
// mask from its submasks, whichever touches fewer pairs.
LayerTable closure_layers(const SetFamily& family, int k, Join join) {
  const int n = family.n();
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::vector<std::uint64_t> members = nonempty_bits(family);
  const std::int64_t m = static_cast<std::int64_t>(members.size());

  std::vector<std::uint8_t> depth(total, LayerTable::kUnreached);
  depth[0] = 0;
  std::vector<std::uint64_t> frontier{0};
  std::vector<std::uint64_t> reached((total + 63) / 64, 0);

  std::vector<std::uint64_t> member_bitmap;
  if (join == Join::kDisjoint) {
    member_bitmap.assign((total + 63) / 64, 0);
    for (std::uint64_t g : members) member_bitmap[g / 64] |= std::uint64_t{1} << (g % 64);
  }

  const int layers = std::min(k, n);
  for (int j = 1; j <= layers && !frontier.empty(); ++j) {
    std::fill(reached.begin(), reached.end(), 0);
    const std::uint8_t prev = static_cast<std::uint8_t>(j - 1);

    double push_cost = static_cast<double>(frontier.size()) * static_cast<double>(m);
    double pull_cost = 0;
    if (join == Join::kDisjoint) {
      for (std::uint64_t x = 0; x < total; ++x)
        if (depth[x] == LayerTable::kUnreached) pull_cost += static_cast<double>(std::uint64_t{1} << std::popcount(x));
    }

    if (join == Join::kUnion || push_cost <= pull_cost) {
      const std::int64_t fsize = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t i = 0; i < fsize; ++i) {
        const std::uint64_t a = frontier[i];
        for (std::int64_t gi = 0; gi < m; ++gi) {
          const std::uint64_t g = members[gi];
          if (join == Join::kDisjoint && (a & g)) continue;
          const std::uint64_t y = a | g;
          if (depth[y] != LayerTable::kUnreached) continue;
          std::atomic_ref<std::uint64_t>(reached[y / 64]).fetch_or(std::uint64_t{1} << (y % 64),
                                                                  std::memory_order_relaxed);
        }
      }
    } else {
      const std::int64_t words = static_cast<std::int64_t>(reached.size());
#pragma omp parallel for schedule(dynamic, 4)
      for (std::int64_t w = 0; w < words; ++w) {
        std::uint64_t hits = 0;
        for (int bit = 0; bit < 64; ++bit) {
          const std::uint64_t x = static_cast<std::uint64_t>(w) * 64 + bit;
          if (x >= total || depth[x] != LayerTable::kUnreached) continue;
          for (std::uint64_t g = x; g; g = (g - 1) & x) {
            if (((member_bitmap[g / 64] >> (g % 64)) & 1u) && depth[x ^ g] <= prev) {
              hits |= std::uint64_t{1} << bit;
              break;
            }
          }
        }
        reached[w] = hits;
      }
    }

    frontier.clear();
    for (std::uint64_t w = 0; w < reached.size(); ++w) {
      for (std::uint64_t bits = reached[w]; bits; bits &= bits - 1) {
        const std::uint64_t y = w * 64 + std::countr_zero(bits);
        depth[y] = static_cast<std::uint8_t>(j);
        frontier.push_back(y);
      }
    }
  }
  return LayerTable(n, k, std::move(depth));
}

}  // namespace

std::uint64_t LayerTable::layer_size(int layer) const {
  return static_cast<std::uint64_t>(
      std::count_if(depth_.begin(), depth_.end(), [layer](std::uint8_t d) { return d <= layer; }));
}

LayerTable reachable_layers(const SetFamily& family, int k, const Caps& caps) {
  if (k < 0) throw InvalidInput("k must be >= 0");
  check_table_n(family.n(), caps.dp_n, "reachable_layers");
  return closure_layers(family, k, Join::kDisjoint);
}

LayerTable union_layers(const SetFamily& family, int k, const Caps& caps) {
  if (k < 0) throw InvalidInput("k must be >= 0");
  check_table_n(family.n(), caps.base_n, "is_k_base");
  return closure_layers(family, k, Join::kUnion);
}

GeneratorVerdict verdict_from(const LayerTable& table) {
  const auto depths = table.depths();
  for (std::uint64_t x = 0; x < depths.size(); ++x) {
    if (depths[x] > table.k()) return {false, SubsetMask(x)};
  }
  return {true, std::nullopt};
}

GeneratorVerdict is_k_generator(const SetFamily& family, int k, const Caps& caps) {
  return verdict_from(reachable_layers(family, k, caps));
}

GeneratorVerdict is_k_base(const SetFamily& family, int k, const Caps& caps) {
  return verdict_from(union_layers(family, k, caps));
}

std::optional<Decomposition> decompose(const SetFamily& family, const LayerTable& table, SubsetMask x) {
  if (!x.valid_for(family.n())) throw InvalidInput("target " + std::to_string(x.bits()) + " outside [n]");
  if (!table.marks(table.k(), x)) return std::nullopt;
  Decomposition out;
  const auto members = family.members();
  while (!x.empty()) {
    const std::uint8_t need = table.min_parts(x);
    bool advanced = false;
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      const SubsetMask g = *it;
      if (g.empty() || !g.subset_of(x)) continue;
      if (table.min_parts(x.minus(g)) < need) {
        out.parts.push_back(g);
        x = x.minus(g);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("layer table inconsistent with family");
  }
  std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
  return out;
}

std::optional<Decomposition> decompose(const SetFamily& family, int k, SubsetMask x, const Caps& caps) {
  return decompose(family, reachable_layers(family, k, caps), x);
}

namespace {

struct TupleCounter {
  const std::vector<std::uint64_t>& members;
  std::atomic<std::uint64_t>& shared_nodes;
  std::atomic<bool>& aborted;
  std::uint64_t budget;
  std::uint64_t local_nodes = 0;
  unsigned __int128 count = 0;

  void visit(std::size_t start, std::uint64_t used, int remaining) {
    for (std::size_t i = start; i < members.size() && !aborted.load(std::memory_order_relaxed); ++i) {
      if (members[i] & used) continue;
      ++count;
      if (++local_nodes == 4096) flush();
      if (remaining > 1) visit(i + 1, used | members[i], remaining - 1);
    }
  }

  void flush() {
    if (shared_nodes.fetch_add(local_nodes, std::memory_order_relaxed) + local_nodes > budget)
      aborted.store(true, std::memory_order_relaxed);
    local_nodes = 0;
  }
};

}  // namespace

BigInt count_disjoint_tuples(const SetFamily& family, int k, const Caps& caps) {
  if (k < 0) throw InvalidInput("k must be >= 0");
  if (k == 0 || family.empty()) return 1;
  std::vector<std::uint64_t> members;
  for (SubsetMask s : family.members()) members.push_back(s.bits());
  const std::int64_t m = static_cast<std::int64_t>(members.size());

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  unsigned __int128 total = 1;  // empty tuple
#pragma omp parallel
  {
    TupleCounter counter{members, nodes, aborted, caps.work_budget};
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < m; ++i) {
      if (aborted.load(std::memory_order_relaxed)) continue;
      ++counter.count;
      if (k > 1) counter.visit(static_cast<std::size_t>(i) + 1, members[i], k - 1);
    }
    counter.flush();
#pragma omp critical
    total += counter.count;
  }
  if (aborted.load()) {
    throw BudgetExceeded("count_disjoint_tuples exceeded work budget of " + std::to_string(caps.work_budget));
  }
  return from_u128(total);
}

}  // namespace genset
