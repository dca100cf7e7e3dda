#include "genset/extremal_search.hpp"

#include "genset/generator_check.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>

namespace genset {
namespace detail {
namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxSearchN = 6;  // 2^6 masks fit one 64-bit word

std::uint64_t full_word(int n) {
  const int masks = 1 << n;
  return masks == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << masks) - 1;
}

// disjoint[g] = word of masks a with a & g == 0.
std::array<std::uint64_t, 64> disjoint_words(int n) {
  std::array<std::uint64_t, 64> out{};
  const int masks = 1 << n;
  for (int g = 0; g < masks; ++g)
    for (int a = 0; a < masks; ++a)
      if ((a & g) == 0) out[g] |= std::uint64_t{1} << a;
  return out;
}

std::uint64_t closure(int n, int k, std::span<const std::uint8_t> members,
                      const std::array<std::uint64_t, 64>& disjoint) {
  std::uint64_t layer = 1;  // {empty set}
  const int layers = std::min(k, n);
  for (int j = 0; j < layers; ++j) {
    std::uint64_t next = layer;
    // a | g == a + g for disjoint a, g, so the union is a left shift by g.
    for (std::uint8_t g : members) next |= (layer & disjoint[g]) << g;
    if (next == layer) break;
    layer = next;
  }
  return layer;
}

struct Node {
  std::array<std::uint8_t, 64> chosen{};
  int count = 0;
  std::uint64_t chosen_word = 0;
  std::uint64_t forbidden = 0;
};

enum class NodeState { kSolved, kDead, kOpen };

class FixedSizeSearch {
 public:
  FixedSizeSearch(int n, int k, int size, const SearchOptions& options)
      : n_(n), k_(k), size_(size), options_(options), full_(full_word(n)), disjoint_(disjoint_words(n)),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(options.time_budget_seconds))) {
    for (int c = 0; c <= 64; ++c) {
      binom_[c][0] = 1;
      for (int i = 1; i <= std::min(c, 64); ++i) binom_[c][i] = c == 0 ? 0 : sat_add(binom_[c - 1][i - 1], binom_[c - 1][i]);
    }
  }

  FixedSizeResult run() {
    FixedSizeResult result;
    std::vector<Node> tasks{Node{}};
    std::vector<bool> solved{false};
    std::uint64_t expansion_nodes = 0;

    // Breadth-wise expansion in depth-first order until there is enough parallel work.
    for (int round = 0; round < 24; ++round) {
      const auto open = static_cast<std::size_t>(std::count(solved.begin(), solved.end(), false));
      if (open == 0 || open >= options_.split_target) break;
      std::vector<Node> next_tasks;
      std::vector<bool> next_solved;
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (solved[i]) {
          next_tasks.push_back(tasks[i]);
          next_solved.push_back(true);
          continue;
        }
        if (++expansion_nodes > options_.node_budget) {
          result.status = FixedSizeResult::Status::kAborted;
          result.nodes = expansion_nodes;
          return result;
        }
        std::vector<Node> children;
        switch (evaluate(tasks[i], &children)) {
          case NodeState::kSolved:
            next_tasks.push_back(tasks[i]);
            next_solved.push_back(true);
            break;
          case NodeState::kDead:
            break;
          case NodeState::kOpen:
            for (Node& c : children) {
              next_tasks.push_back(c);
              next_solved.push_back(false);
            }
            break;
        }
      }
      tasks = std::move(next_tasks);
      solved = std::move(next_solved);
      if (!solved.empty() && solved.front()) break;
    }
    shared_nodes_ = expansion_nodes;

    enum class TaskStatus { kFound, kExhausted, kAborted, kSkipped };
    const std::int64_t count = static_cast<std::int64_t>(tasks.size());
    std::vector<TaskStatus> status(tasks.size(), TaskStatus::kSkipped);
    std::vector<std::uint64_t> task_nodes(tasks.size(), 0);
    std::vector<Node> found(tasks.size());
    std::atomic<std::int64_t> best{count};

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      if (i > best.load(std::memory_order_relaxed)) continue;
      if (solved[i]) {
        status[i] = TaskStatus::kFound;
        found[i] = tasks[i];
      } else {
        Worker w{*this, i, &best};
        const NodeState s = w.dfs(tasks[i], &found[i]);
        task_nodes[i] = w.nodes;
        w.flush();
        status[i] = s == NodeState::kSolved ? TaskStatus::kFound
                    : w.aborted            ? TaskStatus::kAborted
                                           : TaskStatus::kExhausted;
      }
      if (status[i] == TaskStatus::kFound) {
        std::int64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }

    result.nodes = expansion_nodes;
    result.status = FixedSizeResult::Status::kExhausted;
    for (std::int64_t i = 0; i < count; ++i) {
      result.nodes += task_nodes[i];
      if (status[i] == TaskStatus::kFound) {
        result.status = FixedSizeResult::Status::kFound;
        const Node& node = found[i];
        for (int j = 0; j < node.count; ++j) result.family.emplace_back(node.chosen[j]);
        std::sort(result.family.begin(), result.family.end());
        return result;
      }
      if (status[i] != TaskStatus::kExhausted) {
        result.status = FixedSizeResult::Status::kAborted;
        return result;
      }
    }
    return result;
  }

 private:
  struct Worker {
    FixedSizeSearch& search;
    std::int64_t index;
    std::atomic<std::int64_t>* best;
    std::uint64_t nodes = 0;
    std::uint64_t unflushed = 0;
    bool aborted = false;

    NodeState dfs(const Node& node, Node* solution) {
      if (aborted || should_stop()) {
        aborted = true;
        return NodeState::kDead;
      }
      ++nodes;
      ++unflushed;
      std::vector<Node> children;
      const NodeState s = search.evaluate(node, &children);
      if (s == NodeState::kSolved) {
        *solution = node;
        return s;
      }
      if (s == NodeState::kDead) return s;
      for (const Node& child : children) {
        if (dfs(child, solution) == NodeState::kSolved) return NodeState::kSolved;
        if (aborted) return NodeState::kDead;
      }
      return NodeState::kDead;
    }

    bool should_stop() {
      if (search.shared_nodes_.load(std::memory_order_relaxed) + unflushed > search.options_.node_budget) return true;
      if (unflushed < 1024) return false;
      flush();
      if (best->load(std::memory_order_relaxed) < index) return true;
      return Clock::now() > search.deadline_;
    }

    void flush() {
      search.shared_nodes_.fetch_add(unflushed, std::memory_order_relaxed);
      unflushed = 0;
    }
  };

  static std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > ~std::uint64_t{0} - b ? ~std::uint64_t{0} : a + b;
  }

  NodeState evaluate(const Node& node, std::vector<Node>* children) const {
    const std::uint64_t generated =
        closure(n_, k_, std::span<const std::uint8_t>(node.chosen.data(), node.count), disjoint_);
    const std::uint64_t missing = full_ & ~generated;
    if (missing == 0) return NodeState::kSolved;
    const int remaining = size_ - node.count;
    if (remaining <= 0) return NodeState::kDead;

    // Every missing mask needs a tuple that uses at least one new member.
    std::uint64_t new_tuples = 0;
    for (int i = 1; i <= k_; ++i)
      new_tuples = sat_add(new_tuples, binom_[size_][i] - binom_[node.count][i]);
    if (static_cast<std::uint64_t>(std::popcount(missing)) > new_tuples) return NodeState::kDead;

    // Target: the missing mask of fewest elements, smallest value on ties.
    int target = -1;
    for (std::uint64_t bits = missing; bits; bits &= bits - 1) {
      const int x = std::countr_zero(bits);
      if (target < 0 || std::popcount(static_cast<unsigned>(x)) < std::popcount(static_cast<unsigned>(target)))
        target = x;
    }

    std::array<std::uint8_t, 64> candidates{};
    int c = 0;
    const auto x = static_cast<unsigned>(target);
    for (unsigned g = x; g; g = (g - 1) & x) {
      const std::uint64_t bit = std::uint64_t{1} << g;
      if ((node.chosen_word | node.forbidden) & bit) continue;
      candidates[c++] = static_cast<std::uint8_t>(g);
    }
    if (c == 0) return NodeState::kDead;
    std::sort(candidates.begin(), candidates.begin() + c, [](std::uint8_t a, std::uint8_t b) {
      const int pa = std::popcount(static_cast<unsigned>(a)), pb = std::popcount(static_cast<unsigned>(b));
      return pa != pb ? pa > pb : a < b;
    });

    std::uint64_t forbidden = node.forbidden;
    for (int i = 0; i < c; ++i) {
      Node child = node;
      child.chosen[child.count++] = candidates[i];
      child.chosen_word |= std::uint64_t{1} << candidates[i];
      child.forbidden = forbidden;
      children->push_back(child);
      forbidden |= std::uint64_t{1} << candidates[i];
    }
    return NodeState::kOpen;
  }

  int n_, k_, size_;
  const SearchOptions& options_;
  std::uint64_t full_;
  std::array<std::uint64_t, 64> disjoint_;
  Clock::time_point deadline_;
  std::array<std::array<std::uint64_t, 65>, 65> binom_{};
  std::atomic<std::uint64_t> shared_nodes_{0};
};

}  // namespace

std::uint64_t generated_word(int n, int k, std::span<const std::uint8_t> members) {
  if (n < 1 || n > kMaxSearchN) throw InvalidInput("word-packed closure needs 1 <= n <= 6");
  return closure(n, k, members, disjoint_words(n));
}

FixedSizeResult search_fixed_size(int n, int k, int size, const SearchOptions& options) {
  check_n_k(n, k);
  if (n > kMaxSearchN) throw InvalidInput("exact search supports n <= 6");
  if (size < 0 || size > (1 << n) - 1) throw InvalidInput("family size out of range");
  return FixedSizeSearch(n, k, size, options).run();
}

}  // namespace detail

SearchReport min_generator_size(int n, int k, const SearchOptions& options) {
  check_n_k(n, k);
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.n = n;
  report.k = k;
  report.trivial_bound = trivial_lower_bound(n, k);
  report.canonical_size = canonical_size(n, k);
  report.lower_bound = report.trivial_bound.convert_to<std::uint64_t>();
  report.upper_bound = report.canonical_size.convert_to<std::uint64_t>();

  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  auto finish_with_canonical = [&](bool conclusive) {
    report.witness = canonical_generator(n, k);
    report.conclusive = conclusive;
    if (conclusive) report.minimum = report.upper_bound;
  };

  const int cap = std::min(k == 2 ? options.max_n_k2 : options.max_n_other, 6);
  if (report.lower_bound >= report.upper_bound) {
    // The counting bound already meets the construction.
    finish_with_canonical(true);
    report.conjecture_holds = true;
    report.seconds = elapsed();
    return report;
  }
  if (n > cap) {
    finish_with_canonical(false);
    report.note = "n beyond feasibility cap " + std::to_string(cap);
    report.seconds = elapsed();
    return report;
  }

  bool settled = false;
  for (std::uint64_t m = report.lower_bound; m < report.upper_bound; ++m) {
    SearchOptions level = options;
    level.time_budget_seconds = std::max(0.0, options.time_budget_seconds - elapsed());
    level.node_budget = options.node_budget > report.nodes_explored ? options.node_budget - report.nodes_explored : 0;
    auto res = detail::search_fixed_size(n, k, static_cast<int>(m), level);
    report.nodes_explored += res.nodes;
    if (res.status == detail::FixedSizeResult::Status::kFound) {
      report.witness = family_of(n, res.family);
      report.conclusive = true;
      report.minimum = report.witness.size();
      report.lower_bound = report.upper_bound = report.witness.size();
      settled = true;
      break;
    }
    if (res.status == detail::FixedSizeResult::Status::kAborted) {
      report.lower_bound = m;
      finish_with_canonical(false);
      report.note = "budget exhausted while searching size " + std::to_string(m);
      settled = true;
      break;
    }
    report.lower_bound = m + 1;
  }
  if (!settled) finish_with_canonical(true);

  if (!is_k_generator(report.witness, k).holds) throw std::logic_error("search produced an invalid witness");
  report.conjecture_holds = report.conclusive && BigInt(*report.minimum) >= report.canonical_size;
  report.seconds = elapsed();
  return report;
}

std::vector<SearchReport> verify_conjecture_range(int n_max, int k_max, const SearchOptions& options) {
  check_ground_set(n_max);
  if (k_max < 1) throw InvalidInput("k_max must be >= 1");
  std::vector<SearchReport> out;
  for (int k = 1; k <= k_max; ++k)
    for (int n = k; n <= n_max; ++n) out.push_back(min_generator_size(n, k, options));
  return out;
}

}  // namespace genset
