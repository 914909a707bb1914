#include "filled/search.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "filled/pfs.hpp"

namespace filled {

namespace {

// ---------------------------------------------------------------------------
// Per-size enumeration (the reference path). Plain membership arrays, no
// shared machinery with the pruned DFS below. Combinations are walked in
// lexicographic order by recursing over ascending prefixes; a prefix whose
// own products already collide is skipped, which drops exactly the
// combinations the full product-free test would reject.
// ---------------------------------------------------------------------------

struct SizedScan {
  const FiniteGroup& g;
  std::vector<int> candidates;  // G* ascending
  std::vector<int> chosen;
  std::vector<char> in_set;
  int k;

  explicit SizedScan(const FiniteGroup& group, int size)
      : g(group), in_set(std::size_t(group.order()), 0), k(size) {
    for (int i = 0; i < g.order(); ++i)
      if (i != g.identity()) candidates.push_back(i);
  }

  bool prefix_product_free(int added) const {
    // products within chosen involving the newly added element
    for (int s : chosen) {
      if (in_set[std::size_t(g.mul(s, added))] || in_set[std::size_t(g.mul(added, s))])
        return false;
    }
    if (in_set[std::size_t(g.mul(added, added))]) return false;
    // added may itself be a product of existing pairs
    for (int s : chosen)
      for (int t : chosen)
        if (g.mul(s, t) == added) return false;
    return true;
  }

  // The classical acceptance test: S is kept when it is product-free, does
  // not cover G*, and G* minus S, SS, SS^-1, S^-1S and sqrt(S) is empty.
  bool accept() const {
    const int n = g.order();
    std::vector<char> remaining(std::size_t(n), 1);
    remaining[std::size_t(g.identity())] = 0;
    for (int s : chosen) remaining[std::size_t(s)] = 0;
    for (int s : chosen)
      for (int t : chosen) remaining[std::size_t(g.mul(s, t))] = 0;
    bool covers = true;
    for (int i = 0; i < n && covers; ++i) covers = remaining[std::size_t(i)] == 0;
    if (covers) return false;  // fills G, not a counterexample
    for (int s : chosen) {
      for (int t : chosen) {
        remaining[std::size_t(g.mul(s, g.inv(t)))] = 0;
        remaining[std::size_t(g.mul(g.inv(s), t))] = 0;
      }
    }
    for (int q = 0; q < n; ++q)
      if (in_set[std::size_t(g.mul(q, q))]) remaining[std::size_t(q)] = 0;
    for (int i = 0; i < n; ++i)
      if (remaining[std::size_t(i)]) return false;  // not locally maximal
    return true;
  }

  // Lexicographically first counterexample of size k, if any.
  bool run(std::size_t from, std::optional<ElementSet>& out) {
    if (int(chosen.size()) == k) {
      if (!accept()) return false;
      out = ElementSet::from_indices(g.order(), chosen);
      return true;
    }
    std::size_t needed = std::size_t(k) - chosen.size();
    for (std::size_t c = from; c + needed <= candidates.size(); ++c) {
      int e = candidates[c];
      if (!prefix_product_free(e)) continue;
      chosen.push_back(e);
      in_set[std::size_t(e)] = 1;
      bool hit = run(c + 1, out);
      in_set[std::size_t(e)] = 0;
      chosen.pop_back();
      if (hit) return true;
    }
    return false;
  }
};

// ---------------------------------------------------------------------------
// Pruned DFS. Nodes are product-free sets, extended by ascending element
// index. Masks are kept incrementally per depth:
//   set      current S
//   prods    SS
//   rest     SS^-1 u S^-1S u sqrt(S)
// fills(S) <=> G* is within S u SS; local maximality <=> G = S u SS u rest.
// ---------------------------------------------------------------------------

struct Frame {
  ElementSet set, prods, rest;
  int next = 0;
};

struct DfsShared {
  const FiniteGroup& g;
  ElementSet gstar;
  ElementSet gall;
  std::vector<ElementSet> sqrt_pre;  // sqrt_pre[s] = { x : x^2 = s }
  std::optional<int> max_size;

  explicit DfsShared(const FiniteGroup& group)
      : g(group), gstar(g_star(group)), gall(ElementSet::full(group.order())) {
    sqrt_pre.assign(std::size_t(group.order()), ElementSet(group.order()));
    for (int x = 0; x < group.order(); ++x)
      sqrt_pre[std::size_t(group.mul(x, x))].add(x);
  }
};

struct ShardResult {
  std::optional<ElementSet> witness;
  std::uint64_t nodes = 0;
  bool truncated = false;  // budget or size cap cut the subtree
};

// Runs the DFS over the subtrees rooted at the given first elements.
// max_nodes of 0 means unlimited. The cancel flag is polled per node.
ShardResult run_dfs(const DfsShared& shared, std::span<const int> roots,
                    std::uint64_t max_nodes, const std::atomic<bool>* cancel) {
  const FiniteGroup& g = shared.g;
  const int n = g.order();
  ShardResult result;

  std::vector<Frame> frames(std::size_t(n) + 2);
  for (auto& f : frames) {
    f.set = ElementSet(n);
    f.prods = ElementSet(n);
    f.rest = ElementSet(n);
  }

  ElementSet gained(n), gained_rest(n);

  for (std::size_t r = 0; r < roots.size(); ++r) {
    frames[0].next = roots[r];
    int depth = 0;
    bool single_root_done = false;
    while (depth >= 0 && !single_root_done) {
      if (cancel && cancel->load(std::memory_order_relaxed)) return result;
      Frame& cur = frames[std::size_t(depth)];
      // restrict the root frame to the shard's single first element
      int scan_end = (depth == 0) ? cur.next + 1 : n;
      int j = cur.next;
      bool descended = false;
      for (; j < scan_end; ++j) {
        if (j == g.identity()) continue;

        // products gained by adding j to S
        gained = shared.sqrt_pre[std::size_t(0)];  // reset via assignment below
        for (auto& w : const_cast<std::vector<std::uint64_t>&>(
                 std::vector<std::uint64_t>()))  // never reached
          (void)w;
        gained = ElementSet(n);
        cur.set.for_each([&](int s) {
          gained.add(g.mul(s, j));
          gained.add(g.mul(j, s));
        });
        gained.add(g.mul(j, j));

        ElementSet new_set = cur.set;
        new_set.add(j);
        if (new_set.intersects(cur.prods) || new_set.intersects(gained))
          continue;  // not product-free

        // A node: S u {j} is product-free.
        ++result.nodes;
        if (max_nodes != 0 && result.nodes >= max_nodes) {
          result.truncated = true;
          return result;
        }

        ElementSet new_prods = cur.prods | gained;

        // fills => prune this subtree (every product-free superset fills too)
        ElementSet cover = new_set | new_prods;
        if (shared.gstar.is_subset_of(cover)) continue;

        // rest gains: s*j^-1, j*s^-1, s^-1*j, j^-1*s, identity, sqrt-preimage of j
        gained_rest = shared.sqrt_pre[std::size_t(j)];
        int jinv = g.inv(j);
        cur.set.for_each([&](int s) {
          gained_rest.add(g.mul(s, jinv));
          gained_rest.add(g.mul(j, g.inv(s)));
          gained_rest.add(g.mul(g.inv(s), j));
          gained_rest.add(g.mul(jinv, s));
        });
        gained_rest.add(g.identity());
        ElementSet new_rest = cur.rest | gained_rest;

        // locally maximal and non-filling: counterexample
        if (shared.gall.is_subset_of(cover | new_rest)) {
          result.witness = new_set;
          return result;
        }

        if (shared.max_size && new_set.size() >= *shared.max_size) {
          // The cap stops the descent; the subtree may hide counterexamples.
          result.truncated = true;
          continue;
        }

        // descend
        cur.next = j + 1;
        Frame& child = frames[std::size_t(depth) + 1];
        child.set = new_set;
        child.prods = new_prods;
        child.rest = new_rest;
        child.next = j + 1;
        ++depth;
        descended = true;
        break;
      }
      if (!descended) {
        if (depth == 0) single_root_done = true;
        --depth;
      }
    }
  }
  return result;
}

SearchOutcome aggregate(std::vector<ShardResult>& shards,
                        std::chrono::steady_clock::time_point start) {
  SearchOutcome out;
  bool truncated = false;
  for (auto& s : shards) {
    out.nodes_visited += s.nodes;
    truncated = truncated || s.truncated;
    if (s.witness && !out.witness) out.witness = s.witness;
  }
  if (out.witness)
    out.verdict = SearchVerdict::not_filled;
  else
    out.verdict = truncated ? SearchVerdict::unknown : SearchVerdict::filled;
  out.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

}  // namespace

std::optional<ElementSet> find_nonfilling_lmpf_of_size(const FiniteGroup& g, int k) {
  if (k < 1 || k >= g.order())
    throw std::invalid_argument("find_nonfilling_lmpf_of_size: k must be in [1, order)");
  SizedScan scan(g, k);
  std::optional<ElementSet> out;
  scan.run(0, out);
  return out;
}

SearchOutcome decide_filled(const FiniteGroup& g, const SearchBudget& budget, int threads) {
  if (g.order() < 2) throw std::invalid_argument("decide_filled: order must be at least 2");
  if (budget.max_set_size && (*budget.max_set_size < 1 || *budget.max_set_size > g.order()))
    throw std::invalid_argument("decide_filled: max_set_size out of range");
  auto start = std::chrono::steady_clock::now();

  DfsShared shared(g);
  shared.max_size = budget.max_set_size;

  std::vector<int> roots;
  for (int i = 0; i < g.order(); ++i)
    if (i != g.identity()) roots.push_back(i);

  int workers = budget.deterministic ? 1 : std::max(1, threads);
  std::vector<ShardResult> results;

  if (workers == 1) {
    results.push_back(run_dfs(shared, roots, budget.max_nodes, nullptr));
  } else {
    // One shard per top-level branch; the node budget is split evenly.
    std::uint64_t per_shard =
        budget.max_nodes == 0 ? 0 : std::max<std::uint64_t>(1, budget.max_nodes / roots.size());
    std::atomic<bool> cancel{false};
    std::atomic<std::size_t> next_shard{0};
    std::mutex mutex;
    results.reserve(roots.size());

    auto worker = [&] {
      for (;;) {
        std::size_t idx = next_shard.fetch_add(1);
        if (idx >= roots.size() || cancel.load()) return;
        std::span<const int> one(&roots[idx], 1);
        ShardResult r = run_dfs(shared, one, per_shard, &cancel);
        std::lock_guard<std::mutex> lock(mutex);
        if (r.witness) cancel.store(true);
        results.push_back(std::move(r));
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchOutcome out = aggregate(results, start);

  if (out.witness) {
    // Counterexamples always re-verify through the predicates.
    if (!is_product_free(g, *out.witness) || !is_locally_maximal_pf(g, *out.witness) ||
        fills(g, *out.witness))
      throw std::logic_error("decide_filled: witness failed re-verification");
  }
  return out;
}

}  // namespace filled
