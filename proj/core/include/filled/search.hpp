#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "filled/element_set.hpp"
#include "filled/group.hpp"

namespace filled {

struct SearchBudget {
  /// DFS node limit; 0 means unlimited.
  std::uint64_t max_nodes = 1'000'000'000ULL;
  /// Optional cap on candidate set size (must be in [1, order]). When the
  /// cap actually truncates the tree and no counterexample was found the
  /// verdict is unknown, not filled.
  std::optional<int> max_set_size;
  /// Forces single-threaded search with a DFS-first witness and a
  /// reproducible node count.
  bool deterministic = false;
};

enum class SearchVerdict { filled, not_filled, unknown };

struct SearchOutcome {
  SearchVerdict verdict = SearchVerdict::unknown;
  /// For not_filled: a locally maximal product-free set that does not fill
  /// the group (re-verified through the predicates before being returned).
  std::optional<ElementSet> witness;
  std::uint64_t nodes_visited = 0;
  std::chrono::microseconds elapsed{0};
};

/// Per-size enumeration: walks the k-subsets of G* in lexicographic order
/// and returns the first that is product-free, locally maximal, and does
/// not fill the group, or nothing. This is the slow reference path the
/// pruned search is checked against; it decides local maximality by the
/// same difference computation as the classical per-size program
/// (G* minus S, SS, SS^-1, S^-1S and the square roots of S).
std::optional<ElementSet> find_nonfilling_lmpf_of_size(const FiniteGroup& g, int k);

/// Decides whether g is filled by depth-first search over product-free
/// sets, extending by ascending element index. A subtree is pruned once the
/// node fills the group (every product-free superset then fills too); a
/// node that is locally maximal and does not fill is a counterexample and
/// ends the search.
///
/// threads > 1 shards the top-level branches (choice of least element)
/// across workers, splitting max_nodes evenly between shards; the verdict
/// is deterministic for a fixed thread count but the witness may vary.
/// budget.deterministic forces the sequential path.
SearchOutcome decide_filled(const FiniteGroup& g, const SearchBudget& budget = {},
                            int threads = 1);

}  // namespace filled
