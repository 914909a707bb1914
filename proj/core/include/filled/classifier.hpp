#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "filled/group.hpp"
#include "filled/search.hpp"
#include "filled/witness.hpp"

namespace filled {

enum class Status { filled, not_filled, unknown };

struct RuleApplication {
  std::string rule;    // "abelian", "odd-order", "family", "index-3",
                       // "index-5", "quotient", "search"
  std::string detail;
};

struct QuotientStep {
  int subgroup_size = 0;
  int quotient_order = 0;
  Status verdict = Status::unknown;
};

/// Classification result with provenance: every rule consulted is recorded
/// in order. A not_filled verdict from search carries a witness
/// certificate; one from the quotient rule carries the quotient chain.
/// filled from search means the tree was exhausted within budget.
struct Verdict {
  Status status = Status::unknown;
  std::vector<RuleApplication> provenance;
  std::optional<Certificate> witness;
  std::optional<std::vector<QuotientStep>> quotient_chain;
};

/// Cache of quotient verdicts keyed by the quotient's serialized Cayley
/// table (exact tables, not isomorphism classes). Safe for concurrent use;
/// identical keys always map to identical verdicts, so last-writer-wins is
/// idempotent.
class QuotientMemo {
 public:
  std::optional<Status> find(const std::string& key) const;
  void store(const std::string& key, Status value);

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Status> map_;
};

struct ClassifyOptions {
  SearchBudget budget;
  int threads = 1;
  bool use_memo = true;
  /// Shared across recursive quotient classification; created on demand.
  std::shared_ptr<QuotientMemo> memo;
};

/// Abelian classification: a finite abelian group is filled exactly when it
/// is C3, C5, or an elementary abelian 2-group (detected structurally, not
/// by tag). Returns nothing for nonabelian groups.
std::optional<Verdict> filter_abelian(const FiniteGroup& g);

/// Odd order: above order 5 never filled; orders 3 and 5 filled; order 1
/// filled (flagged trivial). Returns nothing for even order.
std::optional<Verdict> filter_odd_order(const FiniteGroup& g);

/// Family rules: dicyclic groups are never filled; a dihedral group is
/// filled exactly when its order is 6, 8, 10, 12, 14 or 22; any group of
/// order 4p with p prime >= 5 is not filled. Dihedral/dicyclic clauses act
/// on the advisory tag; the 4p clause acts on the order alone.
std::optional<Verdict> filter_family(const FiniteGroup& g);

/// A group other than C3 with a normal subgroup of index 3 is not filled.
std::optional<Verdict> filter_index_3(const FiniteGroup& g);

/// A group other than C5 with a normal subgroup N of index 5 such that some
/// element of order 5 lies outside N is not filled.
std::optional<Verdict> filter_index_5(const FiniteGroup& g);

/// Classifies every proper nontrivial quotient recursively (memoized by
/// serialized table); a non-filled quotient makes the group non-filled.
/// Never concludes filled.
std::optional<Verdict> filter_quotients(const FiniteGroup& g, const ClassifyOptions& options = {});

/// Full pipeline: abelian, odd-order, family, index-3, index-5, quotients,
/// then exhaustive search. The first conclusive rule wins; provenance
/// records every rule consulted. unknown only arises from budget
/// exhaustion.
Verdict classify(const FiniteGroup& g, const ClassifyOptions& options);
Verdict classify(const FiniteGroup& g, const SearchBudget& budget = {});

}  // namespace filled
