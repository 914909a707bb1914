#pragma once

#include <optional>
#include <string>

#include "filled/element_set.hpp"
#include "filled/group.hpp"

namespace filled {

/// Verification record for one (group, set) pair. The three predicate
/// results are always recomputed from the set calculus, never asserted by a
/// construction. A non-filling witness shows the pattern
/// (product_free, locally_maximal, fills) = (true, true, false) with a
/// non-empty uncovered set.
struct Certificate {
  std::string group_descriptor;
  int group_order = 0;
  ElementSet set;
  bool product_free = false;
  bool locally_maximal = false;
  bool fills = false;
  ElementSet uncovered;
  /// One of "5k-6", "5k-4", "5k-2", "5k", "5k+2", "D44", "search" when the
  /// set came from a named construction.
  std::optional<std::string> case_label;
};

struct PropP1Witness {
  ElementSet set;  // subset of D_{2n} under the standard indexing
  std::string case_label;
  int k = 0;
};

/// The explicit non-filling witness family for D_{2n}, n odd and >= 13.
/// The case is selected by n mod 10 (n=5k, 5k+2, 5k-2, 5k-4, 5k-6 with k
/// odd in every branch):
///   5k-2, 5k, 5k-6:  A = {x^k, x^{k+2}, ..., x^{3k-2}},  B = {y, ..., x^{k-1}y}
///   5k+2:            A = {x^{k-2}, x^k, ..., x^{3k-2}},  B = {y, ..., x^{k-3}y}
///   5k-4:            A = {x^{k-2}, x^k, ..., x^{3k-4}},  B = {y, ..., x^{k-3}y}
/// Throws std::invalid_argument for even n or n < 13.
PropP1Witness prop_p1_witness(int n);

/// The hard-coded 7-element witness {x^2, x^5, x^8, x^18, x^21, x^5y,
/// x^16y} in D_44 (indices {2, 5, 8, 18, 21, 27, 38}).
ElementSet d44_witness();

/// Recomputes every predicate for the pair and assembles the certificate.
/// Never trusts the construction that produced the set.
Certificate verify_witness(const FiniteGroup& g, const ElementSet& s,
                           std::optional<std::string> case_label = {});

}  // namespace filled
