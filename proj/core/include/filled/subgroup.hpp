#pragma once

#include <vector>

#include "filled/element_set.hpp"
#include "filled/group.hpp"

namespace filled {

/// A subgroup of a FiniteGroup, stored as an ElementSet plus a normality
/// flag computed at construction. The parent pointer must outlive the
/// subgroup.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  ElementSet elements;
  bool normal = false;

  int size() const { return elements.size(); }
  int index() const { return parent->order() / elements.size(); }
};

/// Least subgroup containing the generators (BFS closure).
Subgroup generated_subgroup(const FiniteGroup& g, const ElementSet& generators);

/// All normal subgroups, including the trivial subgroup and the whole
/// group. Computed as closures of unions of conjugacy classes (iterated
/// joins of single-class normal closures), deduplicated, and sorted by size
/// then by ascending element list.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

struct Quotient {
  FiniteGroup group;
  /// projection[i] = coset index of element i; a homomorphism onto the
  /// quotient. Cosets are indexed by the rank of their least member.
  std::vector<int> projection;
};

/// Quotient by a normal subgroup. Throws std::invalid_argument when the
/// subgroup is not flagged normal. The projection is verified to be a
/// homomorphism (exhaustively for order <= 64, sampled above).
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

}  // namespace filled
