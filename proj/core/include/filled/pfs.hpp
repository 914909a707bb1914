#pragma once

#include "filled/element_set.hpp"
#include "filled/group.hpp"

namespace filled {

// The set calculus behind everything else. A non-empty S is product-free
// when S and SS are disjoint; S fills G when every non-identity element is
// in S or SS; S is locally maximal product-free exactly when
// G = T(S) u sqrt(S) with T(S) = S u SS u SS^-1 u S^-1S and
// sqrt(S) = { x : x^2 in S }.

/// { a*b : a in A, b in B }. Throws std::invalid_argument when a set does
/// not belong to g (universe mismatch).
ElementSet product_set(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);

/// { a^-1 : a in A }.
ElementSet inverse_set(const FiniteGroup& g, const ElementSet& a);

/// T(S) = S u SS u SS^-1 u S^-1S.
ElementSet t_closure(const FiniteGroup& g, const ElementSet& s);

/// { x in G : x^2 in S }.
ElementSet sqrt_set(const FiniteGroup& g, const ElementSet& s);

/// True iff S and SS are disjoint. S must be non-empty (the predicate is
/// defined for non-empty sets); throws std::invalid_argument otherwise.
bool is_product_free(const FiniteGroup& g, const ElementSet& s);

/// True iff T(S) u sqrt(S) = G. Requires a product-free input; throws
/// std::invalid_argument otherwise.
bool is_locally_maximal_pf(const FiniteGroup& g, const ElementSet& s);

/// G* \ (S u SS): the non-identity elements S fails to cover.
ElementSet uncovered(const FiniteGroup& g, const ElementSet& s);

/// True iff uncovered(g, s) is empty.
bool fills(const FiniteGroup& g, const ElementSet& s);

struct DihedralParts {
  ElementSet rotations;    // S intersected with <x>
  ElementSet reflections;  // S intersected with <x>y
};

/// Splits a subset of a Dihedral-tagged group into its rotation and
/// reflection parts. Throws std::invalid_argument for other groups (the
/// split relies on the constructor's index layout).
DihedralParts dihedral_decompose(const FiniteGroup& g, const ElementSet& s);

/// Extends a product-free set to a locally maximal one by repeatedly adding
/// the least element whose addition preserves product-freeness.
/// Deterministic; returns the input unchanged when it is already locally
/// maximal.
ElementSet extend_to_locally_maximal(const FiniteGroup& g, const ElementSet& s);

}  // namespace filled
