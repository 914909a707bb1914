#include "filled/pfs.hpp"

#include <stdexcept>

namespace filled {

namespace {

void check_member(const FiniteGroup& g, const ElementSet& s, const char* where) {
  if (s.universe() != g.order())
    throw std::invalid_argument(std::string(where) + ": set does not belong to the group");
}

}  // namespace

ElementSet product_set(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  check_member(g, a, "product_set");
  check_member(g, b, "product_set");
  ElementSet out(g.order());
  a.for_each([&](int x) { b.for_each([&](int y) { out.add(g.mul(x, y)); }); });
  return out;
}

ElementSet inverse_set(const FiniteGroup& g, const ElementSet& a) {
  check_member(g, a, "inverse_set");
  ElementSet out(g.order());
  a.for_each([&](int x) { out.add(g.inv(x)); });
  return out;
}

ElementSet t_closure(const FiniteGroup& g, const ElementSet& s) {
  check_member(g, s, "t_closure");
  ElementSet inv = inverse_set(g, s);
  ElementSet t = s;
  t |= product_set(g, s, s);
  t |= product_set(g, s, inv);
  t |= product_set(g, inv, s);
  return t;
}

ElementSet sqrt_set(const FiniteGroup& g, const ElementSet& s) {
  check_member(g, s, "sqrt_set");
  ElementSet out(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (s.contains(g.mul(x, x))) out.add(x);
  return out;
}

bool is_product_free(const FiniteGroup& g, const ElementSet& s) {
  check_member(g, s, "is_product_free");
  if (s.empty())
    throw std::invalid_argument("is_product_free: the predicate is defined for non-empty sets");
  // A set containing the identity is never product-free (1*1 = 1).
  if (s.contains(g.identity())) return false;
  return !s.intersects(product_set(g, s, s));
}

bool is_locally_maximal_pf(const FiniteGroup& g, const ElementSet& s) {
  if (!is_product_free(g, s))
    throw std::invalid_argument("is_locally_maximal_pf: input is not product-free");
  ElementSet all = t_closure(g, s) | sqrt_set(g, s);
  return all == ElementSet::full(g.order());
}

ElementSet uncovered(const FiniteGroup& g, const ElementSet& s) {
  check_member(g, s, "uncovered");
  ElementSet rest = g_star(g);
  rest -= s;
  rest -= product_set(g, s, s);
  return rest;
}

bool fills(const FiniteGroup& g, const ElementSet& s) { return uncovered(g, s).empty(); }

DihedralParts dihedral_decompose(const FiniteGroup& g, const ElementSet& s) {
  check_member(g, s, "dihedral_decompose");
  if (g.family().kind != FamilyKind::dihedral)
    throw std::invalid_argument("dihedral_decompose: group is not tagged dihedral");
  const int n = g.family().param;
  ElementSet rot_mask(g.order());
  for (int i = 0; i < n; ++i) rot_mask.add(i);
  return {s & rot_mask, s - rot_mask};
}

ElementSet extend_to_locally_maximal(const FiniteGroup& g, const ElementSet& s) {
  if (!is_product_free(g, s))
    throw std::invalid_argument("extend_to_locally_maximal: input is not product-free");
  ElementSet current = s;
  ElementSet products = product_set(g, current, current);
  for (;;) {
    int added = -1;
    for (int j = 0; j < g.order() && added < 0; ++j) {
      if (current.contains(j)) continue;
      // products gained by adding j
      ElementSet gained(g.order());
      current.for_each([&](int x) {
        gained.add(g.mul(x, j));
        gained.add(g.mul(j, x));
      });
      gained.add(g.mul(j, j));
      ElementSet with_j = current;
      with_j.add(j);
      if (!with_j.intersects(products | gained)) {
        current = with_j;
        products |= gained;
        added = j;
      }
    }
    if (added < 0) break;
  }
  return current;
}

}  // namespace filled
