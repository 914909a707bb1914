#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "filled/element_set.hpp"
#include "filled/errors.hpp"
#include "filled/permutation.hpp"

namespace filled {

enum class FamilyKind {
  untagged,
  cyclic,           // C_n
  dihedral,         // D_{2n}, param = n
  dicyclic,         // Q_{4n}, param = n
  elem_abelian_2,   // C_2^k, param = k
  semidirect_cp_c4, // C_p : C_4, param = p
  product,          // direct product, parts hold the factor tags
};

/// Advisory construction metadata. Constructors set it; ingested tables are
/// untagged. It is never verified structural recognition.
struct FamilyTag {
  FamilyKind kind = FamilyKind::untagged;
  int param = 0;
  std::vector<FamilyTag> parts;

  static FamilyTag untagged() { return {}; }
  static FamilyTag cyclic(int n) { return {FamilyKind::cyclic, n, {}}; }
  static FamilyTag dihedral(int n) { return {FamilyKind::dihedral, n, {}}; }
  static FamilyTag dicyclic(int n) { return {FamilyKind::dicyclic, n, {}}; }
  static FamilyTag elem_abelian_2(int k) { return {FamilyKind::elem_abelian_2, k, {}}; }
  static FamilyTag semidirect_cp_c4(int p) { return {FamilyKind::semidirect_cp_c4, p, {}}; }
  static FamilyTag product(FamilyTag a, FamilyTag b);

  /// Short structural name: "C5", "D44", "Q16", "C2^3", "C5:C4",
  /// "D8 x C2", or "untagged".
  std::string describe() const;
};

/// A finite group as a complete Cayley table, with derived inverse table,
/// element orders, auto-detected identity, display names, and an advisory
/// family tag. Immutable after construction; safe to share across threads.
class FiniteGroup {
 public:
  int order() const { return order_; }

  /// Product of elements a*b. Unchecked; indices must be in [0, order).
  int mul(int a, int b) const { return table_[std::size_t(a) * std::size_t(order_) + std::size_t(b)]; }

  /// Checked product.
  int at(int a, int b) const;

  int identity() const { return identity_; }

  /// Inverse of element a. Unchecked.
  int inv(int a) const { return inverses_[std::size_t(a)]; }

  /// Least m >= 1 with a^m = identity. Throws std::out_of_range on a bad index.
  int element_order(int a) const;

  const std::string& element_name(int a) const;

  /// Index of the element whose display name matches `name` (whitespace and
  /// '*' are ignored, "^1" may be elided), or -1 when there is none.
  int element_by_name(std::string_view name) const;

  const FamilyTag& family() const { return tag_; }

  /// Tag-based name ("D44") or "untagged".
  std::string descriptor() const { return tag_.describe(); }

  /// Runs the full invariant suite: entries in range, Latin square,
  /// identity element, two-sided inverses, element orders, and
  /// associativity. The associativity pass is O(n^3) and is skipped for
  /// order > 256 unless forced. Throws validation_error on failure.
  void validate(bool force_associativity = false) const;

  /// Builds a group from a flat row-major table. Latin-square and identity
  /// validation always run; associativity runs per `check_associativity`.
  /// Names may be empty (default "g<i>" names are generated).
  static FiniteGroup from_table(std::vector<int> flat_table, int n, FamilyTag tag,
                                std::vector<std::string> names, bool check_associativity);

 private:
  FiniteGroup() = default;
  void derive();  // identity, inverses, orders; throws validation_error

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major order_ x order_
  std::vector<int> inverses_;
  std::vector<int> elem_orders_;
  std::vector<std::string> names_;
  FamilyTag tag_;
};

/// Cyclic group C_n: i*j = (i+j) mod n, identity 0.
FiniteGroup make_cyclic(int n);

/// Dihedral group of order two_n = 2n (n >= 3), presentation
/// x^n = y^2 = 1, xy = yx^-1. Indices 0..n-1 are the rotations x^i and
/// n..2n-1 the reflections x^i y.
FiniteGroup make_dihedral(int two_n);

/// Dicyclic (generalized quaternion) group of order four_n = 4n (n >= 2),
/// presentation x^{2n} = 1, y^2 = x^n, xy = yx^-1. Indices 0..2n-1 are
/// x^i, 2n..4n-1 are x^i y.
FiniteGroup make_dicyclic(int four_n);

/// Elementary abelian 2-group of order 2^k: i*j = i XOR j. The exponent is
/// capped at 12 (order 4096).
FiniteGroup make_elementary_abelian_2(int k);
inline constexpr int kMaxElemAbelian2Exp = 12;

/// C_p : C_4 for a prime p = 1 (mod 4): generators a (order p) and
/// b (order 4) with b a b^-1 = a^s where s is the least residue of
/// multiplicative order 4 mod p. Element a^i b^j has index 4i + j.
FiniteGroup make_semidirect_cp_c4(int p);

/// Direct product on pairs, row-major pair indexing: (i, j) -> i*|h| + j.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Closure of the generators under composition. Elements are indexed in BFS
/// discovery order from the identity, multiplying on the right by the
/// generators in the given order. Empty generator list yields the trivial
/// group. Throws capacity_error when the closure exceeds kMaxOrder.
FiniteGroup make_from_permutations(std::span<const Permutation> generators, int degree);

/// The non-identity elements G*.
ElementSet g_star(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);

/// Conjugacy classes as sorted index lists, classes ordered by least element
/// (so the identity class comes first).
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

ElementSet center(const FiniteGroup& g);

}  // namespace filled
