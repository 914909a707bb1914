#include "filled/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <utility>

namespace filled {

namespace {

std::string power_name(const std::string& base, int e) {
  if (e == 0) return "1";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

/// "x^i" for rotations, "x^i*y" for reflections (i = 0 gives "y").
std::string rotation_reflection_name(int i, int rotation_count) {
  if (i < rotation_count) return power_name("x", i);
  int e = i - rotation_count;
  if (e == 0) return "y";
  return power_name("x", e) + "*y";
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names(std::size_t(n));
  for (int i = 0; i < n; ++i) names[std::size_t(i)] = "g" + std::to_string(i);
  return names;
}

// Name matching ignores whitespace and '*' and allows "^1" before a
// non-digit to be elided, so "x^5*y", "x^5y" and "x^5 y" all agree and
// "x*y" matches "x^1y".
std::string normalize_name(std::string_view s) {
  std::string flat;
  flat.reserve(s.size());
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '*') flat += c;
  std::string out;
  for (std::size_t i = 0; i < flat.size();) {
    if (flat[i] == '^' && i + 1 < flat.size() && flat[i + 1] == '1' &&
        (i + 2 == flat.size() || !std::isdigit(static_cast<unsigned char>(flat[i + 2])))) {
      i += 2;
      continue;
    }
    out += flat[i];
    ++i;
  }
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FamilyTag FamilyTag::product(FamilyTag a, FamilyTag b) {
  FamilyTag t;
  t.kind = FamilyKind::product;
  t.parts.push_back(std::move(a));
  t.parts.push_back(std::move(b));
  return t;
}

std::string FamilyTag::describe() const {
  switch (kind) {
    case FamilyKind::untagged:
      return "untagged";
    case FamilyKind::cyclic:
      return "C" + std::to_string(param);
    case FamilyKind::dihedral:
      return "D" + std::to_string(2 * param);
    case FamilyKind::dicyclic:
      return "Q" + std::to_string(4 * param);
    case FamilyKind::elem_abelian_2:
      return "C2^" + std::to_string(param);
    case FamilyKind::semidirect_cp_c4:
      return "C" + std::to_string(param) + ":C4";
    case FamilyKind::product: {
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " x ";
        std::string part = parts[i].describe();
        if (parts[i].kind == FamilyKind::product) part = "(" + part + ")";
        out += part;
      }
      return out;
    }
  }
  return "untagged";
}

int FiniteGroup::at(int a, int b) const {
  if (a < 0 || a >= order_ || b < 0 || b >= order_)
    throw std::out_of_range("FiniteGroup: element index out of range");
  return mul(a, b);
}

int FiniteGroup::element_order(int a) const {
  if (a < 0 || a >= order_) throw std::out_of_range("FiniteGroup: element index out of range");
  return elem_orders_[std::size_t(a)];
}

const std::string& FiniteGroup::element_name(int a) const {
  if (a < 0 || a >= order_) throw std::out_of_range("FiniteGroup: element index out of range");
  return names_[std::size_t(a)];
}

int FiniteGroup::element_by_name(std::string_view name) const {
  std::string wanted = normalize_name(name);
  for (int i = 0; i < order_; ++i)
    if (normalize_name(names_[std::size_t(i)]) == wanted) return i;
  return -1;
}

void FiniteGroup::derive() {
  const int n = order_;

  // Latin-square check; report the first offending cell.
  std::vector<char> seen(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = mul(i, j);
      if (v < 0 || v >= n)
        throw validation_error("table entry out of range at cell (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
      if (seen[std::size_t(v)])
        throw validation_error("not a Latin square: duplicate value " + std::to_string(v) +
                               " in row " + std::to_string(i) + " at cell (" + std::to_string(i) +
                               "," + std::to_string(j) + ")");
      seen[std::size_t(v)] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      int v = mul(i, j);
      if (seen[std::size_t(v)])
        throw validation_error("not a Latin square: duplicate value " + std::to_string(v) +
                               " in column " + std::to_string(j) + " at cell (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
      seen[std::size_t(v)] = 1;
    }
  }

  // Identity auto-detection: the unique e acting as identity on both sides.
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = mul(e, j) == j && mul(j, e) == j;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw validation_error("no identity element");

  inverses_.assign(std::size_t(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mul(i, j) == identity_) {
        if (mul(j, i) != identity_)
          throw validation_error("one-sided inverse for element " + std::to_string(i) +
                                 " at cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
        inverses_[std::size_t(i)] = j;
        break;
      }
    }
  }

  elem_orders_.assign(std::size_t(n), 0);
  for (int i = 0; i < n; ++i) {
    int m = 1;
    int p = i;
    while (p != identity_) {
      p = mul(p, i);
      ++m;
      if (m > n) throw validation_error("element " + std::to_string(i) + " has no finite order");
    }
    elem_orders_[std::size_t(i)] = m;
  }

  if (names_.empty()) names_ = default_names(n);
}

void FiniteGroup::validate(bool force_associativity) const {
  const int n = order_;
  if (n <= 0) throw validation_error("empty group");
  if (std::size_t(n) * std::size_t(n) != table_.size())
    throw validation_error("table size does not match order");

  // Re-run the structural derivation on a copy; it throws on any defect.
  FiniteGroup probe;
  probe.order_ = order_;
  probe.table_ = table_;
  probe.derive();
  if (probe.identity_ != identity_) throw validation_error("stored identity is wrong");
  if (probe.inverses_ != inverses_) throw validation_error("stored inverse table is wrong");
  if (probe.elem_orders_ != elem_orders_) throw validation_error("stored element orders are wrong");

  if (n <= 256 || force_associativity) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (mul(mul(i, j), k) != mul(i, mul(j, k)))
            throw validation_error("associativity fails at (" + std::to_string(i) + "," +
                                   std::to_string(j) + "," + std::to_string(k) + ")");
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<int> flat_table, int n, FamilyTag tag,
                                    std::vector<std::string> names, bool check_associativity) {
  if (n <= 0) throw validation_error("group order must be positive");
  if (n > kMaxOrder)
    throw capacity_error("order " + std::to_string(n) + " exceeds the supported bound " +
                         std::to_string(kMaxOrder));
  if (flat_table.size() != std::size_t(n) * std::size_t(n))
    throw validation_error("table size does not match order");
  if (!names.empty() && names.size() != std::size_t(n))
    throw validation_error("name list does not match order");

  FiniteGroup g;
  g.order_ = n;
  g.table_ = std::move(flat_table);
  g.tag_ = std::move(tag);
  g.names_ = std::move(names);
  g.derive();

  if (check_associativity) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
            throw validation_error("associativity fails at (" + std::to_string(i) + "," +
                                   std::to_string(j) + "," + std::to_string(k) + ")");
  }
  return g;
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("make_cyclic: order must be at least 1");
  if (n > kMaxOrder) throw capacity_error("make_cyclic: order exceeds bound");
  std::vector<int> table(std::size_t(n) * std::size_t(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[std::size_t(i) * n + j] = (i + j) % n;
  std::vector<std::string> names(std::size_t(n));
  for (int i = 0; i < n; ++i) names[std::size_t(i)] = power_name("x", i);
  return FiniteGroup::from_table(std::move(table), n, FamilyTag::cyclic(n), std::move(names),
                                 false);
}

FiniteGroup make_dihedral(int two_n) {
  if (two_n % 2 != 0 || two_n < 6)
    throw std::invalid_argument("make_dihedral: order must be even and at least 6");
  if (two_n > kMaxOrder) throw capacity_error("make_dihedral: order exceeds bound");
  const int n = two_n / 2;
  std::vector<int> table(std::size_t(two_n) * std::size_t(two_n));
  auto rot = [&](int e) { return e % n; };  // e may be negative + n below
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[std::size_t(i) * two_n + j] = rot(i + j);              // x^i x^j
      table[std::size_t(i) * two_n + (n + j)] = n + rot(i + j);    // x^i (x^j y)
      table[std::size_t(n + i) * two_n + j] = n + rot(i - j + n);  // (x^i y) x^j
      table[std::size_t(n + i) * two_n + (n + j)] = rot(i - j + n);
    }
  }
  std::vector<std::string> names(std::size_t(two_n));
  for (int i = 0; i < two_n; ++i) names[std::size_t(i)] = rotation_reflection_name(i, n);
  return FiniteGroup::from_table(std::move(table), two_n, FamilyTag::dihedral(n),
                                 std::move(names), false);
}

FiniteGroup make_dicyclic(int four_n) {
  if (four_n % 4 != 0 || four_n < 8)
    throw std::invalid_argument("make_dicyclic: order must be a multiple of 4 and at least 8");
  if (four_n > kMaxOrder) throw capacity_error("make_dicyclic: order exceeds bound");
  const int n = four_n / 4;
  const int r = 2 * n;  // rotation count: <x> has order 2n
  std::vector<int> table(std::size_t(four_n) * std::size_t(four_n));
  auto rot = [&](int e) { return ((e % r) + r) % r; };
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      table[std::size_t(i) * four_n + j] = rot(i + j);
      table[std::size_t(i) * four_n + (r + j)] = r + rot(i + j);
      table[std::size_t(r + i) * four_n + j] = r + rot(i - j);
      table[std::size_t(r + i) * four_n + (r + j)] = rot(i - j + n);  // y^2 = x^n
    }
  }
  std::vector<std::string> names(std::size_t(four_n));
  for (int i = 0; i < four_n; ++i) names[std::size_t(i)] = rotation_reflection_name(i, r);
  return FiniteGroup::from_table(std::move(table), four_n, FamilyTag::dicyclic(n),
                                 std::move(names), false);
}

FiniteGroup make_elementary_abelian_2(int k) {
  if (k < 0 || k > kMaxElemAbelian2Exp)
    throw std::invalid_argument("make_elementary_abelian_2: exponent must be in [0, " +
                                std::to_string(kMaxElemAbelian2Exp) + "]");
  const int n = 1 << k;
  std::vector<int> table(std::size_t(n) * std::size_t(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[std::size_t(i) * n + j] = i ^ j;
  std::vector<std::string> names(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      names[0] = "1";
      continue;
    }
    std::string name;
    for (int b = 0; b < k; ++b) {
      if (!(i >> b & 1)) continue;
      if (!name.empty()) name += "*";
      name += "e" + std::to_string(b + 1);
    }
    names[std::size_t(i)] = name;
  }
  return FiniteGroup::from_table(std::move(table), n, FamilyTag::elem_abelian_2(k),
                                 std::move(names), false);
}

FiniteGroup make_semidirect_cp_c4(int p) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("make_semidirect_cp_c4: p must be a prime = 1 (mod 4)");
  if (4 * p > kMaxOrder) throw capacity_error("make_semidirect_cp_c4: order exceeds bound");

  // Least s of multiplicative order 4 mod p, i.e. s^2 = -1 (mod p). Exists
  // exactly because p = 1 (mod 4). For p = 5 this is s = 2 = (p-1)/2.
  int s = 0;
  for (int c = 2; c < p; ++c) {
    if ((c * c) % p == p - 1) {
      s = c;
      break;
    }
  }

  const int n = 4 * p;
  // twist[j] = s^j mod p; conjugation by b^j sends a to a^{twist[j]}.
  int twist[4] = {1, s, (s * s) % p, 0};
  twist[3] = (twist[2] * s) % p;

  auto idx = [&](int i, int j) { return i * 4 + j; };  // a^i b^j
  std::vector<int> table(std::size_t(n) * std::size_t(n));
  for (int i1 = 0; i1 < p; ++i1)
    for (int j1 = 0; j1 < 4; ++j1)
      for (int i2 = 0; i2 < p; ++i2)
        for (int j2 = 0; j2 < 4; ++j2)
          table[std::size_t(idx(i1, j1)) * n + idx(i2, j2)] =
              idx((i1 + i2 * twist[j1]) % p, (j1 + j2) % 4);

  std::vector<std::string> names(std::size_t(n));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::string name;
      if (i == 0 && j == 0)
        name = "1";
      else if (j == 0)
        name = power_name("a", i);
      else if (i == 0)
        name = power_name("b", j);
      else
        name = power_name("a", i) + "*" + power_name("b", j);
      names[std::size_t(idx(i, j))] = name;
    }
  }
  return FiniteGroup::from_table(std::move(table), n, FamilyTag::semidirect_cp_c4(p),
                                 std::move(names), false);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const long long n = (long long)g.order() * h.order();
  if (n > kMaxOrder)
    throw capacity_error("direct_product: order " + std::to_string(n) + " exceeds the bound " +
                         std::to_string(kMaxOrder));
  const int ho = h.order();
  const int order = int(n);
  std::vector<int> table(std::size_t(order) * std::size_t(order));
  for (int i1 = 0; i1 < g.order(); ++i1)
    for (int j1 = 0; j1 < ho; ++j1)
      for (int i2 = 0; i2 < g.order(); ++i2)
        for (int j2 = 0; j2 < ho; ++j2)
          table[std::size_t(i1 * ho + j1) * order + (i2 * ho + j2)] =
              g.mul(i1, i2) * ho + h.mul(j1, j2);
  std::vector<std::string> names(std::size_t(order));
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < ho; ++j)
      names[std::size_t(i * ho + j)] = "(" + g.element_name(i) + "," + h.element_name(j) + ")";
  return FiniteGroup::from_table(std::move(table), order,
                                 FamilyTag::product(g.family(), h.family()), std::move(names),
                                 false);
}

FiniteGroup make_from_permutations(std::span<const Permutation> generators, int degree) {
  if (degree < 1) throw std::invalid_argument("make_from_permutations: degree must be positive");
  for (const auto& gen : generators)
    if (gen.degree() != degree)
      throw std::invalid_argument("make_from_permutations: generator degree mismatch");

  // BFS closure from the identity, multiplying on the right by the
  // generators in the given order.
  std::vector<Permutation> elems{Permutation(degree)};
  std::map<std::vector<int>, int> index{{elems[0].images(), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = compose(elems[head], gen);
      if (index.emplace(next.images(), int(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > std::size_t(kMaxOrder))
          throw capacity_error("make_from_permutations: closure exceeds the bound " +
                               std::to_string(kMaxOrder));
      }
    }
  }

  const int n = int(elems.size());
  std::vector<int> table(std::size_t(n) * std::size_t(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[std::size_t(i) * n + j] = index.at(compose(elems[std::size_t(i)], elems[std::size_t(j)]).images());
  return FiniteGroup::from_table(std::move(table), n, FamilyTag::untagged(), {}, false);
}

ElementSet g_star(const FiniteGroup& g) {
  ElementSet s = ElementSet::full(g.order());
  s.remove(g.identity());
  return s;
}

bool is_abelian(const FiniteGroup& g) {
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.mul(i, j) != g.mul(j, i)) return false;
  return true;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<char> done(std::size_t(n), 0);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    if (done[std::size_t(i)]) continue;
    std::vector<int> cls;
    for (int t = 0; t < n; ++t) {
      int c = g.mul(g.mul(t, i), g.inv(t));
      if (!done[std::size_t(c)]) {
        done[std::size_t(c)] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  // BFS over i ascending already yields classes sorted by least element.
  return classes;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z(g.order());
  for (int i = 0; i < g.order(); ++i) {
    bool central = true;
    for (int j = 0; j < g.order() && central; ++j) central = g.mul(i, j) == g.mul(j, i);
    if (central) z.add(i);
  }
  return z;
}

}  // namespace filled
