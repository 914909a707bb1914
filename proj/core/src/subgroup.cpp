#include "filled/subgroup.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace filled {

namespace {

bool is_conjugation_closed(const FiniteGroup& g, const ElementSet& s) {
  bool closed = true;
  s.for_each([&](int h) {
    if (!closed) return;
    for (int t = 0; t < g.order(); ++t) {
      if (!s.contains(g.mul(g.mul(t, h), g.inv(t)))) {
        closed = false;
        return;
      }
    }
  });
  return closed;
}

ElementSet closure(const FiniteGroup& g, const ElementSet& generators) {
  ElementSet elems(g.order());
  elems.add(g.identity());
  std::vector<int> queue{g.identity()};
  std::vector<int> gens = generators.indices();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int gen : gens) {
      int next = g.mul(queue[head], gen);
      if (!elems.contains(next)) {
        elems.add(next);
        queue.push_back(next);
      }
    }
  }
  // Right-multiplication closure over a set that includes inverses of its
  // own elements is automatic in a finite group: powers of each generator
  // reach its inverse. The loop above therefore yields the full subgroup.
  return elems;
}

}  // namespace

Subgroup generated_subgroup(const FiniteGroup& g, const ElementSet& generators) {
  if (generators.universe() != g.order())
    throw std::invalid_argument("generated_subgroup: set does not belong to the group");
  Subgroup sub;
  sub.parent = &g;
  sub.elements = closure(g, generators);
  sub.normal = is_conjugation_closed(g, sub.elements);
  if (g.order() % sub.elements.size() != 0)
    throw std::logic_error("generated_subgroup: size violates Lagrange");
  return sub;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  // Every normal subgroup is a join of normal closures of single conjugacy
  // classes, so iterating joins of those "atoms" to a fixpoint enumerates
  // them all without touching the full subgroup lattice.
  std::vector<ElementSet> atoms;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.size() == 1 && cls[0] == g.identity()) continue;
    ElementSet gens = ElementSet::from_indices(g.order(), cls);
    ElementSet closed = closure(g, gens);
    if (std::find(atoms.begin(), atoms.end(), closed) == atoms.end())
      atoms.push_back(std::move(closed));
  }

  ElementSet trivial(g.order());
  trivial.add(g.identity());

  std::set<std::vector<std::uint64_t>> seen;
  std::vector<ElementSet> found{trivial};
  seen.insert({trivial.words().begin(), trivial.words().end()});
  for (std::size_t head = 0; head < found.size(); ++head) {
    ElementSet base = found[head];
    for (const auto& atom : atoms) {
      if (atom.is_subset_of(base)) continue;
      ElementSet joined = closure(g, base | atom);
      std::vector<std::uint64_t> key{joined.words().begin(), joined.words().end()};
      if (seen.insert(std::move(key)).second) found.push_back(std::move(joined));
    }
  }

  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& elems : found) {
    Subgroup sub;
    sub.parent = &g;
    sub.normal = true;
    sub.elements = std::move(elems);
    out.push_back(std::move(sub));
  }
  return out;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (n.parent != &g) throw std::invalid_argument("quotient: subgroup of a different group");
  if (!n.normal) throw std::invalid_argument("quotient: subgroup is not normal");

  const int order = g.order();
  std::vector<int> coset_rep(std::size_t(order), -1);  // least member of the coset of i
  std::vector<int> reps;
  for (int i = 0; i < order; ++i) {
    if (coset_rep[std::size_t(i)] >= 0) continue;
    // left coset i*N; by normality it equals the right coset
    std::vector<int> members;
    n.elements.for_each([&](int h) { members.push_back(g.mul(i, h)); });
    int least = *std::min_element(members.begin(), members.end());
    for (int m : members) coset_rep[std::size_t(m)] = least;
    reps.push_back(least);
  }
  std::sort(reps.begin(), reps.end());

  std::vector<int> coset_index(std::size_t(order), -1);
  for (std::size_t c = 0; c < reps.size(); ++c) coset_index[std::size_t(reps[c])] = int(c);
  std::vector<int> projection(std::size_t(order));
  for (int i = 0; i < order; ++i)
    projection[std::size_t(i)] = coset_index[std::size_t(coset_rep[std::size_t(i)])];

  const int q = int(reps.size());
  std::vector<int> table(std::size_t(q) * std::size_t(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[std::size_t(a) * q + b] = projection[std::size_t(g.mul(reps[std::size_t(a)], reps[std::size_t(b)]))];

  std::vector<std::string> names(std::size_t(q));
  for (int c = 0; c < q; ++c)
    names[std::size_t(c)] = "[" + g.element_name(reps[std::size_t(c)]) + "]";

  Quotient result{FiniteGroup::from_table(std::move(table), q, FamilyTag::untagged(),
                                          std::move(names), false),
                  std::move(projection)};

  // Homomorphism check: exhaustive for small groups, sampled above.
  auto check_pair = [&](int a, int b) {
    if (result.projection[std::size_t(g.mul(a, b))] !=
        result.group.mul(result.projection[std::size_t(a)], result.projection[std::size_t(b)]))
      throw std::logic_error("quotient: projection is not a homomorphism");
  };
  if (order <= 64) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) check_pair(a, b);
  } else {
    std::mt19937 rng(0x51u);
    std::uniform_int_distribution<int> pick(0, order - 1);
    for (int t = 0; t < 4096; ++t) check_pair(pick(rng), pick(rng));
  }
  return result;
}

}  // namespace filled
