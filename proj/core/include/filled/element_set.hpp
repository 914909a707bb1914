#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace filled {

/// A set of element indices over a fixed universe [0, n), packed into
/// 64-bit words. This is the currency of the whole library: subsets of a
/// group live in one of these, and all set algebra is word-at-a-time.
///
/// Two sets may only be combined when their universes match; mixing sets
/// from groups of different orders throws std::invalid_argument.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(int universe) {
    if (universe < 0) throw std::invalid_argument("ElementSet: negative universe");
    universe_ = universe;
    words_.assign(word_count(universe), 0);
  }

  static ElementSet of(int universe, std::initializer_list<int> elems) {
    ElementSet s(universe);
    for (int e : elems) s.add(e);
    return s;
  }

  static ElementSet from_indices(int universe, std::span<const int> elems) {
    ElementSet s(universe);
    for (int e : elems) s.add(e);
    return s;
  }

  /// The whole universe [0, n).
  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int e) const {
    check_index(e);
    return (words_[std::size_t(e) >> 6] >> (e & 63)) & 1u;
  }

  void add(int e) {
    check_index(e);
    words_[std::size_t(e) >> 6] |= std::uint64_t{1} << (e & 63);
  }

  void remove(int e) {
    check_index(e);
    words_[std::size_t(e) >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }

  int size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Least element, or -1 when empty.
  int least() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return int(wi * 64 + std::countr_zero(words_[wi]));
    return -1;
  }

  bool is_subset_of(const ElementSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  /// Set difference (this \ other).
  ElementSet& operator-=(const ElementSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  /// Complement within the universe [0, n).
  ElementSet complement() const {
    ElementSet r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool operator==(const ElementSet& other) const = default;

  /// Visit elements in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        fn(int(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(std::size_t(size()));
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  static std::size_t word_count(int universe) { return (std::size_t(universe) + 63) / 64; }

  void check_index(int e) const {
    if (e < 0 || e >= universe_) throw std::out_of_range("ElementSet: index out of range");
  }

  void check_universe(const ElementSet& other) const {
    if (universe_ != other.universe_)
      throw std::invalid_argument("ElementSet: universe mismatch");
  }

  // Clear bits at positions >= universe in the last word.
  void trim() {
    int tail = universe_ & 63;
    if (tail != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace filled
