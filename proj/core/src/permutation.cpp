#include "filled/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <vector>

#include "filled/errors.hpp"

namespace filled {

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
  images_.resize(std::size_t(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int im : images) {
    if (im < 0 || std::size_t(im) >= images.size() || seen[std::size_t(im)])
      throw std::invalid_argument("Permutation: image vector is not a bijection");
    seen[std::size_t(im)] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[std::size_t(images_[i])] = int(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != int(i)) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<char> done(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == int(start)) continue;
    out += '(';
    int p = int(start);
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      done[std::size_t(p)] = 1;
      p = images_[std::size_t(p)];
      first = false;
    } while (p != int(start));
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation compose(const Permutation& first, const Permutation& then) {
  if (first.degree() != then.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(std::size_t(first.degree()));
  for (int p = 0; p < first.degree(); ++p) images[std::size_t(p)] = then.apply(first.apply(p));
  return Permutation::from_images(std::move(images));
}

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
  throw validation_error("permutation parse error at position " + std::to_string(pos) + ": " + what);
}

}  // namespace

Permutation parse_permutation_cycles(std::string_view text, int degree) {
  if (degree < 1) throw std::invalid_argument("parse_permutation_cycles: degree must be positive");
  std::vector<int> images(std::size_t(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(std::size_t(degree), 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip_ws();
  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') parse_fail(i, "expected '('");
    std::size_t open = i;
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) parse_fail(open, "unclosed '('");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        parse_fail(i, "expected a point or ')'");
      std::size_t start = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > degree) parse_fail(start, "point " + std::to_string(value) + " out of range");
        ++i;
      }
      if (value < 1) parse_fail(start, "points are 1-based");
      int point = int(value) - 1;
      if (used[std::size_t(point)])
        parse_fail(start, "repeated point " + std::to_string(value));
      used[std::size_t(point)] = 1;
      cycle.push_back(point);
    }
    // map each cycle element to its successor
    for (std::size_t c = 0; c + 1 < cycle.size(); ++c)
      images[std::size_t(cycle[c])] = cycle[c + 1];
    if (cycle.size() > 1) images[std::size_t(cycle.back())] = cycle.front();
    saw_cycle = true;
    skip_ws();
  }
  if (!saw_cycle) parse_fail(0, "expected at least one cycle, e.g. \"()\"");
  return Permutation::from_images(std::move(images));
}

}  // namespace filled
