#pragma once

#include <stdexcept>
#include <string>

namespace filled {

/// Largest group order the library will construct or load.
inline constexpr int kMaxOrder = 4096;

/// Thrown when input data (a Cayley table, a cycle string, a set literal)
/// fails validation. The message names the first offending cell or the
/// byte position of the parse failure.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a construction would exceed kMaxOrder.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace filled
