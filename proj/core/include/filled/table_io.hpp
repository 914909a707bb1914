#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "filled/group.hpp"

namespace filled {

/// Cayley-table file format: UTF-8 text, '#' starts a comment line, the
/// first non-comment line is the order n, then n lines of n whitespace
/// separated integers in [0, n); entry j of group-line i is the index of
/// e_i * e_j.

struct LoadOptions {
  /// Associativity validation is O(n^3); it always runs for n <= 256 and is
  /// skipped above unless this is set.
  bool force_associativity_check = false;
};

/// Serializes in the exact file format, starting with a '# generated-by'
/// comment.
std::string serialize_cayley_table(const FiniteGroup& g);

/// Parses and fully validates a table. The identity is auto-detected (it
/// need not be index 0); the result is untagged. Throws validation_error
/// naming the first offending cell or token.
FiniteGroup load_cayley_table(std::istream& in, const LoadOptions& options = {});
FiniteGroup load_cayley_table_string(std::string_view text, const LoadOptions& options = {});
FiniteGroup load_cayley_table_file(const std::string& path, const LoadOptions& options = {});

}  // namespace filled
