#include "filled/table_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "filled/errors.hpp"

namespace filled {

std::string serialize_cayley_table(const FiniteGroup& g) {
  std::ostringstream out;
  out << "# generated-by filled-groups\n";
  out << "# " << g.descriptor() << ", order " << g.order() << "\n";
  out << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// Reads the next non-comment, non-blank line; false at EOF.
bool next_data_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

int parse_cell(const std::string& token, int n, int row, int col) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size())
    throw validation_error("bad token \"" + token + "\" at cell (" + std::to_string(row) + "," +
                           std::to_string(col) + ")");
  if (value < 0 || value >= n)
    throw validation_error("entry " + std::to_string(value) + " out of range at cell (" +
                           std::to_string(row) + "," + std::to_string(col) + ")");
  return value;
}

}  // namespace

FiniteGroup load_cayley_table(std::istream& in, const LoadOptions& options) {
  std::string line;
  int lineno = 0;
  if (!next_data_line(in, line, lineno)) throw validation_error("empty input: missing order line");

  int n = 0;
  {
    std::istringstream hdr(line);
    std::string token, extra;
    hdr >> token;
    if (hdr >> extra) throw validation_error("order line must hold a single integer");
    std::size_t used = 0;
    try {
      n = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || n < 1)
      throw validation_error("bad order \"" + token + "\" on line " + std::to_string(lineno));
    if (n > kMaxOrder)
      throw capacity_error("order " + std::to_string(n) + " exceeds the supported bound " +
                           std::to_string(kMaxOrder));
  }

  std::vector<int> table(std::size_t(n) * std::size_t(n));
  for (int i = 0; i < n; ++i) {
    if (!next_data_line(in, line, lineno))
      throw validation_error("missing group-line " + std::to_string(i));
    std::istringstream row(line);
    std::string token;
    for (int j = 0; j < n; ++j) {
      if (!(row >> token))
        throw validation_error("missing entry at cell (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
      table[std::size_t(i) * n + j] = parse_cell(token, n, i, j);
    }
    if (row >> token)
      throw validation_error("trailing token \"" + token + "\" on group-line " +
                             std::to_string(i));
  }

  bool check_assoc = n <= 256 || options.force_associativity_check;
  return FiniteGroup::from_table(std::move(table), n, FamilyTag::untagged(), {}, check_assoc);
}

FiniteGroup load_cayley_table_string(std::string_view text, const LoadOptions& options) {
  std::istringstream in{std::string(text)};
  return load_cayley_table(in, options);
}

FiniteGroup load_cayley_table_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open \"" + path + "\"");
  return load_cayley_table(in, options);
}

}  // namespace filled
