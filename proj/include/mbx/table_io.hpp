#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbx/character_table.hpp"

namespace mbx::chartab {

/// Class-level data of a group, possibly without its character values.
struct ClassData {
  std::string name;
  Int order;
  std::vector<Int> centralizers;
  std::optional<std::vector<Int>> degrees;
  std::optional<std::vector<std::vector<Cyclotomic>>> values;

  std::size_t k() const { return centralizers.size(); }
};

/// Line-oriented text format:
///
///   group <name>
///   order <int>
///   classes <k>
///   centralizers <z_1> ... <z_k>
///   degrees <d_1> ... <d_k>          (optional)
///   char <i>: <v_1> ... <v_k>        (optional, i is 0-based, one per row)
///
/// Integer lists may continue on following lines. Values use the
/// Cyclotomic grammar and contain no whitespace. '#' starts a comment.
void write_table(std::ostream& out, const CharacterTable& t);
std::string write_table(const CharacterTable& t);

/// Throws ParseError with a line and column, or ConsistencyError when the
/// class equation or the Burnside identity fails.
ClassData parse_class_data(std::string_view text);
/// As parse_class_data, and additionally requires all k rows of values.
CharacterTable parse_table(std::string_view text);

CharacterTable to_table(const ClassData& data);

std::string read_file(const std::string& path);

}  // namespace mbx::chartab
