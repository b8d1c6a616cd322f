#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "solvkit/group_table.hpp"
#include "solvkit/permutation.hpp"

namespace solvkit {

/// Generators of a group as read from the text format:
///
///   degree <n>
///   g 0 2 1 3          image list
///   g (0 1 2)(3 4)     cycle notation
///
/// Blank lines and lines starting with '#' are ignored.
struct GroupFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

GroupFile parse_group_text(std::string_view text);
GroupFile read_group_file(const std::string& path);

/// Writes image-list form.
std::string format_group_text(const GroupFile& file);
void write_group_file(const std::string& path, const GroupFile& file);

/// One generator in either notation. `offset` shifts reported positions.
Permutation parse_permutation(std::string_view text, std::size_t degree, std::size_t offset = 0);

}  // namespace solvkit
