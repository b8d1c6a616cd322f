#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solvkit/group_table.hpp"
#include "solvkit/lattice.hpp"

namespace solvkit {

/// Families of PSL(2, q) whose solvabilizers are tabulated.
enum class TableFamily {
  psl2_even,   // q = 2^n, n >= 2
  psl2_odd3,   // q = 3^n, n odd, n >= 3
  psl2_prime,  // q = p prime, p > 7
};

std::string to_string(TableFamily f);

/// Which table (if any) governs PSL(2, q).
struct TableSelection {
  std::optional<TableFamily> family;
  std::uint64_t q = 0;
  int table_number = 0;  // 1, 2 or 4..11; 0 when no table applies
  std::string notice;    // reason when no table applies
};

TableSelection select_table(std::uint64_t q);

struct TableCell {
  std::string label;
  std::optional<std::uint64_t> expected;
  std::optional<std::uint64_t> observed;

  bool pass() const { return expected.has_value() && observed == expected; }
};

/// Checks for one rational-class representative.
struct TableClassCheck {
  ElementId representative = 0;
  std::uint32_t element_order = 0;
  std::string column;  // empty: no column of the table covers this order
  std::vector<TableCell> containments;  // one per row, then the "unlisted" cell
  TableCell sol;

  bool pass() const;
};

struct TableReport {
  std::string group;
  std::uint64_t q = 0;
  std::optional<TableFamily> family;
  int table_number = 0;
  bool applicable = false;
  std::string notice;
  bool containments_checked = false;
  std::vector<std::string> rows;
  std::vector<TableClassCheck> classes;

  std::size_t cells_checked() const;
  std::size_t cells_failed() const;
  bool all_pass() const { return applicable && cells_failed() == 0; }
};

struct TableOptions {
  std::size_t lattice_cap = kDefaultLatticeCap;
};

/// Compares |Sol(x)| and the number of maximal solvable subgroups of each
/// tabulated shape containing x against the closed-form cells, for one
/// representative per nonidentity rational class of G = PSL(2, q).
/// Containment counts are skipped (and say so) when |G| exceeds the
/// lattice cap. An unsupported q yields a report with applicable = false.
TableReport verify_table(const GroupTable& g, std::uint64_t q, const TableOptions& options = {});

/// Aligned plain-text rendering: one line per class, observed/expected.
std::string render_table_text(const TableReport& report);

}  // namespace solvkit
