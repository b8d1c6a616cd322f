#include "solvkit/tables.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "solvkit/classes.hpp"
#include "solvkit/error.hpp"
#include "solvkit/finite_field.hpp"
#include "solvkit/solvabilizer.hpp"

namespace solvkit {

namespace {

using Tag = StructureTag;
using Kind = StructureTag::Kind;

struct RowDef {
  std::string label;
  std::function<bool(const Tag&)> matches;
};

struct ColumnDef {
  std::string label;
  bool exact;             // exact element order, else divisibility
  std::uint64_t value;
  std::vector<std::uint64_t> counts;  // one per row
  std::uint64_t sol;
};

struct TableDef {
  std::vector<RowDef> rows;
  std::vector<ColumnDef> columns;
};

std::optional<std::uint64_t> exponent_of(std::uint64_t q, std::uint64_t p) {
  std::uint64_t n = 0;
  while (q > 1 && q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return std::nullopt;
  return n;
}

RowDef row(std::string label, Kind kind, std::uint64_t a, std::uint64_t b = 0) {
  return {std::move(label), [kind, a, b](const Tag& t) {
            return t.kind == kind && t.a == a && (b == 0 || t.b == b);
          }};
}

TableDef even_table(std::uint64_t q) {
  TableDef t;
  RowDef borel = row("C2^n:C(q-1)", Kind::elementary_abelian_by_cyclic, q, q - 1);
  if (q == 4) {
    // C2^2 : C3 is A4, which the classifier names first.
    borel.matches = [](const Tag& tag) {
      return tag.kind == Kind::alternating4 ||
             (tag.kind == Kind::elementary_abelian_by_cyclic && tag.a == 4 && tag.b == 3);
    };
  }
  t.rows = {borel, row("D2(q-1)", Kind::dihedral, 2 * (q - 1)),
            row("D2(q+1)", Kind::dihedral, 2 * (q + 1))};
  t.columns = {
      {"|x|=2", true, 2, {1, q / 2, q / 2}, 3 * q * (q - 1)},
      {"|x| | q-1", false, q - 1, {2, 1, 0}, 2 * q * (q - 1)},
      {"|x| | q+1", false, q + 1, {0, 0, 1}, 2 * (q + 1)},
  };
  return t;
}

TableDef odd3_table(std::uint64_t q) {
  TableDef t;
  t.rows = {row("C3^n:C((q-1)/2)", Kind::elementary_abelian_by_cyclic, q, (q - 1) / 2),
            row("D(q-1)", Kind::dihedral, q - 1), row("D(q+1)", Kind::dihedral, q + 1),
            row("A4", Kind::alternating4, 12)};
  t.columns = {
      {"|x|=2", true, 2, {0, (q + 1) / 2, (q + 3) / 2, (q + 1) / 4}, q * (q + 1)},
      {"|x|=3", true, 3, {1, 0, 0, q / 3}, q * (q + 5) / 2},
      {"|x| | q-1", false, q - 1, {2, 1, 0, 0}, q * (q - 1)},
      {"|x| | q+1", false, q + 1, {0, 0, 1, 0}, q + 1},
  };
  return t;
}

TableDef prime_table(std::uint64_t p) {
  const std::uint64_t r = p % 24;
  const bool s4 = r == 1 || r == 7 || r == 17 || r == 23;
  TableDef t;
  t.rows = {row("Cp:C((p-1)/2)", Kind::elementary_abelian_by_cyclic, p, (p - 1) / 2),
            row("D(p-1)", Kind::dihedral, p - 1), row("D(p+1)", Kind::dihedral, p + 1),
            s4 ? row("S4", Kind::symmetric4, 24) : row("A4", Kind::alternating4, 12)};
  const std::uint64_t pm = p - 1, pp = p + 1;
  const std::uint64_t sol_p = p * (p - 1) / 2, sol_pm = p * (p - 1), sol_pp = p + 1;
  auto col2 = [&](std::vector<std::uint64_t> c, std::uint64_t s) {
    return ColumnDef{"|x|=2", true, 2, std::move(c), s};
  };
  auto col3 = [&](std::vector<std::uint64_t> c, std::uint64_t s) {
    return ColumnDef{"|x|=3", true, 3, std::move(c), s};
  };
  auto col4 = [&](std::vector<std::uint64_t> c, std::uint64_t s) {
    return ColumnDef{"|x|=4", true, 4, std::move(c), s};
  };
  const ColumnDef colp{"|x|=p", true, p, {1, 0, 0, 0}, sol_p};
  const ColumnDef colm{"|x| | p-1", false, pm, {2, 1, 0, 0}, sol_pm};
  const ColumnDef colq{"|x| | p+1", false, pp, {0, 0, 1, 0}, sol_pp};
  switch (r) {
    case 1:
      t.columns = {col2({2, pp / 2, pm / 2, 3 * pm / 4}, pm * (2 * p + 3)),
                   col3({2, 1, 0, pm / 3}, pm * (p + 6)), col4({2, 1, 0, pm / 4}, pm * (p + 4)),
                   colp, colm, colq};
      break;
    case 5:
      t.columns = {col2({2, pp / 2, pm / 2, pm / 4}, pm * (2 * p - 1)),
                   col3({0, 0, 1, pp / 3}, 4 * pp), colp, colm, colq};
      break;
    case 7:
      t.columns = {col2({0, pp / 2, (p + 3) / 2, 3 * pp / 4}, pp * (p + 4)),
                   col3({2, 1, 0, pm / 3}, pm * (p + 6)), col4({0, 0, 1, pp / 4}, 5 * pp),
                   colp, colm, colq};
      break;
    case 11:
      t.columns = {col2({0, pp / 2, (p + 3) / 2, pp / 4}, p * pp),
                   col3({0, 0, 1, pp / 3}, 4 * pp), colp, colm, colq};
      break;
    case 13:
      t.columns = {col2({2, pp / 2, pm / 2, pm / 4}, pm * (2 * p - 1)),
                   col3({2, 1, 0, pm / 3}, pm * (p + 3)), colp, colm, colq};
      break;
    case 17:
      t.columns = {col2({2, pp / 2, pm / 2, 3 * pm / 4}, pm * (2 * p + 3)),
                   col3({0, 0, 1, pp / 3}, 7 * pp), col4({2, 1, 0, pm / 4}, pm * (p + 4)),
                   colp, colm, colq};
      break;
    case 19:
      t.columns = {col2({0, pp / 2, (p + 3) / 2, pp / 4}, p * pp),
                   col3({2, 1, 0, pm / 3}, pm * (p + 3)), colp, colm, colq};
      break;
    case 23:
      t.columns = {col2({0, pp / 2, (p + 3) / 2, 3 * pp / 4}, pp * (p + 4)),
                   col3({0, 0, 1, pp / 3}, 7 * pp), col4({0, 0, 1, pp / 4}, 5 * pp),
                   colp, colm, colq};
      break;
    default:
      throw Unsupported("no table for p = " + std::to_string(p));
  }
  return t;
}

const ColumnDef* column_for(const TableDef& t, std::uint64_t order) {
  for (const auto& c : t.columns)
    if (c.exact && c.value == order) return &c;
  for (const auto& c : t.columns)
    if (!c.exact && c.value % order == 0) return &c;
  return nullptr;
}

int prime_table_number(std::uint64_t p) {
  switch (p % 24) {
    case 1: return 4;
    case 5: return 5;
    case 7: return 6;
    case 11: return 7;
    case 13: return 8;
    case 17: return 9;
    case 19: return 10;
    case 23: return 11;
  }
  return 0;
}

}  // namespace

std::string to_string(TableFamily f) {
  switch (f) {
    case TableFamily::psl2_even: return "psl2-even";
    case TableFamily::psl2_odd3: return "psl2-odd-3";
    case TableFamily::psl2_prime: return "psl2-prime";
  }
  return "?";
}

TableSelection select_table(std::uint64_t q) {
  TableSelection s;
  s.q = q;
  if (const auto n = exponent_of(q, 2); n && *n >= 2) {
    s.family = TableFamily::psl2_even;
    s.table_number = 1;
    return s;
  }
  if (const auto n = exponent_of(q, 3); n && *n >= 1) {
    if (*n >= 3 && *n % 2 == 1) {
      s.family = TableFamily::psl2_odd3;
      s.table_number = 2;
    } else {
      s.notice = "no table applies: q = 3^n is tabulated only for odd n >= 3";
    }
    return s;
  }
  if (q == 7) {
    s.notice = "excluded special case: q = 7 is not tabulated (elements of order 3 and 4 "
               "would fall under two columns); |Solv(PSL(2,7))| = 79 is computed directly";
    return s;
  }
  if (is_prime(q) && q > 7) {
    s.family = TableFamily::psl2_prime;
    s.table_number = prime_table_number(q);
    return s;
  }
  s.notice = "no table applies: q must be 2^n (n >= 2), 3^n (n odd, n >= 3) or a prime > 7";
  return s;
}

bool TableClassCheck::pass() const {
  if (column.empty()) return false;
  return sol.pass() && std::all_of(containments.begin(), containments.end(),
                                   [](const TableCell& c) { return c.pass(); });
}

std::size_t TableReport::cells_checked() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += 1 + c.containments.size();
  return n;
}

std::size_t TableReport::cells_failed() const {
  std::size_t n = 0;
  for (const auto& c : classes) {
    if (c.column.empty()) {
      ++n;
      continue;
    }
    n += c.sol.pass() ? 0 : 1;
    for (const auto& cell : c.containments) n += cell.pass() ? 0 : 1;
  }
  return n;
}

TableReport verify_table(const GroupTable& g, std::uint64_t q, const TableOptions& options) {
  TableReport report;
  report.group = "psl2:" + std::to_string(q);
  report.q = q;
  const auto selection = select_table(q);
  report.family = selection.family;
  report.table_number = selection.table_number;
  if (!selection.family) {
    report.notice = selection.notice;
    return report;
  }
  if (g.order() != q * (q * q - 1) / (q % 2 == 0 ? 1 : 2))
    throw InvalidArgument("group order does not match PSL(2, " + std::to_string(q) + ")");
  report.applicable = true;

  TableDef def;
  switch (*selection.family) {
    case TableFamily::psl2_even: def = even_table(q); break;
    case TableFamily::psl2_odd3: def = odd3_table(q); break;
    case TableFamily::psl2_prime: def = prime_table(q); break;
  }
  for (const auto& r : def.rows) report.rows.push_back(r.label);

  std::optional<MaxSolvReps> reps;
  std::vector<Tag> tags;
  if (g.order() <= options.lattice_cap) {
    reps = max_solv_reps(g, options.lattice_cap);
    for (const auto& r : reps->reps) tags.push_back(classify_structure(g, r.subgroup));
    report.containments_checked = true;
  } else {
    report.notice = "containment counts skipped: group order exceeds the lattice cap; "
                    "|Sol| sizes are still checked";
  }

  SolvabilizerEngine engine(g);
  for (const auto& rc : rational_classes(g)) {
    if (rc.representative == GroupTable::identity()) continue;
    TableClassCheck check;
    check.representative = rc.representative;
    check.element_order = rc.element_order;
    const ColumnDef* col = column_for(def, rc.element_order);
    const std::uint64_t sol_size = engine.sol(rc.representative).size();
    check.sol = {"|Sol|", std::nullopt, sol_size};
    if (col) {
      check.column = col->label;
      check.sol.expected = col->sol;
    }
    if (reps) {
      std::vector<std::uint64_t> observed(def.rows.size() + 1, 0);
      const ElementId x = rc.representative;
      for (std::size_t k = 0; k < reps->reps.size(); ++k) {
        const auto& rep = reps->reps[k];
        std::uint64_t containing = 0;
        for (ElementId t : rep.transversal)
          if (rep.subgroup.contains(g.conj(x, g.inv(t)))) ++containing;
        if (containing == 0) continue;
        std::size_t slot = def.rows.size();
        for (std::size_t r = 0; r < def.rows.size(); ++r)
          if (def.rows[r].matches(tags[k])) {
            slot = r;
            break;
          }
        observed[slot] += containing;
      }
      for (std::size_t r = 0; r < def.rows.size(); ++r) {
        TableCell cell{def.rows[r].label, std::nullopt, observed[r]};
        if (col) cell.expected = col->counts[r];
        check.containments.push_back(cell);
      }
      check.containments.push_back({"unlisted", std::uint64_t{0}, observed.back()});
    }
    report.classes.push_back(std::move(check));
  }
  return report;
}

std::string render_table_text(const TableReport& report) {
  std::ostringstream out;
  out << report.group;
  if (report.table_number) out << "  (table " << report.table_number << ")";
  out << '\n';
  if (!report.notice.empty()) out << report.notice << '\n';
  if (!report.applicable) return out.str();

  std::vector<std::string> header{"rep", "|x|", "column"};
  if (report.containments_checked) {
    header.insert(header.end(), report.rows.begin(), report.rows.end());
    header.emplace_back("unlisted");
  }
  header.emplace_back("|Sol|");
  header.emplace_back("result");

  const auto cell_text = [](const TableCell& c) {
    const std::string obs = c.observed ? std::to_string(*c.observed) : "-";
    const std::string exp = c.expected ? std::to_string(*c.expected) : "?";
    return obs + "/" + exp + (c.pass() ? "" : " !");
  };
  std::vector<std::vector<std::string>> lines{header};
  for (const auto& c : report.classes) {
    std::vector<std::string> line{std::to_string(c.representative),
                                  std::to_string(c.element_order),
                                  c.column.empty() ? "column absent" : c.column};
    for (const auto& cell : c.containments) line.push_back(cell_text(cell));
    line.push_back(cell_text(c.sol));
    line.emplace_back(c.pass() ? "pass" : "FAIL");
    lines.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : lines)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : lines) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << '\n';
  }
  out << "cells: " << report.cells_checked() << " checked, " << report.cells_failed()
      << " failed (observed/expected)\n";
  return out.str();
}

}  // namespace solvkit
