#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "solvkit/group_table.hpp"

namespace solvkit {

GroupTable alternating_group(std::uint32_t n, std::size_t cap = kDefaultClosureCap);
GroupTable symmetric_group(std::uint32_t n, std::size_t cap = kDefaultClosureCap);
GroupTable cyclic_group(std::uint32_t n, std::size_t cap = kDefaultClosureCap);
/// Dihedral group of the given order (the order-m convention: D_10 has 10 elements).
GroupTable dihedral_group(std::uint32_t order, std::size_t cap = kDefaultClosureCap);

/// PSL(2, q) on the q + 1 points of the projective line. Point a (0 <= a < q)
/// is [a:1] in field-encoding order, point q is [1:0]. Generated by
/// x -> x + 1, x -> l^2 x (l a primitive element) and x -> -1/x.
GroupTable psl2(std::uint32_t q, std::size_t cap = kDefaultClosureCap);

/// SL(2, q) acting on the q^2 - 1 nonzero vectors of GF(q)^2.
GroupTable sl2(std::uint32_t q, std::size_t cap = kDefaultClosureCap);

/// PSL(3, 3) = SL(3, 3) on the 13 points of the projective plane over GF(3).
GroupTable psl3_3(std::size_t cap = kDefaultClosureCap);

/// Parsed group description:
///   a:n  s:n  c:n  d:m (order m)  psl2:q  sl2:q  psl3:3
///   direct(spec,spec)  file:path  perm:n:gen;gen;...
/// Inline perm generators use cycle notation "(0 1 2)(3 4)" or a
/// space-separated image list "1 0 2".
struct GroupSpec {
  enum class Kind { alternating, symmetric, cyclic, dihedral, psl2, sl2, psl3, direct, file, perm };

  Kind kind = Kind::cyclic;
  std::uint32_t param = 1;                 // n, m, q, or 3 for psl3
  std::vector<GroupSpec> factors;          // direct
  std::string path;                        // file
  std::uint32_t degree = 0;                // perm
  std::vector<std::string> generators;     // perm, canonical cycle strings

  static GroupSpec parse(std::string_view text);
  /// Canonical text; parse(to_string()) reproduces an equal spec.
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupTable named_group(const GroupSpec& spec, std::size_t cap = kDefaultClosureCap);
GroupTable named_group(std::string_view spec, std::size_t cap = kDefaultClosureCap);

}  // namespace solvkit
