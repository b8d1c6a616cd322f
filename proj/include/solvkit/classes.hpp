#pragma once

#include <cstdint>
#include <vector>

#include "solvkit/group_table.hpp"

namespace solvkit {

/// Orbits of G acting on itself by conjugation, ordered by minimal member.
std::vector<ElementSet> conjugacy_classes(const GroupTable& g);

/// Union of the conjugacy classes of x^i over all i coprime to |x|.
struct RationalClass {
  ElementId representative;  // minimal id in the class
  ElementSet members;
  std::uint32_t element_order;
};

/// Rational classes ordered by representative id (the identity class first).
std::vector<RationalClass> rational_classes(const GroupTable& g);

}  // namespace solvkit
