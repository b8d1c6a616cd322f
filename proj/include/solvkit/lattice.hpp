#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "solvkit/group_table.hpp"

namespace solvkit {

inline constexpr std::size_t kDefaultLatticeCap = 1'200;

/// Every subgroup of a small group, with generators, conjugacy classes and
/// containment queries. Immutable once built.
class SubgroupLattice {
 public:
  /// Join closure from the cyclic subgroups of prime-power order. Throws
  /// CapExceeded when |G| > cap.
  static SubgroupLattice build(const GroupTable& g, std::size_t cap = kDefaultLatticeCap);

  const GroupTable& group() const noexcept { return *group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }

  /// Subgroups sorted by order, then by contents.
  const std::vector<ElementSet>& subgroups() const noexcept { return subgroups_; }
  const ElementSet& subgroup(std::size_t i) const { return subgroups_[i]; }
  const std::vector<ElementId>& generators(std::size_t i) const { return generators_[i]; }

  std::optional<std::size_t> index_of(const ElementSet& h) const;

  /// Index of the G-conjugacy class of subgroup i; classes are numbered in
  /// order of their first member.
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  std::size_t class_count() const noexcept { return class_members_.size(); }
  const std::vector<std::size_t>& class_members(std::size_t c) const { return class_members_[c]; }

  bool contains(std::size_t outer, std::size_t inner) const {
    return subgroups_[inner].is_subset_of(subgroups_[outer]);
  }

  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t full_index() const noexcept { return subgroups_.size() - 1; }

  /// Indices of the maximal subgroups of subgroup i (proper, maximal under
  /// containment among subgroups of i).
  std::vector<std::size_t> maximal_subgroups_of(std::size_t i) const;

  /// Index of H^g for a listed subgroup H.
  std::size_t conjugate_index(std::size_t i, ElementId g) const;

 private:
  explicit SubgroupLattice(const GroupTable& g) : group_(&g) {}

  const GroupTable* group_;
  std::vector<ElementSet> subgroups_;
  std::vector<std::vector<ElementId>> generators_;
  std::unordered_map<DenseBitset, std::size_t, DenseBitsetHash> index_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> class_members_;
};

inline SubgroupLattice all_subgroups(const GroupTable& g, std::size_t cap = kDefaultLatticeCap) {
  return SubgroupLattice::build(g, cap);
}

/// Proper subgroups of G maximal under containment.
std::vector<ElementSet> maximal_subgroups(const GroupTable& g, const SubgroupLattice& lattice);

struct MaxSolvRep {
  ElementSet subgroup;
  ElementSet normalizer;               // N_G(H)
  std::vector<ElementId> transversal;  // right transversal of N_G(H) in G
};

/// One representative per conjugacy class of maximal solvable subgroups.
struct MaxSolvReps {
  std::vector<MaxSolvRep> reps;

  /// Number of maximal solvable subgroups, counting every conjugate.
  std::size_t total_subgroups() const;
};

/// Recursion over maximal-subgroup class representatives: solvable maximal
/// subgroups are kept, nonsolvable ones are descended into; afterwards any
/// representative conjugate to, or conjugate-contained in, another is
/// dropped.
MaxSolvReps max_solv_reps(const GroupTable& g, const SubgroupLattice& lattice);
MaxSolvReps max_solv_reps(const GroupTable& g, std::size_t lattice_cap = kDefaultLatticeCap);

/// Isomorphism shape of a small subgroup, as far as the classifier can tell.
struct StructureTag {
  enum class Kind {
    trivial,
    cyclic,                     // C_a
    dihedral,                   // D_a, a = order
    elementary_abelian,         // C_a^b, a prime
    alternating4,               // A4
    symmetric4,                 // S4
    elementary_abelian_by_cyclic,  // (C_p^k) : C_b with a = p^k
    other,                      // a = order
  };

  Kind kind = Kind::trivial;
  std::uint64_t a = 1;
  std::uint64_t b = 0;

  std::string to_string() const;
  friend bool operator==(const StructureTag&, const StructureTag&) = default;
};

/// Checks, in order: trivial, cyclic, dihedral (order >= 6), elementary
/// abelian, A4, S4, elementary-abelian-by-cyclic, other.
StructureTag classify_structure(const GroupTable& g, const ElementSet& h);

}  // namespace solvkit
