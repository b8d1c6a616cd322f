#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace solvkit {

struct GroupSpec;
struct SolvReport;

/// A family of simple groups with a closed form for |Solv(G)|.
struct FormulaFamily {
  enum class Tag {
    psl2_even,      // PSL(2, q), q = 2^n, n >= 2
    psl2_3odd,      // PSL(2, q), q = 3^n, n odd, n >= 3
    psl2_prime,     // PSL(2, p), p prime, p > 7
    suzuki,         // Sz(q), q = 2^n, n odd prime
    psl3_3,         // PSL(3, 3)
    psl2_7_special  // PSL(2, 7)
  };

  Tag tag = Tag::psl2_even;
  std::uint64_t parameter = 0;  // q for the prime-power families, p for psl2_prime

  static FormulaFamily psl2_even(std::uint64_t q) { return {Tag::psl2_even, q}; }
  static FormulaFamily psl2_3odd(std::uint64_t q) { return {Tag::psl2_3odd, q}; }
  static FormulaFamily psl2_prime(std::uint64_t p) { return {Tag::psl2_prime, p}; }
  static FormulaFamily suzuki(std::uint64_t q) { return {Tag::suzuki, q}; }
  static FormulaFamily psl3_3() { return {Tag::psl3_3, 3}; }
  static FormulaFamily psl2_7() { return {Tag::psl2_7_special, 7}; }

  /// p mod 24 for psl2_prime; 0 otherwise.
  unsigned congruence_case() const;

  std::string name() const;       // e.g. "PSL(2,8)", "Sz(8)"
  std::string tag_string() const; // e.g. "psl2-even"

  friend bool operator==(const FormulaFamily&, const FormulaFamily&) = default;
};

/// Throws Unsupported, naming the violated hypothesis, when the parameter is
/// outside the family.
void validate(const FormulaFamily& f);

/// Closed form for |Solv(G)|. Throws Unsupported for invalid parameters and
/// Error on arithmetic overflow.
std::uint64_t solv_formula(const FormulaFamily& f);

/// |G| for the family member.
std::uint64_t family_group_order(const FormulaFamily& f);

/// Whether the member is a minimal simple group.
bool is_minimal_simple(const FormulaFamily& f);

/// The formula family governing a named group, or Unsupported with the
/// reason (alternating groups other than A5 = PSL(2,4), even exponents of 3,
/// p = 5, ...).
FormulaFamily formula_family_for(const GroupSpec& spec);

struct DistinctnessEntry {
  FormulaFamily family;
  std::uint64_t group_order = 0;
  std::uint64_t solv = 0;
};

struct DistinctnessReport {
  std::uint64_t order_bound = 0;
  std::vector<DistinctnessEntry> entries;  // sorted by group order
  std::vector<std::pair<std::size_t, std::size_t>> collisions;  // entry indices
};

/// Every minimal simple group of order <= order_bound (PSL(2,2^p),
/// PSL(2,3^p) for odd p, PSL(2,p) with p = 2, 3 mod 5, Sz(2^p), PSL(3,3);
/// A5 appears as PSL(2,4)), with pairwise collisions of |Solv|.
DistinctnessReport minimal_simple_distinctness(std::uint64_t order_bound);

struct LowerBoundCheck {
  bool holds = false;          // total >= 32
  bool equals_minimum = false; // total == 32, noted for inspection
};

/// For a report of a nonsolvable group; throws InvalidArgument when the
/// report has total 1 (a solvable group).
LowerBoundCheck check_lower_bound(const SolvReport& report);

}  // namespace solvkit
