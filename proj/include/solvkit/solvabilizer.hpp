#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solvkit/group_table.hpp"
#include "solvkit/lattice.hpp"
#include "solvkit/solvability.hpp"

namespace solvkit {

inline constexpr std::size_t kDefaultNaiveCap = 700;

/// Computes Sol_G(x) = { y : <x, y> solvable } with a shared solvability memo.
///
/// Each probe y with <x, y> solvable admits every element of <x, y> at once;
/// each probe with <x, y> nonsolvable rejects every x^a y^i x^b with i
/// coprime to |y|, since all of those generate the same subgroup together
/// with x. Thread-safe.
class SolvabilizerEngine {
 public:
  explicit SolvabilizerEngine(const GroupTable& g) : group_(&g), oracle_(g) {}

  ElementSet sol(ElementId x);

  const GroupTable& group() const noexcept { return *group_; }
  SolvabilityOracle& oracle() noexcept { return oracle_; }

 private:
  const GroupTable* group_;
  SolvabilityOracle oracle_;
};

/// Sol_G(x) with a fresh engine.
ElementSet sol(const GroupTable& g, ElementId x);

enum class Method { naive, rational };
enum class Execution { serial, parallel };

std::string to_string(Method m);
std::string to_string(Execution e);

struct SolvOptions {
  Execution execution = Execution::parallel;
  int jobs = 0;  // 0: OpenMP default
  std::size_t naive_cap = kDefaultNaiveCap;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Per-rational-class line of a report.
struct ClassRecord {
  ElementId representative = 0;
  std::uint32_t element_order = 1;
  std::size_t class_size = 0;
  std::size_t sol_size = 0;
  std::size_t cyclic_normalizer_order = 0;  // |N_G(<x>)|
  std::size_t normalizer_order = 0;         // |N_G(Sol(x))|
  std::uint64_t orbit = 0;                  // [G : N_G(Sol(x))]
  std::optional<std::size_t> merged_into;   // index of the kept class record

  bool kept() const noexcept { return !merged_into.has_value(); }
};

struct SolvReport {
  std::string spec;
  std::size_t order = 0;
  Method method = Method::rational;
  std::vector<ClassRecord> classes;  // empty for the naive method
  std::uint64_t total = 0;
  std::uint64_t upper_bound = 0;
  double millis = 0.0;
};

/// Sol for every element, deduplicated by exact equality. Throws
/// CapExceeded when |G| exceeds options.naive_cap.
SolvReport solv_count_naive(const GroupTable& g, const SolvOptions& options = {});

/// Sum of [G : N_G(Sol(x))] over rational-class representatives whose
/// solvabilizers are pairwise non-conjugate.
SolvReport solv_count_rational(const GroupTable& g, const SolvOptions& options = {});

/// Sum of [G : N_G(<x>)] over rational-class representatives.
std::uint64_t solv_upper_bound(const GroupTable& g);

/// N_G(<x>).
ElementSet cyclic_normalizer(const GroupTable& g, ElementId x);

/// Union of the maximal solvable subgroups containing x. With verify set,
/// the union is compared against sol(g, x) and a mismatch raises
/// ConsistencyError.
ElementSet sol_via_max_solvables(const GroupTable& g, ElementId x, const MaxSolvReps& reps,
                                 bool verify = true);

}  // namespace solvkit
