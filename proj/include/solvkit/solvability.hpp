#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "solvkit/group_table.hpp"

namespace solvkit {

/// A subgroup together with a generating set for it.
struct GeneratedSubgroup {
  ElementSet elements;
  std::vector<ElementId> generators;
};

/// Commutator subgroup [H, H]: normal closure in H of the commutators
/// a^-1 b^-1 a b of a generating set of H.
GeneratedSubgroup commutator_subgroup(const GroupTable& g, const ElementSet& h,
                                      std::span<const ElementId> h_generators);
ElementSet commutator_subgroup(const GroupTable& g, const ElementSet& h);

/// H = chain[0] > chain[1] > ... with chain[i+1] = [chain[i], chain[i]],
/// stopping at the first repeated (stable) term, which is kept.
struct DerivedSeries {
  std::vector<ElementSet> chain;

  bool solvable() const { return chain.back().size() == 1; }
  std::size_t length() const { return chain.size() - 1; }
};

DerivedSeries derived_series(const GroupTable& g, const ElementSet& h);

/// Unmemoized solvability test via the derived series.
bool is_solvable(const GroupTable& g, const ElementSet& h);
bool is_solvable(const GroupTable& g);

/// Memoizing solvability test, keyed on the exact subgroup contents.
/// Thread-safe: the memo is split into independently locked shards.
class SolvabilityOracle {
 public:
  explicit SolvabilityOracle(const GroupTable& g) : group_(&g) {}

  bool is_solvable(const ElementSet& h);

  const GroupTable& group() const noexcept { return *group_; }
  std::size_t memo_size() const;
  std::size_t hits() const;

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<DenseBitset, bool, DenseBitsetHash> memo;
    std::size_t hits = 0;
  };

  const GroupTable* group_;
  std::array<Shard, kShards> shards_;
};

/// R(G) = { x : Sol_G(x) = G }. The result is checked to be a normal,
/// solvable subgroup; a failed check raises ConsistencyError.
ElementSet solvable_radical(const GroupTable& g);

}  // namespace solvkit
