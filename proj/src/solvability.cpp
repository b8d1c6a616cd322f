#include "solvkit/solvability.hpp"

#include <algorithm>
#include <bit>

#include "solvkit/classes.hpp"
#include "solvkit/error.hpp"
#include "solvkit/solvabilizer.hpp"

namespace solvkit {

GeneratedSubgroup commutator_subgroup(const GroupTable& g, const ElementSet& h,
                                      std::span<const ElementId> h_generators) {
  std::vector<ElementId> gens;
  for (std::size_t i = 0; i < h_generators.size(); ++i)
    for (std::size_t j = i + 1; j < h_generators.size(); ++j) {
      const ElementId a = h_generators[i];
      const ElementId b = h_generators[j];
      const ElementId c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (c != GroupTable::identity() &&
          std::find(gens.begin(), gens.end(), c) == gens.end())
        gens.push_back(c);
    }
  ElementSet n = subgroup_span(g, gens);
  // Normal closure: conjugate generators of N by generators of H until N
  // is stable under every such conjugation.
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (ElementId s : h_generators) {
      const ElementId d = g.conj(gens[k], s);
      if (n.contains(d)) continue;
      const ElementId extra[] = {d};
      n = subgroup_join(g, n, gens, extra);
      gens.push_back(d);
    }
  }
  (void)h;
  return {std::move(n), std::move(gens)};
}

ElementSet commutator_subgroup(const GroupTable& g, const ElementSet& h) {
  const auto gens = generating_set(g, h);
  return commutator_subgroup(g, h, gens).elements;
}

DerivedSeries derived_series(const GroupTable& g, const ElementSet& h) {
  DerivedSeries series;
  series.chain.push_back(h);
  std::vector<ElementId> gens = generating_set(g, h);
  const std::size_t step_cap = static_cast<std::size_t>(std::bit_width(g.order())) + 2;
  for (std::size_t step = 0;; ++step) {
    if (step > step_cap) throw ConsistencyError("derived series did not stabilize");
    const ElementSet& current = series.chain.back();
    if (current.size() == 1) break;
    auto next = commutator_subgroup(g, current, gens);
    if (next.elements == current) break;
    series.chain.push_back(std::move(next.elements));
    gens = std::move(next.generators);
  }
  return series;
}

bool is_solvable(const GroupTable& g, const ElementSet& h) { return derived_series(g, h).solvable(); }

bool is_solvable(const GroupTable& g) { return is_solvable(g, ElementSet::full(g)); }

bool SolvabilityOracle::is_solvable(const ElementSet& h) {
  Shard& shard = shards_[h.bits().digest() % kShards];
  {
    std::lock_guard lock(shard.mutex);
    auto it = shard.memo.find(h.bits());
    if (it != shard.memo.end()) {
      ++shard.hits;
      return it->second;
    }
  }
  const bool result = solvkit::is_solvable(*group_, h);
  std::lock_guard lock(shard.mutex);
  shard.memo.emplace(h.bits(), result);
  return result;
}

std::size_t SolvabilityOracle::memo_size() const {
  std::size_t n = 0;
  for (const auto& s : shards_) {
    std::lock_guard lock(s.mutex);
    n += s.memo.size();
  }
  return n;
}

std::size_t SolvabilityOracle::hits() const {
  std::size_t n = 0;
  for (const auto& s : shards_) {
    std::lock_guard lock(s.mutex);
    n += s.hits;
  }
  return n;
}

ElementSet solvable_radical(const GroupTable& g) {
  // R(G) is normal, and Sol(x^g) = Sol(x)^g, Sol(x^i) = Sol(x) for i coprime
  // to |x|; so one representative per rational class decides the class.
  SolvabilizerEngine engine(g);
  ElementSet radical(g);
  for (const auto& rc : rational_classes(g)) {
    if (engine.sol(rc.representative).size() == g.order()) radical |= rc.members;
  }
  if (!is_subgroup(g, radical)) throw ConsistencyError("solvable radical is not a subgroup");
  if (!is_normal(g, radical)) throw ConsistencyError("solvable radical is not normal");
  if (!is_solvable(g, radical)) throw ConsistencyError("solvable radical is not solvable");
  return radical;
}

}  // namespace solvkit
