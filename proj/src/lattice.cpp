#include "solvkit/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "solvkit/error.hpp"
#include "solvkit/solvability.hpp"

namespace solvkit {

namespace {

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<ElementId> powers_of(const GroupTable& g, ElementId x) {
  std::vector<ElementId> out;
  ElementId e = GroupTable::identity();
  do {
    out.push_back(e);
    e = g.mul(e, x);
  } while (e != GroupTable::identity());
  return out;
}

}  // namespace

SubgroupLattice SubgroupLattice::build(const GroupTable& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds the lattice cap " +
                      std::to_string(cap));
  SubgroupLattice lattice(g);
  std::vector<ElementSet> found;
  std::vector<std::vector<ElementId>> gens;
  std::unordered_map<DenseBitset, std::size_t, DenseBitsetHash> index;

  auto add = [&](ElementSet h, std::vector<ElementId> h_gens) {
    auto [it, fresh] = index.emplace(h.bits(), found.size());
    if (!fresh) return;
    found.push_back(std::move(h));
    gens.push_back(std::move(h_gens));
  };

  add(ElementSet::trivial(g), {});
  // Every subgroup is generated by elements of prime-power order, so
  // joining with cyclic subgroups of prime-power order reaches them all.
  std::vector<ElementId> seeds;
  for (ElementId x = 1; x < g.order(); ++x) {
    if (!is_prime_power(g.element_order(x))) continue;
    const auto xp = powers_of(g, x);
    const ElementSet c = ElementSet::from_ids(g, xp);
    if (index.contains(c.bits())) continue;
    add(c, {x});
    seeds.push_back(x);
  }
  // Cyclic subgroups of composite order are joins of prime-power ones, so
  // they appear in the closure below.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (ElementId s : seeds) {
      if (found[i].contains(s)) continue;
      const ElementId extra[] = {s};
      ElementSet j = subgroup_join(g, found[i], gens[i], extra);
      if (index.contains(j.bits())) continue;
      auto j_gens = gens[i];
      j_gens.push_back(s);
      add(std::move(j), std::move(j_gens));
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto sa = found[a].size(), sb = found[b].size();
    if (sa != sb) return sa < sb;
    return found[a].bits() < found[b].bits();
  });
  for (std::size_t i : perm) {
    lattice.index_.emplace(found[i].bits(), lattice.subgroups_.size());
    lattice.subgroups_.push_back(std::move(found[i]));
    lattice.generators_.push_back(std::move(gens[i]));
  }

  const std::size_t n = lattice.subgroups_.size();
  lattice.class_of_.assign(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    if (lattice.class_of_[i] != SIZE_MAX) continue;
    const std::size_t c = lattice.class_members_.size();
    std::vector<std::size_t> members{i};
    lattice.class_of_[i] = c;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (ElementId s : g.generator_ids()) {
        const std::size_t j = lattice.conjugate_index(members[k], s);
        if (lattice.class_of_[j] != SIZE_MAX) continue;
        lattice.class_of_[j] = c;
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    lattice.class_members_.push_back(std::move(members));
  }
  return lattice;
}

std::optional<std::size_t> SubgroupLattice::index_of(const ElementSet& h) const {
  auto it = index_.find(h.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::conjugate_index(std::size_t i, ElementId g) const {
  const auto j = index_of(conjugate_set(subgroups_[i], g));
  if (!j) throw ConsistencyError("subgroup lattice is not closed under conjugation");
  return *j;
}

std::vector<std::size_t> SubgroupLattice::maximal_subgroups_of(std::size_t i) const {
  const ElementSet& top = subgroups_[i];
  std::vector<std::size_t> proper;
  for (std::size_t j = 0; j < i; ++j)
    if (subgroups_[j].size() < top.size() && subgroups_[j].is_subset_of(top)) proper.push_back(j);
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < proper.size(); ++a) {
    const ElementSet& h = subgroups_[proper[a]];
    bool maximal = true;
    for (std::size_t b = a + 1; b < proper.size() && maximal; ++b) {
      const ElementSet& k = subgroups_[proper[b]];
      if (k.size() > h.size() && k.size() % h.size() == 0 && h.is_subset_of(k)) maximal = false;
    }
    if (maximal) out.push_back(proper[a]);
  }
  return out;
}

std::vector<ElementSet> maximal_subgroups(const GroupTable& g, const SubgroupLattice& lattice) {
  if (&lattice.group() != &g) throw InvalidArgument("lattice belongs to another group");
  std::vector<ElementSet> out;
  for (std::size_t i : lattice.maximal_subgroups_of(lattice.full_index()))
    out.push_back(lattice.subgroup(i));
  return out;
}

std::size_t MaxSolvReps::total_subgroups() const {
  std::size_t n = 0;
  for (const auto& r : reps) n += r.transversal.size();
  return n;
}

MaxSolvReps max_solv_reps(const GroupTable& g, const SubgroupLattice& lattice) {
  if (&lattice.group() != &g) throw InvalidArgument("lattice belongs to another group");
  SolvabilityOracle oracle(g);
  std::vector<std::size_t> candidates;

  const std::size_t top = lattice.full_index();
  if (oracle.is_solvable(lattice.subgroup(top))) {
    candidates.push_back(top);
  } else {
    std::vector<std::size_t> stack{top};
    std::vector<bool> visited(lattice.size(), false);
    while (!stack.empty()) {
      const std::size_t h = stack.back();
      stack.pop_back();
      if (visited[h]) continue;
      visited[h] = true;
      // One maximal subgroup per H-conjugacy class.
      const auto maxima = lattice.maximal_subgroups_of(h);
      std::vector<bool> seen(lattice.size(), false);
      for (std::size_t m : maxima) {
        if (seen[m]) continue;
        std::vector<std::size_t> orbit{m};
        seen[m] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k)
          for (ElementId s : lattice.generators(h)) {
            const std::size_t j = lattice.conjugate_index(orbit[k], s);
            if (!seen[j]) {
              seen[j] = true;
              orbit.push_back(j);
            }
          }
        if (oracle.is_solvable(lattice.subgroup(m)))
          candidates.push_back(m);
        else
          stack.push_back(m);
      }
    }
  }

  // Larger candidates first; a candidate is redundant when some conjugate of
  // it lies inside an already kept representative.
  std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    const auto sa = lattice.subgroup(a).size(), sb = lattice.subgroup(b).size();
    return sa != sb ? sa > sb : a < b;
  });
  std::vector<std::size_t> kept;
  for (std::size_t c : candidates) {
    const auto& conjugates = lattice.class_members(lattice.class_of(c));
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
      if (lattice.subgroup(k).size() % lattice.subgroup(c).size() != 0) return false;
      return std::any_of(conjugates.begin(), conjugates.end(),
                         [&](std::size_t j) { return lattice.contains(k, j); });
    });
    if (!redundant) kept.push_back(c);
  }

  MaxSolvReps out;
  for (std::size_t k : kept) {
    const ElementSet& h = lattice.subgroup(k);
    ElementSet n = normalizer_of_set(g, h, h);
    auto transversal = right_transversal(g, n).reps;
    out.reps.push_back({h, std::move(n), std::move(transversal)});
  }
  return out;
}

MaxSolvReps max_solv_reps(const GroupTable& g, std::size_t lattice_cap) {
  const auto lattice = SubgroupLattice::build(g, lattice_cap);
  return max_solv_reps(g, lattice);
}

std::string StructureTag::to_string() const {
  const auto s = [](std::uint64_t v) { return std::to_string(v); };
  switch (kind) {
    case Kind::trivial: return "1";
    case Kind::cyclic: return "C" + s(a);
    case Kind::dihedral: return "D" + s(a);
    case Kind::elementary_abelian: return b == 1 ? "C" + s(a) : "C" + s(a) + "^" + s(b);
    case Kind::alternating4: return "A4";
    case Kind::symmetric4: return "S4";
    case Kind::elementary_abelian_by_cyclic: return "E" + s(a) + ":C" + s(b);
    case Kind::other: return "other(" + s(a) + ")";
  }
  return "?";
}

StructureTag classify_structure(const GroupTable& g, const ElementSet& h) {
  using Kind = StructureTag::Kind;
  const std::uint64_t n = h.size();
  if (n == 1) return {Kind::trivial, 1, 0};

  const auto ids = h.ids();
  auto element_of_order = [&](std::uint64_t k) -> std::optional<ElementId> {
    for (ElementId x : ids)
      if (g.element_order(x) == k) return x;
    return std::nullopt;
  };
  if (element_of_order(n)) return {Kind::cyclic, n, 0};

  // Dihedral of order n = 2m, m >= 3: a cyclic subgroup of index 2 inverted
  // by an involution outside it.
  if (n % 2 == 0 && n >= 6) {
    const std::uint64_t m = n / 2;
    for (ElementId c : ids) {
      if (g.element_order(c) != m) continue;
      const auto cyc = ElementSet::from_ids(g, powers_of(g, c));
      const bool found = std::any_of(ids.begin(), ids.end(), [&](ElementId t) {
        return g.element_order(t) == 2 && !cyc.contains(t) && g.conj(c, t) == g.inv(c);
      });
      if (found) return {Kind::dihedral, n, 0};
      break;  // any generator of the index-2 cyclic subgroup decides
    }
  }

  const auto gens = generating_set(g, h);
  bool abelian = true;
  for (std::size_t i = 0; i < gens.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size() && abelian; ++j)
      abelian = g.mul(gens[i], gens[j]) == g.mul(gens[j], gens[i]);
  const auto primes = prime_divisors(n);
  if (abelian && primes.size() == 1) {
    const std::uint64_t p = primes[0];
    const bool exponent_p =
        std::all_of(ids.begin(), ids.end(), [&](ElementId x) { return x == 0 || g.element_order(x) == p; });
    if (exponent_p) {
      std::uint64_t k = 0;
      for (std::uint64_t r = n; r > 1; r /= p) ++k;
      return {Kind::elementary_abelian, p, k};
    }
  }

  if (n == 12 || n == 24) {
    const auto derived = commutator_subgroup(g, h, gens);
    if (n == 12 && derived.elements.size() == 4) return {Kind::alternating4, 12, 0};
    if (n == 24 && derived.elements.size() == 12) return {Kind::symmetric4, 24, 0};
  }

  for (std::uint64_t p : primes) {
    std::uint64_t pk = 1;
    while (n % (pk * p) == 0) pk *= p;
    if (pk == n) continue;
    // The p-elements form a subgroup of size p^k exactly when the Sylow
    // p-subgroup is normal.
    ElementSet sylow(g);
    std::uint64_t count = 0;
    for (ElementId x : ids) {
      std::uint64_t o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) {
        sylow.insert(x);
        ++count;
      }
    }
    if (count != pk) continue;
    const bool elementary = std::all_of(ids.begin(), ids.end(), [&](ElementId x) {
      return !sylow.contains(x) || x == 0 || g.element_order(x) == p;
    });
    if (!elementary) continue;
    const auto sylow_ids = sylow.ids();
    bool sylow_abelian = true;
    for (std::size_t i = 0; i < sylow_ids.size() && sylow_abelian; ++i)
      for (std::size_t j = i + 1; j < sylow_ids.size() && sylow_abelian; ++j)
        sylow_abelian = g.mul(sylow_ids[i], sylow_ids[j]) == g.mul(sylow_ids[j], sylow_ids[i]);
    if (!sylow_abelian) continue;
    if (element_of_order(n / pk)) return {Kind::elementary_abelian_by_cyclic, pk, n / pk};
  }
  return {Kind::other, n, 0};
}

}  // namespace solvkit
