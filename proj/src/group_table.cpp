#include "solvkit/group_table.hpp"

#include <algorithm>
#include <list>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>

#include "solvkit/error.hpp"

namespace solvkit {

namespace {

constexpr std::uint64_t kDenseIndexLimit = std::uint64_t{1} << 22;
constexpr std::size_t kConjugationCacheEntries = std::size_t{1} << 24;

std::string_view row_key(const std::vector<Point>& row) {
  return {reinterpret_cast<const char*>(row.data()), row.size() * sizeof(Point)};
}

}  // namespace

struct GroupTable::Impl {
  std::unordered_map<std::uint64_t, ElementId> sparse_index;

  // LRU cache of conjugation maps, most recently used at the front.
  using MapPtr = std::shared_ptr<const std::vector<ElementId>>;
  std::mutex cache_mutex;
  std::list<std::pair<ElementId, MapPtr>> lru;
  std::unordered_map<ElementId, std::list<std::pair<ElementId, MapPtr>>::iterator> cache;
  std::size_t cache_capacity = 16;
};

GroupTable::GroupTable() : impl_(std::make_unique<Impl>()) {}
GroupTable::GroupTable(GroupTable&&) noexcept = default;
GroupTable& GroupTable::operator=(GroupTable&&) noexcept = default;
GroupTable::~GroupTable() = default;

GroupTable GroupTable::closure(std::vector<Permutation> generators, std::size_t cap) {
  if (generators.empty()) throw InvalidArgument("closure needs at least one generator");
  const std::size_t n = generators.front().degree();
  if (n == 0) throw InvalidArgument("permutation of degree 0");
  for (const auto& g : generators)
    if (g.degree() != n) throw InvalidArgument("generators of unequal degree");
  if (cap == 0) throw InvalidArgument("closure cap must be positive");

  std::vector<std::vector<Point>> rows;
  std::unordered_map<std::string, std::size_t> seen;
  auto add = [&](std::vector<Point> row) {
    std::string key(row_key(row));
    if (seen.contains(key)) return;
    if (rows.size() >= cap)
      throw CapExceeded("group closure exceeded cap of " + std::to_string(cap) + " elements");
    seen.emplace(std::move(key), rows.size());
    rows.push_back(std::move(row));
  };

  {
    std::vector<Point> id(n);
    std::iota(id.begin(), id.end(), Point{0});
    add(std::move(id));
  }
  std::vector<Point> prod(n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& s : generators) {
      const auto& e = rows[i];
      for (std::size_t j = 0; j < n; ++j) prod[j] = e[s(static_cast<Point>(j))];
      add(prod);
    }
  }
  std::sort(rows.begin(), rows.end());

  GroupTable g;
  g.degree_ = n;
  g.order_ = rows.size();
  g.images_.reserve(g.order_ * n);
  for (const auto& r : rows) g.images_.insert(g.images_.end(), r.begin(), r.end());
  g.generators_ = std::move(generators);
  g.build_index();
  for (const auto& s : g.generators_) {
    const ElementId id = g.id_of(s);
    if (id != identity() &&
        std::find(g.generator_ids_.begin(), g.generator_ids_.end(), id) == g.generator_ids_.end())
      g.generator_ids_.push_back(id);
  }
  return g;
}

void GroupTable::build_index() {
  const std::size_t n = degree_;
  // Greedy base: repeatedly take the point moved by most of the elements
  // that still fix every chosen base point.
  std::vector<ElementId> remaining(order_ > 0 ? order_ - 1 : 0);
  std::iota(remaining.begin(), remaining.end(), ElementId{1});
  base_.clear();
  std::vector<std::size_t> moved(n);
  while (!remaining.empty()) {
    std::fill(moved.begin(), moved.end(), 0);
    for (ElementId e : remaining) {
      auto row = images(e);
      for (std::size_t j = 0; j < n; ++j)
        if (row[j] != j) ++moved[j];
    }
    const auto best = static_cast<Point>(std::max_element(moved.begin(), moved.end()) - moved.begin());
    base_.push_back(best);
    std::erase_if(remaining, [&](ElementId e) { return images(e)[best] != best; });
  }
  if (base_.empty()) base_.push_back(0);

  // Packed keys: sum over base points of image * n^k, must fit 64 bits.
  std::uint64_t range = 1;
  for (std::size_t k = 0; k < base_.size(); ++k) {
    if (__builtin_mul_overflow(range, static_cast<std::uint64_t>(n), &range))
      throw Unsupported("base of size " + std::to_string(base_.size()) + " on degree " +
                        std::to_string(n) + " is too large to index");
  }
  auto key_of_row = [&](const Point* row) {
    std::uint64_t key = 0;
    for (Point b : base_) key = key * n + row[b];
    return key;
  };
  dense_index_.clear();
  impl_->sparse_index.clear();
  if (static_cast<std::uint64_t>(range) <= kDenseIndexLimit) {
    dense_index_.assign(static_cast<std::size_t>(range), -1);
    for (ElementId e = 0; e < order_; ++e)
      dense_index_[key_of_row(images_.data() + std::size_t{e} * n)] = static_cast<std::int32_t>(e);
  } else {
    impl_->sparse_index.reserve(order_);
    for (ElementId e = 0; e < order_; ++e)
      impl_->sparse_index.emplace(key_of_row(images_.data() + std::size_t{e} * n), e);
  }

  inverse_.resize(order_);
  orders_.resize(order_);
  std::vector<Point> inv(n);
  for (ElementId e = 0; e < order_; ++e) {
    auto row = images(e);
    for (std::size_t j = 0; j < n; ++j) inv[row[j]] = static_cast<Point>(j);
    inverse_[e] = lookup_key(key_of_row(inv.data()));
    orders_[e] = static_cast<std::uint32_t>(element(e).order());
  }
  impl_->cache_capacity = std::max<std::size_t>(16, kConjugationCacheEntries / std::max<std::size_t>(order_, 1));
}

ElementId GroupTable::lookup_key(std::uint64_t key) const noexcept {
  if (!dense_index_.empty()) return static_cast<ElementId>(dense_index_[key]);
  return impl_->sparse_index.find(key)->second;
}

Permutation GroupTable::element(ElementId id) const {
  auto row = images(id);
  return Permutation(std::vector<Point>(row.begin(), row.end()));
}

std::optional<ElementId> GroupTable::find(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  std::uint64_t key = 0;
  for (Point b : base_) key = key * degree_ + p(b);
  ElementId candidate;
  if (!dense_index_.empty()) {
    const std::int32_t hit = dense_index_[key];
    if (hit < 0) return std::nullopt;
    candidate = static_cast<ElementId>(hit);
  } else {
    auto it = impl_->sparse_index.find(key);
    if (it == impl_->sparse_index.end()) return std::nullopt;
    candidate = it->second;
  }
  auto row = images(candidate);
  if (!std::equal(row.begin(), row.end(), p.images().begin())) return std::nullopt;
  return candidate;
}

ElementId GroupTable::id_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw InvalidArgument("permutation " + p.to_cycle_string() + " is not in the group");
  return *id;
}

ElementId GroupTable::pow(ElementId x, std::int64_t k) const noexcept {
  const std::int64_t ord = orders_[x];
  k %= ord;
  if (k < 0) k += ord;
  ElementId result = identity();
  ElementId base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::shared_ptr<const std::vector<ElementId>> GroupTable::conjugation_map(ElementId g) const {
  {
    std::lock_guard lock(impl_->cache_mutex);
    auto it = impl_->cache.find(g);
    if (it != impl_->cache.end()) {
      impl_->lru.splice(impl_->lru.begin(), impl_->lru, it->second);
      return it->second->second;
    }
  }
  auto map = std::make_shared<std::vector<ElementId>>(order_);
  const ElementId gi = inverse_[g];
  for (ElementId x = 0; x < order_; ++x) (*map)[x] = mul(mul(gi, x), g);

  std::lock_guard lock(impl_->cache_mutex);
  auto it = impl_->cache.find(g);
  if (it != impl_->cache.end()) return it->second->second;
  impl_->lru.emplace_front(g, map);
  impl_->cache.emplace(g, impl_->lru.begin());
  if (impl_->lru.size() > impl_->cache_capacity) {
    impl_->cache.erase(impl_->lru.back().first);
    impl_->lru.pop_back();
  }
  return map;
}

// ---------------------------------------------------------------------------

ElementSet::ElementSet(const GroupTable& owner, DenseBitset bits)
    : owner_(&owner), bits_(std::move(bits)) {
  if (bits_.size() != owner.order()) throw InvalidArgument("bitset length differs from group order");
}

ElementSet ElementSet::from_ids(const GroupTable& owner, std::span<const ElementId> ids) {
  ElementSet s(owner);
  for (ElementId id : ids) {
    if (!owner.valid(id)) throw InvalidArgument("element id " + std::to_string(id) + " out of range");
    s.insert(id);
  }
  return s;
}

ElementSet ElementSet::full(const GroupTable& owner) {
  DenseBitset b(owner.order());
  b.set_all();
  return ElementSet(owner, std::move(b));
}

ElementSet ElementSet::trivial(const GroupTable& owner) {
  ElementSet s(owner);
  s.insert(GroupTable::identity());
  return s;
}

namespace {

void require_owner(const GroupTable& g, const ElementSet& s) {
  if (&s.owner() != &g) throw InvalidArgument("element set belongs to a different group");
}

// Closes `set` under right multiplication by `gens`, starting from the
// elements in `frontier`. Once the set exceeds half the group it must be
// the whole group (Lagrange), so the search stops there.
ElementSet close_under(const GroupTable& g, ElementSet set, std::size_t count,
                       std::vector<ElementId> frontier, std::span<const ElementId> gens) {
  const std::size_t half = g.order() / 2;
  while (!frontier.empty()) {
    const ElementId e = frontier.back();
    frontier.pop_back();
    for (ElementId s : gens) {
      const ElementId p = g.mul(e, s);
      if (set.insert(p)) {
        if (++count > half) return ElementSet::full(g);
        frontier.push_back(p);
      }
    }
  }
  return set;
}

}  // namespace

ElementSet subgroup_span(const GroupTable& g, std::span<const ElementId> ids) {
  std::vector<ElementId> gens;
  for (ElementId id : ids) {
    if (!g.valid(id)) throw InvalidArgument("element id " + std::to_string(id) + " out of range");
    if (id != GroupTable::identity()) gens.push_back(id);
  }
  ElementSet set = ElementSet::trivial(g);
  if (gens.empty()) return set;
  return close_under(g, std::move(set), 1, {GroupTable::identity()}, gens);
}

ElementSet subgroup_join(const GroupTable& g, const ElementSet& h,
                         std::span<const ElementId> h_generators,
                         std::span<const ElementId> extra) {
  require_owner(g, h);
  std::vector<ElementId> fresh;
  for (ElementId e : extra)
    if (!h.contains(e)) fresh.push_back(e);
  if (fresh.empty()) return h;

  std::vector<ElementId> gens(h_generators.begin(), h_generators.end());
  gens.insert(gens.end(), fresh.begin(), fresh.end());

  ElementSet set = h;
  std::size_t count = h.size();
  const std::size_t half = g.order() / 2;
  std::vector<ElementId> frontier;
  bool saturated = false;
  h.for_each([&](ElementId e) {
    if (saturated) return;
    for (ElementId s : fresh) {
      const ElementId p = g.mul(e, s);
      if (set.insert(p)) {
        if (++count > half) {
          saturated = true;
          return;
        }
        frontier.push_back(p);
      }
    }
  });
  if (saturated) return ElementSet::full(g);
  return close_under(g, std::move(set), count, std::move(frontier), gens);
}

std::vector<ElementId> generating_set(const GroupTable& g, const ElementSet& h) {
  require_owner(g, h);
  std::vector<ElementId> gens;
  ElementSet span = ElementSet::trivial(g);
  const std::size_t target = h.size();
  std::size_t have = 1;
  h.for_each([&](ElementId e) {
    if (have >= target || span.contains(e)) return;
    const ElementId extra[] = {e};
    span = subgroup_join(g, span, gens, extra);
    gens.push_back(e);
    have = span.size();
  });
  return gens;
}

bool is_subgroup(const GroupTable& g, const ElementSet& x) {
  require_owner(g, x);
  if (!x.contains(GroupTable::identity())) return false;
  const std::size_t k = x.size();
  if (g.order() % k != 0) return false;
  const auto gens = generating_set(g, x);
  return subgroup_span(g, gens) == x;
}

CosetTransversal right_transversal(const GroupTable& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw InvalidArgument("right_transversal: set is not a subgroup");
  const auto members = h.ids();
  DenseBitset covered(g.order());
  std::vector<ElementId> reps;
  reps.reserve(g.order() / members.size());
  for (ElementId x = 0; x < g.order(); ++x) {
    if (covered.test(x)) continue;
    reps.push_back(x);
    for (ElementId m : members) covered.set(g.mul(m, x));
  }
  return {h, std::move(reps)};
}

ElementSet conjugate_set(const ElementSet& x, ElementId g) {
  const GroupTable& grp = x.owner();
  if (!grp.valid(g)) throw InvalidArgument("conjugator id out of range");
  const auto map = grp.conjugation_map(g);
  ElementSet out(grp);
  x.for_each([&](ElementId e) { out.insert((*map)[e]); });
  return out;
}

bool fixes_set(const ElementSet& x, ElementId g) {
  const GroupTable& grp = x.owner();
  const ElementId gi = grp.inv(g);
  return x.all_of([&](ElementId e) { return x.contains(grp.mul(grp.mul(gi, e), g)); });
}

ElementSet normalizer_of_set(const GroupTable& g, const ElementSet& x,
                             const std::optional<ElementSet>& seed) {
  require_owner(g, x);
  ElementSet h = seed ? *seed : ElementSet::trivial(g);
  require_owner(g, h);
  if (seed) {
    if (!is_subgroup(g, h)) throw InvalidArgument("normalizer seed is not a subgroup");
    for (ElementId s : generating_set(g, h))
      if (!fixes_set(x, s)) throw InvalidArgument("normalizer seed does not normalize the set");
  }
  const auto members = h.ids();
  const auto transversal = right_transversal(g, h);
  ElementSet out(g);
  for (ElementId r : transversal.reps) {
    if (!fixes_set(x, r)) continue;
    for (ElementId m : members) out.insert(g.mul(m, r));
  }
  return out;
}

bool is_normal(const GroupTable& g, const ElementSet& n) {
  if (!is_subgroup(g, n)) return false;
  for (ElementId s : g.generator_ids())
    if (!fixes_set(n, s)) return false;
  return true;
}

namespace {

std::vector<std::uint32_t> coset_labels(const GroupTable& g, const ElementSet& n,
                                        std::vector<ElementId>& reps) {
  const auto t = right_transversal(g, n);
  reps = t.reps;
  const auto members = n.ids();
  std::vector<std::uint32_t> label(g.order());
  for (std::uint32_t i = 0; i < reps.size(); ++i)
    for (ElementId m : members) label[g.mul(m, reps[i])] = i;
  return label;
}

// Permutation of cosets induced by x: N r_i -> N r_i x^-1. Using x^-1 makes
// the map a homomorphism under the left-to-right composition convention.
Permutation coset_action(const GroupTable& g, const std::vector<ElementId>& reps,
                         const std::vector<std::uint32_t>& label, ElementId x) {
  std::vector<Point> images(reps.size());
  const ElementId xi = g.inv(x);
  for (std::size_t i = 0; i < reps.size(); ++i) images[i] = label[g.mul(reps[i], xi)];
  return Permutation(std::move(images));
}

}  // namespace

GroupTable quotient_group(const GroupTable& g, const ElementSet& n, std::size_t cap) {
  require_owner(g, n);
  if (!is_normal(g, n)) throw InvalidArgument("quotient_group: subgroup is not normal");
  std::vector<ElementId> reps;
  const auto label = coset_labels(g, n, reps);
  std::vector<Permutation> gens;
  for (ElementId s : g.generator_ids()) gens.push_back(coset_action(g, reps, label, s));
  if (gens.empty()) gens.push_back(Permutation::identity(reps.size()));
  return GroupTable::closure(std::move(gens), cap);
}

ElementId quotient_image(const GroupTable& g, const ElementSet& n, const GroupTable& quotient,
                         ElementId x) {
  std::vector<ElementId> reps;
  const auto label = coset_labels(g, n, reps);
  return quotient.id_of(coset_action(g, reps, label, x));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h, std::size_t cap) {
  const std::size_t n = g.degree();
  const std::size_t m = h.degree();
  std::vector<Permutation> gens;
  auto embed = [&](const GroupTable& src, ElementId id, std::size_t offset) {
    std::vector<Point> images(n + m);
    std::iota(images.begin(), images.end(), Point{0});
    auto row = src.images(id);
    for (std::size_t j = 0; j < row.size(); ++j)
      images[offset + j] = static_cast<Point>(offset + row[j]);
    return Permutation(std::move(images));
  };
  for (ElementId s : g.generator_ids()) gens.push_back(embed(g, s, 0));
  for (ElementId s : h.generator_ids()) gens.push_back(embed(h, s, n));
  if (gens.empty()) gens.push_back(Permutation::identity(n + m));
  return GroupTable::closure(std::move(gens), cap);
}

}  // namespace solvkit
