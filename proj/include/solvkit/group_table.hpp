#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "solvkit/dense_bitset.hpp"
#include "solvkit/permutation.hpp"

namespace solvkit {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultClosureCap = 200'000;

class ElementSet;

/// A fully enumerated permutation group.
///
/// Elements are stored sorted lexicographically by image list, so the
/// identity is always id 0 and ids are reproducible across runs. Products
/// are resolved through a base: an element is determined by the images of
/// a few base points, so a product needs only |base| image lookups.
///
/// Immutable after construction except for an internal, mutex-guarded
/// cache of conjugation maps; safe to share between threads. Element sets
/// hold a pointer to their owning table, so a table must not be moved
/// while sets referring to it are alive.
class GroupTable {
 public:
  GroupTable(GroupTable&&) noexcept;
  GroupTable& operator=(GroupTable&&) noexcept;
  GroupTable(const GroupTable&) = delete;
  GroupTable& operator=(const GroupTable&) = delete;
  ~GroupTable();

  /// Breadth-first product closure of the generators. Throws CapExceeded
  /// as soon as more than `cap` elements are found.
  static GroupTable closure(std::vector<Permutation> generators,
                            std::size_t cap = kDefaultClosureCap);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return order_; }

  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Ids of the generators (duplicates and identities removed).
  const std::vector<ElementId>& generator_ids() const noexcept { return generator_ids_; }

  static constexpr ElementId identity() noexcept { return 0; }

  std::span<const Point> images(ElementId id) const noexcept {
    return {images_.data() + static_cast<std::size_t>(id) * degree_, degree_};
  }
  Permutation element(ElementId id) const;

  std::optional<ElementId> find(const Permutation& p) const;
  /// Like find, but throws InvalidArgument when p is not in the group.
  ElementId id_of(const Permutation& p) const;

  /// a * b, i.e. the permutation i -> a(b(i)).
  ElementId mul(ElementId a, ElementId b) const noexcept {
    const Point* pa = images_.data() + static_cast<std::size_t>(a) * degree_;
    const Point* pb = images_.data() + static_cast<std::size_t>(b) * degree_;
    std::uint64_t key = 0;
    for (Point bp : base_) key = key * degree_ + pa[pb[bp]];
    return lookup_key(key);
  }
  ElementId inv(ElementId a) const noexcept { return inverse_[a]; }
  /// x^g = g^-1 x g.
  ElementId conj(ElementId x, ElementId g) const noexcept { return mul(mul(inverse_[g], x), g); }
  ElementId pow(ElementId x, std::int64_t k) const noexcept;
  std::uint32_t element_order(ElementId id) const noexcept { return orders_[id]; }

  /// The id permutation x -> x^g, cached (bounded LRU).
  std::shared_ptr<const std::vector<ElementId>> conjugation_map(ElementId g) const;

  const std::vector<Point>& base() const noexcept { return base_; }

  bool valid(ElementId id) const noexcept { return id < order_; }

 private:
  GroupTable();
  void build_index();
  ElementId lookup_key(std::uint64_t key) const noexcept;

  struct Impl;

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Point> images_;  // order_ * degree_, row per element
  std::vector<Point> base_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::int32_t> dense_index_;  // used when degree^|base| is small
  std::unique_ptr<Impl> impl_;             // sparse index, conjugation cache
};

/// A subset of an enumerated group, as a dense bitset over element ids.
class ElementSet {
 public:
  explicit ElementSet(const GroupTable& owner)
      : owner_(&owner), bits_(owner.order()) {}
  ElementSet(const GroupTable& owner, DenseBitset bits);

  static ElementSet from_ids(const GroupTable& owner, std::span<const ElementId> ids);
  static ElementSet full(const GroupTable& owner);
  static ElementSet trivial(const GroupTable& owner);

  const GroupTable& owner() const noexcept { return *owner_; }
  const DenseBitset& bits() const noexcept { return bits_; }

  bool contains(ElementId id) const noexcept { return bits_.test(id); }
  bool insert(ElementId id) noexcept { return bits_.insert(id); }
  void erase(ElementId id) noexcept { bits_.reset(id); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  std::vector<ElementId> ids() const { return bits_.to_ids(); }
  ElementId min_id() const noexcept { return static_cast<ElementId>(bits_.first()); }

  bool is_subset_of(const ElementSet& other) const noexcept {
    return bits_.is_subset_of(other.bits_);
  }
  ElementSet& operator|=(const ElementSet& other) noexcept {
    bits_ |= other.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) noexcept {
    bits_ &= other.bits_;
    return *this;
  }

  template <typename F>
  void for_each(F&& f) const {
    bits_.for_each([&](std::size_t i) { f(static_cast<ElementId>(i)); });
  }

  template <typename F>
  bool all_of(F&& f) const {
    return bits_.all_of([&](std::size_t i) { return f(static_cast<ElementId>(i)); });
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.owner_ == b.owner_ && a.bits_ == b.bits_;
  }

 private:
  const GroupTable* owner_;
  DenseBitset bits_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    return static_cast<std::size_t>(s.bits().digest());
  }
};

struct CosetTransversal {
  ElementSet subgroup;
  std::vector<ElementId> reps;  // one per right coset H*g, minimal id in its coset
};

/// Free-function spelling of GroupTable::closure.
inline GroupTable closure(std::vector<Permutation> generators,
                          std::size_t cap = kDefaultClosureCap) {
  return GroupTable::closure(std::move(generators), cap);
}

/// The subgroup generated by the given elements, closed inside G's id space.
ElementSet subgroup_span(const GroupTable& g, std::span<const ElementId> ids);

/// Extends a subgroup by extra generators: <h, extra>.
ElementSet subgroup_join(const GroupTable& g, const ElementSet& h,
                         std::span<const ElementId> h_generators,
                         std::span<const ElementId> extra);

bool is_subgroup(const GroupTable& g, const ElementSet& x);

/// A small generating set of a subgroup (greedy, ascending ids).
std::vector<ElementId> generating_set(const GroupTable& g, const ElementSet& h);

CosetTransversal right_transversal(const GroupTable& g, const ElementSet& h);

/// X^g = { g^-1 x g : x in X }.
ElementSet conjugate_set(const ElementSet& x, ElementId g);

/// Whether X^g == X, with early exit.
bool fixes_set(const ElementSet& x, ElementId g);

/// { g in G : X^g = X }. With a seed subgroup H <= N_G(X) only one
/// representative per right coset of H is tested.
ElementSet normalizer_of_set(const GroupTable& g, const ElementSet& x,
                             const std::optional<ElementSet>& seed = std::nullopt);

bool is_normal(const GroupTable& g, const ElementSet& n);

/// G/N realised as the action of G's generators on the right cosets of N.
GroupTable quotient_group(const GroupTable& g, const ElementSet& n,
                          std::size_t cap = kDefaultClosureCap);

/// Image of an element of G in a table produced by quotient_group(G, N).
ElementId quotient_image(const GroupTable& g, const ElementSet& n, const GroupTable& quotient,
                         ElementId x);

/// G x H on degree(G) + degree(H) points.
GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                          std::size_t cap = kDefaultClosureCap);

}  // namespace solvkit
