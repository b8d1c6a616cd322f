#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace solvkit {

using Point = std::uint32_t;

/// A bijection on {0, ..., n-1} stored as its image list.
///
/// Composition convention, used everywhere in the library:
///   (p * q)(i) = p(q(i)),
/// i.e. q is applied first. Conjugation is x^g = g^-1 * x * g.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection; degree 0 is rejected.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation of the given degree from disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Least k >= 1 with p^k = identity (lcm of the cycle lengths).
  std::uint64_t order() const;

  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// (p * q)(i) = p(q(i)). Throws InvalidArgument on a degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline std::uint64_t element_order(const Permutation& p) { return p.order(); }

}  // namespace solvkit
