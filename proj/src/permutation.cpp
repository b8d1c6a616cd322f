#include "solvkit/permutation.hpp"

#include <numeric>

#include "solvkit/error.hpp"

namespace solvkit {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidArgument("permutation of degree 0");
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size()) throw InvalidArgument("image " + std::to_string(p) + " out of range");
    if (seen[p]) throw InvalidArgument("image " + std::to_string(p) + " repeated");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Point a = cycle[k];
      const Point b = cycle[(k + 1) % cycle.size()];
      if (a >= degree || b >= degree)
        throw InvalidArgument("cycle point out of range for degree " + std::to_string(degree));
      if (used[a]) throw InvalidArgument("point " + std::to_string(a) + " appears in two cycles");
      used[a] = true;
      images[a] = b;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q(static_cast<Point>(i)));
  return Permutation(std::move(images));
}

}  // namespace solvkit
