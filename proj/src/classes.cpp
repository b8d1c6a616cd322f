#include "solvkit/classes.hpp"

#include <numeric>

namespace solvkit {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // root is always the smallest index
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::vector<ElementSet> conjugacy_classes(const GroupTable& g) {
  std::vector<ElementSet> classes;
  DenseBitset assigned(g.order());
  const auto& gens = g.generator_ids();
  for (ElementId x = 0; x < g.order(); ++x) {
    if (assigned.test(x)) continue;
    ElementSet orbit(g);
    orbit.insert(x);
    assigned.set(x);
    std::vector<ElementId> frontier{x};
    while (!frontier.empty()) {
      const ElementId y = frontier.back();
      frontier.pop_back();
      for (ElementId s : gens) {
        const ElementId z = g.conj(y, s);
        if (orbit.insert(z)) {
          assigned.set(z);
          frontier.push_back(z);
        }
      }
    }
    classes.push_back(std::move(orbit));
  }
  return classes;
}

std::vector<RationalClass> rational_classes(const GroupTable& g) {
  const auto classes = conjugacy_classes(g);
  std::vector<std::uint32_t> class_of(g.order());
  for (std::uint32_t c = 0; c < classes.size(); ++c)
    classes[c].for_each([&](ElementId e) { class_of[e] = c; });

  UnionFind uf(classes.size());
  for (std::uint32_t c = 0; c < classes.size(); ++c) {
    const ElementId x = classes[c].min_id();
    const std::uint32_t k = g.element_order(x);
    ElementId power = x;
    for (std::uint32_t i = 2; i < k; ++i) {
      power = g.mul(power, x);
      if (std::gcd(i, k) == 1) uf.unite(c, class_of[power]);
    }
  }

  std::vector<RationalClass> out;
  std::vector<std::size_t> slot(classes.size(), SIZE_MAX);
  for (std::uint32_t c = 0; c < classes.size(); ++c) {
    const std::size_t root = uf.find(c);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      const ElementId rep = classes[root].min_id();
      out.push_back({rep, ElementSet(g), g.element_order(rep)});
    }
    out[slot[root]].members |= classes[c];
  }
  // Roots are the smallest class index, whose minimal member is smaller
  // than that of every other class, so representatives are class minima and
  // the output is already ordered by representative.
  return out;
}

}  // namespace solvkit
