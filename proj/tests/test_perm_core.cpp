#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <set>

#include "oracles.hpp"
#include "solvkit/error.hpp"
#include "solvkit/families.hpp"
#include "solvkit/group_io.hpp"
#include "solvkit/group_table.hpp"
#include "solvkit/permutation.hpp"

using namespace solvkit;

namespace {

Permutation perm(std::vector<Point> images) { return Permutation(std::move(images)); }

// Finds an element by its cycle text.
ElementId id_of(const GroupTable& g, const std::string& cycles) {
  return g.id_of(parse_permutation(cycles, g.degree()));
}

}  // namespace

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  const auto p = perm({1, 0, 2});
  const auto q = perm({0, 2, 1});
  EXPECT_EQ(compose(p, q), perm({1, 2, 0}));
}

TEST(Permutation, IdentityAndInverseLaws) {
  const auto p = perm({3, 0, 4, 1, 2});
  EXPECT_EQ(compose(p, Permutation::identity(5)), p);
  EXPECT_EQ(compose(Permutation::identity(5), p), p);
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  EXPECT_TRUE(compose(p.inverse(), p).is_identity());
}

TEST(Permutation, CompositionIsAssociative) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> a(8), b(8), c(8);
    std::iota(a.begin(), a.end(), 0);
    b = c = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::shuffle(c.begin(), c.end(), rng);
    const auto pa = perm(a), pb = perm(b), pc = perm(c);
    EXPECT_EQ((pa * pb) * pc, pa * (pb * pc));
  }
}

TEST(Permutation, RejectsInvalidInput) {
  EXPECT_THROW(perm({}), InvalidArgument);
  EXPECT_THROW(perm({0, 0, 1}), InvalidArgument);
  EXPECT_THROW(perm({0, 3, 1}), InvalidArgument);
  EXPECT_THROW(compose(perm({1, 0}), perm({0, 1, 2})), InvalidArgument);
}

TEST(Permutation, ElementOrderIsLcmOfCycleLengths) {
  EXPECT_EQ(element_order(Permutation::identity(4)), 1u);
  EXPECT_EQ(element_order(Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})), 5u);
  EXPECT_EQ(element_order(Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}})), 6u);
}

TEST(Permutation, CycleStringRoundTrips) {
  const auto p = Permutation::from_cycles(6, {{0, 3}, {1, 4, 5}});
  EXPECT_EQ(parse_permutation(p.to_cycle_string(), 6), p);
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
}

TEST(Closure, StandardExamples) {
  const auto a5 = closure({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                           Permutation::from_cycles(5, {{0, 1, 2}})});
  EXPECT_EQ(a5.order(), 60u);
  EXPECT_EQ(closure({Permutation::identity(3)}).order(), 1u);
  EXPECT_EQ(closure({Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})})
                .order(),
            4u);
}

TEST(Closure, CapIsEnforced) {
  EXPECT_THROW(symmetric_group(6, 100), CapExceeded);
  EXPECT_EQ(symmetric_group(6, 720).order(), 720u);
}

TEST(Closure, CanonicalOrderAndIdentityFirst) {
  const auto g = symmetric_group(4);
  EXPECT_TRUE(g.element(0).is_identity());
  for (ElementId i = 1; i < g.order(); ++i) EXPECT_LT(g.element(i - 1), g.element(i));
}

TEST(Closure, IdempotentOnItsElements) {
  const auto g = psl2(7);
  std::vector<Permutation> all;
  for (ElementId i = 0; i < g.order(); ++i) all.push_back(g.element(i));
  EXPECT_EQ(closure(all).order(), g.order());
}

TEST(GroupTable, MultiplicationMatchesComposition) {
  for (const char* spec : {"s:5", "psl2:8", "psl3:3", "direct(a:5,c:6)"}) {
    const auto g = named_group(spec);
    std::mt19937 rng(11);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
    for (int t = 0; t < 500; ++t) {
      const ElementId a = pick(rng), b = pick(rng);
      ASSERT_EQ(g.element(g.mul(a, b)), compose(g.element(a), g.element(b))) << spec;
      ASSERT_EQ(g.element(g.inv(a)), g.element(a).inverse()) << spec;
      ASSERT_EQ(g.element_order(a), g.element(a).order()) << spec;
    }
  }
}

TEST(GroupTable, ConjugationConvention) {
  const auto g = symmetric_group(4);
  const ElementId x = id_of(g, "(0 1 2)");
  const ElementId t = id_of(g, "(2 3)");
  // x^t = t^-1 x t
  EXPECT_EQ(g.element(g.conj(x, t)), compose(compose(g.element(t).inverse(), g.element(x)), g.element(t)));
  const auto map = g.conjugation_map(t);
  for (ElementId y = 0; y < g.order(); ++y) EXPECT_EQ((*map)[y], g.conj(y, t));
}

TEST(Span, Examples) {
  const auto a5 = alternating_group(5);
  const ElementId e[] = {0};
  EXPECT_EQ(subgroup_span(a5, e).size(), 1u);
  const ElementId v4[] = {id_of(a5, "(0 1)(2 3)"), id_of(a5, "(0 2)(1 3)")};
  EXPECT_EQ(subgroup_span(a5, v4).size(), 4u);
  const ElementId d10[] = {id_of(a5, "(0 1 2 3 4)"), id_of(a5, "(1 4)(2 3)")};
  EXPECT_EQ(subgroup_span(a5, d10).size(), 10u);
  const ElementId bad[] = {60};
  EXPECT_THROW(subgroup_span(a5, bad), InvalidArgument);
}

TEST(Span, AgreesWithBruteClosure) {
  const auto g = named_group("psl2:11");
  std::mt19937 rng(3);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
  for (int t = 0; t < 200; ++t) {
    const ElementId a = pick(rng), b = pick(rng);
    const ElementId ids[] = {a, b};
    const auto ours = subgroup_span(g, ids);
    const auto brute = oracle::span(g, {a, b});
    ASSERT_EQ(ours.size(), oracle::count(brute));
    for (ElementId z : ours.ids()) ASSERT_TRUE(brute[z]);
    EXPECT_EQ(g.order() % ours.size(), 0u);
  }
}

TEST(Transversal, ExamplesAndPartition) {
  const auto a5 = alternating_group(5);
  EXPECT_EQ(right_transversal(a5, ElementSet::full(a5)).reps, std::vector<ElementId>{0});
  EXPECT_EQ(right_transversal(a5, ElementSet::trivial(a5)).reps.size(), 60u);
  const ElementId a4_gens[] = {id_of(a5, "(0 1 2)"), id_of(a5, "(0 1)(2 3)")};
  const auto a4 = subgroup_span(a5, a4_gens);
  ASSERT_EQ(a4.size(), 12u);
  const auto t = right_transversal(a5, a4);
  ASSERT_EQ(t.reps.size(), 5u);
  std::vector<int> hits(a5.order(), 0);
  for (ElementId r : t.reps) {
    // minimal id within its coset
    a4.for_each([&](ElementId h) {
      const ElementId z = a5.mul(h, r);
      ++hits[z];
      EXPECT_LE(r, z);
    });
  }
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(Transversal, RejectsNonSubgroup) {
  const auto a5 = alternating_group(5);
  const ElementId ids[] = {0, 1};
  EXPECT_THROW(right_transversal(a5, ElementSet::from_ids(a5, ids)), InvalidArgument);
}

TEST(ConjugateSet, Laws) {
  const auto g = symmetric_group(5);
  const ElementId gens[] = {id_of(g, "(0 1 2)"), id_of(g, "(3 4)")};
  const auto h = subgroup_span(g, gens);
  std::mt19937 rng(5);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
  EXPECT_EQ(conjugate_set(h, 0), h);
  for (int t = 0; t < 50; ++t) {
    const ElementId x = pick(rng);
    const auto hx = conjugate_set(h, x);
    EXPECT_EQ(hx.size(), h.size());
    EXPECT_EQ(conjugate_set(hx, g.inv(x)), h);
    const auto big = ElementSet::full(g);
    EXPECT_TRUE(hx.is_subset_of(conjugate_set(big, x)));
  }
  h.for_each([&](ElementId y) { EXPECT_EQ(conjugate_set(h, y), h); });
}

TEST(Normalizer, Examples) {
  const auto a5 = alternating_group(5);
  EXPECT_EQ(normalizer_of_set(a5, ElementSet::full(a5)).size(), 60u);
  const ElementId c5[] = {id_of(a5, "(0 1 2 3 4)")};
  const auto five = subgroup_span(a5, c5);
  EXPECT_EQ(normalizer_of_set(a5, five).size(), 10u);
  EXPECT_EQ(normalizer_of_set(a5, five).size(),
            oracle::normalizer_order(a5, oracle::span(a5, {c5[0]})));
}

TEST(Normalizer, SeededAgreesWithUnseeded) {
  for (const char* spec : {"a:5", "s:5", "psl2:7", "psl2:11"}) {
    const auto g = named_group(spec);
    std::mt19937 rng(9);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
    for (int t = 0; t < 20; ++t) {
      const ElementId x = pick(rng);
      const ElementId one[] = {x};
      const auto cyc = subgroup_span(g, one);
      const auto plain = normalizer_of_set(g, cyc);
      EXPECT_EQ(normalizer_of_set(g, cyc, cyc), plain) << spec;
      EXPECT_EQ(plain.size(), oracle::normalizer_order(g, oracle::span(g, {x}))) << spec;
    }
  }
}

TEST(Normalizer, BadSeedDetected) {
  const auto a5 = alternating_group(5);
  const ElementId c5[] = {id_of(a5, "(0 1 2 3 4)")};
  const auto five = subgroup_span(a5, c5);
  const ElementId c3[] = {id_of(a5, "(0 1 2)")};
  EXPECT_THROW(normalizer_of_set(a5, five, subgroup_span(a5, c3)), InvalidArgument);
}

TEST(Quotient, OrdersAndHomomorphism) {
  const auto g = named_group("direct(a:5,c:6)");
  EXPECT_EQ(g.order(), 360u);
  EXPECT_EQ(quotient_group(g, ElementSet::trivial(g)).order(), 360u);
  EXPECT_EQ(quotient_group(g, ElementSet::full(g)).order(), 1u);

  // the C6 factor acts on points 5..10
  std::vector<ElementId> c6_ids;
  for (ElementId i = 0; i < g.order(); ++i) {
    const auto img = g.images(i);
    if (img[0] == 0 && img[1] == 1 && img[2] == 2 && img[3] == 3 && img[4] == 4) c6_ids.push_back(i);
  }
  const auto n = ElementSet::from_ids(g, c6_ids);
  ASSERT_EQ(n.size(), 6u);
  const auto q = quotient_group(g, n);
  EXPECT_EQ(q.order(), 60u);
  std::mt19937 rng(1);
  std::uniform_int_distribution<ElementId> pick(0, 359);
  for (int t = 0; t < 100; ++t) {
    const ElementId a = pick(rng), b = pick(rng);
    EXPECT_EQ(quotient_image(g, n, q, g.mul(a, b)),
              q.mul(quotient_image(g, n, q, a), quotient_image(g, n, q, b)));
  }
}

TEST(Quotient, RejectsNonNormal) {
  const auto a5 = alternating_group(5);
  const ElementId c3[] = {id_of(a5, "(0 1 2)")};
  EXPECT_THROW(quotient_group(a5, subgroup_span(a5, c3)), InvalidArgument);
}

TEST(DirectProduct, Orders) {
  EXPECT_EQ(direct_product(alternating_group(5), cyclic_group(6)).order(), 360u);
  EXPECT_EQ(direct_product(psl2(7), cyclic_group(1)).order(), 168u);
  const auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_EQ(v4.order(), 4u);
  for (ElementId i = 1; i < 4; ++i) EXPECT_EQ(v4.element_order(i), 2u);
}

TEST(GroupIo, ParsesBothNotations) {
  const auto f = parse_group_text("# A5\ndegree 5\ng 1 2 3 4 0\ng (0 1 2)\n");
  EXPECT_EQ(f.degree, 5u);
  ASSERT_EQ(f.generators.size(), 2u);
  EXPECT_EQ(closure(f.generators).order(), 60u);
  const auto again = parse_group_text(format_group_text(f));
  EXPECT_EQ(again.generators, f.generators);
}

TEST(GroupIo, ErrorsCarryPositions) {
  try {
    parse_group_text("degree 3\ng 0 0 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
  EXPECT_THROW(parse_group_text("g 0 1\n"), ParseError);
  EXPECT_THROW(parse_group_text("degree x\n"), ParseError);
}

TEST(GroupIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "solvkit_io_test.txt";
  GroupFile f{4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 2}})}};
  write_group_file(path.string(), f);
  const auto back = read_group_file(path.string());
  EXPECT_EQ(back.generators, f.generators);
  EXPECT_EQ(named_group("file:" + path.string()).order(), 8u);
  std::filesystem::remove(path);
}
