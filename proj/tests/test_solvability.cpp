#include <gtest/gtest.h>

#include "oracles.hpp"
#include "solvkit/error.hpp"
#include "solvkit/families.hpp"
#include "solvkit/group_io.hpp"
#include "solvkit/solvability.hpp"

using namespace solvkit;

namespace {

ElementSet from_oracle(const GroupTable& g, const oracle::Set& s) {
  const auto ids = oracle::members(s);
  return ElementSet::from_ids(g, ids);
}

ElementSet span_of(const GroupTable& g, std::initializer_list<const char*> cycles) {
  std::vector<ElementId> ids;
  for (const char* c : cycles) ids.push_back(g.id_of(parse_permutation(c, g.degree())));
  return subgroup_span(g, ids);
}

}  // namespace

TEST(Commutator, Examples) {
  const auto c6 = named_group("c:6");
  EXPECT_EQ(commutator_subgroup(c6, ElementSet::full(c6)).size(), 1u);
  const auto a5 = named_group("a:5");
  EXPECT_EQ(commutator_subgroup(a5, ElementSet::full(a5)), ElementSet::full(a5));
  const auto s3 = named_group("s:3");
  const auto d = commutator_subgroup(s3, ElementSet::full(s3));
  EXPECT_EQ(d.size(), 3u);
}

TEST(Commutator, AgreesWithBruteForceOnAllSubgroups) {
  for (const char* spec : {"s:4", "a:5", "d:12"}) {
    const auto g = named_group(spec);
    for (const auto& h : oracle::subgroups(g)) {
      const auto ours = commutator_subgroup(g, from_oracle(g, h));
      EXPECT_EQ(ours, from_oracle(g, oracle::derived(g, h))) << spec;
    }
  }
}

TEST(IsSolvable, Examples) {
  const auto s5 = named_group("s:5");
  const auto a5_in_s5 = span_of(s5, {"(0 1 2)", "(0 1 2 3 4)"});
  ASSERT_EQ(a5_in_s5.size(), 60u);
  EXPECT_FALSE(is_solvable(s5, a5_in_s5));
  EXPECT_FALSE(is_solvable(s5));
  const auto a5 = named_group("a:5");
  const auto d10 = span_of(a5, {"(0 1 2 3 4)", "(1 4)(2 3)"});
  EXPECT_TRUE(is_solvable(a5, d10));
  EXPECT_TRUE(is_solvable(named_group("s:4")));
  EXPECT_TRUE(is_solvable(named_group("a:4")));
}

TEST(IsSolvable, SubgroupsBelowOrder60AreSolvable) {
  const auto g = named_group("s:5");
  for (const auto& h : oracle::subgroups(g)) {
    const auto set = from_oracle(g, h);
    EXPECT_EQ(is_solvable(g, set), oracle::solvable(g, h));
    if (set.size() < 60) {
      EXPECT_TRUE(is_solvable(g, set));
    }
  }
}

TEST(IsSolvable, MemoAgreesWithDirectTest) {
  const auto g = named_group("psl2:7");
  SolvabilityOracle memo(g);
  for (const auto& h : oracle::subgroups(g)) {
    const auto set = from_oracle(g, h);
    const bool direct = is_solvable(g, set);
    EXPECT_EQ(memo.is_solvable(set), direct);
    EXPECT_EQ(memo.is_solvable(set), direct);  // served from the memo
  }
  EXPECT_GT(memo.hits(), 0u);
}

TEST(IsSolvable, PairwiseCriterionExhaustive) {
  // G solvable iff every two-generated subgroup is solvable; |G| <= 120.
  for (const char* spec : {"s:4", "a:5", "s:5", "sl2:5", "d:20", "direct(s:3,c:4)"}) {
    const auto g = named_group(spec);
    SolvabilityOracle memo(g);
    bool all_pairs = true;
    for (ElementId x = 0; x < g.order() && all_pairs; ++x)
      for (ElementId y = x + 1; y < g.order() && all_pairs; ++y) {
        const ElementId ids[] = {x, y};
        all_pairs = memo.is_solvable(subgroup_span(g, ids));
      }
    EXPECT_EQ(is_solvable(g), all_pairs) << spec;
  }
}

TEST(DerivedSeries, ShapeOfS4) {
  const auto g = named_group("s:4");
  const auto series = derived_series(g, ElementSet::full(g));
  ASSERT_TRUE(series.solvable());
  std::vector<std::size_t> orders;
  for (const auto& h : series.chain) orders.push_back(h.size());
  EXPECT_EQ(orders, (std::vector<std::size_t>{24, 12, 4, 1}));
}

TEST(Radical, Examples) {
  const auto s4 = named_group("s:4");
  EXPECT_EQ(solvable_radical(s4), ElementSet::full(s4));
  const auto a5 = named_group("a:5");
  EXPECT_EQ(solvable_radical(a5).size(), 1u);
  const auto prod = named_group("direct(a:5,c:6)");
  const auto r = solvable_radical(prod);
  EXPECT_EQ(r.size(), 6u);
  // the radical is exactly the C6 factor, acting trivially on points 0..4
  r.for_each([&](ElementId x) {
    for (Point i = 0; i < 5; ++i) EXPECT_EQ(prod.images(x)[i], i);
  });
}

TEST(Radical, NormalSolvableAndQuotientHasTrivialRadical) {
  for (const char* spec : {"s:4", "a:5", "s:5", "sl2:5", "direct(a:5,c:6)", "direct(a:5,s:4)",
                           "direct(s:3,psl2:7)", "psl2:8"}) {
    const auto g = named_group(spec);
    const auto r = solvable_radical(g);
    EXPECT_TRUE(is_normal(g, r)) << spec;
    EXPECT_TRUE(is_solvable(g, r)) << spec;
    const auto q = quotient_group(g, r);
    EXPECT_EQ(q.order() * r.size(), g.order()) << spec;
    EXPECT_EQ(solvable_radical(q).size(), 1u) << spec;
  }
  EXPECT_EQ(solvable_radical(named_group("sl2:5")).size(), 2u);
}
