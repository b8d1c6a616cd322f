#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "solvkit/error.hpp"
#include "solvkit/families.hpp"
#include "solvkit/group_io.hpp"
#include "solvkit/lattice.hpp"
#include "solvkit/solvability.hpp"
#include "solvkit/tables.hpp"

using namespace solvkit;

namespace {

std::vector<oracle::Set> to_oracle(const GroupTable& g, const std::vector<ElementSet>& sets) {
  std::vector<oracle::Set> out;
  for (const auto& s : sets) {
    oracle::Set o(g.order(), false);
    s.for_each([&](ElementId x) { o[x] = true; });
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::size_t, std::size_t> order_histogram(const std::vector<ElementSet>& sets) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& s : sets) ++h[s.size()];
  return h;
}

ElementSet span_of(const GroupTable& g, std::initializer_list<const char*> cycles) {
  std::vector<ElementId> ids;
  for (const char* c : cycles) ids.push_back(g.id_of(parse_permutation(c, g.degree())));
  return subgroup_span(g, ids);
}

}  // namespace

TEST(Lattice, SubgroupCounts) {
  EXPECT_EQ(all_subgroups(named_group("c:6")).size(), 4u);
  EXPECT_EQ(all_subgroups(named_group("s:4")).size(), 30u);
  EXPECT_EQ(all_subgroups(named_group("a:5")).size(), 59u);
}

TEST(Lattice, AgreesWithBruteEnumeration) {
  for (const char* spec : {"s:4", "a:5", "d:12", "direct(c:2,s:3)", "s:5"}) {
    const auto g = named_group(spec);
    const auto lattice = all_subgroups(g);
    EXPECT_EQ(to_oracle(g, lattice.subgroups()), oracle::subgroups(g)) << spec;
  }
}

TEST(Lattice, ContainsEndsAndIsClosed) {
  const auto g = named_group("psl2:7");
  const auto lattice = all_subgroups(g);
  EXPECT_EQ(lattice.subgroup(lattice.trivial_index()).size(), 1u);
  EXPECT_EQ(lattice.subgroup(lattice.full_index()).size(), g.order());
  for (std::size_t i = 0; i < lattice.size(); i += 3)
    for (std::size_t j = 0; j < lattice.size(); j += 5) {
      ElementSet meet = lattice.subgroup(i);
      meet &= lattice.subgroup(j);
      EXPECT_TRUE(lattice.index_of(meet).has_value());
      auto gens = lattice.generators(i);
      const auto& more = lattice.generators(j);
      gens.insert(gens.end(), more.begin(), more.end());
      EXPECT_TRUE(lattice.index_of(subgroup_span(g, gens)).has_value());
    }
}

TEST(Lattice, ConjugacyClassesOfSubgroups) {
  const auto g = named_group("s:4");
  const auto lattice = all_subgroups(g);
  EXPECT_EQ(lattice.class_count(), 11u);
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (ElementId t = 0; t < g.order(); ++t)
      EXPECT_EQ(lattice.class_of(lattice.conjugate_index(i, t)), lattice.class_of(i));
}

TEST(Lattice, CapEnforced) {
  EXPECT_THROW(all_subgroups(named_group("psl2:11"), 600), CapExceeded);
}

TEST(MaximalSubgroups, Examples) {
  const auto a5 = named_group("a:5");
  EXPECT_EQ(order_histogram(maximal_subgroups(a5, all_subgroups(a5))),
            (std::map<std::size_t, std::size_t>{{6, 10}, {10, 6}, {12, 5}}));
  const auto c6 = named_group("c:6");
  EXPECT_EQ(order_histogram(maximal_subgroups(c6, all_subgroups(c6))),
            (std::map<std::size_t, std::size_t>{{2, 1}, {3, 1}}));
  const auto l7 = named_group("psl2:7");
  const auto lattice = all_subgroups(l7);
  std::map<std::size_t, std::size_t> class_orders;
  std::vector<bool> seen(lattice.size(), false);
  for (const auto& m : maximal_subgroups(l7, lattice)) {
    const auto c = lattice.class_of(*lattice.index_of(m));
    if (!seen[c]) ++class_orders[m.size()];
    seen[c] = true;
  }
  EXPECT_EQ(class_orders, (std::map<std::size_t, std::size_t>{{21, 1}, {24, 2}}));
}

TEST(MaxSolvReps, Examples) {
  const auto a5 = named_group("a:5");
  const auto reps = max_solv_reps(a5);
  std::vector<std::size_t> orders;
  for (const auto& r : reps.reps) orders.push_back(r.subgroup.size());
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::size_t>{6, 10, 12}));

  const auto s4 = named_group("s:4");
  const auto solvable_reps = max_solv_reps(s4);
  ASSERT_EQ(solvable_reps.reps.size(), 1u);
  EXPECT_EQ(solvable_reps.reps[0].subgroup, ElementSet::full(s4));
}

TEST(MaxSolvReps, ExpansionEqualsMaximalSolvableSubgroups) {
  for (const char* spec : {"a:5", "s:5", "psl2:7", "sl2:5", "a:6", "psl2:8"}) {
    const auto g = named_group(spec);
    const auto reps = max_solv_reps(g);
    std::vector<ElementSet> expanded;
    for (const auto& r : reps.reps) {
      EXPECT_TRUE(is_solvable(g, r.subgroup));
      EXPECT_EQ(r.transversal.size() * r.normalizer.size(), g.order());
      for (ElementId t : r.transversal) expanded.push_back(conjugate_set(r.subgroup, t));
    }
    EXPECT_EQ(to_oracle(g, expanded), oracle::maximal_solvable_subgroups(g)) << spec;
  }
}

TEST(MaxSolvReps, EveryElementCovered) {
  for (const char* spec : {"a:5", "psl2:7", "psl2:8", "psl2:11"}) {
    const auto g = named_group(spec);
    const auto reps = max_solv_reps(g);
    std::vector<bool> covered(g.order(), false);
    for (const auto& r : reps.reps)
      for (ElementId t : r.transversal)
        conjugate_set(r.subgroup, t).for_each([&](ElementId x) { covered[x] = true; });
    EXPECT_TRUE(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) << spec;
  }
}

TEST(ClassifyStructure, Examples) {
  using Kind = StructureTag::Kind;
  const auto a5 = named_group("a:5");
  EXPECT_EQ(classify_structure(a5, ElementSet::trivial(a5)).kind, Kind::trivial);
  const auto d10 = span_of(a5, {"(0 1 2 3 4)", "(1 4)(2 3)"});
  EXPECT_EQ(classify_structure(a5, d10), (StructureTag{Kind::dihedral, 10, 0}));
  const auto v4 = span_of(a5, {"(0 1)(2 3)", "(0 2)(1 3)"});
  EXPECT_EQ(classify_structure(a5, v4), (StructureTag{Kind::elementary_abelian, 2, 2}));
  const auto a4 = span_of(a5, {"(0 1 2)", "(0 1)(2 3)"});
  EXPECT_EQ(classify_structure(a5, a4).kind, Kind::alternating4);
  const auto s3 = span_of(a5, {"(0 1 2)", "(0 1)(3 4)"});
  EXPECT_EQ(classify_structure(a5, s3), (StructureTag{Kind::dihedral, 6, 0}));
  const auto c5 = span_of(a5, {"(0 1 2 3 4)"});
  EXPECT_EQ(classify_structure(a5, c5), (StructureTag{Kind::cyclic, 5, 0}));

  const auto s4 = named_group("s:4");
  EXPECT_EQ(classify_structure(s4, ElementSet::full(s4)).kind, Kind::symmetric4);
  const auto s5 = named_group("s:5");
  const auto f20 = span_of(s5, {"(0 1 2 3 4)", "(1 2 4 3)"});
  EXPECT_EQ(classify_structure(s5, f20), (StructureTag{Kind::elementary_abelian_by_cyclic, 5, 4}));
  EXPECT_EQ(classify_structure(s5, ElementSet::full(s5)).kind, Kind::other);
  const auto v4_s4 = span_of(s4, {"(0 1)", "(2 3)"});
  EXPECT_EQ(classify_structure(s4, v4_s4).kind, Kind::elementary_abelian);
}

TEST(ClassifyStructure, MaximalSolvablesOfPsl28) {
  const auto g = named_group("psl2:8");
  std::vector<std::string> tags;
  for (const auto& r : max_solv_reps(g).reps) tags.push_back(classify_structure(g, r.subgroup).to_string());
  std::sort(tags.begin(), tags.end());
  EXPECT_EQ(tags, (std::vector<std::string>{"D14", "D18", "E8:C7"}));
}

TEST(Tables, Selection) {
  EXPECT_EQ(select_table(8).table_number, 1);
  EXPECT_EQ(select_table(4).table_number, 1);
  EXPECT_EQ(select_table(27).table_number, 2);
  EXPECT_EQ(select_table(11).table_number, 7);
  EXPECT_EQ(select_table(13).table_number, 8);
  EXPECT_EQ(select_table(73).table_number, 4);
  EXPECT_FALSE(select_table(7).family.has_value());
  EXPECT_NE(select_table(7).notice.find("excluded"), std::string::npos);
  EXPECT_FALSE(select_table(9).family.has_value());
  EXPECT_FALSE(select_table(25).family.has_value());
}

TEST(Tables, Psl28RowsMatch) {
  const auto g = named_group("psl2:8");
  const auto report = verify_table(g, 8);
  ASSERT_TRUE(report.applicable);
  ASSERT_TRUE(report.containments_checked);
  std::map<std::uint32_t, std::vector<std::uint64_t>> rows;
  std::map<std::uint32_t, std::uint64_t> sols;
  for (const auto& c : report.classes) {
    std::vector<std::uint64_t> counts;
    for (std::size_t i = 0; i + 1 < c.containments.size(); ++i) counts.push_back(*c.containments[i].observed);
    rows[c.element_order] = counts;
    sols[c.element_order] = *c.sol.observed;
  }
  EXPECT_EQ(rows[2], (std::vector<std::uint64_t>{1, 4, 4}));
  EXPECT_EQ(rows[9], (std::vector<std::uint64_t>{0, 0, 1}));
  EXPECT_EQ(rows[7], (std::vector<std::uint64_t>{2, 1, 0}));
  EXPECT_EQ(sols[2], 168u);
  EXPECT_EQ(sols[7], 112u);
  EXPECT_EQ(sols[9], 18u);
  EXPECT_TRUE(report.all_pass());
}

TEST(Tables, Psl211AllCellsPass) {
  const auto g = named_group("psl2:11");
  const auto report = verify_table(g, 11);
  EXPECT_TRUE(report.all_pass());
  for (const auto& c : report.classes)
    if (c.element_order == 3) {
      EXPECT_EQ(*c.sol.observed, 48u);
    }
}

TEST(Tables, OtherCasesPass) {
  for (std::uint32_t q : {4u, 13u}) {
    const auto report = verify_table(psl2(q), q);
    EXPECT_TRUE(report.containments_checked) << q;
    EXPECT_TRUE(report.all_pass()) << q << "\n" << render_table_text(report);
  }
  // above the lattice cap only |Sol| sizes are checked
  for (std::uint32_t q : {16u, 17u, 19u, 23u, 27u}) {
    const auto report = verify_table(psl2(q), q);
    EXPECT_FALSE(report.containments_checked) << q;
    EXPECT_TRUE(report.all_pass()) << q << "\n" << render_table_text(report);
  }
}

TEST(Tables, NoTableApplies) {
  const auto report = verify_table(psl2(7), 7);
  EXPECT_FALSE(report.applicable);
  EXPECT_FALSE(report.all_pass());
  EXPECT_THROW(verify_table(psl2(7), 8), InvalidArgument);
}

TEST(Tables, FailingCellsAreReported) {
  // Feeding PSL(2,8) data under the q = 8 table but with a tiny lattice cap
  // still checks sizes; a wrong table (A5 vs q = 8) is rejected up front.
  const auto report = verify_table(psl2(8), 8, {100});
  EXPECT_FALSE(report.containments_checked);
  EXPECT_TRUE(report.all_pass());
  TableReport tampered = verify_table(psl2(8), 8);
  tampered.classes[0].sol.expected = *tampered.classes[0].sol.expected + 1;
  EXPECT_FALSE(tampered.all_pass());
  EXPECT_EQ(tampered.cells_failed(), 1u);
  EXPECT_NE(render_table_text(tampered).find("FAIL"), std::string::npos);
}
