#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mfk/mfk.hpp"
#include "oracles.hpp"

using namespace mfk;
using th::s;

namespace {

const std::vector<ElementSet> kDelA3Gmin{s({1}), s({2}), s({3}), s({4}), s({5}),
                                         s({1, 2, 4}), s({1, 3, 5}), s({1, 2, 3, 4, 5})};

std::set<std::vector<ElementSet>> sorted_sets(std::vector<std::vector<ElementSet>> sets) {
  std::set<std::vector<ElementSet>> out;
  for (auto& x : sets) {
    std::sort(x.begin(), x.end());
    out.insert(x);
  }
  return out;
}

}  // namespace

TEST(Building, DelA3Minimal) {
  const FlatLattice l(corpus("delA3"));
  const auto gmin = min_building(l);
  EXPECT_EQ(th::labels(gmin.members), (std::vector<std::string>{"1", "2", "3", "4", "5", "124", "135", "12345"}));
  EXPECT_TRUE(is_building_set(l, gmin).ok);
  EXPECT_TRUE(is_building_set(l, max_building(l)).ok);
  std::vector<ElementSet> without;
  for (ElementSet x : kDelA3Gmin)
    if (x != s({1, 2, 4})) without.push_back(x);
  const auto check = is_building_set(l, make_building_set(l, without));
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.counterexample, s({1, 2, 4}));
}

TEST(Building, NonFlatMemberRejected) {
  const FlatLattice l(corpus("delA3"));
  EXPECT_FALSE(is_building_set(l, BuildingSet{{s({1, 2})}}).ok);
}

TEST(Building, Boolean) {
  for (int n = 1; n <= 4; ++n) {
    const FlatLattice l(boolean_matroid(n));
    EXPECT_EQ(min_building(l).members.size(), static_cast<std::size_t>(n));
    for (ElementSet x : min_building(l).members) EXPECT_EQ(cardinality(x), 1);
    EXPECT_EQ(max_building(l).members.size(), (std::size_t{1} << n) - 1);
  }
}

TEST(Building, EnumerationBetweenExtremes) {
  const FlatLattice l(corpus("u24"));
  const auto all = building_sets_between(l);
  // Every flat of U24 is an atom or the top, so G_min = G_max.
  EXPECT_EQ(all.size(), 1u);
  const auto del = building_sets_between(FlatLattice(corpus("delA3")));
  EXPECT_GT(del.size(), 1u);
  for (const auto& g : del) EXPECT_TRUE(is_building_set(FlatLattice(corpus("delA3")), g).ok);
  EXPECT_EQ(th::code_of([] { building_sets_between(FlatLattice(corpus("boolean_5"))); }),
            ErrorCode::kParameterOutOfRange);
  EXPECT_EQ(th::code_of([] { building_sets_between(FlatLattice(corpus("uniform_2_6"))); }),
            ErrorCode::kParameterOutOfRange);
}

TEST(Nested, BooleanMaximalSetsArePermutations) {
  long factorial = 1;
  for (int n = 1; n <= 4; ++n) {
    factorial *= n;
    const FlatLattice l(boolean_matroid(n));
    EXPECT_EQ(static_cast<long>(nested_complex(l, max_building(l)).maximal_sets().size()), factorial);
  }
}

TEST(Nested, MaximalSetsMatchDefinition) {
  for (const char* name : {"u24", "delA3", "braidK4", "uniform_3_5"}) {
    const Matroid m = corpus(name);
    const FlatLattice l(m);
    for (const auto& g : {min_building(l), max_building(l)}) {
      if (g.members.size() > 16) continue;
      EXPECT_EQ(sorted_sets(nested_complex(l, g).maximal_sets()), oracle::maximal_nested(m, g.members)) << name;
    }
  }
}

TEST(Nested, MaximalBuildingGivesChains) {
  const FlatLattice l(corpus("delA3"));
  const auto g = max_building(l);
  for (const auto& s : nested_complex(l, g).maximal_sets()) EXPECT_TRUE(is_chain(s));
  EXPECT_EQ(nested_complex(l, g).maximal_sets().size(), l.maximal_chains().size());
}

TEST(Nested, IsNestedExamples) {
  const FlatLattice l(corpus("delA3"));
  const auto g = min_building(l);
  EXPECT_FALSE(is_nested(l, g, {s({2}), s({4})}));  // 24 closes to 124
  EXPECT_FALSE(is_nested(l, g, {s({1}), s({2})}));
  EXPECT_TRUE(is_nested(l, g, {s({2}), s({3})}));
  EXPECT_TRUE(is_nested(l, g, {s({1}), s({1, 2, 4})}));
}

TEST(Nested, ReducedComplexOfDelA3) {
  const FlatLattice l(corpus("delA3"));
  const auto ne0 = nested_complex_reduced(l, min_building(l));
  EXPECT_EQ(ne0.vertices.size(), 7u);
  EXPECT_EQ(ne0.complex.dimension(), 1);
}

TEST(NestedFan, DelA3HasOneExtraRay) {
  const Matroid m = corpus("delA3");
  const auto nf = nested_fan(m, min_building(FlatLattice(m)));
  EXPECT_TRUE(nf.unimodular);
  EXPECT_EQ(nf.fan.rays.size(), 7u);
  auto be_rays = bergman_fan(m).rays();
  be_rays.push_back(QuotientVector::indicator(5, s({1})));
  std::sort(be_rays.begin(), be_rays.end());
  EXPECT_EQ(nf.fan.rays, be_rays);
  EXPECT_EQ(nf.fan.maximal_cones.size(), nf.nested_sets.size());
  EXPECT_FALSE(fan_intersection_witness(nf.fan).has_value());
}

TEST(NestedFan, UniformCoordinateCones) {
  for (int n = 2; n <= 6; ++n)
    for (int d = 2; d <= n; ++d) {
      const Matroid m = uniform(d, n);
      if (d == n) continue;
      const auto nf = nested_fan(m, min_building(FlatLattice(m)));
      long expected = 1;
      for (int i = 0; i < d - 1; ++i) expected = expected * (n - i) / (i + 1);
      EXPECT_EQ(static_cast<long>(nf.fan.maximal_cones.size()), expected);
      EXPECT_EQ(nf.fan.rays.size(), static_cast<std::size_t>(n));
      for (const auto& r : nf.fan.rays) EXPECT_EQ(std::count(r.rep().begin(), r.rep().end(), 1), 1);
    }
}

TEST(NestedFan, RejectsInvalidBuildingSet) {
  const Matroid m = corpus("delA3");
  const FlatLattice l(m);
  EXPECT_EQ(th::code_of([&] { nested_fan(m, make_building_set(l, {s({1}), s({2}), s({1, 2, 3, 4, 5})})); }),
            ErrorCode::kInvalidBuildingSet);
}

TEST(Refinement, Examples) {
  const Matroid m = corpus("delA3");
  const FlatLattice l(m);
  const auto gmin = nested_fan(m, min_building(l)).fan;
  const auto gmax = nested_fan(m, max_building(l)).fan;
  const auto be = bergman_fan(m).coarse_fan();
  EXPECT_TRUE(refines(gmax, gmin));
  EXPECT_TRUE(refines(gmin, be));
  EXPECT_FALSE(refines(be, gmin));
  const Matroid u = corpus("u24");
  const auto cmp = compare_fans(bergman_fan(u).coarse_fan(), nested_fan(u, min_building(FlatLattice(u))).fan);
  EXPECT_TRUE(cmp.equal);
}

TEST(EqualityCondition, Examples) {
  EXPECT_TRUE(fans_equal_condition(corpus("braidK4")).holds);
  const auto del = fans_equal_condition(corpus("delA3"));
  EXPECT_FALSE(del.holds);
  ASSERT_TRUE(del.witness.has_value());
  EXPECT_EQ(del.witness->first, s({1}));
  EXPECT_EQ(del.witness->second, s({1, 2, 3, 4, 5}));
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= n; ++d) EXPECT_TRUE(fans_equal_condition(uniform(d, n)).holds);
}

TEST(Blocks, Examples) {
  const Matroid b3 = boolean_matroid(3);
  const std::vector<ElementSet> chain{s({1}), s({1, 2}), s({1, 2, 3})};
  EXPECT_EQ(blocks_partition(b3, chain, chain), (std::vector<ElementSet>{s({1}), s({2}), s({3})}));
  const Matroid m = corpus("delA3");
  const std::vector<ElementSet> nested{s({2}), s({1, 2, 4}), s({1, 2, 3, 4, 5})};
  EXPECT_EQ(blocks_partition(m, nested), (std::vector<ElementSet>{s({2}), s({1, 4}), s({3, 5})}));
  EXPECT_EQ(blocks_partition(m, {m.ground()}), (std::vector<ElementSet>{m.ground()}));
  EXPECT_EQ(th::code_of([&] { blocks_partition(m, nested, {s({1, 2, 4}), s({2}), m.ground()}); }),
            ErrorCode::kNotLinearExtension);
  EXPECT_EQ(th::code_of([&] { blocks_partition(m, nested, {s({2}), m.ground()}); }),
            ErrorCode::kNotLinearExtension);
}

TEST(Blocks, HelperChains) {
  const FlatLattice l(corpus("delA3"));
  const std::vector<ElementSet> nested{s({2}), s({1, 2, 4}), s({1, 2, 3, 4, 5})};
  const auto h = nested_chain_helpers(l, nested);
  EXPECT_EQ(h.chains[1], (std::vector<ElementSet>{s({2}), s({1, 2, 4}), s({1, 2, 3, 4, 5})}));
  EXPECT_EQ(h.minima[0], s({1, 2, 4}));
  EXPECT_EQ(h.minima[2], s({1, 2, 3, 4, 5}));
}

TEST(ChainToNested, Examples) {
  const FlatLattice l(corpus("delA3"));
  const auto gmin = min_building(l);
  const std::vector<ElementSet> chain{s({2}), s({1, 2, 4}), s({1, 2, 3, 4, 5})};
  const auto r = chain_to_nested(l, gmin, chain);
  EXPECT_EQ(r.nested_set, chain);
  EXPECT_EQ(r.prefix, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(chain_to_nested(l, max_building(l), chain).nested_set, chain);
  EXPECT_EQ(chain_to_nested(l, gmin, {l.matroid().ground()}).nested_set,
            (std::vector<ElementSet>{l.matroid().ground()}));
  // {2,3} is not in G_min; it factors as {2} and {3}.
  const auto split = chain_to_nested(l, gmin, {s({2, 3}), l.matroid().ground()});
  EXPECT_EQ(split.nested_set, (std::vector<ElementSet>{s({2}), s({3}), l.matroid().ground()}));
  EXPECT_EQ(split.prefix, (std::vector<std::size_t>{2, 3}));
}

TEST(ChainToNested, Errors) {
  const FlatLattice l(corpus("delA3"));
  const auto g = min_building(l);
  EXPECT_EQ(th::code_of([&] { chain_to_nested(l, g, {s({1, 2, 4}), s({2}), l.matroid().ground()}); }),
            ErrorCode::kNotAChain);
  EXPECT_EQ(th::code_of([&] { chain_to_nested(l, g, {s({1, 2}), l.matroid().ground()}); }), ErrorCode::kNotFlats);
  EXPECT_EQ(th::code_of([&] { chain_to_nested(l, g, {s({2})}); }), ErrorCode::kNotAChain);
  EXPECT_EQ(th::code_of([&] { chain_to_nested(l, g, {}); }), ErrorCode::kNotAChain);
}

TEST(DcpPolytope, Examples) {
  const Matroid b2 = boolean_matroid(2);
  const auto seg = dcp_weight_polytope(b2, max_building(FlatLattice(b2)));
  EXPECT_EQ(seg.vertices, (std::vector<RationalVector>{{1, 2}, {2, 1}}));
  const Matroid u23 = corpus("u23");
  const auto tri = dcp_weight_polytope(u23, min_building(FlatLattice(u23)));
  EXPECT_EQ(tri.dim, 2);
  EXPECT_EQ(tri.vertices, (std::vector<RationalVector>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));
  const Matroid m = corpus("delA3");
  const auto g = min_building(FlatLattice(m));
  const auto p = dcp_weight_polytope(m, g);
  EXPECT_EQ(p.dim, 4);
  EXPECT_TRUE(normal_fan_refined_by(p, nested_fan(m, g).fan));
  EXPECT_EQ(th::code_of([&] { dcp_weight_polytope(m, BuildingSet{{s({1})}}); }), ErrorCode::kInvalidBuildingSet);
}
