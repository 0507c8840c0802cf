#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "mfk/mfk.hpp"
#include "oracles.hpp"

using namespace mfk;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr int kTrials = 25;

// Full row rank integer matrix with entries in {-2..2}.
RationalMatrix random_matrix(std::mt19937_64& rng, int d, int n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    RationalMatrix a(d, n);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = entry(rng);
    if (static_cast<int>(rank(a)) == d) return a;
  }
}

Matroid random_matroid(std::mt19937_64& rng, bool loop_free, bool connected) {
  std::uniform_int_distribution<int> size(3, 6);
  while (true) {
    const int n = size(rng);
    std::uniform_int_distribution<int> rk(1, std::min(3, n));
    const Matroid m = from_matrix(random_matrix(rng, rk(rng), n));
    if (loop_free && loops(m) != 0) continue;
    if (connected && !is_connected(m)) continue;
    return m;
  }
}

WeightVector random_weight(std::mt19937_64& rng, int n, int radius) {
  std::uniform_int_distribution<long> v(-radius, radius);
  WeightVector u;
  for (int i = 0; i < n; ++i) u.emplace_back(v(rng));
  return u;
}

}  // namespace

TEST(Properties, RealizedMatroidsSatisfyAxioms) {
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, false, false);
    EXPECT_NO_THROW(Matroid::from_bases(m.size(), m.bases()));
    for_each_subset(m.ground(), [&](ElementSet x) {
      EXPECT_EQ(m.rank(x), oracle::matrix_rank(m.realization()->matrix, x));
      EXPECT_LE(m.rank(x), cardinality(x));
      for (int e = 0; e < m.size(); ++e) EXPECT_LE(m.rank(x), m.rank(x | singleton(e)));
    });
  }
}

TEST(Properties, DualRankFormula) {
  std::mt19937_64 rng(kSeed + 1);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, false, false);
    const Matroid d = dual(m);
    const ElementSet e = m.ground();
    for_each_subset(e, [&](ElementSet x) {
      EXPECT_EQ(d.rank(x), cardinality(x) + m.rank(e & ~x) - m.rank());
    });
    EXPECT_EQ(dual(d), m);
  }
}

TEST(Properties, FlatsAndMoebiusMatchOracles) {
  std::mt19937_64 rng(kSeed + 2);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, true, false);
    const FlatLattice l(m);
    EXPECT_EQ(std::set<ElementSet>(l.flats().begin(), l.flats().end()), oracle::flats(m));
    EXPECT_EQ(l.mu_top(), oracle::mu_top(m));
    const auto cs = circuits(m);
    EXPECT_EQ(std::set<ElementSet>(cs.begin(), cs.end()), oracle::circuits(m));
    EXPECT_EQ(is_connected(m), oracle::connected(m));
  }
}

TEST(Properties, LoopFreeDegenerationIffChainOfFlats) {
  std::mt19937_64 rng(kSeed + 3);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, true, false);
    for_each_grid_class(m.size(), 1, [&](const QuotientVector& q) {
      const auto u = q.to_rational();
      const auto d = degeneration(m, u);
      EXPECT_EQ(d.loop_free, chain_of_flats(m, d.chain));
    });
  }
}

TEST(Properties, DegenerationComponentsAndFaceDimension) {
  std::mt19937_64 rng(kSeed + 4);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, false, false);
    const auto u = random_weight(rng, m.size(), 3);
    const auto d = degeneration(m, u);
    // Each nonempty step of the constancy chain contributes at least one component.
    EXPECT_GE(components(d.matroid_u).kappa(), std::max(components(m).kappa(), d.chain.length()));
    EXPECT_EQ(polytope(d.matroid_u).dim, m.size() - components(d.matroid_u).kappa());
    // M_u is the face of P_M minimizing u.
    const auto p = polytope(m);
    EXPECT_EQ(minimizing_face(p, u).size(), d.matroid_u.bases().size());
  }
}

TEST(Properties, ClassifiedFacetsAreHullFacets) {
  std::mt19937_64 rng(kSeed + 5);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, true, true);
    const auto p = polytope(m);
    const auto fs = facets(m);
    if (m.bases().size() == 1) {
      EXPECT_TRUE(fs.empty());
      continue;
    }
    EXPECT_EQ(fs.size(), p.facets.size());
    std::set<std::vector<RationalVector>> hull, classified;
    for (const auto& f : p.facets) {
      std::vector<RationalVector> vs;
      for (auto v : f.vertices) vs.push_back(p.vertices[v]);
      std::sort(vs.begin(), vs.end());
      hull.insert(vs);
    }
    for (const auto& f : fs) {
      std::vector<RationalVector> vs;
      for (ElementSet b : f.vertices) vs.push_back(indicator_vector(m.size(), b));
      std::sort(vs.begin(), vs.end());
      classified.insert(vs);
    }
    EXPECT_EQ(hull, classified);
  }
}

TEST(Properties, BergmanSupportOnGrid) {
  std::mt19937_64 rng(kSeed + 6);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, true, false);
    const auto fan = bergman_fan(m);
    EXPECT_TRUE(fan.convex);
    const Fan coarse_fan = fan.coarse_fan();
    FanMembership coarse(coarse_fan);
    for_each_grid_class(m.size(), 1, [&](const QuotientVector& q) {
      const auto w = q.to_rational();
      EXPECT_EQ(coarse.contains(w), bergman_membership(m, w));
    });
  }
}

TEST(Properties, BergmanComplexIsWedgeOfSpheres) {
  std::mt19937_64 rng(kSeed + 7);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, true, false);
    if (m.rank() < 2) continue;
    const auto h = bergman_complex_homology(m);
    for (int k = 0; k < static_cast<int>(h.betti.size()); ++k)
      EXPECT_EQ(h.betti[k], k == m.rank() - 2 ? oracle::mu_top(m) : 0);
  }
}

TEST(Properties, NestedSetStructure) {
  std::mt19937_64 rng(kSeed + 8);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, true, true);
    const FlatLattice l(m);
    const auto g = min_building(l);
    EXPECT_TRUE(is_building_set(l, g).ok);
    const auto nf = nested_fan(m, g);
    EXPECT_TRUE(nf.unimodular);
    EXPECT_TRUE(refines(nf.fan, bergman_fan(m).coarse_fan(), 1));
    for (const auto& s : nested_complex(l, g).maximal_sets()) {
      EXPECT_NE(std::find(s.begin(), s.end(), m.ground()), s.end());
      EXPECT_EQ(static_cast<int>(s.size()), m.rank());
      // Blocks of the default extension partition the ground set.
      ElementSet seen = 0;
      for (ElementSet b : blocks_partition(m, s)) {
        EXPECT_NE(b, 0u);
        EXPECT_EQ(seen & b, 0u);
        seen |= b;
      }
      EXPECT_EQ(seen, m.ground());
      // Members containing a fixed element form a chain.
      for (const auto& chain : nested_chain_helpers(l, s).chains) EXPECT_TRUE(is_chain(chain));
    }
  }
}

TEST(Properties, MonotoneRefinementAcrossBuildingSets) {
  for (const char* name : {"delA3", "u24", "uniform_3_5"}) {
    const Matroid m = corpus(name);
    const FlatLattice l(m);
    const auto lo = nested_fan(m, min_building(l)).fan;
    const auto hi = nested_fan(m, max_building(l)).fan;
    for (const auto& g : building_sets_between(l)) {
      const auto f = nested_fan(m, g).fan;
      EXPECT_TRUE(refines(f, lo, 1)) << name;
      EXPECT_TRUE(refines(hi, f, 1)) << name;
    }
  }
}

TEST(Properties, ChainToNestedRoundTrip) {
  std::mt19937_64 rng(kSeed + 9);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, true, true);
    const FlatLattice l(m);
    for (const auto& g : {min_building(l), max_building(l)}) {
      for (const auto& chain : l.maximal_chains()) {
        std::vector<ElementSet> flats;
        for (std::size_t k = 1; k < chain.size(); ++k) flats.push_back(l.flat(chain[k]));
        const auto r = chain_to_nested(l, g, flats);
        EXPECT_TRUE(is_nested(l, g, r.nested_set));
        ASSERT_EQ(r.prefix.size(), flats.size());
        for (std::size_t k = 0; k < flats.size(); ++k) {
          ElementSet join = 0;
          for (std::size_t i = 0; i < r.prefix[k]; ++i) join |= r.nested_set[i];
          EXPECT_EQ(m.closure(join), flats[k]);
        }
      }
    }
  }
}

TEST(Properties, DirectSumDimensionAdds) {
  std::mt19937_64 rng(kSeed + 10);
  for (int t = 0; t < 10; ++t) {
    const Matroid a = random_matroid(rng, false, false);
    const Matroid b = random_matroid(rng, false, false);
    if (a.size() + b.size() > 9) continue;
    const Matroid s = direct_sum(a, b);
    EXPECT_EQ(polytope(s).dim, polytope(a).dim + polytope(b).dim);
    EXPECT_EQ(components(s).kappa(), components(a).kappa() + components(b).kappa());
  }
}

TEST(Properties, CircuitPolynomialsVanishOnReciprocals) {
  std::mt19937_64 rng(kSeed + 11);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  for (int t = 0; t < 10; ++t) {
    const Matroid m = random_matroid(rng, true, false);
    const auto& a = m.realization()->matrix;
    const auto gens = reciprocal_generators(*m.realization());
    for (int sample = 0; sample < 20; ++sample) {
      RationalVector y(a.rows());
      for (auto& v : y) v = Rational(num(rng), den(rng));
      RationalVector f(a.cols(), Rational(0));
      for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t k = 0; k < a.rows(); ++k) f[i] += a(k, i) * y[k];
      if (std::any_of(f.begin(), f.end(), [](const Rational& v) { return v == 0; })) continue;
      for (const auto& g : gens) {
        Rational value = 0;
        for (const auto& [mono, c] : g.terms()) {
          Rational term(c);
          for (int j : elements_of(mono)) term /= f[j];
          value += term;
        }
        EXPECT_EQ(value, 0) << label(g.circuit);
      }
    }
  }
}

TEST(Properties, InitialSubspacesKeepDimension) {
  std::mt19937_64 rng(kSeed + 12);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, false, false);
    for (int k = 0; k < 5; ++k) {
      const auto u = random_weight(rng, m.size(), 3);
      const auto v = initial_subspace(*m.realization(), u);
      EXPECT_EQ(static_cast<int>(rank(v.matrix)), m.rank());
      EXPECT_TRUE(check_initial_degeneration(*m.realization(), u));
    }
  }
}

TEST(Properties, FansEqualConditionMatchesMutualRefinement) {
  std::mt19937_64 rng(kSeed + 13);
  for (int t = 0; t < kTrials; ++t) {
    const Matroid m = random_matroid(rng, true, true);
    const auto nf = nested_fan(m, min_building(FlatLattice(m)));
    const auto cmp = compare_fans(nf.fan, bergman_fan(m).coarse_fan(), 1);
    EXPECT_EQ(fans_equal_condition(m).holds, cmp.equal) << cmp.witness;
  }
}
