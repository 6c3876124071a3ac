#include <gtest/gtest.h>

#include "generators.hpp"
#include "ordsolid/topo.hpp"

using namespace ordsolid;
using namespace ordsolid::testing;

namespace {

bool brute_continuous(const FiniteSpace& a, const FiniteSpace& b, const IndexMap& f) {
  for (auto u : b.opens()) {
    std::uint64_t pre = 0;
    for (std::size_t x = 0; x < a.size(); ++x)
      if (u >> f[x] & 1) pre |= std::uint64_t{1} << x;
    if (!a.is_open(pre)) return false;
  }
  return true;
}

std::vector<FiniteSpace> t0_spaces(std::size_t n) {
  std::vector<FiniteSpace> out;
  for (auto& s : space_universe(n))
    if (is_t0(s)) out.push_back(s);
  return out;
}

}  // namespace

TEST(FiniteSpace, RejectsFamiliesThatAreNotTopologies) {
  EXPECT_THROW(FiniteSpace({"x", "y"}, {0, 1}), InvalidStructure);
  EXPECT_THROW(FiniteSpace({"x", "y", "z"}, {0, 1, 2, 7}), InvalidStructure);
  const auto g = FiniteSpace::generated({"x", "y", "z"}, {1, 2});
  EXPECT_EQ(g.space.opens(), (std::vector<std::uint64_t>{0, 1, 2, 3, 7}));
  EXPECT_EQ(g.added.size(), 3u);
}

TEST(FiniteSpace, CountsMatchKnownSequences) {
  // topologies on 1..4 labelled points: 1, 4, 29, 355; up to homeomorphism: 1, 3, 9, 33
  const std::vector<std::size_t> labelled{1, 4, 29, 355}, classes{1, 3, 9, 33};
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(spaces(n, false).size(), labelled[n - 1]);
    EXPECT_EQ(spaces(n, true).size(), classes[n - 1]);
  }
}

TEST(Specialization, StandardSpaces) {
  EXPECT_EQ(specialization(FiniteSpace::discrete(2)), FinitePreorder::discrete({"a", "b"}));
  const auto ind = specialization(FiniteSpace::indiscrete(2));
  EXPECT_TRUE(ind.leq(0, 1) && ind.leq(1, 0));
  const auto s = specialization(FiniteSpace::sierpinski());
  EXPECT_TRUE(s.leq(0, 1));
  EXPECT_FALSE(s.leq(1, 0));
}

TEST(Continuity, EquivalentToMonotonicityOfSpecialization) {
  const auto all = space_universe(3);
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto sa = specialization(a), sb = specialization(b);
      for (const auto& f : all_functions(a.size(), b.size()))
        ASSERT_EQ(brute_continuous(a, b, f), brute_monotone(sa, sb, f));
      EXPECT_EQ(continuous_maps(a, b), brute_monotone_maps(sa, sb));
    }
}

TEST(T0Reflection, QuotientIsT0AndUniversal) {
  const auto t0 = t0_spaces(3);
  for (const auto& s : space_universe(3)) {
    const auto r = t0_reflection(s);
    EXPECT_TRUE(is_t0(r.space));
    EXPECT_TRUE(is_continuous(s, r.space, r.quotient));
    EXPECT_TRUE(is_surjective(r.quotient, r.space.size()));
    for (const auto& b : t0) {
      std::vector<IndexMap> factored;
      for (const auto& h : continuous_maps(r.space, b)) factored.push_back(compose(h, r.quotient));
      std::sort(factored.begin(), factored.end());
      EXPECT_EQ(factored, continuous_maps(s, b));
    }
  }
  EXPECT_EQ(t0_reflection(FiniteSpace::indiscrete(2)).space.size(), 1u);
  EXPECT_EQ(t0_reflection(FiniteSpace::sierpinski()).space.size(), 2u);
}

TEST(SExtension, EmptyFamilyGivesAllDownSets) {
  auto rng = rng_for(51);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_preorder(rng, 1 + pick(rng, 4));
    const auto e = universal_S_extension(x, {}, {});
    EXPECT_EQ(specialization(e.vertex), x);
    EXPECT_EQ(e.vertex.opens(), down_sets(x));
  }
}

TEST(SExtension, IdentityOnSierpinskiRecoversIt) {
  const auto s = FiniteSpace::sierpinski();
  const auto e = universal_S_extension(specialization(s), {s}, {identity_map(2)});
  EXPECT_EQ(e.vertex.opens(), s.opens());
}

TEST(SExtension, RandomFamiliesAreStronglyUniversal) {
  auto rng = rng_for(52);
  const SPrimeFunctor sp;
  const auto universe = space_universe(3);
  for (int trial = 0; trial < 25; ++trial) {
    const auto x = random_preorder(rng, 1 + pick(rng, 3));
    std::vector<FiniteSpace> family;
    std::vector<IndexMap> xi;
    for (std::size_t i = 0, k = pick(rng, 3); i < k; ++i) {
      family.push_back(universe[pick(rng, universe.size())]);
      const auto maps = brute_monotone_maps(specialization(family.back()), x);
      xi.push_back(maps[pick(rng, maps.size())]);
    }
    const auto rep = is_strongly_order_universal_extension(sp, universal_S_extension(x, family, xi), universe, 3,
                                                           Uniqueness::up_to_equivalence);
    EXPECT_TRUE(rep.holds()) << rep.witness;
  }
}

TEST(SExtension, ReflectedIntoT0SpacesStaysStronglyUniversal) {
  // Extensions over a preorder with cycles have non-T0 vertices; composing with
  // the T0 reflection gives an extension for the restriction to T0 spaces,
  // where hom-preorders are partial orders and mediators are exactly unique.
  auto rng = rng_for(53);
  const SPrimeFunctor sp;
  const auto t0 = t0_spaces(3);
  std::size_t collapsed = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_preorder(rng, 1 + pick(rng, 3), 0.5);
    std::vector<FiniteSpace> family;
    std::vector<IndexMap> xi;
    for (std::size_t i = 0, k = pick(rng, 2); i < k; ++i) {
      family.push_back(t0[pick(rng, t0.size())]);
      const auto maps = brute_monotone_maps(specialization(family.back()), x);
      xi.push_back(maps[pick(rng, maps.size())]);
    }
    const auto e = universal_S_extension(x, family, xi);
    const auto r = t0_reflection(e.vertex);
    collapsed += r.space.size() < e.vertex.size();
    const auto composed = compose_via_reflection(sp, e, ReflectionArrow<TopCat>{r.space, r.quotient}, t0, 3);
    EXPECT_TRUE(composed.reflection_universal.holds);
    const auto rep = is_strongly_order_universal_extension(sp, composed.extension, t0, 3);
    EXPECT_TRUE(rep.holds()) << rep.witness;
  }
  EXPECT_GT(collapsed, 0u);
}
