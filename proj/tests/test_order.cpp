#include <gtest/gtest.h>

#include "generators.hpp"
#include "ordsolid/order.hpp"

using namespace ordsolid;
using namespace ordsolid::testing;

TEST(FinitePoset, RejectsCycles) {
  const std::vector<IndexPair> cycle{{0, 1}, {1, 0}};
  EXPECT_THROW(FinitePoset::from_pairs({"a", "b"}, cycle), InvalidStructure);
  EXPECT_NO_THROW(FinitePreorder::closure({"a", "b"}, cycle));
}

TEST(FinitePoset, ChainAndAntichainShapes) {
  const auto c = FinitePoset::chain(4);
  EXPECT_TRUE(c.leq(0, 3));
  EXPECT_FALSE(c.leq(3, 0));
  EXPECT_EQ(c.top(), std::optional<std::size_t>(3));
  const auto a = FinitePoset::antichain(3);
  EXPECT_FALSE(a.top().has_value());
  EXPECT_EQ(a.maximal().size(), 3u);
}

TEST(MonotoneMaps, MatchBruteForceOnRandomPairs) {
  auto rng = rng_for(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poset(rng, pick(rng, 5));
    const auto b = random_poset(rng, 1 + pick(rng, 4));
    EXPECT_EQ(monotone_maps(a, b), brute_monotone_maps(a, b)) << "trial " << trial;
  }
}

TEST(MonotoneMaps, PreordersToo) {
  auto rng = rng_for(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_preorder(rng, pick(rng, 5));
    const auto b = random_preorder(rng, 1 + pick(rng, 4));
    EXPECT_EQ(monotone_maps(a, b), brute_monotone_maps(a, b));
  }
}

TEST(MonotoneMaps, CapCountsProducedMaps) {
  const auto a = FinitePoset::antichain(5);
  const auto b = FinitePoset::antichain(3);
  EXPECT_EQ(monotone_maps(a, b).size(), 243u);
  EXPECT_THROW(monotone_maps(a, b, Caps{6, 242}), CapExceeded);
  // 3^5 candidate functions but only 21 monotone maps into the 3-chain
  EXPECT_EQ(monotone_maps(FinitePoset::chain(5), FinitePoset::chain(3), Caps{6, 21}).size(), 21u);
}

TEST(HomPoset, OrderIsPointwise) {
  auto rng = rng_for(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poset(rng, 1 + pick(rng, 3));
    const auto b = random_poset(rng, 1 + pick(rng, 3));
    const auto h = hom_poset(a, b);
    for (std::size_t i = 0; i < h.maps.size(); ++i)
      for (std::size_t j = 0; j < h.maps.size(); ++j) {
        bool below = true;
        for (std::size_t x = 0; x < a.size(); ++x) below = below && b.leq(h.maps[i][x], h.maps[j][x]);
        EXPECT_EQ(h.order.leq(i, j), below);
      }
  }
}

TEST(PosetalReflection, CollapsesExactlyTheCycles) {
  auto rng = rng_for(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_preorder(rng, 1 + pick(rng, 6));
    const auto r = posetal_reflection(p);
    EXPECT_TRUE(is_surjective(r.quotient, r.poset.size()));
    EXPECT_TRUE(brute_monotone(p, r.poset, r.quotient));
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) {
        EXPECT_EQ(r.quotient[a] == r.quotient[b], p.equivalent(a, b));
        EXPECT_EQ(r.poset.leq(r.quotient[a], r.quotient[b]), p.leq(a, b));
      }
  }
}

TEST(PosetalReflection, PosetReflectsToItself) {
  const auto c = FinitePoset::chain(3);
  const auto r = posetal_reflection(c);
  EXPECT_EQ(r.poset, c);
  EXPECT_EQ(r.quotient, identity_map(3));
}

TEST(Enumeration, LabelledCountsAgreeWithDirectRelationCount) {
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(labeled_posets(n).size(), brute_poset_relations(n).size()) << n;
  EXPECT_EQ(labeled_posets(3).size(), 19u);
}

TEST(Enumeration, IsoCountsAgreeWithPairwiseDedup) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(posets_up_to_iso(n).size(), brute_class_count(labeled_posets(n))) << n;
  EXPECT_EQ(posets_up_to_iso(4).size(), 16u);
}

TEST(Enumeration, IsoClassesArePairwiseDistinct) {
  const auto ps = posets_up_to_iso(5);
  EXPECT_EQ(ps.size(), 63u);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) EXPECT_FALSE(brute_isomorphic(ps[i], ps[j]));
}

TEST(Enumeration, DeterministicOrder) {
  EXPECT_EQ(posets_up_to_iso(5), posets_up_to_iso(5));
  EXPECT_EQ(labeled_posets(4), labeled_posets(4));
}

TEST(Enumeration, CapsAreEnforced) {
  EXPECT_THROW(labeled_posets(kLabeledPosetCap + 1), CapExceeded);
  EXPECT_THROW(posets_up_to_iso(kPosetIsoCap + 1), CapExceeded);
}

TEST(CanonicalCode, InvariantUnderRelabelling) {
  auto rng = rng_for(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poset(rng, 1 + pick(rng, 7));
    const auto q = permuted(p, random_permutation(rng, p.size()));
    EXPECT_EQ(canonical_code(p), canonical_code(q));
    const auto iso = find_isomorphism(p, q);
    ASSERT_TRUE(iso.has_value());
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) EXPECT_EQ(p.leq(a, b), q.leq((*iso)[a], (*iso)[b]));
  }
}

TEST(CanonicalCode, SeparatesNonIsomorphicPosets) {
  auto rng = rng_for(6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + pick(rng, 5);
    const auto p = random_poset(rng, n), q = random_poset(rng, n);
    EXPECT_EQ(canonical_code(p) == canonical_code(q), brute_isomorphic(p, q));
    EXPECT_EQ(is_isomorphic(p, q), brute_isomorphic(p, q));
  }
}

TEST(JointOrderEpic, SurjectivityMatchesQuantifier) {
  auto rng = rng_for(7);
  const auto tests = poset_universe(3);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_poset(rng, 1 + pick(rng, 3));
    std::vector<IndexMap> family;
    const std::size_t k = pick(rng, 3);
    for (std::size_t i = 0; i < k; ++i) {
      const auto c = random_poset(rng, 1 + pick(rng, 3));
      const auto maps = monotone_maps(c, a);
      family.push_back(maps[pick(rng, maps.size())]);
    }
    EXPECT_EQ(is_jointly_order_epic(a.size(), family), jointly_order_epic_by_quantifier(a, family, tests));
  }
}

TEST(JointOrderEpic, EmptyFamilyOnlyForEmptyCodomain) {
  const std::vector<IndexMap> none;
  EXPECT_TRUE(is_jointly_order_epic(0, none));
  EXPECT_FALSE(is_jointly_order_epic(1, none));
}

TEST(DownSets, CountMatchesAntichainsOfChainAndAntichain) {
  EXPECT_EQ(down_sets(FinitePoset::chain(4)).size(), 5u);
  EXPECT_EQ(down_sets(FinitePoset::antichain(4)).size(), 16u);
  EXPECT_EQ(subset_label(FinitePoset::antichain(3), 0b101), "{a,c}");
}
