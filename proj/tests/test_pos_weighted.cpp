#include <gtest/gtest.h>

#include <map>

#include "generators.hpp"
#include "ordsolid/pos_weighted.hpp"
#include "ordsolid/suites.hpp"

using namespace ordsolid;
using namespace ordsolid::testing;

namespace {

IndexMap random_map(Rng& rng, const FinitePoset& a, const FinitePoset& b) {
  const auto maps = brute_monotone_maps(a, b);
  return maps[pick(rng, maps.size())];
}

bool connected(const FinitePoset& p) {
  if (p.size() == 0) return true;
  std::vector<bool> seen(p.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < p.size(); ++y)
      if (!seen[y] && (p.leq(x, y) || p.leq(y, x))) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return std::find(seen.begin(), seen.end(), false) == seen.end();
}

}  // namespace

TEST(PosColimits, CoproductIsDisjoint) {
  const std::vector<FinitePoset> objs{FinitePoset::chain(2), FinitePoset::single()};
  const auto c = coproduct_pos(objs);
  EXPECT_EQ(c.vertex.size(), 3u);
  EXPECT_EQ(c.vertex.label(0), "inl:0");
  EXPECT_FALSE(connected(c.vertex));
  EXPECT_TRUE(is_order_embedding(objs[0], c.vertex, c.legs[0]));
}

TEST(PosColimits, CoequalizerOfChainEndpoints) {
  const auto a = FinitePoset::single("x");
  const auto b = FinitePoset::chain(3);
  // identifying 0 with 2 collapses the whole chain
  const auto c = coequalizer_pos(a, b, IndexMap{0}, IndexMap{2});
  EXPECT_EQ(c.vertex.size(), 1u);
  const auto d = coequalizer_pos(a, FinitePoset::antichain(3), IndexMap{0}, IndexMap{2});
  EXPECT_EQ(d.vertex.size(), 2u);
}

TEST(PosColimits, CoinserterAddsOnlyTheRequiredInequality) {
  const auto a = FinitePoset::single("x");
  const auto b = FinitePoset::antichain(3);
  const auto q = coinserter_pos(a, b, IndexMap{0}, IndexMap{1});
  EXPECT_EQ(q.object.size(), 3u);
  EXPECT_TRUE(q.object.leq(q.projection[0], q.projection[1]));
  EXPECT_FALSE(q.object.leq(q.projection[1], q.projection[0]));
  EXPECT_FALSE(q.object.leq(q.projection[0], q.projection[2]));
}

TEST(PosColimits, CocommaOfPointsIsTheTwoChain) {
  const auto one = FinitePoset::single();
  const auto c = cocomma_pos(one, one, one, IndexMap{0}, IndexMap{0});
  EXPECT_TRUE(is_isomorphic(c.object, FinitePoset::chain(2)));
  EXPECT_TRUE(c.object.leq(c.p[0], c.q[0]));
}

TEST(PosColimits, TensorByAntichainIsTwoDisjointChains) {
  const auto t = tensor_pos(FinitePoset::antichain(2), FinitePoset::chain(2));
  EXPECT_EQ(t.object.size(), 4u);
  EXPECT_FALSE(connected(t.object));
  EXPECT_FALSE(t.object.top().has_value());
  EXPECT_EQ(t.injections.size(), 2u);
}

TEST(PosLimits, InserterIsTheSubposetWhereRBelowS) {
  const auto c = FinitePoset::chain(3);
  const auto ins = inserter_pos(c, c, identity_map(3), constant_map(3, 1));
  EXPECT_EQ(ins.object.size(), 2u);
  EXPECT_EQ(ins.inclusion, (IndexMap{0, 1}));
}

TEST(TensorHom, NaturalIsomorphismElementByElement) {
  // h : W (x) A -> B corresponds to u |-> h . lambda^u in Pos(W, Pos(A, B)),
  // bijectively and order-isomorphically.
  auto rng = rng_for(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto w = random_poset(rng, 1 + pick(rng, 3));
    const auto a = random_poset(rng, 1 + pick(rng, 3));
    const auto b = random_poset(rng, 1 + pick(rng, 3));
    const auto t = tensor_pos(w, a);
    const auto hom_ab = hom_poset(a, b);
    std::map<IndexMap, std::size_t> index;
    for (std::size_t k = 0; k < hom_ab.maps.size(); ++k) index[hom_ab.maps[k]] = k;
    const auto left = brute_monotone_maps(t.object, b);
    const auto right = brute_monotone_maps(w, hom_ab.order);
    ASSERT_EQ(left.size(), right.size());
    std::vector<IndexMap> curried;
    for (const auto& h : left) {
      IndexMap c(w.size());
      for (std::size_t u = 0; u < w.size(); ++u) c[u] = index.at(compose(h, t.injections[u]));
      EXPECT_TRUE(brute_monotone(w, hom_ab.order, c));
      curried.push_back(c);
    }
    std::sort(curried.begin(), curried.end());
    EXPECT_EQ(std::adjacent_find(curried.begin(), curried.end()), curried.end());
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < left.size(); ++j) {
        bool curried_leq = true;
        for (std::size_t u = 0; u < w.size(); ++u)
          curried_leq = curried_leq && pointwise_leq(b, compose(left[i], t.injections[u]), compose(left[j], t.injections[u]));
        EXPECT_EQ(pointwise_leq(b, left[i], left[j]), curried_leq);
      }
  }
}

TEST(Interderivability, CocommaViaCoinserterOnRandomInstances) {
  auto rng = rng_for(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poset(rng, 1 + pick(rng, 4));
    const auto b = random_poset(rng, 1 + pick(rng, 4));
    const auto c = random_poset(rng, 1 + pick(rng, 4));
    const auto f = random_map(rng, a, b), g = random_map(rng, a, c);
    const auto direct = cocomma_pos(a, b, c, f, g);
    const auto derived = cocomma_via_coinserter(a, b, c, f, g);
    EXPECT_TRUE(find_compatible_iso(direct.object, derived.object, {direct.p, direct.q}, {derived.p, derived.q}))
        << "trial " << trial;
  }
}

TEST(Interderivability, CoinserterViaCocommaOnRandomInstances) {
  auto rng = rng_for(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poset(rng, 1 + pick(rng, 4));
    const auto b = random_poset(rng, 1 + pick(rng, 4));
    const auto f = random_map(rng, a, b), g = random_map(rng, a, b);
    const auto direct = coinserter_pos(a, b, f, g);
    const auto derived = coinserter_via_cocomma(a, b, f, g);
    EXPECT_TRUE(find_compatible_iso(direct.object, derived.object, {direct.projection}, {derived.projection}));
  }
}

TEST(GenericWeightedColimit, AgreesWithBespokeConstructions) {
  auto rng = rng_for(24);
  const PosCat pos;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poset(rng, 1 + pick(rng, 3));
    const auto b = random_poset(rng, 1 + pick(rng, 3));
    const auto f = random_map(rng, a, b), g = random_map(rng, a, b);
    const auto generic = weighted_colimit_pos(parallel_pair_diagram(pos, a, b, f, g), walking_two_weight());
    const auto q = coinserter_pos(a, b, f, g);
    EXPECT_TRUE(find_compatible_iso(q.object, generic.vertex, {q.projection}, {generic.components[1][0]}));

    const auto w = random_poset(rng, 1 + pick(rng, 3));
    const auto tg = weighted_colimit_pos(single_diagram(pos, a), tensor_weight(w));
    const auto t = tensor_pos(w, a);
    EXPECT_TRUE(find_compatible_iso(t.object, tg.vertex, t.injections, tg.components[0]));
  }
}

TEST(GenericWeightedColimit, CertifiedOnRandomCocommas) {
  auto rng = rng_for(25);
  const PosCat pos;
  const auto universe = poset_universe(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_poset(rng, 1 + pick(rng, 2));
    const auto b = random_poset(rng, 1 + pick(rng, 2));
    const auto c = random_poset(rng, 1 + pick(rng, 2));
    const auto d = span_diagram(pos, a, b, c, random_map(rng, a, b), random_map(rng, a, c));
    EXPECT_TRUE(is_weighted_colimit(pos, weighted_colimit_pos(d, cocomma_weight()), universe, 3).holds);
  }
}

TEST(FindCompatibleIso, RespectsLegs) {
  const auto c2 = FinitePoset::chain(2);
  const auto two = FinitePoset::antichain(2);
  // the swap of the antichain is an isomorphism, but not one fixing the legs
  EXPECT_TRUE(find_compatible_iso(two, two, {IndexMap{0}}, {IndexMap{1}}).has_value());
  EXPECT_FALSE(find_compatible_iso(two, two, {IndexMap{0, 1}}, {IndexMap{1, 1}}).has_value());
  EXPECT_FALSE(find_compatible_iso(c2, two, {}, {}).has_value());
  const auto iso = find_compatible_iso(c2, c2, {}, {});
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(*iso, identity_map(2));
}
