#include <gtest/gtest.h>

#include <map>

#include "generators.hpp"
#include "ordsolid/slat.hpp"
#include "ordsolid/suites.hpp"

using namespace ordsolid;
using namespace ordsolid::testing;

namespace {

/// Top and all binary meets, by scanning lower bounds directly.
bool brute_is_slat(const FinitePoset& p) {
  if (p.size() == 0) return false;
  bool top = false;
  for (std::size_t t = 0; t < p.size() && !top; ++t) {
    top = true;
    for (std::size_t x = 0; x < p.size(); ++x) top = top && p.leq(x, t);
  }
  if (!top) return false;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      bool found = false;
      for (std::size_t m = 0; m < p.size(); ++m)
        if (p.leq(m, a) && p.leq(m, b)) {
          bool above_all = true;
          for (std::size_t l = 0; l < p.size(); ++l)
            if (p.leq(l, a) && p.leq(l, b) && !p.leq(l, m)) above_all = false;
          found = found || above_all;
        }
      if (!found) return false;
    }
  return true;
}

std::vector<IndexMap> brute_slat_homs(const MeetSemilattice& a, const MeetSemilattice& b) {
  std::vector<IndexMap> out;
  for (const auto& f : all_functions(a.size(), b.size())) {
    bool ok = f[a.top()] == b.top();
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = 0; y < a.size() && ok; ++y) ok = f[a.meet(x, y)] == b.meet(f[x], f[y]);
    if (ok) out.push_back(f);
  }
  return out;
}

/// Every set partition of {0..n-1} as a block index per element.
std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> block(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t used) {
    if (k == n) {
      out.push_back(block);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[k] = b;
      rec(k + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) return {{}};
  block[0] = 0;
  rec(1, 1);
  return out;
}

bool brute_is_congruence(const MeetSemilattice& s, const std::vector<std::size_t>& block) {
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (block[x] != block[y]) continue;
      for (std::size_t c = 0; c < s.size(); ++c)
        if (block[s.meet(x, c)] != block[s.meet(y, c)]) return false;
    }
  return true;
}

MeetSemilattice random_slat(Rng& rng, std::size_t max_size) {
  static const auto all = slat_universe(5);
  for (;;) {
    const auto& s = all[pick(rng, all.size())];
    if (s.size() <= max_size) return s;
  }
}

}  // namespace

TEST(MeetSemilattice, RejectsPosetsWithoutMeets) {
  EXPECT_THROW(MeetSemilattice(FinitePoset::antichain(2)), InvalidStructure);
  EXPECT_NO_THROW(MeetSemilattice(FinitePoset::chain(3)));
}

TEST(MeetSemilattice, CountsMatchDirectFilterAndLatticeCounts) {
  // Finite meet-semilattices with a top are lattices: 1, 1, 1, 2, 5, 15 on 1..6 elements.
  const std::vector<std::size_t> lattices{1, 1, 1, 2, 5, 15};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t direct = 0;
    for (const auto& p : posets_up_to_iso(n)) direct += brute_is_slat(p);
    EXPECT_EQ(semilattices(n).size(), direct) << n;
    EXPECT_EQ(direct, lattices[n - 1]) << n;
  }
}

TEST(SlatHoms, MatchBruteForce) {
  auto rng = rng_for(31);
  for (int trial = 0; trial < 80; ++trial) {
    const auto a = random_slat(rng, 5), b = random_slat(rng, 4);
    EXPECT_EQ(slat_homs(a, b), brute_slat_homs(a, b));
  }
}

TEST(FreeSlat, AntichainOfTwoGivesFourUpSets) {
  const auto f = free_slat(FinitePoset::antichain(2));
  EXPECT_EQ(f.object.size(), 4u);
  EXPECT_EQ(f.object.label(f.object.top()), "{}");
}

TEST(FreeSlat, UniversalAmongMonotoneMaps) {
  // h |-> h . unit is a bijection SLat(FX, S) -> Pos(X, VS).
  auto rng = rng_for(32);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = random_poset(rng, 1 + pick(rng, 3));
    const auto s = random_slat(rng, 4);
    const auto f = free_slat(x);
    std::vector<IndexMap> restricted;
    for (const auto& h : brute_slat_homs(f.object, s)) restricted.push_back(compose(h, f.unit));
    std::sort(restricted.begin(), restricted.end());
    EXPECT_EQ(restricted, brute_monotone_maps(x, s.poset()));
  }
}

TEST(Congruence, ClosureIsTheLeastCongruence) {
  auto rng = rng_for(33);
  for (int trial = 0; trial < 80; ++trial) {
    const auto s = random_slat(rng, 5);
    std::vector<IndexPair> pairs;
    const std::size_t k = pick(rng, 3);
    for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(pick(rng, s.size()), pick(rng, s.size()));
    const auto c = slat_congruence_closure(s, pairs);
    EXPECT_TRUE(is_congruence(c));
    EXPECT_TRUE(brute_is_congruence(s, c.block));
    for (const auto& [x, y] : pairs) EXPECT_EQ(c.block[x], c.block[y]);
    // every congruence containing the pairs is coarser
    for (const auto& part : partitions(s.size())) {
      bool contains = brute_is_congruence(s, part);
      for (const auto& [x, y] : pairs) contains = contains && part[x] == part[y];
      if (!contains) continue;
      for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = 0; y < s.size(); ++y)
          if (c.block[x] == c.block[y]) EXPECT_EQ(part[x], part[y]);
    }
  }
}

TEST(Congruence, QuotientProjectionIsASurjectiveHom) {
  auto rng = rng_for(34);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = random_slat(rng, 5);
    const std::vector<IndexPair> pairs{{pick(rng, s.size()), pick(rng, s.size())}};
    const auto q = quotient_slat(slat_congruence_closure(s, pairs));
    EXPECT_TRUE(is_slat_hom(s, q.object, q.projection));
    EXPECT_TRUE(is_surjective(q.projection, q.object.size()));
  }
}

TEST(SlatColimits, CopowerOfTwoChainIsTheDiamond) {
  const MeetSemilattice c2(FinitePoset::chain(2));
  const auto cp = copower_slat(c2, 2);
  EXPECT_EQ(cp.vertex.size(), 4u);
  EXPECT_TRUE(is_isomorphic(cp.vertex.poset(), product_poset(FinitePoset::chain(2), FinitePoset::chain(2))));
  const auto t = tensor_slat(c2, FinitePoset::antichain(2));
  EXPECT_TRUE(is_isomorphic(t.object.poset(), cp.vertex.poset()));
}

TEST(SlatColimits, CoproductLegsPutTopElsewhere) {
  const std::vector<MeetSemilattice> objs{MeetSemilattice(FinitePoset::chain(2)), MeetSemilattice(FinitePoset::chain(3))};
  const auto c = coproduct_slat(objs);
  EXPECT_EQ(c.vertex.size(), 6u);
  for (std::size_t k = 0; k < 2; ++k) EXPECT_TRUE(is_slat_hom(objs[k], c.vertex, c.legs[k]));
  EXPECT_EQ(c.legs[0][objs[0].top()], c.vertex.top());
}

TEST(SlatColimits, CertifiedOnRandomCoinsertersAndCocommas) {
  auto rng = rng_for(35);
  const SlatCat slat;
  const auto universe = slat_universe(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_slat(rng, 3), b = random_slat(rng, 3), c = random_slat(rng, 3);
    const auto ab = slat_homs(a, b), ac = slat_homs(a, c);
    const auto f = ab[pick(rng, ab.size())], g = ab[pick(rng, ab.size())], h = ac[pick(rng, ac.size())];
    const auto q = coinserter_slat(a, b, f, g);
    EXPECT_TRUE(is_weighted_colimit(slat, coinserter_cocone(slat, parallel_pair_diagram(slat, a, b, f, g), q.object,
                                                            q.projection),
                                    universe, 3)
                    .holds);
    const auto cc = cocomma_slat(a, b, c, f, h);
    EXPECT_TRUE(
        is_weighted_colimit(slat, cocomma_cocone(slat, span_diagram(slat, a, b, c, f, h), cc.object, cc.p, cc.q),
                            universe, 3)
            .holds);
  }
}

TEST(SlatLimits, InserterIsASubSemilattice) {
  const MeetSemilattice c3(FinitePoset::chain(3));
  const auto ins = inserter_slat(c3, c3, identity_map(3), IndexMap{0, 0, 2});
  EXPECT_EQ(ins.object.size(), 2u);
  EXPECT_TRUE(is_slat_hom(ins.object, c3, ins.inclusion));
}

TEST(VFunctor, OrderFaithfulOnSmallSemilattices) {
  const VFunctor v;
  EXPECT_TRUE(is_order_faithful(v, slat_universe(4), 4).holds);
}

TEST(VExtension, RandomFamiliesAreStronglyUniversal) {
  auto rng = rng_for(36);
  const VFunctor v;
  const auto universe = slat_universe(3);
  for (int trial = 0; trial < 25; ++trial) {
    const auto x = random_poset(rng, 1 + pick(rng, 3));
    std::vector<MeetSemilattice> family;
    std::vector<IndexMap> xi;
    const std::size_t k = pick(rng, 3);
    for (std::size_t i = 0; i < k; ++i) {
      family.push_back(random_slat(rng, 3));
      const auto maps = brute_monotone_maps(family.back().poset(), x);
      xi.push_back(maps[pick(rng, maps.size())]);
    }
    const auto e = universal_V_extension(x, family, xi);
    const auto rep = is_strongly_order_universal_extension(v, e, universe, 3);
    EXPECT_TRUE(rep.holds()) << rep.witness;
  }
}

TEST(VExtension, EmptyFamilyIsTheFreeSemilattice) {
  const auto x = FinitePoset::antichain(2);
  const auto e = universal_V_extension(x, {}, {});
  EXPECT_TRUE(is_isomorphic(e.vertex.poset(), free_slat(x).object.poset()));
}

TEST(VExtension, NotStrongWhenQIsPerturbed) {
  const VFunctor v;
  const auto x = FinitePoset::antichain(2);
  auto e = universal_V_extension(x, {}, {});
  // send both points to the top: q still extends the empty family but is not order-epic
  e.q = IndexMap{e.vertex.top(), e.vertex.top()};
  EXPECT_FALSE(is_strongly_order_universal_extension(v, e, slat_universe(3), 3).holds());
}
