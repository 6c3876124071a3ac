#include <gtest/gtest.h>

#include "generators.hpp"
#include "ordsolid/extension.hpp"
#include "ordsolid/pos_weighted.hpp"
#include "ordsolid/slat.hpp"
#include "ordsolid/topo.hpp"

using namespace ordsolid;
using namespace ordsolid::testing;

namespace {

/// Objects 0, 1 with arrows a, b : 0 -> 1, and a <= b when `ordered`.
FiniteOrderedCategory two_arrows(bool ordered) {
  FiniteOrderedCategory c;
  const auto x = c.add_object("0"), y = c.add_object("1");
  const auto a = c.add_morphism("a", x, y), b = c.add_morphism("b", x, y);
  if (ordered) c.declare_leq(a, b);
  c.finalize();
  return c;
}

std::vector<std::size_t> by_name(const FiniteOrderedCategory& src, const FiniteOrderedCategory& tgt,
                                 const std::map<std::string, std::string>& rename = {}) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < src.morphism_count(); ++m) {
    const auto& name = src.arrow(m).name;
    out.push_back(tgt.morphism_named(rename.contains(name) ? rename.at(name) : name));
  }
  return out;
}

struct RandomFamily {
  std::vector<FinitePoset> objects;
  std::vector<IndexMap> xi;
};

RandomFamily random_family(Rng& rng, const FinitePreorder& x, std::size_t max_members) {
  RandomFamily f;
  for (std::size_t i = 0, k = pick(rng, max_members + 1); i < k; ++i) {
    f.objects.push_back(random_poset(rng, 1 + pick(rng, 2)));
    const auto maps = brute_monotone_maps(f.objects.back(), x);
    f.xi.push_back(maps[pick(rng, maps.size())]);
  }
  return f;
}

/// Pos without the pointwise marker, so extension checks enumerate homs.
struct GenericPos : PosCat {
  static constexpr bool pointwise_order = false;
};

}  // namespace

TEST(OrderFaithful, TableFunctorsThatForgetOrIdentify) {
  const auto discrete = two_arrows(false), ordered = two_arrows(true);
  const std::vector<std::size_t> all{0, 1};
  const TableFunctor same(discrete, discrete, {0, 1}, by_name(discrete, discrete));
  EXPECT_TRUE(is_order_faithful(same, all, 0).holds);
  EXPECT_TRUE(is_faithful(same, all, 0).holds);
  // a <= b holds only after the functor
  const TableFunctor into_ordered(discrete, ordered, {0, 1}, by_name(discrete, ordered));
  EXPECT_FALSE(is_order_faithful(into_ordered, all, 0).holds);
  EXPECT_TRUE(is_faithful(into_ordered, all, 0).holds);
  const TableFunctor collapse(discrete, discrete, {0, 1}, by_name(discrete, discrete, {{"b", "a"}}));
  EXPECT_FALSE(is_faithful(collapse, all, 0).holds);
  EXPECT_FALSE(is_order_faithful(collapse, all, 0).holds);
}

TEST(UniqueMediator, CoproductLegsDetermineTheMap) {
  const PosCat pos;
  const std::vector<FinitePoset> objs{FinitePoset::chain(2), FinitePoset::single()};
  const auto c = coproduct_pos(objs);
  const auto target = FinitePoset::chain(3);
  const std::vector<std::vector<IndexMap>> images{{IndexMap{0, 2}}, {IndexMap{1}}};
  const auto m = unique_mediator(pos, c.vertex, target, {{c.legs[0]}, {c.legs[1]}}, images);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(compose(*m, c.legs[0]), (IndexMap{0, 2}));
  // a vertex with an extra point leaves the mediator undetermined there
  const std::vector<FinitePoset> with_point{c.vertex, FinitePoset::single()};
  const auto bigger = coproduct_pos(with_point);
  EXPECT_FALSE(unique_mediator(pos, bigger.vertex, target, {{bigger.legs[0]}}, {{identity_map(3)}}).has_value());
}

TEST(UniqueMediator, ClashingReadingsAreRejected) {
  // both legs hit the one point, asking for images 1 and 0 at once
  const PosCat pos;
  const auto one = FinitePoset::single();
  const auto m = unique_mediator(pos, one, FinitePoset::chain(2), {{IndexMap{0}}, {IndexMap{0}}},
                                 {{IndexMap{1}}, {IndexMap{0}}});
  EXPECT_FALSE(m.has_value());
}

TEST(IdentityExtension, BaseCoconeIsItsOwnUniversalExtension) {
  // Along the identity of Pos the family itself, with q = 1, is strongly
  // universal; enlarging the vertex by a disjoint point breaks uniqueness.
  auto rng = rng_for(61);
  const PosCat pos;
  const IdentityFunctor<PosCat> id(pos);
  const auto universe = poset_universe(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_poset(rng, 1 + pick(rng, 3));
    const auto fam = random_family(rng, x, 2);
    const auto e = family_extension<PosCat, PosCat>(pos, fam.objects, x, fam.xi, x, fam.xi, identity_map(x.size()));
    EXPECT_TRUE(is_strongly_order_universal_extension(id, e, universe, 3).holds());

    const std::vector<FinitePoset> with_point{x, FinitePoset::single()};
    const auto plus = coproduct_pos(with_point);
    std::vector<IndexMap> alpha;
    for (const auto& m : fam.xi) alpha.push_back(compose(plus.legs[0], m));
    const auto bad = family_extension<PosCat, PosCat>(pos, fam.objects, x, fam.xi, plus.vertex, alpha, plus.legs[0]);
    const auto rep = is_order_universal_extension(id, bad, universe, 3);
    EXPECT_TRUE(rep.extension);
    EXPECT_FALSE(rep.universal);
  }
}

TEST(IdentityExtension, PointwiseShortcutAgreesWithHomEnumeration) {
  // random candidate vertices and q, with and without covering alpha
  auto rng = rng_for(65);
  const PosCat pos;
  const GenericPos generic;
  const IdentityFunctor<PosCat> id(pos);
  const IdentityFunctor<GenericPos> gid(generic);
  const auto universe = poset_universe(3);
  std::size_t universal = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto x = random_poset(rng, 1 + pick(rng, 2));
    const auto fam = random_family(rng, x, 2);
    const auto a = random_poset(rng, 1 + pick(rng, 3));
    const auto qs = brute_monotone_maps(x, a);
    const auto q = qs[pick(rng, qs.size())];
    std::vector<IndexMap> alpha;
    for (const auto& m : fam.xi) alpha.push_back(compose(q, m));
    const auto e = family_extension<PosCat, PosCat>(pos, fam.objects, x, fam.xi, a, alpha, q);
    const auto g = family_extension<GenericPos, GenericPos>(generic, fam.objects, x, fam.xi, a, alpha, q);
    const bool fast = is_order_universal_extension(id, e, universe, 3).holds();
    ASSERT_EQ(fast, is_order_universal_extension(gid, g, universe, 3).holds()) << "trial " << trial;
    universal += fast;
  }
  EXPECT_GT(universal, 0u);
  EXPECT_LT(universal, 150u);
}

TEST(IdentityExtension, StrongCheckRejectsWeightedShapes) {
  const PosCat pos;
  const IdentityFunctor<PosCat> id(pos);
  const auto a = FinitePoset::single(), b = FinitePoset::chain(2);
  const auto d = parallel_pair_diagram(pos, a, b, IndexMap{0}, IndexMap{1});
  const auto c = weighted_colimit_pos(d, walking_two_weight());
  const ExtensionOf<IdentityFunctor<PosCat>> e{d, c.weight, c.vertex, c.components, c.vertex, c.components,
                                               identity_map(c.vertex.size())};
  EXPECT_THROW(is_strongly_order_universal_extension(id, e, poset_universe(2), 2), ShapeMismatch);
  EXPECT_TRUE(is_order_universal_extension(id, e, poset_universe(3), 3).holds());
}

TEST(ColimitRoundTrip, SemilatticeCoinserterLiftsAndDescends) {
  auto rng = rng_for(62);
  const VFunctor v;
  const SlatCat slat;
  const PosCat pos;
  const auto slats = slat_universe(3);
  const auto posets = poset_universe(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto& a = slats[pick(rng, slats.size())];
    const auto& b = slats[pick(rng, slats.size())];
    const auto homs = slat_homs(a, b);
    const auto f = homs[pick(rng, homs.size())], g = homs[pick(rng, homs.size())];
    const auto d = parallel_pair_diagram(slat, a, b, f, g);
    const auto q = coinserter_slat(a, b, f, g);
    const auto alpha = coinserter_cocone(slat, d, q.object, q.projection);
    const auto xi = weighted_colimit_pos(image_diagram(v, d), walking_two_weight());
    ASSERT_TRUE(is_weighted_colimit(pos, xi, posets, 3).holds);
    const auto e = extension_from_colimit(v, alpha, xi);
    EXPECT_TRUE(is_order_universal_extension(v, e, slats, 3).holds());
    EXPECT_TRUE(colimit_from_extension(v, e, slats, posets, 3).holds());
  }
}

TEST(ComposeViaReflection, IdentityReflectionChangesNothing) {
  auto rng = rng_for(63);
  const SPrimeFunctor sp;
  const auto universe = space_universe(2);
  for (int trial = 0; trial < 15; ++trial) {
    const auto x = random_preorder(rng, 1 + pick(rng, 3));
    const auto e = universal_S_extension(x, {}, {});
    const auto r = compose_via_reflection(sp, e, ReflectionArrow<TopCat>{e.vertex, identity_map(e.vertex.size())},
                                          universe, 2);
    EXPECT_TRUE(r.reflection_universal.holds);
    EXPECT_EQ(r.extension.vertex.opens(), e.vertex.opens());
    EXPECT_EQ(r.extension.q, e.q);
    EXPECT_EQ(r.extension.alpha, e.alpha);
  }
}

TEST(ComposeViaReflection, PosetalReflectionOfTheIdentityExtension) {
  // Along the identity of Ord, (xi, X, 1) is universal; reflecting X into
  // posets yields the universal extension for the inclusion of posets.
  auto rng = rng_for(64);
  const OrdCat ord;
  const IdentityFunctor<OrdCat> id(ord);
  std::vector<FinitePreorder> posets;
  for (const auto& p : poset_universe(3)) posets.push_back(p);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_preorder(rng, 1 + pick(rng, 3), 0.5);
    const auto fam = random_family(rng, x, 2);
    const std::vector<FinitePreorder> objects(fam.objects.begin(), fam.objects.end());
    const auto e = family_extension<OrdCat, OrdCat>(ord, objects, x, fam.xi, x, fam.xi, identity_map(x.size()));
    const auto refl = posetal_reflection(x);
    const auto r = compose_via_reflection(id, e, ReflectionArrow<OrdCat>{refl.poset, refl.quotient}, posets, 3);
    EXPECT_TRUE(r.reflection_universal.holds);
    EXPECT_EQ(r.extension.q, refl.quotient);
    const auto rep = is_strongly_order_universal_extension(id, r.extension, posets, 3);
    EXPECT_TRUE(rep.holds()) << rep.witness;
  }
}

TEST(ComposeViaReflection, NonUniversalArrowIsReported) {
  const OrdCat ord;
  const IdentityFunctor<OrdCat> id(ord);
  const std::vector<IndexPair> cycle{{0, 1}, {1, 0}};
  const auto x = FinitePreorder::closure({"a", "b"}, cycle);
  const auto e = family_extension<OrdCat, OrdCat>(ord, {}, x, {}, x, {}, identity_map(2));
  // collapsing to a point is the reflection; mapping into a 2-chain is not
  const auto chain = FinitePoset::chain(2);
  std::vector<FinitePreorder> posets;
  for (const auto& p : poset_universe(2)) posets.push_back(p);
  EXPECT_TRUE(
      compose_via_reflection(id, e, ReflectionArrow<OrdCat>{FinitePoset::single(), IndexMap{0, 0}}, posets, 2)
          .reflection_universal.holds);
  EXPECT_FALSE(
      compose_via_reflection(id, e, ReflectionArrow<OrdCat>{chain, IndexMap{0, 0}}, posets, 2).reflection_universal.holds);
}
