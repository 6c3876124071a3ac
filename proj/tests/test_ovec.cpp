#include <gtest/gtest.h>

#include "generators.hpp"
#include "ordsolid/ovec.hpp"

using namespace ordsolid;
using namespace ordsolid::testing;

namespace {

RationalVector random_vector(Rng& rng, std::size_t dim, int lo, int hi) {
  RationalVector v(dim);
  for (auto& x : v) x = lo + static_cast<int>(pick(rng, static_cast<std::size_t>(hi - lo + 1)));
  return v;
}

RationalVector combine(const std::vector<RationalVector>& gens, const RationalVector& lambda, std::size_t dim) {
  RationalVector v(dim, 0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = 0; k < dim; ++k) v[k] += lambda[i] * gens[i][k];
  return v;
}

ConeSpace orthant(std::size_t dim) {
  ConeSpace c{dim, {}, false, false};
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector e(dim, 0);
    e[i] = 1;
    c.generators.push_back(e);
  }
  return c;
}

RationalMatrix random_nonnegative(Rng& rng, std::size_t rows, std::size_t cols, int hi) {
  RationalMatrix m(rows);
  for (auto& r : m) r = random_vector(rng, cols, 0, hi);
  return m;
}

}  // namespace

TEST(FreeUnitCounterexample, LinearExtensionsReverseTheOrder) {
  const auto rep = check_free_unit_counterexample();
  EXPECT_TRUE(rep.holds());
  // f#, g# are fixed by their values on the basis e_a, e_b
  const RationalVector u{-1, 1};
  EXPECT_EQ(rep.u, u);
  EXPECT_EQ(rep.f_at_u, Rational(0) * u[0] + Rational(2) * u[1]);
  EXPECT_EQ(rep.g_at_u, Rational(2) * u[0] + Rational(3) * u[1]);
  EXPECT_EQ(rep.f_at_u, 2);
  EXPECT_EQ(rep.g_at_u, 1);
  EXPECT_FALSE(rep.hom_leq);
}

TEST(FreeUnitCounterexample, PointwiseConeIsSpannedByTheCoverDifference) {
  const std::vector<IndexPair> ab{{0, 1}};
  const auto x = FinitePoset::from_pairs({"a", "b"}, ab);
  const auto fx = free_ovec(x, FreeMode::pointwise);
  ASSERT_EQ(fx.generators.size(), 1u);
  EXPECT_EQ(fx.generators[0], (RationalVector{-1, 1}));
  EXPECT_FALSE(is_generating(fx));
  EXPECT_TRUE(is_pointed(fx));
}

TEST(InserterFailure, EqualizerIsZeroWhilePosInserterIsTheHalfLine) {
  const auto rep = check_inserter_failure();
  EXPECT_EQ(rep.equalizer_dim, 0u);
  EXPECT_TRUE(rep.pos_inserter_is_full_cone);
  EXPECT_FALSE(rep.preserves_inserters);
  EXPECT_TRUE(rep.order_faithful);
  EXPECT_TRUE(rep.holds());
}

TEST(FreeOVec, GeneratorCountsFollowTheStrictOrder) {
  auto rng = rng_for(71);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = random_poset(rng, 1 + pick(rng, 4));
    std::size_t strict = 0;
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < x.size(); ++b) strict += a != b && x.leq(a, b);
    const auto pw = free_ovec(x, FreeMode::pointwise);
    const auto pc = free_ovec(x, FreeMode::positive_cone);
    EXPECT_EQ(pw.dim, x.size());
    EXPECT_LE(pw.generators.size(), strict);
    EXPECT_LE(pc.generators.size(), strict + x.size());
    EXPECT_GE(pc.generators.size(), x.size());
    EXPECT_TRUE(is_generating(pc));
    // e_y - e_x lies in both cones whenever x <= y
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < x.size(); ++b)
        if (x.leq(a, b)) {
          RationalVector d(x.size(), 0);
          d[b] += 1;
          d[a] -= 1;
          EXPECT_TRUE(cone_member(pw, d).member);
          EXPECT_TRUE(cone_member(pc, d).member);
        } else {
          RationalVector d(x.size(), 0);
          d[b] += 1;
          d[a] -= 1;
          EXPECT_FALSE(cone_member(pw, d).member);
        }
  }
}

TEST(ConeMembership, EliminationAndSimplexAgree) {
  auto rng = rng_for(72);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 1 + pick(rng, 3);
    std::vector<RationalVector> gens;
    for (std::size_t i = 0, k = pick(rng, 5); i < k; ++i) gens.push_back(random_vector(rng, dim, -2, 2));
    const auto v = random_vector(rng, dim, -3, 3);
    const auto fm = membership_fourier_motzkin(gens, v);
    const auto sx = membership_simplex(gens, v);
    ASSERT_EQ(fm.member, sx.member) << "trial " << trial;
    for (const auto* m : {&fm, &sx}) {
      if (!m->member) continue;
      ASSERT_EQ(m->multipliers.size(), gens.size());
      for (const auto& l : m->multipliers) EXPECT_GE(l, 0);
      EXPECT_EQ(combine(gens, m->multipliers, dim), v);
    }
  }
}

TEST(ConeMembership, NonnegativeCombinationsAreMembers) {
  auto rng = rng_for(73);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + pick(rng, 3);
    std::vector<RationalVector> gens;
    for (std::size_t i = 0, k = 1 + pick(rng, 4); i < k; ++i) gens.push_back(random_vector(rng, dim, -2, 2));
    RationalVector lambda = random_vector(rng, gens.size(), 0, 3);
    lambda[0] /= 2;
    const auto v = combine(gens, lambda, dim);
    EXPECT_TRUE(membership_fourier_motzkin(gens, v).member);
    EXPECT_TRUE(membership_simplex(gens, v).member);
  }
}

TEST(LinearAlgebra, RankOfKnownFamilies) {
  EXPECT_EQ(rank({}, 3), 0u);
  EXPECT_EQ(rank({{1, 2, 3}, {2, 4, 6}}, 3), 1u);
  EXPECT_EQ(rank({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, 3), 2u);
  EXPECT_EQ(rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, 3), 3u);
  EXPECT_EQ(rank({{Rational(1, 2), Rational(1, 3)}, {3, 2}}, 2), 1u);
}

TEST(LinearAlgebra, SpanBasisHasTheRank) {
  auto rng = rng_for(74);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + pick(rng, 3);
    std::vector<RationalVector> vs;
    for (std::size_t i = 0, k = pick(rng, 4); i < k; ++i) vs.push_back(random_vector(rng, dim, -2, 2));
    const auto basis = span_basis(vs, dim);
    EXPECT_EQ(basis.size(), rank(vs, dim));
    EXPECT_EQ(rank(basis, dim), basis.size());
    auto both = vs;
    both.insert(both.end(), basis.begin(), basis.end());
    EXPECT_EQ(rank(both, dim), basis.size());
  }
}

TEST(Cones, PointedAndGenerating) {
  EXPECT_TRUE(is_pointed(orthant(2)));
  EXPECT_TRUE(is_generating(orthant(2)));
  const ConeSpace half{2, {{1, 0}, {-1, 0}, {0, 1}}, false, false};
  EXPECT_FALSE(is_pointed(half));
  EXPECT_TRUE(is_generating(half));
  EXPECT_EQ(lineality_space(half).size(), 1u);
  ConeSpace strict = half;
  strict.requires_pointed = true;
  EXPECT_THROW(validate_cone(strict), InvalidStructure);
}

TEST(Coinserter, ProjectionInvertsTheOrderAndFactorsPositiveMaps) {
  auto rng = rng_for(75);
  const auto w = orthant(2);
  const ConeSpace line{1, {{1}}, false, false};
  std::size_t factored = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto v = orthant(1 + pick(rng, 2));
    const PositiveLinearMap f{random_nonnegative(rng, 2, v.dim, 2), v, w};
    const PositiveLinearMap g{random_nonnegative(rng, 2, v.dim, 2), v, w};
    const auto c = coinserter_ovec(f, g);
    EXPECT_TRUE(is_positive(c.projection));
    const PositiveLinearMap pf{matmul(c.projection.matrix, f.matrix), v, c.object};
    const PositiveLinearMap pg{matmul(c.projection.matrix, g.matrix), v, c.object};
    EXPECT_TRUE(hom_leq(pf, pg));
    // functionals h >= 0 with h.f <= h.g and h zero on U factor through
    const PositiveLinearMap h{{random_vector(rng, 2, 0, 3)}, w, line};
    const PositiveLinearMap hf{matmul(h.matrix, f.matrix), v, line}, hg{matmul(h.matrix, g.matrix), v, line};
    bool kills_u = true;
    for (const auto& u : c.lineality) kills_u = kills_u && matvec(h.matrix, u)[0] == 0;
    const auto hp = factor_through(c, h);
    if (hom_leq(hf, hg) && kills_u) {
      ASSERT_TRUE(hp.has_value());
      EXPECT_TRUE(is_positive(*hp));
      for (const auto& e : w.generators)
        EXPECT_EQ(matvec(hp->matrix, matvec(c.projection.matrix, e)), matvec(h.matrix, e));
      ++factored;
    } else if (!kills_u) {
      EXPECT_FALSE(hp.has_value());
    }
  }
  EXPECT_GT(factored, 0u);
}
