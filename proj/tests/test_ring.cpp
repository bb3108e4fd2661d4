#include "chpos/errors.hpp"
#include "chpos/ring.hpp"
#include "chpos/spaces.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace chpos;

namespace {

RingPtr truncated_polynomial(int n) {
  return tower_ring({TowerGenerator{"h", n + 1, {}}}, Rational(1));
}

CycleClass random_class(oracle::Gen& g, const RingPtr& ring, int codim) {
  std::vector<Rational> v(ring->rank(codim));
  for (auto& x : v) x = g.rational(4, 3);
  return CycleClass(ring, codim, v);
}

}  // namespace

TEST(Ring, TruncatedPolynomialRing) {
  const auto ring = truncated_polynomial(3);
  const auto h = CycleClass::named(ring, 1, "h");
  EXPECT_EQ(degree(power(h, 3)), Rational(1));
  EXPECT_TRUE(power(h, 4).overflow());
  EXPECT_TRUE(power(h, 4).is_zero());
  EXPECT_EQ(to_string(3 * power(h, 2)), "3*h^2");
  EXPECT_EQ(to_string(CycleClass::zero(ring, 2)), "0");
}

TEST(Ring, CodimensionMismatchIsStructural) {
  const auto ring = truncated_polynomial(3);
  const auto h = CycleClass::named(ring, 1, "h");
  EXPECT_THROW(h + power(h, 2), StructuralError);
  EXPECT_THROW(pair(h, h), StructuralError);
  const auto other = truncated_polynomial(3);
  EXPECT_THROW(h + CycleClass::named(other, 1, "h"), StructuralError);
  EXPECT_THROW(CycleClass::named(ring, 1, "q"), StructuralError);
}

TEST(Ring, TowerRelationMatchesElementarySymmetric) {
  // zeta^3 = -(e1 h zeta^2 + e2 h^2 zeta + e3 h^3) over P^3 for w = (0, -1, -3).
  const auto pb = projective_bundle(SpaceSpec{ProjectiveSpaceSpec{3}}, {0, -1, -3});
  const auto& bd = std::get<BundleData>(pb->data);
  const auto& w = bd.normalized_twists;
  const auto z = bd.zeta;
  const auto h = *pb->hyperplane;
  CycleClass rhs = CycleClass::zero(pb->ring, 3);
  for (int i = 1; i <= 3; ++i) {
    rhs = rhs - Rational(oracle::elementary(w, i)) * power(h, i) * power(z, 3 - i);
  }
  EXPECT_EQ(power(z, 3), rhs);
}

TEST(Ring, BundleDegreesAreCompleteHomogeneous) {
  // deg h^(n-j) zeta^(r-1+j) = (-1)^j h_j(w): the inverse of the Chern
  // polynomial, computed without the relation.
  oracle::Gen g(21);
  for (int t = 0; t < 40; ++t) {
    const int n = g.int_in(1, 4);
    const int r = g.int_in(2, 4);
    const auto twists = g.ints(r, -3, 3);
    const auto pb = projective_bundle(SpaceSpec{ProjectiveSpaceSpec{n}}, twists);
    const auto& bd = std::get<BundleData>(pb->data);
    for (int j = 0; j <= n; ++j) {
      const Rational got = degree(power(*pb->hyperplane, n - j) * power(bd.zeta, r - 1 + j));
      const Rational want = Rational((j % 2 ? -1 : 1) * oracle::complete_homogeneous(bd.normalized_twists, j));
      EXPECT_EQ(got, want) << "n=" << n << " j=" << j;
    }
  }
}

TEST(Ring, RandomTriplesCommuteAndAssociate) {
  oracle::Gen g(22);
  const std::vector<SpaceSpec> specs = {
      SpaceSpec{ProjectiveSpaceSpec{4}}, SpaceSpec{GrassmannianSpec{2, 5}}, SpaceSpec{BlowupLinearSpec{4, 1}},
      SpaceSpec{ProductSpec{make_spec({ProjectiveSpaceSpec{2}}), make_spec({GrassmannianSpec{2, 4}})}},
      SpaceSpec{ProjectiveBundleSpec{make_spec({ProjectiveSpaceSpec{2}}), {-2, 0, 1}}}};
  for (const auto& spec : specs) {
    const auto model = build(spec);
    const auto& ring = model->ring;
    EXPECT_NO_THROW(verify_ring(*ring, 99, 200));
    for (int t = 0; t < 60; ++t) {
      const int a = g.int_in(0, ring->dim());
      const int b = g.int_in(0, ring->dim() - a);
      const int c = g.int_in(0, ring->dim() - a - b);
      const auto x = random_class(g, ring, a);
      const auto y = random_class(g, ring, b);
      const auto z = random_class(g, ring, c);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x * y) * z, x * (y * z));
      if (b == c) {
        EXPECT_EQ(x * (y + z), x * y + x * z);
      }
      const Rational s = g.rational(5, 4);
      EXPECT_EQ(s * (x * y), (s * x) * y);
    }
  }
}

TEST(Ring, PairingIsBilinear) {
  oracle::Gen g(23);
  const auto model = build(SpaceSpec{GrassmannianSpec{2, 5}});
  const auto& ring = model->ring;
  for (int t = 0; t < 50; ++t) {
    const int a = g.int_in(0, ring->dim());
    const auto x = random_class(g, ring, a);
    const auto x2 = random_class(g, ring, a);
    const auto z = random_class(g, ring, ring->dim() - a);
    const Rational s = g.rational(7, 5);
    EXPECT_EQ(pair(s * x + x2, z), s * pair(x, z) + pair(x2, z));
  }
}

TEST(Ring, ProductRingRenamesAndMultipliesBlockwise) {
  const auto model = build(SpaceSpec{ProductSpec{make_spec({ProjectiveSpaceSpec{2}}), make_spec({ProjectiveSpaceSpec{3}})}});
  const auto& ring = model->ring;
  const auto h1 = CycleClass::named(ring, 1, "h1");
  const auto h2 = CycleClass::named(ring, 1, "h2");
  EXPECT_EQ(degree(power(h1, 2) * power(h2, 3)), Rational(1));
  EXPECT_TRUE((power(h1, 3)).is_zero());
  EXPECT_EQ(ring->rank(2), 3u);
  EXPECT_EQ(degree(power(h1 + h2, 5)), Rational(10));
  const auto& pd = std::get<ProductData>(model->data);
  const auto hl = CycleClass::named(pd.left->ring, 1, "h");
  EXPECT_EQ((*pd.pull_left)(hl), h1);
}

TEST(Ring, RebaseRoundTrip) {
  // Rebase P^1 x P^1 onto (a + b, a - b) and check intersection numbers.
  const auto model = build(SpaceSpec{ProductSpec{make_spec({ProjectiveSpaceSpec{1}}), make_spec({ProjectiveSpaceSpec{1}})}});
  const auto& old = *model->ring;
  std::vector<linalg::Matrix> blocks = {{{1}}, {{1, 1}, {1, -1}}, {{2}}};
  std::vector<std::vector<Label>> labels = {{Label{}}, {Label{{{"u", 1}}}, Label{{{"v", 1}}}}, {Label{{{"u", 2}}}}};
  const auto ring = rebase(old, blocks, labels);
  const auto u = CycleClass::named(ring, 1, "u");
  const auto v = CycleClass::named(ring, 1, "v");
  EXPECT_EQ(degree(u * u), Rational(2));
  EXPECT_EQ(degree(v * v), Rational(-2));
  EXPECT_EQ(degree(u * v), Rational(0));
  EXPECT_THROW(rebase(old, {{{1}}, {{1, 1}, {2, 2}}, {{1}}}, labels), ParameterError);
}

TEST(Ring, RingMapFromGenerators) {
  const auto src = truncated_polynomial(2);
  const auto model = build(SpaceSpec{ProductSpec{make_spec({ProjectiveSpaceSpec{2}}), make_spec({ProjectiveSpaceSpec{1}})}});
  const auto h1 = CycleClass::named(model->ring, 1, "h1");
  const auto h2 = CycleClass::named(model->ring, 1, "h2");
  const auto f = RingMap::from_generators(src, model->ring, {{"h", h1 + h2}});
  const auto h = CycleClass::named(src, 1, "h");
  EXPECT_EQ(f(power(h, 2)), power(h1 + h2, 2));
}
