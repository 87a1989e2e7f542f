#include <random>

#include <gtest/gtest.h>

#include "freecrit/homotopy.hpp"
#include "freecrit/koszul.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"

using namespace freecrit;
using namespace freecrit::testing;

namespace {

long euler_homology(const FreeComplex& f) {
  long chi = 0;
  for (std::size_t i = 0; i <= f.top(); ++i) chi += (i % 2 ? -1L : 1L) * static_cast<long>(f.homology_dim(i));
  return chi;
}

long euler_ranks(const FreeComplex& f) {
  long chi = 0;
  for (std::size_t i = 0; i <= f.top(); ++i) chi += (i % 2 ? -1L : 1L) * static_cast<long>(f.rank(i));
  return chi * static_cast<long>(f.algebra()->dim());
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

using Complexes = BothFields;

TEST_P(Complexes, KoszulRanksAndBetti) {
  auto a = make_algebra(catalog()[4], field());
  for (std::size_t p = 0; p <= 3; ++p) {
    FreeComplex k = koszul_power(a, {"x", "y", "z"}, p, 1);
    ASSERT_EQ(k.top(), p);
    for (std::size_t i = 0; i <= p; ++i) EXPECT_EQ(k.rank(i), binomial(p, i));
    EXPECT_TRUE(k.is_minimal());
    EXPECT_EQ(k.betti(), k.ranks());
    EXPECT_EQ(k.proj_dim(), p);
  }
  EXPECT_EQ(monotone_subsets(4, 2).size(), 6u);
  EXPECT_EQ(subset_index(4, {2, 3}), 5u);
}

TEST_P(Complexes, EulerCharacteristic) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = make_algebra(catalog()[trial % 5], field());
    std::vector<Matrix> xs;
    for (std::size_t i = 0, n = rng() % 4; i < n; ++i) xs.push_back(random_element(*a, rng, true));
    FreeComplex k = koszul(a, xs);
    EXPECT_EQ(euler_homology(k), euler_ranks(k));
    FreeComplex c = conjugate(k, random_automorphism(k, rng));
    EXPECT_TRUE(c.validate().valid);
    for (std::size_t i = 0; i <= k.top(); ++i) EXPECT_EQ(c.homology_dim(i), k.homology_dim(i));
  }
}

TEST_P(Complexes, BrokenDifferentialIsReported) {
  auto a = make_algebra(catalog()[0], field());
  FreeComplex k = koszul(a, {a->parse("x"), a->parse("y")});
  auto d = k.differentials();
  d[1] = d[1].scaled(a->one() + a->parse("x")).scaled(field().from_int(2));
  d[0].set(0, 0, a->one());
  FreeComplex bad(a, k.ranks(), d);
  EXPECT_FALSE(bad.validate().valid);
}

TEST_P(Complexes, HomologyOfKoszulOnTheMaximalIdeal) {
  // Over k[x,y,z]/(x,y,z)^2 the complex K(x) has H_0 = A/(x) and H_1 = ann(x) = m.
  auto a = make_algebra(catalog()[0], field());
  FreeComplex k = koszul(a, {a->parse("x")});
  EXPECT_EQ(k.homology_dim(0), 3u);
  EXPECT_EQ(k.homology_dim(1), 3u);
  auto is = k.inf_sup();
  ASSERT_TRUE(is.has_value());
  EXPECT_EQ(is->first, 0u);
  EXPECT_EQ(is->second, 1u);
  HomologyModule h1 = k.homology(1);
  Matrix classes = h1.classify(h1.reps);
  EXPECT_TRUE(classes.is_identity());
}

TEST_P(Complexes, ShiftSumAndCone) {
  auto a = make_algebra(catalog()[4], field());
  FreeComplex k = koszul(a, {a->parse("x")});
  FreeComplex s = shift(k, 1);
  EXPECT_EQ(s.ranks(), (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_TRUE(s.validate().valid);
  FreeComplex sum = direct_sum(k, s);
  EXPECT_EQ(sum.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(sum.homology_dim(1), k.homology_dim(1) + k.homology_dim(0));

  ChainMap id = identity_map(k);
  EXPECT_TRUE(is_quasi_iso(k, k, id));
  EXPECT_FALSE(is_quasi_iso(k, k, scalar_map(k, a->parse("y"))));
  FreeComplex c = cone(k, k, id);
  EXPECT_TRUE(c.validate().valid);
  for (std::size_t i = 0; i <= c.top(); ++i) EXPECT_EQ(c.homology_dim(i), 0u);
}

TEST_P(Complexes, CompositionOfChainMaps) {
  auto a = make_algebra(catalog()[4], field());
  FreeComplex k = koszul(a, {a->parse("x"), a->parse("y")});
  ChainMap x = scalar_map(k, a->parse("x")), y = scalar_map(k, a->parse("y"));
  EXPECT_TRUE(is_chain_map(k, k, x));
  ChainMap xy = compose(k, k, k, x, y);
  for (std::size_t i = 0; i <= k.top(); ++i) EXPECT_EQ(xy.f[i], scalar_map(k, a->parse("x*y")).f[i]);
}

FREECRIT_BOTH_FIELDS(Complexes);
