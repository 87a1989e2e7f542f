#include <random>

#include <gtest/gtest.h>

#include "freecrit/module.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"

using namespace freecrit;
using namespace freecrit::testing;

namespace {

AlgebraPtr monomial(const Field& f, std::vector<std::string> vars, const std::vector<std::string>& ideal, int top) {
  return std::make_shared<const ArtinAlgebra>(GradedMonomialAlgebra::parse(std::move(vars), ideal, top).artinize(f));
}

AlgebraPtr square_zero(const Field& f) { return monomial(f, {"x", "y"}, {"x^2", "x*y", "y^2"}, 1); }

FiniteModule random_module(const AlgebraPtr& a, std::mt19937_64& rng) {
  std::vector<FiniteModule> parts;
  for (std::size_t i = 0, n = 1 + rng() % 2; i < n; ++i) {
    switch (rng() % 3) {
      case 0: parts.push_back(FiniteModule::free(a, 1 + rng() % 2)); break;
      case 1: parts.push_back(FiniteModule::residue_field(a)); break;
      default: parts.push_back(FiniteModule::cyclic(a, random_proper_ideal(*a, rng)));
    }
  }
  FiniteModule m = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) m = FiniteModule::direct_sum(m, parts[i]);
  return random_basis_change(m, rng);
}

}  // namespace

using Modules = BothFields;

TEST_P(Modules, FreeAndResidueField) {
  auto a = make_algebra(catalog()[2], field());
  FiniteModule f2 = FiniteModule::free(a, 2);
  EXPECT_TRUE(f2.validate().empty());
  auto r = f2.is_free();
  EXPECT_TRUE(r.free);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_FALSE(r.kernel_witness.has_value());
  EXPECT_TRUE(f2.is_faithful());

  FiniteModule k = FiniteModule::residue_field(a);
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.nu(), 1u);
  auto rk = k.is_free();
  EXPECT_FALSE(rk.free);
  ASSERT_TRUE(rk.kernel_witness.has_value());
  EXPECT_FALSE(rk.kernel_witness->is_zero());
  EXPECT_EQ(k.annihilator().cols(), a->dim() - 1);
}

TEST_P(Modules, ResidueFieldOverSquareZeroIdeal) {
  // k over k[x,y]/(x,y)^2 has Betti numbers 2^i.
  auto a = square_zero(field());
  FiniteModule k = FiniteModule::residue_field(a);
  EXPECT_EQ(k.poincare(3), (std::vector<std::size_t>{1, 2, 4, 8}));
  FreeComplex res = minimal_resolution(k, 3);
  EXPECT_EQ(res.ranks(), (std::vector<std::size_t>{1, 2, 4, 8}));
  EXPECT_TRUE(res.is_minimal());
  EXPECT_TRUE(res.validate().valid);
  EXPECT_EQ(k.syzygy().dim(), 2u);
  auto l = k.lemma43_freeness(3);
  EXPECT_FALSE(l.free);
}

TEST_P(Modules, PoincareOverDualNumbers) {
  auto a = monomial(field(), {"x"}, {"x^2"}, 1);
  EXPECT_EQ(FiniteModule::residue_field(a).poincare(4), (std::vector<std::size_t>(5, 1)));
  EXPECT_EQ(FiniteModule::free(a, 3).poincare(2), (std::vector<std::size_t>{3, 0, 0}));
}

TEST_P(Modules, DepthAndDimensionOverArtinianAlgebras) {
  auto a = make_algebra(catalog()[0], field());
  FiniteModule k = FiniteModule::residue_field(a);
  EXPECT_EQ(k.depth().kind, Bound::Kind::exact);
  EXPECT_EQ(k.depth().value, 0);
  EXPECT_EQ(k.dim_module().value, 0);
  FiniteModule zero = FiniteModule::free(a, 0);
  EXPECT_EQ(zero.depth().kind, Bound::Kind::plus_infinity);
  EXPECT_EQ(zero.dim_module().kind, Bound::Kind::minus_infinity);
}

TEST_P(Modules, CyclicModulesAndAnnihilators) {
  auto a = make_algebra(catalog()[4], field());
  Matrix ideal = a->ideal_span({a->parse("x"), a->parse("y*z")});
  FiniteModule m = FiniteModule::cyclic(a, ideal);
  EXPECT_EQ(m.dim(), a->dim() - ideal.cols());
  EXPECT_EQ(m.nu(), 1u);
  Matrix ann = m.annihilator();
  EXPECT_EQ(rank(Matrix::hstack({ann, ideal})), ideal.cols());
  EXPECT_EQ(ann.cols(), ideal.cols());
  EXPECT_FALSE(m.is_free().free);
}

TEST_P(Modules, LemmaAgreesWithDirectFreenessCheck) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = make_algebra(catalog()[trial % 5], field());
    FiniteModule m = random_module(a, rng);
    ASSERT_TRUE(m.validate().empty());
    auto direct = m.is_free();
    auto lemma = m.lemma43_freeness(2);
    EXPECT_EQ(direct.free, lemma.free) << "trial " << trial;
    EXPECT_EQ(direct.rank, m.nu());
    if (direct.free) EXPECT_EQ(m.dim(), direct.rank * a->dim());
  }
}

TEST_P(Modules, NonFreeModulesHaveInfiniteProjectiveDimension) {
  // Over an Artinian local ring depth A = depth M = 0, so finite projective
  // dimension forces freeness.
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = make_algebra(catalog()[trial % 5], field());
    FiniteModule m = random_module(a, rng);
    if (m.is_free().free) continue;
    for (std::size_t b : m.poincare(3)) EXPECT_GT(b, 0u) << "trial " << trial;
  }
}

TEST_P(Modules, BasisChangeKeepsInvariants) {
  std::mt19937_64 rng(99);
  auto a = make_algebra(catalog()[3], field());
  FiniteModule m = FiniteModule::direct_sum(FiniteModule::residue_field(a),
                                            FiniteModule::cyclic(a, a->ideal_span({a->parse("x")})));
  for (int i = 0; i < 5; ++i) {
    FiniteModule c = random_basis_change(m, rng);
    EXPECT_EQ(c.nu(), m.nu());
    EXPECT_EQ(c.poincare(2), m.poincare(2));
    EXPECT_EQ(c.annihilator().cols(), m.annihilator().cols());
  }
}

TEST_P(Modules, RestrictionAlongAMorphism) {
  Field f = field();
  auto a = square_zero(f);
  auto b = monomial(f, {"u"}, {"u^4"}, 3);
  auto phi = AlgebraMorphism::from_images(a, b, {{"x", b->parse("u^2")}, {"y", b->parse("u^3")}});
  FiniteModule r = FiniteModule::free(b, 1).restrict(phi);
  EXPECT_EQ(r.dim(), 4u);
  EXPECT_TRUE(r.validate().empty());
  // B / m_A B = k[u]/(u^2).
  EXPECT_EQ(r.nu(), 2u);
  EXPECT_FALSE(r.is_free().free);
}

TEST_P(Modules, TorAgainstTheResidueField) {
  auto a = square_zero(field());
  ModuleComplex c;
  c.terms.push_back(FiniteModule::residue_field(a));
  EXPECT_TRUE(c.validate().empty());
  EXPECT_EQ(tor_with_residue(c, 2), (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_EQ(c.homology(0).dim(), 1u);
}

FREECRIT_BOTH_FIELDS(Modules);
