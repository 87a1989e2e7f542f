#include <random>

#include <gtest/gtest.h>

#include "freecrit/homotopy.hpp"
#include "freecrit/koszul.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"

using namespace freecrit;
using namespace freecrit::testing;

namespace {

AlgebraPtr algebra(const Field& f, std::size_t index) { return make_algebra(catalog()[index], f); }

// Projection of the full coupled system onto the a-coordinates.
Matrix reference_annihilator(const FreeComplex& f) {
  HomotopySystem sys(f, f);
  return SplitSystem(Matrix::hstack({sys.scalar_columns(), -sys.matrix()}), f.algebra()->dim()).projection();
}

bool same_span(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return a.cols() == 0 && b.cols() == 0 ? true : rank(a) + rank(b) == 0;
  std::size_t r = rank(a);
  return r == rank(b) && rank(Matrix::hstack({a, b})) == r;
}

FreeComplex random_complex(const AlgebraPtr& a, std::mt19937_64& rng) {
  std::vector<FreeComplex> parts;
  const std::size_t pieces = 1 + rng() % 2;
  for (std::size_t p = 0; p < pieces; ++p) {
    switch (rng() % 3) {
      case 0: {
        std::vector<Matrix> xs;
        for (std::size_t i = 0, n = 1 + rng() % 2; i < n; ++i) xs.push_back(random_element(*a, rng, true));
        parts.push_back(koszul(a, xs));
        break;
      }
      case 1:
        parts.push_back(minimal_resolution(FiniteModule::cyclic(a, random_proper_ideal(*a, rng)), 2));
        break;
      default:
        parts.push_back(koszul(a, {a->parse("x"), a->parse("y")}));
    }
  }
  FreeComplex f = direct_sum(parts);
  return conjugate(f, random_automorphism(f, rng));
}

void expect_witnesses(const FreeComplex& f, const DerivedAnnihilator& ann) {
  ASSERT_EQ(ann.witnesses.size(), ann.basis.cols());
  for (std::size_t c = 0; c < ann.basis.cols(); ++c)
    EXPECT_TRUE(is_homotopy(f, f, scalar_map(f, ann.basis.col(c)), ann.witnesses[c]));
}

}  // namespace

using Homotopies = BothFields;

TEST_P(Homotopies, KoszulContractionSolvesDhPlusHd) {
  auto a = algebra(field(), 4);
  std::vector<Matrix> xs{a->parse("x"), a->parse("y"), a->parse("z")};
  FreeComplex k = koszul(a, xs);
  EXPECT_TRUE(k.validate().valid);
  for (std::size_t i = 0; i < 3; ++i) {
    Homotopy s = koszul_contraction(k, 3, i);
    EXPECT_TRUE(is_homotopy(k, k, scalar_map(k, xs[i]), s));
    EXPECT_FALSE(is_homotopy(k, k, scalar_map(k, a->one()), s));
  }
}

TEST_P(Homotopies, SolverFindsOrRefuses) {
  auto a = algebra(field(), 0);
  FreeComplex k = koszul(a, {a->parse("x")});
  auto h = solve_homotopy(k, k, scalar_map(k, a->parse("x")));
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(is_homotopy(k, k, scalar_map(k, a->parse("x")), *h));
  EXPECT_FALSE(solve_homotopy(k, k, scalar_map(k, a->parse("y"))).has_value());
  EXPECT_FALSE(solve_homotopy(k, k, identity_map(k)).has_value());
}

TEST_P(Homotopies, AnnihilatorExamples) {
  auto a = algebra(field(), 4);
  FreeComplex kx = koszul(a, {a->parse("x")});
  DerivedAnnihilator ax = derived_annihilator(kx);
  EXPECT_TRUE(same_span(ax.basis, a->ideal_span({a->parse("x")})));
  EXPECT_TRUE(ax.is_ideal);
  expect_witnesses(kx, ax);

  FreeComplex kxy = koszul(a, {a->parse("x"), a->parse("y")});
  EXPECT_TRUE(same_span(derived_annihilator(kxy).basis, a->ideal_span({a->parse("x"), a->parse("y")})));

  FreeComplex kall = koszul(a, {a->parse("x"), a->parse("y"), a->parse("z")});
  DerivedAnnihilator am = derived_annihilator(kall);
  EXPECT_TRUE(same_span(am.basis, a->m_power(1)));
  EXPECT_TRUE(am.contains(a->parse("x*y*z")));
  EXPECT_FALSE(am.contains(a->one()));

  // 0 -> A -> 0 is not contractible by anything but 0.
  FreeComplex single(a, {1}, {});
  EXPECT_EQ(derived_annihilator(single).basis.cols(), 0u);
}

TEST_P(Homotopies, StagedAgreesWithFullSystem) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 24; ++trial) {
    auto a = algebra(field(), trial % 4);
    FreeComplex f = random_complex(a, rng);
    ASSERT_TRUE(f.validate().valid);
    DerivedAnnihilator ann = derived_annihilator(f);
    EXPECT_TRUE(same_span(ann.basis, reference_annihilator(f))) << "trial " << trial;
    EXPECT_TRUE(ann.is_ideal);
    expect_witnesses(f, ann);
  }
}

TEST_P(Homotopies, AnnihilatorIsConjugationInvariant) {
  std::mt19937_64 rng(7);
  auto a = algebra(field(), 3);
  FreeComplex k = koszul(a, {a->parse("x"), a->parse("z")});
  Matrix base = derived_annihilator(k).basis;
  for (int i = 0; i < 5; ++i) {
    FreeComplex c = conjugate(k, random_automorphism(k, rng));
    EXPECT_TRUE(same_span(derived_annihilator(c).basis, base));
  }
}

TEST_P(Homotopies, ClassEquivalence) {
  auto a = algebra(field(), 4);
  FreeComplex k = koszul(a, {a->parse("x"), a->parse("y")});
  ChainMap one = identity_map(k);
  ChainMap shifted = add(one, scalar_map(k, a->parse("x + 2*y")));
  EXPECT_TRUE(homotopy_class_eq(k, k, one, shifted));
  EXPECT_FALSE(homotopy_class_eq(k, k, one, add(one, scalar_map(k, a->parse("z")))));
  EXPECT_TRUE(homotopy_class_eq(k, k, scalar_map(k, a->parse("x*z")), scalar_map(k, a->parse("0"))));
}

TEST_P(Homotopies, SumOfWitnessesWitnessesTheSum) {
  auto a = algebra(field(), 4);
  FreeComplex k = koszul(a, {a->parse("x"), a->parse("y")});
  Homotopy sx = koszul_contraction(k, 2, 0), sy = koszul_contraction(k, 2, 1);
  Scalar three = field().from_int(3);
  Homotopy h = add(sx, scaled(sy, three));
  EXPECT_TRUE(is_homotopy(k, k, scalar_map(k, a->parse("x + 3*y")), h));
}

FREECRIT_BOTH_FIELDS(Homotopies);
