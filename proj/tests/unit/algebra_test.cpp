#include <random>

#include <gtest/gtest.h>

#include "freecrit/errors.hpp"
#include "freecrit/monomial.hpp"
#include "freecrit/morphism.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"

using namespace freecrit;
using namespace freecrit::testing;

namespace {

AlgebraPtr monomial(const Field& f, std::vector<std::string> vars, const std::vector<std::string>& ideal, int top) {
  return std::make_shared<const ArtinAlgebra>(GradedMonomialAlgebra::parse(std::move(vars), ideal, top).artinize(f));
}

AlgebraPtr square_zero_xy(const Field& f) {
  // k[x,y]/(x,y)^2 from structure constants: e0 = 1, e1 = x, e2 = y.
  std::vector<ArtinAlgebra::Constant> c;
  for (std::size_t j = 0; j < 3; ++j) {
    c.push_back({0, j, j, f.one()});
    if (j > 0) c.push_back({j, 0, j, f.one()});
  }
  return std::make_shared<const ArtinAlgebra>(ArtinAlgebra::from_constants(f, {"1", "x", "y"}, c));
}

}  // namespace

using Algebra = BothFields;

TEST_P(Algebra, StructureConstantsValidate) {
  auto a = square_zero_xy(field());
  EXPECT_TRUE(a->validate().valid);
  EXPECT_EQ(a->edim(), 2u);
  EXPECT_EQ(a->nilpotency_index(), 2u);
  EXPECT_TRUE(a->mul(a->parse("x"), a->parse("y")).is_zero());
}

TEST_P(Algebra, BrokenAssociativityIsReported) {
  Field f = field();
  // x*x = y but x*y = 0 and y*x = x: not associative ((x x) x = y x = x, x (x x) = x y = 0).
  std::vector<ArtinAlgebra::Constant> c{{0, 0, 0, f.one()}, {0, 1, 1, f.one()}, {0, 2, 2, f.one()},
                                        {1, 0, 1, f.one()}, {2, 0, 2, f.one()}, {1, 1, 2, f.one()},
                                        {2, 1, 1, f.one()}};
  ArtinAlgebra bad = ArtinAlgebra::from_constants(f, {"1", "x", "y"}, c);
  auto report = bad.validate();
  EXPECT_FALSE(report.valid);
  EXPECT_FALSE(report.failures.empty());
}

TEST_P(Algebra, MonomialQuotients) {
  Field f = field();
  auto b = monomial(f, {"u"}, {"u^4"}, 4);
  EXPECT_EQ(b->dim(), 4u);
  EXPECT_EQ(b->labels(), (std::vector<std::string>{"1", "u", "u^2", "u^3"}));
  auto uv = monomial(f, {"u", "v"}, {"u^4", "u^3*v", "u^2*v^2", "u*v^3", "v^4"}, 4);
  EXPECT_EQ(uv->dim(), 10u);
  EXPECT_EQ(uv->nilpotency_index(), 4u);
  EXPECT_EQ(uv->edim(), 2u);
  EXPECT_TRUE(uv->validate().valid);
  EXPECT_EQ(monomial(f, {"x"}, {"x"}, 1)->dim(), 1u);
  EXPECT_EQ(monomial(f, {"x", "y", "z"}, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}, 2)->edim(), 3u);
  EXPECT_THROW(GradedMonomialAlgebra::parse({"x", "y"}, {"x^2", "x*y"}, 6).artinize(f), NotArtinian);
}

TEST_P(Algebra, TruncatedModelKeepsHilbertFunction) {
  auto g = GradedMonomialAlgebra::parse({"x", "y"}, {"x^2", "x*y"}, 6);
  EXPECT_EQ(g.krull_dim(), 1u);
  ArtinAlgebra t = g.truncated_model(field());
  ASSERT_TRUE(t.grading().has_value());
  EXPECT_TRUE(t.grading()->truncated);
  EXPECT_EQ(t.grading()->truncation, 6);
  // 1, then x and y, then one monomial y^d per degree.
  EXPECT_EQ(t.dim(), 1u + 2u + 5u);
  for (int d = 2; d <= 6; ++d) EXPECT_EQ(g.hilbert(d), 1u);
}

TEST_P(Algebra, AdaptedBasis) {
  Field f = field();
  auto a = square_zero_xy(f);
  auto ab = a->adapted_basis({a->parse("x")});
  ASSERT_EQ(ab.generators.size(), 2u);
  EXPECT_EQ(ab.generators[0], a->parse("x"));
  EXPECT_THROW(a->adapted_basis({a->parse("x"), a->parse("x")}), DependentModM2);
  auto uv = monomial(f, {"u", "v"}, {"u^4", "u^3*v", "u^2*v^2", "u*v^3", "v^4"}, 4);
  auto ab2 = uv->adapted_basis({uv->parse("u+v")});
  ASSERT_EQ(ab2.generators.size(), 2u);
  Matrix lin = Matrix::hstack({uv->linear_part(ab2.generators[0]), uv->linear_part(ab2.generators[1])});
  EXPECT_EQ(rank(lin), 2u);
}

TEST_P(Algebra, MinimalGeneratorCounts) {
  Field f = field();
  auto b = monomial(f, {"u"}, {"u^4"}, 4);
  Matrix n = b->ideal_span({b->parse("u^2"), b->parse("u^3")});
  EXPECT_EQ(minimal_generator_count(*b, n), 1u);
  EXPECT_EQ(minimal_generator_count(*b, Matrix(f, b->dim(), 0)), 0u);
}

TEST_P(Algebra, EdimEqualsNuOfMaximalIdeal) {
  for (const auto& e : catalog()) {
    AlgebraPtr a = make_algebra(e, field());
    EXPECT_EQ(minimal_generator_count(*a, a->m_power(1)), a->edim()) << e.name;
    EXPECT_TRUE(a->validate().valid) << e.name;
  }
}

TEST_P(Algebra, UnitInverse) {
  auto a = monomial(field(), {"x", "y"}, {"x^3", "y^2"}, 4);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    Matrix u = a->one() + random_element(*a, rng, true);
    EXPECT_EQ(a->mul(u, a->unit_inverse(u)), a->one());
  }
  EXPECT_THROW(a->unit_inverse(a->parse("x")), NotLocal);
}

TEST_P(Algebra, ParseAndFormatRoundTrip) {
  auto a = monomial(field(), {"x", "y"}, {"x^3", "y^2"}, 4);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 30; ++i) {
    Matrix v = random_element(*a, rng);
    EXPECT_EQ(a->parse(a->format(v)), v) << a->format(v);
  }
  EXPECT_THROW(a->parse("x +* y"), ParseError);
  EXPECT_THROW(a->parse("w"), ParseError);
}

TEST_P(Algebra, MorphismsOfTheExamples) {
  Field f = field();
  auto a2 = square_zero_xy(f);
  auto b4 = monomial(f, {"u"}, {"u^4"}, 4);
  auto phi55 = AlgebraMorphism::from_images(a2, b4, {{"x", b4->parse("u^2")}, {"y", b4->parse("u^3")}});
  EXPECT_EQ(phi55.beta0_of_mAB(), 1u);
  EXPECT_FALSE(phi55.is_surjective());

  auto a3 = monomial(f, {"x", "y", "z"}, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}, 2);
  auto b6 = monomial(f, {"u"}, {"u^6"}, 6);
  auto phi56 = AlgebraMorphism::from_images(
      a3, b6, {{"x", b6->parse("u^3")}, {"y", b6->parse("u^4")}, {"z", b6->parse("u^5")}});
  EXPECT_EQ(phi56.beta0_of_mAB(), 1u);

  auto uv = monomial(f, {"u", "v"}, {"u^4", "u^3*v", "u^2*v^2", "u*v^3", "v^4"}, 4);
  auto phi57 = AlgebraMorphism::from_images(
      a3, uv, {{"x", uv->parse("u^2")}, {"y", uv->parse("u*v")}, {"z", uv->parse("v^2")}});
  EXPECT_EQ(phi57.beta0_of_mAB(), 3u);

  // x -> u is not well defined: x^2 = 0 in A but u^2 != 0 in B.
  EXPECT_THROW(AlgebraMorphism::from_images(a2, b4, {{"x", b4->parse("u")}, {"y", b4->parse("0")}}),
               NotWellDefined);
  EXPECT_THROW(AlgebraMorphism::from_images(a2, b4, {{"x", b4->parse("1")}, {"y", b4->parse("0")}}), Error);
}

TEST_P(Algebra, QuotientMorphism) {
  Field f = field();
  auto a = monomial(f, {"x", "y"}, {"x^3", "y^2"}, 4);
  auto q = a->quotient(a->ideal_span({a->parse("x")}));
  EXPECT_EQ(q.algebra->dim(), 2u);
  EXPECT_EQ(q.algebra->edim(), 1u);
}

FREECRIT_BOTH_FIELDS(Algebra);
