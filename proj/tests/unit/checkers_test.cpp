#include <random>

#include <gtest/gtest.h>

#include "freecrit/checkers.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"

using namespace freecrit;
using namespace freecrit::testing;

namespace {

AlgebraPtr monomial(const Field& f, std::vector<std::string> vars, const std::vector<std::string>& ideal, int top) {
  return std::make_shared<const ArtinAlgebra>(GradedMonomialAlgebra::parse(std::move(vars), ideal, top).artinize(f));
}

}  // namespace

using Checkers = BothFields;

TEST_P(Checkers, TheoremOnTheWorkedExamples) {
  for (const char* name : {"ex5.5", "ex5.6"}) {
    InstanceBundle b = fixture_bundle(name, field());
    CheckReport r = check_thm51(b);
    EXPECT_EQ(r.verdict(), Verdict::pass) << name << "\n" << r.to_text();
    EXPECT_FALSE(r.refutes());
  }
  CheckReport open = check_thm51(fixture_bundle("ex5.7", field()));
  EXPECT_EQ(open.hypotheses_verdict(), Verdict::fail);
  CheckReport q = check_question(fixture_bundle("ex5.7", field()));
  EXPECT_FALSE(q.flags.empty());
  EXPECT_FALSE(q.refutes());
}

TEST_P(Checkers, CounterexampleMissesTheHypotheses) {
  InstanceBundle b = fixture_bundle("ex2.3", field());
  CheckReport r = check_thm31(b);
  EXPECT_EQ(r.hypotheses_verdict(), Verdict::fail);
  EXPECT_FALSE(r.refutes());
}

TEST_P(Checkers, DecomposeRecoversConjugatedKoszulComplexes) {
  std::mt19937_64 rng(77);
  auto a = make_algebra(catalog()[0], field());
  FreeComplex k2 = koszul_power(a, {"x", "y", "z"}, 2, 2);
  for (int i = 0; i < 3; ++i) {
    FreeComplex f = conjugate(k2, random_automorphism(k2, rng));
    KoszulDecomposition d = koszul_decompose(f);
    ASSERT_TRUE(d.success) << d.obstruction;
    EXPECT_EQ(d.p, 2u);
    EXPECT_EQ(d.multiplicity, 2u);
    ASSERT_TRUE(d.lift.has_value());
    EXPECT_TRUE(is_chain_map(d.lift->source, f, d.lift->phi));
    for (std::size_t j = 0; j <= f.top(); ++j) EXPECT_TRUE(d.lift->phi.f[j].inverse().has_value());
  }
  KoszulDecomposition self = koszul_decompose(koszul(a, {a->parse("x")}));
  EXPECT_TRUE(self.success);
  EXPECT_EQ(self.multiplicity, 1u);
}

TEST_P(Checkers, DecomposeReportsAnObstruction) {
  InstanceBundle b = fixture_bundle("ex5.5", field());
  KoszulDecomposition d = koszul_decompose(b.F);
  EXPECT_FALSE(d.success);
  EXPECT_FALSE(d.obstruction.empty());
  EXPECT_FALSE(d.lift.has_value());
}

TEST_P(Checkers, BettiPolynomialDivisibility) {
  auto a = make_algebra(catalog()[4], field());
  FreeComplex k = koszul_power(a, {"x", "y", "z"}, 2, 1);
  auto r = prop44_divisibility(direct_sum({k, k, shift(k, 1)}), 2);
  EXPECT_TRUE(r.precondition);
  EXPECT_TRUE(r.divisible);
  EXPECT_EQ(r.quotient, (std::vector<long>{2, 1}));
  auto three = prop44_divisibility(koszul_power(a, {"x", "y", "z"}, 2, 3), 2);
  EXPECT_EQ(three.quotient, (std::vector<long>{3}));
  auto none = prop44_divisibility(k, 0);
  EXPECT_TRUE(none.divisible);
  EXPECT_EQ(none.quotient, (std::vector<long>{1, 2, 1}));
}

TEST_P(Checkers, CompleteIntersections) {
  Field f = field();
  EXPECT_EQ(is_artinian_ci(monomial(f, {"x", "y"}, {"x^2", "y^3"}, 3)).verdict, Verdict::pass);
  EXPECT_EQ(is_artinian_ci(monomial(f, {"x"}, {"x^4"}, 3)).verdict, Verdict::pass);
  EXPECT_EQ(is_artinian_ci(make_algebra(catalog()[0], f)).verdict, Verdict::fail);

  auto a = monomial(f, {"x"}, {"x^4"}, 3);
  auto id = AlgebraMorphism::from_images(a, a, {{"x", a->parse("x")}});
  EXPECT_EQ(is_exceptional_ci_surjective(id).verdict, Verdict::pass);
  auto two = monomial(f, {"x", "y"}, {"x^2", "y^2"}, 2);
  auto to_y = monomial(f, {"y"}, {"y^2"}, 1);
  auto quot = AlgebraMorphism::from_images(two, to_y, {{"x", to_y->parse("0")}, {"y", to_y->parse("y")}});
  EXPECT_EQ(is_exceptional_ci_surjective(quot).verdict, Verdict::fail);
}

TEST_P(Checkers, KoszulOnCommutingEndomorphisms) {
  auto a = make_algebra(catalog()[0], field());
  AMatrix z = AMatrix::scalar(a, 2, a->parse("x"));
  FreeComplex k = koszul_on_endomorphisms(a, {z});
  EXPECT_EQ(k.ranks(), (std::vector<std::size_t>{2, 2}));
  EXPECT_TRUE(k.validate().valid);
  CheckReport r = check_question58(k, {z});
  EXPECT_EQ(r.verdict(), Verdict::pass) << r.to_text();
}

TEST(Verdicts, Conjunction) {
  EXPECT_EQ(conjunction({}), Verdict::pass);
  EXPECT_EQ(conjunction({Verdict::pass, Verdict::not_applicable}), Verdict::not_applicable);
  EXPECT_EQ(conjunction({Verdict::not_applicable, Verdict::fail}), Verdict::fail);
  CheckReport r;
  r.hypothesis("h", "1", "<= 1", Verdict::pass);
  r.conclusion("c", "0", "= 1", Verdict::fail);
  EXPECT_TRUE(r.refutes());
  EXPECT_EQ(r.verdict(), Verdict::fail);
  ASSERT_NE(r.find("c"), nullptr);
  EXPECT_EQ(r.find("zzz"), nullptr);
}

FREECRIT_BOTH_FIELDS(Checkers);
