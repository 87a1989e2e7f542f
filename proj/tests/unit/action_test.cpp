#include <random>

#include <gtest/gtest.h>

#include "freecrit/checkers.hpp"
#include "freecrit/derived_action.hpp"
#include "freecrit/weyl.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"

using namespace freecrit;
using namespace freecrit::testing;

namespace {

const RelationResult& relation(const CertificateReport& r, const std::string& poly) {
  for (const auto& rel : r.relations)
    if (rel.poly == poly) return rel;
  throw std::runtime_error("no relation " + poly);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

using DerivedAction = BothFields;

TEST_P(DerivedAction, SquareRootCertificate) {
  InstanceBundle b = fixture_bundle("ex5.5", field());
  ASSERT_TRUE(b.certificate.has_value());
  EXPECT_TRUE(is_chain_map(b.F, b.F, b.certificate->generators[0].map));
  CertificateReport r = verify_certificate(b.F, *b.certificate);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(relation(r, "u^2 - x").method, RelationResult::Method::exact);
  EXPECT_EQ(relation(r, "u^3 - y").method, RelationResult::Method::witness);
}

TEST_P(DerivedAction, WrongWitnessIsRejected) {
  InstanceBundle b = fixture_bundle("ex5.5", field());
  ActionCertificate cert = *b.certificate;
  for (auto& rel : cert.relations)
    if (rel.witness) rel.witness = scaled(*rel.witness, field().from_int(-1));
  CertificateReport r = verify_certificate(b.F, cert);
  EXPECT_FALSE(r.verified);
  EXPECT_FALSE(relation(r, "u^3 - y").passed());
}

TEST_P(DerivedAction, SolverDischargesMissingWitnesses) {
  InstanceBundle b = fixture_bundle("ex5.5", field());
  ActionCertificate cert = *b.certificate;
  for (auto& rel : cert.relations) rel.witness.reset();
  CertificateReport r = verify_certificate(b.F, cert);
  EXPECT_TRUE(r.verified);
  const RelationResult& solved = relation(r, "u^3 - y");
  EXPECT_EQ(solved.method, RelationResult::Method::solved);
  ASSERT_TRUE(solved.witness.has_value());
  EXPECT_TRUE(is_homotopy(b.F, b.F, evaluate_relation(b.F, cert, "u^3 - y"), *solved.witness));
}

TEST_P(DerivedAction, NonChainMapGeneratorFails) {
  InstanceBundle b = fixture_bundle("ex5.5", field());
  ActionCertificate cert = *b.certificate;
  auto& u0 = cert.generators[0].map.f[0];
  u0.set(0, 0, b.A()->one());
  EXPECT_FALSE(verify_certificate(b.F, cert).verified);
}

TEST_P(DerivedAction, InducedActionMakesH0AFreeModule) {
  InstanceBundle b = fixture_bundle("ex5.6", field());
  InducedHomologyAction act = induced_action_on_homology(b.F, *b.certificate);
  ASSERT_FALSE(act.modules.empty());
  const FiniteModule& h0 = act.modules[0];
  EXPECT_TRUE(h0.validate().empty());
  auto r = h0.is_free();
  EXPECT_TRUE(r.free);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(lift_basis(b.F, *b.certificate).size(), b.morphism().target()->dim());
}

TEST_P(DerivedAction, HomologyActionDoesNotGiveADerivedAction) {
  // The H-level action of the counterexample is accepted, yet x is not in
  // the derived annihilator, so no certificate can exist.
  InstanceBundle b = fixture_bundle("ex2.3", field());
  ASSERT_TRUE(b.h_action.has_value());
  HActionReport h = check_H_action_only(b.F, b.morphism(), b.h_action_names, *b.h_action);
  EXPECT_TRUE(h.valid);
  DerivedAnnihilator ann = derived_annihilator(b.F);
  EXPECT_FALSE(ann.contains(b.A()->parse("x")));
  CheckReport q = check_question(b);
  EXPECT_EQ(q.hypotheses_verdict(), Verdict::fail);
  EXPECT_FALSE(q.refutes());
}

TEST_P(DerivedAction, CommutatorOfTheTwoDimensionalExample) {
  InstanceBundle b = fixture_bundle("ex5.7", field());
  CertificateReport r = verify_certificate(b.F, *b.certificate);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.relations.size(), 5u);
  for (const auto& rel : r.relations) EXPECT_TRUE(rel.passed()) << rel.poly << ": " << rel.detail;
}

using Weyl = BothFields;

TEST_P(Weyl, ExteriorModels) {
  for (std::size_t p = 1; p <= 3; ++p) {
    WModuleRep rep = exterior_model(field(), p, 2);
    EXPECT_TRUE(rep.shape_errors().empty());
    EXPECT_TRUE(check_weyl_relations(rep, true).passed);
    for (std::size_t i = 0; i <= p; ++i) EXPECT_EQ(rep.dims[i], binomial(p, i) * 2);
    for (std::size_t n = 1; n <= p; ++n)
      for (const auto& s : monotone_subsets(p, n)) EXPECT_TRUE(check_lemmaA1(rep, s));
    StructureMap sm = structure_map(rep);
    EXPECT_TRUE(sm.iso);
    EXPECT_TRUE(sm.nonvanishing);
    EXPECT_TRUE(sm.dimension_law);
  }
}

TEST_P(Weyl, PlantedSignErrorFails) {
  WModuleRep rep = exterior_model(field(), 2, 1);
  rep.T[1][0] = -rep.T[1][0];
  WeylReport r = check_weyl_relations(rep);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.failures.empty());
}

TEST_P(Weyl, ConjugatesKeepTheStructure) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 6; ++i) {
    WModuleRep rep = random_graded_conjugate(exterior_model(field(), 1 + i % 3, 1 + i % 2), rng);
    EXPECT_TRUE(check_weyl_relations(rep, true).passed);
    EXPECT_TRUE(structure_map(rep).iso);
  }
}

TEST_P(Weyl, RepresentationFromKoszulContractions) {
  auto a = make_algebra(catalog()[0], field());
  std::vector<Matrix> xs{a->parse("x"), a->parse("y")};
  FreeComplex k = koszul(a, xs);
  std::vector<Homotopy> h{koszul_contraction(k, 2, 0), koszul_contraction(k, 2, 1)};
  std::vector<Matrix> adapted{a->parse("x"), a->parse("y"), a->parse("z")};
  WModuleRep rep = rep_from_homotopies(k, adapted, h);
  EXPECT_TRUE(check_weyl_relations(rep).passed);
  EXPECT_EQ(rep.dims, (std::vector<std::size_t>{1, 2, 1}));
  KoszulLift lift = koszul_lift(k, xs, h);
  EXPECT_TRUE(is_chain_map(lift.source, k, lift.phi));
}

FREECRIT_BOTH_FIELDS(DerivedAction);
FREECRIT_BOTH_FIELDS(Weyl);
