#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freecrit/derived_action.hpp"
#include "freecrit/monomial.hpp"
#include "freecrit/report.hpp"
#include "freecrit/weyl.hpp"

namespace freecrit {

/// The data A, B, phi and F of the question, with either a derived action
/// (certificate) or only an action on homology.
struct InstanceBundle {
  std::string name;
  FreeComplex F;
  std::optional<AlgebraMorphism> phi;
  std::optional<ActionCertificate> certificate;
  std::vector<std::string> h_action_names;
  std::optional<std::vector<std::vector<Matrix>>> h_action;  // [degree][generator]
  // Monomial presentations, when A or B come from the graded backend.
  std::optional<GradedMonomialAlgebra> monomial_A, monomial_B;

  const AlgebraPtr& A() const { return F.algebra(); }
  const AlgebraMorphism& morphism() const;
};

CheckReport check_question(const InstanceBundle& b);
CheckReport check_lemma32(const InstanceBundle& b);
CheckReport check_thm31(const InstanceBundle& b);
CheckReport check_thm51(const InstanceBundle& b);

struct CIResult {
  Verdict verdict = Verdict::not_applicable;
  std::string detail;
};

/// Surjective phi only: ker(phi) is generated by part of a minimal system of
/// generators of m_A that is a regular sequence (H_1 of its Koszul complex
/// vanishes).
CIResult is_exceptional_ci_surjective(const AlgebraMorphism& phi);

/// Artinian local ring C is a complete intersection iff the second Betti
/// number of k is C(e+1, 2), e = edim C; the numbers up to degree 3 are
/// compared with C(e+i-1, i).
CIResult is_artinian_ci(const AlgebraPtr& c);

/// A complex of B-modules from a certificate whose relations hold on the
/// nose; empty (with failures) otherwise.
std::optional<ModuleComplex> strict_from_certificate(const FreeComplex& f, const ActionCertificate& cert,
                                                     std::vector<std::string>& failures);
/// F is a complex of B-modules; checks Tor^A_i(k, F) = 0 above edim A - edim B.
CheckReport check_thm41(const ModuleComplex& f, const AlgebraMorphism& phi);

struct KoszulDecomposition {
  bool success = false;
  std::size_t p = 0;
  std::size_t multiplicity = 0;
  std::vector<Matrix> x;
  std::optional<KoszulLift> lift;
  std::size_t annihilator_dim = 0;
  std::size_t annihilator_rank_mod_m2 = 0;
  std::string obstruction;
};

/// Looks for p = proj dim F elements of the derived annihilator independent
/// modulo m^2 and lifts K(x) (x) F_0 -> F. Since the annihilator is a
/// subspace, greedy selection over its basis is exhaustive.
KoszulDecomposition koszul_decompose(const FreeComplex& f);

struct Prop44Result {
  bool precondition = false;  // c elements of the derived annihilator independent mod m^2
  bool divisible = false;
  std::vector<long> betti;
  std::vector<long> quotient;  // Betti polynomial divided by (1+t)^c
};

Prop44Result prop44_divisibility(const FreeComplex& f, std::size_t c);

/// Is F isomorphic to K(z_1..z_c) (x) F_0 for commuting endomorphisms z_i of
/// F_0? Verifies a supplied chain map, or tries +-identity in each degree.
CheckReport check_question58(const FreeComplex& f, const std::vector<AMatrix>& z,
                             const std::optional<ChainMap>& candidate = std::nullopt);

/// K(z) (x) F_0 for commuting b x b matrices z.
FreeComplex koszul_on_endomorphisms(const AlgebraPtr& alg, const std::vector<AMatrix>& z);

}  // namespace freecrit
