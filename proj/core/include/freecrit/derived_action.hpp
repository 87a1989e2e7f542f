#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freecrit/homotopy.hpp"
#include "freecrit/module.hpp"
#include "freecrit/morphism.hpp"

namespace freecrit {

struct ActionGenerator {
  std::string name;
  ChainMap map;  // endomorphism of F
};

struct ActionRelation {
  std::string poly;                  // noncommutative, in generators and elements of A
  std::optional<Homotopy> witness;   // absent: exact, or found by the solver
};

/// Chain endomorphisms of F lifting generators of B, with the relations of
/// B holding up to homotopy.
struct ActionCertificate {
  AlgebraMorphism phi;
  std::vector<ActionGenerator> generators;
  std::vector<ActionRelation> relations;
};

struct RelationResult {
  enum class Method { exact, witness, solved, failed };
  std::string poly;
  Method method = Method::failed;
  std::optional<Homotopy> witness;
  std::string detail;

  bool passed() const noexcept { return method != Method::failed; }
};

const char* to_string(RelationResult::Method m);

struct CertificateReport {
  bool verified = true;
  std::vector<std::string> failures;
  std::vector<RelationResult> relations;
};

/// Value of a relation polynomial on F. Products are matrix products taken
/// left to right; elements of A act as scalars.
ChainMap evaluate_relation(const FreeComplex& f, const ActionCertificate& cert, const std::string& poly);

CertificateReport verify_certificate(const FreeComplex& f, const ActionCertificate& cert);

/// Chain maps C_l, one per basis element of B, obtained by multiplying out
/// generators and images of A. Defined up to homotopy when the certificate
/// is valid.
std::vector<ChainMap> lift_basis(const FreeComplex& f, const ActionCertificate& cert);

struct InducedHomologyAction {
  std::vector<FiniteModule> modules;                // over B, one per degree
  std::vector<std::vector<Matrix>> generator_matrices;  // [degree][generator]
};

/// Throws RelationFailsOnHomology when the induced matrices do not define
/// B-modules.
InducedHomologyAction induced_action_on_homology(const FreeComplex& f, const ActionCertificate& cert);

struct HActionReport {
  bool valid = true;
  std::vector<std::string> failures;
  std::vector<FiniteModule> modules;
};

/// Checks that the given matrices (per degree, per named generator of B)
/// extend the A-module structure of H_*(F) to a B-module structure.
HActionReport check_H_action_only(const FreeComplex& f, const AlgebraMorphism& phi, const std::vector<std::string>& names,
                                  const std::vector<std::vector<Matrix>>& matrices);

}  // namespace freecrit
