#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freecrit/complex.hpp"
#include "freecrit/morphism.hpp"

namespace freecrit {

/// A value of N union {+inf, -inf}, possibly only a lower bound.
struct Bound {
  enum class Kind { exact, at_least, plus_infinity, minus_infinity };
  Kind kind = Kind::exact;
  long value = 0;

  static Bound exact(long v) { return {Kind::exact, v}; }
  static Bound at_least(long v) { return {Kind::at_least, v}; }
  static Bound plus_inf() { return {Kind::plus_infinity, 0}; }
  static Bound minus_inf() { return {Kind::minus_infinity, 0}; }
  std::string to_string() const;
};

struct FreenessResult {
  bool free = false;
  std::size_t rank = 0;             // minimal number of generators
  std::optional<int> window;        // "free up to degree D" when set
  std::optional<Matrix> kernel_witness;  // element of B^nu mapping to 0
};

struct Lemma43Result {
  bool free = false;
  std::size_t rank = 0;
  std::vector<std::size_t> betti;
};

/// Finite-dimensional module over an Artinian algebra, given by the action
/// of every algebra basis element on a k-basis.
class FiniteModule {
 public:
  FiniteModule(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> action, std::vector<int> degrees = {},
               std::optional<int> window = std::nullopt);

  static FiniteModule from_homology(AlgebraPtr alg, const HomologyModule& h);
  static FiniteModule free(AlgebraPtr alg, std::size_t rank);
  static FiniteModule residue_field(AlgebraPtr alg);
  /// A / I for an ideal spanned by the columns.
  static FiniteModule cyclic(AlgebraPtr alg, const Matrix& ideal);
  static FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b);
  /// Module over the source of phi obtained by restriction of scalars.
  FiniteModule restrict(const AlgebraMorphism& phi) const;

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Matrix>& action() const noexcept { return action_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  const std::optional<int>& window() const noexcept { return window_; }
  /// Action of an arbitrary algebra element.
  Matrix act(const Matrix& a) const;

  std::vector<std::string> validate() const;

  /// Columns span m M.
  Matrix m_times() const;
  std::size_t nu() const;
  /// Basis vectors of M whose classes form a basis of M / m M.
  Matrix minimal_generators() const;
  FreenessResult is_free() const;
  /// Columns span {a in A : a M = 0}.
  Matrix annihilator() const;
  bool is_faithful() const { return annihilator().cols() == 0; }
  /// Kernel of a minimal cover A^nu -> M.
  FiniteModule syzygy() const;
  /// beta_0 .. beta_n.
  std::vector<std::size_t> poincare(std::size_t n) const;
  Bound depth() const;
  Bound dim_module() const;
  Lemma43Result lemma43_freeness(std::size_t n) const;

 private:
  AlgebraPtr alg_;
  std::size_t dim_;
  std::vector<Matrix> action_;
  std::vector<int> degrees_;
  std::optional<int> window_;
};

/// Extends an A-module structure to a B-module structure along phi, given
/// the action of named elements of B (which together with phi(A) must
/// generate B). Failures are appended to `failures`.
std::optional<FiniteModule> extend_action(const FiniteModule& m, const AlgebraMorphism& phi,
                                          const std::vector<std::pair<std::string, Matrix>>& generators,
                                          std::vector<std::string>& failures);

/// Minimal free resolution with H_0 = M, up to homological degree n.
FreeComplex minimal_resolution(const FiniteModule& m, std::size_t n);

/// Bounded complex of finite modules; d[i-1] : terms[i] -> terms[i-1] is a
/// k-matrix commuting with the actions.
struct ModuleComplex {
  std::vector<FiniteModule> terms;
  std::vector<Matrix> d;

  std::size_t top() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }
  std::vector<std::string> validate() const;
  FiniteModule homology(std::size_t i) const;
  ModuleComplex restrict(const AlgebraMorphism& phi) const;
};

/// dim_k Tor_i(k, C) for i <= n, via the minimal resolution of k.
std::vector<std::size_t> tor_with_residue(const ModuleComplex& c, std::size_t n);

/// beta_0 .. beta_n of H_0(F) over A.
std::vector<std::size_t> poincare_truncated(const FreeComplex& f, std::size_t n);

}  // namespace freecrit
