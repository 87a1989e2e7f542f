#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freecrit/amatrix.hpp"

namespace freecrit {

struct ComplexReport {
  bool valid = true;
  std::vector<std::string> failures;
};

/// Cycles modulo boundaries in one homological degree, with the induced
/// action of the algebra. Graded complexes only keep internal degrees <= D.
struct HomologyModule {
  std::size_t degree = 0;
  Matrix reps;        // columns: cycle representatives in k-coordinates of F_i
  Matrix boundaries;  // columns: basis of the boundaries (within the window)
  std::vector<Matrix> action;          // one per algebra basis element
  std::vector<int> internal_degrees;   // graded only, one per representative
  std::optional<int> window;           // truncation degree, graded only

  std::size_t dim() const noexcept { return reps.cols(); }
  /// Coordinates (dim x c) of the classes of the given cycles.
  Matrix classify(const Matrix& cycles) const;
};

/// Bounded complex F_top -> ... -> F_0 of finite free A-modules.
class FreeComplex {
 public:
  FreeComplex() = default;
  /// d[i-1] is d_i : F_i -> F_{i-1}, of shape r_{i-1} x r_i.
  FreeComplex(AlgebraPtr alg, std::vector<std::size_t> ranks, std::vector<AMatrix> d);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  std::size_t top() const noexcept { return ranks_.empty() ? 0 : ranks_.size() - 1; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  std::size_t rank(std::size_t i) const { return i < ranks_.size() ? ranks_[i] : 0; }
  /// Zero matrix of the right shape outside 1..top.
  AMatrix d(std::size_t i) const;
  const std::vector<AMatrix>& differentials() const noexcept { return d_; }

  void set_labels(std::vector<std::vector<std::string>> labels);
  const std::vector<std::vector<std::string>>& labels() const noexcept { return labels_; }
  /// Internal degrees of the generators (graded algebras). Inferred from the
  /// differentials when not set.
  void set_degrees(std::vector<std::vector<int>> degrees);
  const std::vector<std::vector<int>>& degrees() const noexcept { return degrees_; }
  /// Graded bookkeeping applies to homogeneous complexes, and always over a
  /// truncated model (where validate() reports inhomogeneous entries).
  bool graded() const noexcept;
  bool homogeneous() const noexcept { return homogeneous_; }

  ComplexReport validate() const;
  bool is_minimal() const;

  HomologyModule homology(std::size_t i) const;
  std::size_t homology_dim(std::size_t i) const;
  /// (inf, sup) of nonzero homology; empty when F is acyclic.
  std::optional<std::pair<std::size_t, std::size_t>> inf_sup() const;

  /// beta_i = dim_k H_i(F (x) k).
  std::vector<std::size_t> betti() const;
  /// Largest i with beta_i != 0; empty when F (x) k is acyclic.
  std::optional<std::size_t> proj_dim() const;

  /// Internal degree of each k-coordinate of F_i (graded only).
  std::vector<int> coordinate_degrees(std::size_t i) const;

 private:
  void infer_degrees();
  bool check_homogeneous() const;

  AlgebraPtr alg_;
  std::vector<std::size_t> ranks_;
  std::vector<AMatrix> d_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<int>> degrees_;
  bool homogeneous_ = true;
};

/// Degreewise maps f_i : F_i -> G_i (shape rank G_i x rank F_i).
struct ChainMap {
  std::vector<AMatrix> f;
};

/// Degreewise maps h_i : F_i -> G_{i+1}.
struct Homotopy {
  std::vector<AMatrix> h;
};

ChainMap identity_map(const FreeComplex& f);
/// f_i, or the zero map when i is out of range.
AMatrix component(const FreeComplex& src, const FreeComplex& dst, const ChainMap& f, std::size_t i);
ChainMap compose(const FreeComplex& f, const FreeComplex& g, const FreeComplex& h, const ChainMap& a,
                 const ChainMap& b);  // b after a

FreeComplex direct_sum(const FreeComplex& f, const FreeComplex& g);
FreeComplex direct_sum(const std::vector<FreeComplex>& parts);
/// (Sigma^n F)_i = F_{i-n} with differential (-1)^n d.
FreeComplex shift(const FreeComplex& f, std::size_t n);
/// cone_i = F_{i-1} + G_i, d(x, y) = (-d x, f x + d y).
FreeComplex cone(const FreeComplex& f, const FreeComplex& g, const ChainMap& map);
bool is_quasi_iso(const FreeComplex& f, const FreeComplex& g, const ChainMap& map);
/// g F g^-1: same ranks, differentials g_{i-1} d_i g_i^-1.
FreeComplex conjugate(const FreeComplex& f, const ChainMap& g);

}  // namespace freecrit
