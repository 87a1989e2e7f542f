#pragma once

#include <string>
#include <utility>
#include <vector>

#include "freecrit/algebra.hpp"

namespace freecrit {

/// Local homomorphism A -> B of Artinian algebras, stored as a k-linear map.
class AlgebraMorphism {
 public:
  /// Images of named elements of A (which must generate A as a k-algebra).
  /// Throws NotWellDefined if a relation of A is not respected and NotLocal
  /// if m_A is not sent into m_B.
  static AlgebraMorphism from_images(AlgebraPtr source, AlgebraPtr target,
                                     std::vector<std::pair<std::string, Matrix>> images);
  static AlgebraMorphism identity(AlgebraPtr algebra);

  const AlgebraPtr& source() const noexcept { return source_; }
  const AlgebraPtr& target() const noexcept { return target_; }
  /// dim B x dim A
  const Matrix& matrix() const noexcept { return map_; }
  const std::vector<std::pair<std::string, Matrix>>& images() const noexcept { return images_; }

  Matrix apply(const Matrix& a) const { return map_ * a; }
  /// Columns span ker(phi), an ideal of A.
  Matrix kernel() const;
  bool is_surjective() const;
  /// Columns span the ideal m_A B of B.
  Matrix mAB() const;
  /// Minimal number of generators of m_A B as a B-module.
  std::size_t beta0_of_mAB() const;

 private:
  AlgebraMorphism(AlgebraPtr s, AlgebraPtr t, Matrix map, std::vector<std::pair<std::string, Matrix>> images)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(map)), images_(std::move(images)) {}

  AlgebraPtr source_;
  AlgebraPtr target_;
  Matrix map_;
  std::vector<std::pair<std::string, Matrix>> images_;
};

/// dim_k N / m N for an ideal (or submodule of A) spanned by the columns.
std::size_t minimal_generator_count(const ArtinAlgebra& alg, const Matrix& span);
/// Lifts of a basis of N/mN (columns).
Matrix minimal_generators(const ArtinAlgebra& alg, const Matrix& span);

}  // namespace freecrit
