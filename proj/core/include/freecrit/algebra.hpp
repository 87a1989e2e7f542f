#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freecrit/matrix.hpp"

namespace freecrit {

/// Internal degrees of the basis of a graded algebra. When `truncated` is set
/// the algebra is the model A/m^(D+1) of an infinite-dimensional ring, and
/// only statements about degrees <= D are meaningful.
struct Grading {
  std::vector<int> degrees;
  int truncation = 0;
  bool truncated = false;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> failures;
  std::size_t nilpotency_index = 0;  // least N with m^N = 0
};

struct AdaptedBasis {
  std::vector<Matrix> generators;  // lifts of a basis of m/m^2
  Matrix m2_basis;                 // columns span m^2
};

/// Commutative local k-algebra of finite dimension with basis e_0 = 1, e_1,
/// ..., where m = span(e_1, ...). Elements are dim x 1 coordinate columns.
class ArtinAlgebra {
 public:
  /// mult[i] is left multiplication by e_i: column j holds e_i * e_j.
  ArtinAlgebra(Field field, std::vector<std::string> labels, std::vector<Matrix> mult,
               std::optional<Grading> grading = std::nullopt);

  /// c[i][j][k] given as (i, j, k, value) quadruples; unlisted entries are 0.
  struct Constant {
    std::size_t i, j, k;
    Scalar value;
  };
  static ArtinAlgebra from_constants(Field field, std::vector<std::string> labels,
                                     const std::vector<Constant>& constants);
  /// The field itself, as a one-dimensional algebra.
  static ArtinAlgebra ground(Field field);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Matrix& mult(std::size_t i) const { return mult_.at(i); }
  const std::optional<Grading>& grading() const noexcept { return grading_; }
  bool graded() const noexcept { return grading_.has_value(); }

  /// Extra names usable in element strings (variables of a monomial algebra).
  void set_names(std::map<std::string, Matrix> names) { names_ = std::move(names); }
  const std::map<std::string, Matrix>& names() const noexcept { return names_; }

  ValidationReport validate() const;

  Matrix zero() const { return Matrix(field_, dim(), 1); }
  Matrix one() const { return basis(0); }
  Matrix basis(std::size_t i) const;
  Matrix mult_matrix(const Matrix& a) const;
  Matrix mul(const Matrix& a, const Matrix& b) const { return mult_matrix(a) * b; }
  Matrix pow(const Matrix& a, unsigned n) const;
  Matrix scalar(const Scalar& s) const;
  /// Inverse of a unit; throws NotLocal for elements of m.
  Matrix unit_inverse(const Matrix& a) const;
  bool in_m(const Matrix& a) const { return a.entry_is_zero(0, 0); }

  Matrix parse(std::string_view text) const;
  std::string format(const Matrix& a) const;

  /// Columns span m^k (k >= 1).
  Matrix m_power(std::size_t k) const;
  std::size_t nilpotency_index() const;
  /// Columns span the ideal generated by the given elements.
  Matrix ideal_span(const std::vector<Matrix>& gens) const;
  /// Columns span m * span(cols of v), where v spans an ideal or submodule.
  Matrix m_times(const Matrix& v) const;

  std::size_t edim() const;
  /// Coordinates of an element of m in m/m^2 (edim x 1).
  Matrix linear_part(const Matrix& a) const;
  AdaptedBasis adapted_basis(const std::vector<Matrix>& prescribed) const;

  /// Quotient by the ideal spanned by the columns of `ideal` (must be an
  /// ideal inside m). The projection A -> A/I is returned as well.
  struct Quotient;
  Quotient quotient(const Matrix& ideal) const;

  /// Nonzero socle elements: a in m with m*a = 0 (columns).
  Matrix socle() const;

 private:
  void build_linear_projection();

  Field field_;
  std::vector<std::string> labels_;
  std::vector<Matrix> mult_;
  std::optional<Grading> grading_;
  std::map<std::string, Matrix> names_;
  Matrix linear_proj_;  // edim x dim
};

using AlgebraPtr = std::shared_ptr<const ArtinAlgebra>;

struct ArtinAlgebra::Quotient {
  AlgebraPtr algebra;
  Matrix projection;  // dim(A/I) x dim(A)
};

}  // namespace freecrit
