#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freecrit/algebra.hpp"

namespace freecrit {

/// Matrix with entries in an Artinian algebra A. Stored "stacked": a
/// (rows*dim A) x cols k-matrix whose row r*dim+l holds coordinate l of row r.
class AMatrix {
 public:
  AMatrix() = default;
  AMatrix(AlgebraPtr alg, std::size_t rows, std::size_t cols);
  AMatrix(AlgebraPtr alg, std::size_t rows, std::size_t cols, Matrix stacked);

  static AMatrix identity(AlgebraPtr alg, std::size_t n);
  /// a times the n x n identity.
  static AMatrix scalar(AlgebraPtr alg, std::size_t n, const Matrix& a);
  /// Entries taken from the ground field.
  static AMatrix constant(AlgebraPtr alg, const Matrix& k_matrix);
  /// Inverse of flatten().
  static AMatrix from_flat(AlgebraPtr alg, std::size_t rows, std::size_t cols, const Matrix& flat);
  static AMatrix hstack(const std::vector<AMatrix>& blocks);
  static AMatrix vstack(const std::vector<AMatrix>& blocks);
  static AMatrix block_diag(const std::vector<AMatrix>& blocks);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Matrix& stacked() const noexcept { return stacked_; }

  Matrix entry(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Matrix& a);
  bool entry_is_zero(std::size_t r, std::size_t c) const;

  AMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const AMatrix& b);

  /// The k-linear map on coordinates: (rows*dim) x (cols*dim).
  Matrix flatten() const;
  /// Reduction modulo m: a rows x cols k-matrix.
  Matrix residue() const;
  bool is_zero() const { return stacked_.is_zero(); }
  bool entries_in_m() const { return residue().is_zero(); }
  AMatrix transpose() const;

  AMatrix scaled(const Matrix& a) const;
  AMatrix scaled(const Scalar& s) const;
  AMatrix operator-() const;
  friend AMatrix operator+(const AMatrix& a, const AMatrix& b);
  friend AMatrix operator-(const AMatrix& a, const AMatrix& b);
  friend AMatrix operator*(const AMatrix& a, const AMatrix& b);
  friend bool operator==(const AMatrix& a, const AMatrix& b);

  std::optional<AMatrix> inverse() const;
  std::vector<std::vector<std::string>> format() const;
  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Matrix stacked_;
};

}  // namespace freecrit
