#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "freecrit/field.hpp"

namespace freecrit {

/// Dense row-major matrix over a Field. Prime-field entries are stored as raw
/// residues, rational entries as canonical mpq values.
class Matrix {
 public:
  Matrix() : Matrix(Field::rational(), 0, 0) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Column vector from scalars.
  static Matrix column(Field field, const std::vector<Scalar>& entries);
  static Matrix hstack(const std::vector<Matrix>& blocks);
  static Matrix vstack(const std::vector<Matrix>& blocks);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);
  bool entry_is_zero(std::size_t r, std::size_t c) const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  /// this += s * b placed at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Scalar& s);
  Matrix col(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  std::vector<Scalar> column_entries(std::size_t c) const;

  Matrix scaled(const Scalar& s) const;
  Matrix operator-() const { return scaled(-field_.one()); }
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix& operator+=(const Matrix& b);
  Matrix& operator-=(const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

  // Raw storage, used by the elimination kernels.
  bool prime_storage() const noexcept { return std::holds_alternative<std::vector<std::uint64_t>>(data_); }
  std::vector<std::uint64_t>& residues() { return std::get<std::vector<std::uint64_t>>(data_); }
  const std::vector<std::uint64_t>& residues() const { return std::get<std::vector<std::uint64_t>>(data_); }
  std::vector<mpq_class>& rationals() { return std::get<std::vector<mpq_class>>(data_); }
  const std::vector<mpq_class>& rationals() const { return std::get<std::vector<mpq_class>>(data_); }

 private:
  std::uint64_t to_residue(const Scalar& v) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::variant<std::vector<std::uint64_t>, std::vector<mpq_class>> data_;
};

}  // namespace freecrit
