#include "freecrit/amatrix.hpp"

#include "freecrit/errors.hpp"
#include "freecrit/linalg.hpp"

namespace freecrit {

namespace {

void require_compatible(const AMatrix& a, const AMatrix& b) {
  if (a.algebra() != b.algebra() && !(a.algebra() && b.algebra() && a.algebra()->dim() == b.algebra()->dim() &&
                                       a.algebra()->labels() == b.algebra()->labels()))
    throw DimensionMismatch("matrices over different algebras");
}

}  // namespace

AMatrix::AMatrix(AlgebraPtr alg, std::size_t rows, std::size_t cols)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), stacked_(alg_->field(), rows * alg_->dim(), cols) {}

AMatrix::AMatrix(AlgebraPtr alg, std::size_t rows, std::size_t cols, Matrix stacked)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), stacked_(std::move(stacked)) {
  if (stacked_.rows() != rows * alg_->dim() || stacked_.cols() != cols)
    throw DimensionMismatch("stacked storage has wrong shape");
}

AMatrix AMatrix::identity(AlgebraPtr alg, std::size_t n) { return scalar(alg, n, alg->one()); }

AMatrix AMatrix::scalar(AlgebraPtr alg, std::size_t n, const Matrix& a) {
  AMatrix out(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, a);
  return out;
}

AMatrix AMatrix::constant(AlgebraPtr alg, const Matrix& k) {
  AMatrix out(alg, k.rows(), k.cols());
  const std::size_t n = alg->dim();
  for (std::size_t r = 0; r < k.rows(); ++r)
    for (std::size_t c = 0; c < k.cols(); ++c)
      if (!k.entry_is_zero(r, c)) out.stacked_.set(r * n, c, k(r, c));
  return out;
}

AMatrix AMatrix::from_flat(AlgebraPtr alg, std::size_t rows, std::size_t cols, const Matrix& flat) {
  const std::size_t n = alg->dim();
  if (flat.rows() != rows * n || flat.cols() != cols * n) throw DimensionMismatch("from_flat: wrong shape");
  std::vector<std::size_t> unit_cols;
  for (std::size_t c = 0; c < cols; ++c) unit_cols.push_back(c * n);
  return AMatrix(alg, rows, cols, flat.select_columns(unit_cols));
}

AMatrix AMatrix::hstack(const std::vector<AMatrix>& blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  AMatrix out(blocks.at(0).alg_, blocks.at(0).rows(), cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    out.set_block(0, c, b);
    c += b.cols();
  }
  return out;
}

AMatrix AMatrix::vstack(const std::vector<AMatrix>& blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  AMatrix out(blocks.at(0).alg_, rows, blocks.at(0).cols());
  std::size_t r = 0;
  for (const auto& b : blocks) {
    out.set_block(r, 0, b);
    r += b.rows();
  }
  return out;
}

AMatrix AMatrix::block_diag(const std::vector<AMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  AMatrix out(blocks.at(0).alg_, rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Matrix AMatrix::entry(std::size_t r, std::size_t c) const {
  const std::size_t n = alg_->dim();
  return stacked_.block(r * n, c, n, 1);
}

void AMatrix::set(std::size_t r, std::size_t c, const Matrix& a) {
  const std::size_t n = alg_->dim();
  if (a.rows() != n || a.cols() != 1) throw DimensionMismatch("entry has wrong shape");
  stacked_.set_block(r * n, c, a);
}

bool AMatrix::entry_is_zero(std::size_t r, std::size_t c) const {
  const std::size_t n = alg_->dim();
  for (std::size_t l = 0; l < n; ++l)
    if (!stacked_.entry_is_zero(r * n + l, c)) return false;
  return true;
}

AMatrix AMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  const std::size_t n = alg_->dim();
  return AMatrix(alg_, nr, nc, stacked_.block(r0 * n, c0, nr * n, nc));
}

void AMatrix::set_block(std::size_t r0, std::size_t c0, const AMatrix& b) {
  require_compatible(*this, b);
  stacked_.set_block(r0 * alg_->dim(), c0, b.stacked_);
}

Matrix AMatrix::flatten() const {
  const std::size_t n = alg_->dim();
  Matrix out(alg_->field(), rows_ * n, cols_ * n);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t i = 0; i < n; ++i)
        if (!stacked_.entry_is_zero(r * n + i, c)) out.add_block(r * n, c * n, alg_->mult(i), stacked_(r * n + i, c));
  return out;
}

Matrix AMatrix::residue() const {
  Matrix out(alg_->field(), rows_, cols_);
  const std::size_t n = alg_->dim();
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, stacked_(r * n, c));
  return out;
}

AMatrix AMatrix::transpose() const {
  AMatrix out(alg_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!entry_is_zero(r, c)) out.set(c, r, entry(r, c));
  return out;
}

AMatrix AMatrix::scaled(const Matrix& a) const {
  const std::size_t n = alg_->dim();
  Matrix la = alg_->mult_matrix(a);
  AMatrix out(alg_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.stacked_.set_block(r * n, 0, la * stacked_.block(r * n, 0, n, cols_));
  return out;
}

AMatrix AMatrix::scaled(const Scalar& s) const { return AMatrix(alg_, rows_, cols_, stacked_.scaled(s)); }

AMatrix AMatrix::operator-() const { return AMatrix(alg_, rows_, cols_, -stacked_); }

AMatrix operator+(const AMatrix& a, const AMatrix& b) {
  require_compatible(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("AMatrix add: shapes differ");
  return AMatrix(a.alg_, a.rows(), a.cols(), a.stacked_ + b.stacked_);
}

AMatrix operator-(const AMatrix& a, const AMatrix& b) {
  require_compatible(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("AMatrix subtract: shapes differ");
  return AMatrix(a.alg_, a.rows(), a.cols(), a.stacked_ - b.stacked_);
}

AMatrix operator*(const AMatrix& a, const AMatrix& b) {
  require_compatible(a, b);
  if (a.cols() != b.rows())
    throw DimensionMismatch("AMatrix multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  return AMatrix(a.alg_, a.rows(), b.cols(), a.flatten() * b.stacked_);
}

bool operator==(const AMatrix& a, const AMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.stacked_ == b.stacked_;
}

std::optional<AMatrix> AMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto r = freecrit::inverse(residue());
  if (!r) return std::nullopt;
  // With g = g0 (1 + m), m nilpotent: g^-1 = (1 - m + m^2 - ...) g0^-1.
  AMatrix r_inv = constant(alg_, *r);
  AMatrix nil = r_inv * *this - identity(alg_, rows_);
  AMatrix sum = identity(alg_, rows_), term = sum;
  for (std::size_t k = 0; k <= alg_->dim(); ++k) {
    term = -(nil * term);
    if (term.is_zero()) break;
    sum = sum + term;
  }
  if (!term.is_zero()) return std::nullopt;
  return sum * r_inv;
}

std::vector<std::vector<std::string>> AMatrix::format() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = alg_->format(entry(r, c));
  return out;
}

std::string AMatrix::to_string() const {
  std::string s = "[";
  auto f = format();
  for (std::size_t r = 0; r < rows_; ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) s += (c ? ", " : "") + f[r][c];
    s += "]";
  }
  return s + "]";
}

}  // namespace freecrit
