#include "freecrit/matrix.hpp"

#include <sstream>

#include "freecrit/errors.hpp"

namespace freecrit {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("matrices over " + a.field().name() + " and " + b.field().name());
}

void require_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime()) {
    data_ = std::vector<std::uint64_t>(rows * cols, 0);
  } else {
    data_ = std::vector<mpq_class>(rows * cols);
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

Matrix Matrix::column(Field field, const std::vector<Scalar>& entries) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != blocks.front().rows()) throw DimensionMismatch("hstack: row counts differ");
    require_same_field(b, blocks.front());
    cols += b.cols();
  }
  Matrix out(blocks.front().field(), blocks.front().rows(), cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    out.set_block(0, c, b);
    c += b.cols();
  }
  return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != blocks.front().cols()) throw DimensionMismatch("vstack: column counts differ");
    require_same_field(b, blocks.front());
    rows += b.rows();
  }
  Matrix out(blocks.front().field(), rows, blocks.front().cols());
  std::size_t r = 0;
  for (const auto& b : blocks) {
    out.set_block(r, 0, b);
    r += b.rows();
  }
  return out;
}

std::uint64_t Matrix::to_residue(const Scalar& v) const {
  if (v.is_rational()) throw FieldMismatch("rational scalar stored into a matrix over " + field_.name());
  const Residue& r = v.residue();
  if (r.modulus != 0 && r.modulus != field_.characteristic()) {
    throw FieldMismatch("GF(" + std::to_string(r.modulus) + ") scalar stored into a matrix over " + field_.name());
  }
  return r.value;
}

Scalar Matrix::operator()(std::size_t r, std::size_t c) const {
  if (prime_storage()) return Scalar(Residue{residues()[r * cols_ + c], field_.characteristic()});
  return Scalar(rationals()[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (prime_storage()) {
    residues()[r * cols_ + c] = to_residue(v);
  } else {
    if (!v.is_rational()) {
      if (!v.is_unbound()) throw FieldMismatch("prime-field scalar stored into a rational matrix");
      rationals()[r * cols_ + c] = 0;
    } else {
      rationals()[r * cols_ + c] = v.rational();
    }
  }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) { set(r, c, (*this)(r, c) + v); }

bool Matrix::entry_is_zero(std::size_t r, std::size_t c) const {
  if (prime_storage()) return residues()[r * cols_ + c] == 0;
  return rationals()[r * cols_ + c] == 0;
}

bool Matrix::is_zero() const {
  if (prime_storage()) {
    for (auto v : residues())
      if (v != 0) return false;
    return true;
  }
  for (const auto& v : rationals())
    if (v != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Scalar v = (*this)(i, j);
      if (i == j ? !v.is_one() : !v.is_zero()) return false;
    }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  if (prime_storage()) {
    auto& dst = t.residues();
    const auto& src = residues();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
  } else {
    auto& dst = t.rationals();
    const auto& src = rationals();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix b(field_, nr, nc);
  if (prime_storage()) {
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b.residues()[i * nc + j] = residues()[(r0 + i) * cols_ + c0 + j];
  } else {
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b.rationals()[i * nc + j] = rationals()[(r0 + i) * cols_ + c0 + j];
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same_field(*this, b);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("set_block out of range");
  if (prime_storage()) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) residues()[(r0 + i) * cols_ + c0 + j] = b.residues()[i * b.cols_ + j];
  } else {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) rationals()[(r0 + i) * cols_ + c0 + j] = b.rationals()[i * b.cols_ + j];
  }
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Scalar& s) {
  require_same_field(*this, b);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("add_block out of range");
  if (s.is_zero()) return;
  if (prime_storage()) {
    modular::Reducer red(field_.characteristic());
    std::uint64_t f = to_residue(s);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        std::uint64_t v = b.residues()[i * b.cols_ + j];
        if (v == 0) continue;
        auto& dst = residues()[(r0 + i) * cols_ + c0 + j];
        dst = red.mul_add(dst, f, v);
      }
  } else {
    const mpq_class& f = s.rational();
    const int unit = f == 1 ? 1 : f == -1 ? -1 : 0;
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const mpq_class& v = b.rationals()[i * b.cols_ + j];
        if (v == 0) continue;
        mpq_class& dst = rationals()[(r0 + i) * cols_ + c0 + j];
        if (unit > 0) dst += v;
        else if (unit < 0) dst -= v;
        else dst += f * v;
      }
  }
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) out.set(i, j, (*this)(i, cols[j]));
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) out.set_block(i, 0, block(rows[i], 0, 1, cols_));
  return out;
}

std::vector<Scalar> Matrix::column_entries(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, c));
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  out.add_block(0, 0, *this, s);
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  out += b;
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  out -= b;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  require_same_field(*this, b);
  require_shape(*this, b, "add");
  if (prime_storage()) {
    std::uint64_t p = field_.characteristic();
    auto& d = residues();
    const auto& s = b.residues();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = modular::add(d[i], s[i], p);
  } else {
    auto& d = rationals();
    const auto& s = b.rationals();
    for (std::size_t i = 0; i < d.size(); ++i)
      if (s[i] != 0) d[i] += s[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
  require_same_field(*this, b);
  require_shape(*this, b, "subtract");
  if (prime_storage()) {
    std::uint64_t p = field_.characteristic();
    auto& d = residues();
    const auto& s = b.residues();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = modular::sub(d[i], s[i], p);
  } else {
    auto& d = rationals();
    const auto& s = b.rationals();
    for (std::size_t i = 0; i < d.size(); ++i)
      if (s[i] != 0) d[i] -= s[i];
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.field(), a.rows(), b.cols());
  const std::size_t n = a.cols(), m = b.cols();
  if (a.prime_storage()) {
    modular::Reducer red(a.field().characteristic());
    const auto& x = a.residues();
    const auto& y = b.residues();
    auto& z = out.residues();
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t f = x[i * n + k];
        if (f == 0) continue;
        const std::uint64_t* yr = &y[k * m];
        std::uint64_t* zr = &z[i * m];
        for (std::size_t j = 0; j < m; ++j)
          if (yr[j] != 0) zr[j] = red.mul_add(zr[j], f, yr[j]);
      }
  } else {
    // Clear denominators row-wise in a and column-wise in b so that the
    // inner loop runs on integers.
    const auto& x = a.rationals();
    const auto& y = b.rationals();
    auto& z = out.rationals();
    std::vector<mpz_class> ys(m, 1), yn(y.size());
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < m; ++j)
        if (y[k * m + j] != 0) mpz_lcm(ys[j].get_mpz_t(), ys[j].get_mpz_t(), y[k * m + j].get_den_mpz_t());
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < m; ++j) {
        const mpq_class& v = y[k * m + j];
        if (v != 0) yn[k * m + j] = v.get_num() * (ys[j] / v.get_den());
      }
    std::vector<mpz_class> xn(n), acc(m);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      mpz_class xs = 1;
      for (std::size_t k = 0; k < n; ++k)
        if (x[i * n + k] != 0) mpz_lcm(xs.get_mpz_t(), xs.get_mpz_t(), x[i * n + k].get_den_mpz_t());
      for (std::size_t k = 0; k < n; ++k) {
        const mpq_class& v = x[i * n + k];
        xn[k] = v == 0 ? mpz_class(0) : v.get_num() * (xs / v.get_den());
      }
      for (auto& c : acc) c = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(xn[k]) == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
          if (sgn(yn[k * m + j]) != 0) mpz_addmul(acc[j].get_mpz_t(), xn[k].get_mpz_t(), yn[k * m + j].get_mpz_t());
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (sgn(acc[j]) == 0) continue;
        mpq_class& dst = z[i * m + j];
        dst = mpq_class(acc[j], xs * ys[j]);
        dst.canonicalize();
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()) || a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.prime_storage()) return a.residues() == b.residues();
  return a.rationals() == b.rationals();
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace freecrit
