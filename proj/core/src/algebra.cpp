#include "freecrit/algebra.hpp"

#include "freecrit/errors.hpp"
#include "freecrit/expr.hpp"
#include "freecrit/linalg.hpp"

namespace freecrit {

namespace {

struct ElementContext {
  using value_type = Matrix;
  const ArtinAlgebra& alg;

  Matrix number(const std::string& lit) const { return alg.scalar(alg.field().parse_scalar(lit)); }
  Matrix ident(const std::string& name, std::size_t pos) const {
    const auto& labels = alg.labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == name) return alg.basis(i);
    auto it = alg.names().find(name);
    if (it != alg.names().end()) return it->second;
    throw ParseError("unknown algebra element '" + name + "'", pos);
  }
  Matrix add(const Matrix& a, const Matrix& b) const { return a + b; }
  Matrix sub(const Matrix& a, const Matrix& b) const { return a - b; }
  Matrix mul(const Matrix& a, const Matrix& b) const { return alg.mul(a, b); }
  Matrix neg(const Matrix& a) const { return -a; }
  Matrix pow(const Matrix& a, unsigned n) const { return alg.pow(a, n); }
  Matrix div(const Matrix& a, const std::string& lit) const {
    Scalar d = alg.field().parse_scalar(lit);
    if (d.is_zero()) throw ParseError("division by zero in " + alg.field().name());
    return a.scaled(d.inverse());
  }
};

bool columns_equal(const Matrix& a, std::size_t ca, const Matrix& b, std::size_t cb) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!(a(r, ca) == b(r, cb))) return false;
  return true;
}

}  // namespace

ArtinAlgebra::ArtinAlgebra(Field field, std::vector<std::string> labels, std::vector<Matrix> mult,
                           std::optional<Grading> grading)
    : field_(field), labels_(std::move(labels)), mult_(std::move(mult)), grading_(std::move(grading)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw DimensionMismatch("an algebra needs at least the unit");
  if (mult_.size() != n) throw DimensionMismatch("expected one multiplication matrix per basis element");
  for (const auto& m : mult_) {
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("multiplication matrix has wrong shape");
    if (!(m.field() == field_)) throw FieldMismatch("structure constants over " + m.field().name());
  }
  if (grading_ && grading_->degrees.size() != n) throw DimensionMismatch("one degree per basis element expected");
  build_linear_projection();
}

ArtinAlgebra ArtinAlgebra::from_constants(Field field, std::vector<std::string> labels,
                                          const std::vector<Constant>& constants) {
  const std::size_t n = labels.size();
  std::vector<Matrix> mult(n, Matrix(field, n, n));
  for (const auto& c : constants) {
    if (c.i >= n || c.j >= n || c.k >= n) throw DimensionMismatch("structure constant index out of range");
    mult[c.i].set(c.k, c.j, c.value);
  }
  return ArtinAlgebra(field, std::move(labels), std::move(mult));
}

ArtinAlgebra ArtinAlgebra::ground(Field field) {
  return ArtinAlgebra(field, {"1"}, {Matrix::identity(field, 1)}, Grading{{0}, 0, false});
}

void ArtinAlgebra::build_linear_projection() {
  const std::size_t n = dim();
  Matrix m2 = m_power(2);
  Matrix w = Matrix::hstack({m2, Matrix::identity(field_, n).block(0, 1, n, n - 1)});
  auto piv = rref(w).pivots;
  std::vector<std::size_t> complement;
  for (auto c : piv)
    if (c >= m2.cols()) complement.push_back(c - m2.cols() + 1);
  Matrix s(field_, n - 1, n - 1);
  s.set_block(0, 0, m2.block(1, 0, n - 1, m2.cols()));
  for (std::size_t t = 0; t < complement.size(); ++t) s.set(complement[t] - 1, m2.cols() + t, field_.one());
  linear_proj_ = Matrix(field_, complement.size(), n);
  if (n == 1) return;
  auto inv = inverse(s);
  if (!inv) throw Error("internal: m^2 complement is singular");
  linear_proj_.set_block(0, 1, inv->block(m2.cols(), 0, complement.size(), n - 1));
}

ValidationReport ArtinAlgebra::validate() const {
  ValidationReport rep;
  const std::size_t n = dim();
  auto fail = [&](std::string msg) {
    rep.valid = false;
    rep.failures.push_back(std::move(msg));
  };
  if (!mult_[0].is_identity()) fail("e0 is not a left unit");
  for (std::size_t i = 0; i < n; ++i)
    if (!(mult_[i].col(0) == basis(i))) fail("e" + std::to_string(i) + "*e0 != e" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!columns_equal(mult_[i], j, mult_[j], i))
        fail("not commutative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = mult_[i] * mult_[j];
      Matrix rhs = mult_matrix(mult_[i].col(j));
      if (lhs == rhs) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!columns_equal(lhs, k, rhs, k)) {
          fail("not associative at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
          break;
        }
    }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!mult_[i].entry_is_zero(0, j))
        fail("m is not an ideal: e" + std::to_string(i) + "*e" + std::to_string(j) + " has a unit component");
  rep.nilpotency_index = nilpotency_index();
  if (rep.nilpotency_index == 0) fail("m is not nilpotent");
  return rep;
}

Matrix ArtinAlgebra::basis(std::size_t i) const {
  Matrix v(field_, dim(), 1);
  v.set(i, 0, field_.one());
  return v;
}

Matrix ArtinAlgebra::mult_matrix(const Matrix& a) const {
  Matrix out(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a.entry_is_zero(i, 0)) out.add_block(0, 0, mult_[i], a(i, 0));
  return out;
}

Matrix ArtinAlgebra::pow(const Matrix& a, unsigned n) const {
  Matrix r = one();
  for (unsigned i = 0; i < n; ++i) r = mul(a, r);
  return r;
}

Matrix ArtinAlgebra::scalar(const Scalar& s) const { return one().scaled(s); }

Matrix ArtinAlgebra::unit_inverse(const Matrix& a) const {
  if (in_m(a)) throw NotLocal("element " + format(a) + " is not a unit");
  auto x = solve(mult_matrix(a), one());
  if (!x) throw NotLocal("element " + format(a) + " has no inverse");
  return *x;
}

Matrix ArtinAlgebra::parse(std::string_view text) const {
  ElementContext ctx{*this};
  return evaluate(parse_expr(text), ctx);
}

std::string ArtinAlgebra::format(const Matrix& a) const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a.entry_is_zero(i, 0)) continue;
    Scalar c = a(i, 0);
    std::string cs = c.to_string();
    bool negative = cs[0] == '-';
    if (negative) cs.erase(0, 1);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (labels_[i] == "1") {
      out += cs;
    } else {
      if (cs != "1") out += (cs.find('/') != std::string::npos ? "(" + cs + ")" : cs) + "*";
      out += labels_[i];
    }
  }
  return out.empty() ? "0" : out;
}

Matrix ArtinAlgebra::m_times(const Matrix& v) const {
  std::vector<Matrix> cols;
  for (std::size_t i = 1; i < dim(); ++i) cols.push_back(mult_[i] * v);
  if (cols.empty()) return Matrix(field_, dim(), 0);
  return image_basis(Matrix::hstack(cols));
}

Matrix ArtinAlgebra::m_power(std::size_t k) const {
  const std::size_t n = dim();
  if (k == 0) return Matrix::identity(field_, n);
  Matrix cur = Matrix::identity(field_, n).block(0, 1, n, n - 1);
  for (std::size_t s = 1; s < k && cur.cols() > 0; ++s) cur = m_times(cur);
  return cur;
}

std::size_t ArtinAlgebra::nilpotency_index() const {
  const std::size_t n = dim();
  Matrix cur = Matrix::identity(field_, n).block(0, 1, n, n - 1);
  std::size_t k = 1;
  while (cur.cols() > 0) {
    Matrix next = m_times(cur);
    if (next.cols() == cur.cols()) return 0;
    cur = next;
    ++k;
  }
  return k;
}

Matrix ArtinAlgebra::ideal_span(const std::vector<Matrix>& gens) const {
  std::vector<Matrix> cols;
  for (const auto& g : gens) cols.push_back(mult_matrix(g));
  if (cols.empty()) return Matrix(field_, dim(), 0);
  return image_basis(Matrix::hstack(cols));
}

std::size_t ArtinAlgebra::edim() const { return linear_proj_.rows(); }

Matrix ArtinAlgebra::linear_part(const Matrix& a) const {
  if (!in_m(a)) throw DependentModM2("element " + format(a) + " is not in m");
  return linear_proj_ * a;
}

AdaptedBasis ArtinAlgebra::adapted_basis(const std::vector<Matrix>& prescribed) const {
  AdaptedBasis out;
  out.m2_basis = m_power(2);
  Matrix lin(field_, edim(), 0);
  for (const auto& p : prescribed) {
    if (p.rows() != dim() || p.cols() != 1) throw DimensionMismatch("adapted_basis: element has wrong shape");
    Matrix next = Matrix::hstack({lin, linear_part(p)});
    if (rank(next) != next.cols())
      throw DependentModM2("element " + format(p) + " is dependent on the previous ones modulo m^2");
    lin = next;
    out.generators.push_back(p);
  }
  for (std::size_t j = 1; j < dim() && lin.cols() < edim(); ++j) {
    Matrix next = Matrix::hstack({lin, linear_proj_.col(j)});
    if (rank(next) != next.cols()) continue;
    lin = next;
    out.generators.push_back(basis(j));
  }
  return out;
}

ArtinAlgebra::Quotient ArtinAlgebra::quotient(const Matrix& ideal) const {
  const std::size_t n = dim();
  Matrix ib = ideal.cols() ? image_basis(ideal) : Matrix(field_, n, 0);
  for (std::size_t c = 0; c < ib.cols(); ++c)
    if (!ib.entry_is_zero(0, c)) throw NotLocal("quotient by an ideal not contained in m");
  for (std::size_t i = 1; i < n && ib.cols() > 0; ++i)
    if (rank(Matrix::hstack({ib, mult_[i] * ib})) != ib.cols()) throw NotWellDefined("subspace is not an ideal");
  auto piv = rref(Matrix::hstack({ib, Matrix::identity(field_, n)})).pivots;
  std::vector<std::size_t> keep;
  for (auto c : piv)
    if (c >= ib.cols()) keep.push_back(c - ib.cols());
  Matrix s = Matrix::hstack({ib, Matrix::identity(field_, n).select_columns(keep)});
  Matrix proj = inverse(s)->block(ib.cols(), 0, keep.size(), n);
  const std::size_t q = keep.size();
  std::vector<std::string> labels;
  std::vector<Matrix> mult(q, Matrix(field_, q, q));
  for (std::size_t a = 0; a < q; ++a) {
    labels.push_back(labels_[keep[a]]);
    Matrix img = proj * mult_[keep[a]];
    mult[a] = img.select_columns(keep);
  }
  std::optional<Grading> g;
  if (grading_) {
    g = Grading{{}, grading_->truncation, grading_->truncated};
    for (auto k : keep) g->degrees.push_back(grading_->degrees[k]);
  }
  auto alg = std::make_shared<ArtinAlgebra>(field_, std::move(labels), std::move(mult), std::move(g));
  std::map<std::string, Matrix> names;
  for (const auto& [name, v] : names_) names.emplace(name, proj * v);
  alg->set_names(std::move(names));
  return Quotient{std::move(alg), std::move(proj)};
}

Matrix ArtinAlgebra::socle() const {
  std::vector<Matrix> rows{basis(0).transpose()};
  for (std::size_t i = 1; i < dim(); ++i) rows.push_back(mult_[i]);
  return kernel_basis(Matrix::vstack(rows));
}

}  // namespace freecrit
