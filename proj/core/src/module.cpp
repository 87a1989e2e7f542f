#include "freecrit/module.hpp"

#include <algorithm>

#include "freecrit/errors.hpp"
#include "freecrit/linalg.hpp"

namespace freecrit {

namespace {

Matrix new_columns(const Matrix& base, const Matrix& cols) {
  auto piv = rref(Matrix::hstack({base, cols})).pivots;
  std::vector<std::size_t> keep;
  for (auto c : piv)
    if (c >= base.cols()) keep.push_back(c - base.cols());
  return cols.select_columns(keep);
}

Matrix block_diag_copies(const Matrix& m, std::size_t copies) {
  Matrix out(m.field(), m.rows() * copies, m.cols() * copies);
  for (std::size_t c = 0; c < copies; ++c) out.set_block(c * m.rows(), c * m.cols(), m);
  return out;
}

}  // namespace

std::string Bound::to_string() const {
  switch (kind) {
    case Kind::exact:
      return std::to_string(value);
    case Kind::at_least:
      return ">=" + std::to_string(value);
    case Kind::plus_infinity:
      return "+inf";
    case Kind::minus_infinity:
      return "-inf";
  }
  return "?";
}

FiniteModule::FiniteModule(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> action, std::vector<int> degrees,
                           std::optional<int> window)
    : alg_(std::move(alg)), dim_(dim), action_(std::move(action)), degrees_(std::move(degrees)), window_(window) {
  if (action_.size() != alg_->dim()) throw DimensionMismatch("one action matrix per algebra basis element expected");
  for (const auto& a : action_)
    if (a.rows() != dim_ || a.cols() != dim_) throw DimensionMismatch("action matrix has wrong shape");
  if (!degrees_.empty() && degrees_.size() != dim_) throw DimensionMismatch("one degree per module basis vector expected");
}

FiniteModule FiniteModule::from_homology(AlgebraPtr alg, const HomologyModule& h) {
  return FiniteModule(std::move(alg), h.dim(), h.action, h.internal_degrees, h.window);
}

FiniteModule FiniteModule::free(AlgebraPtr alg, std::size_t rank) {
  std::vector<Matrix> action;
  for (std::size_t l = 0; l < alg->dim(); ++l) action.push_back(block_diag_copies(alg->mult(l), rank));
  std::vector<int> degrees;
  std::optional<int> window;
  if (alg->graded()) {
    for (std::size_t r = 0; r < rank; ++r)
      degrees.insert(degrees.end(), alg->grading()->degrees.begin(), alg->grading()->degrees.end());
    if (alg->grading()->truncated) window = alg->grading()->truncation;
  }
  const std::size_t dim = rank * alg->dim();
  return FiniteModule(std::move(alg), dim, std::move(action), std::move(degrees), window);
}

FiniteModule FiniteModule::residue_field(AlgebraPtr alg) {
  std::vector<Matrix> action(alg->dim(), Matrix(alg->field(), 1, 1));
  action[0] = Matrix::identity(alg->field(), 1);
  std::vector<int> degrees;
  if (alg->graded()) degrees.push_back(0);
  return FiniteModule(std::move(alg), 1, std::move(action), std::move(degrees));
}

FiniteModule FiniteModule::cyclic(AlgebraPtr alg, const Matrix& ideal) {
  auto q = alg->quotient(ideal);
  std::vector<Matrix> action;
  // The quotient keeps a subset of the standard basis; find it from the projection.
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < q.projection.rows(); ++r)
    for (std::size_t c = 0; c < alg->dim(); ++c)
      if (alg->labels()[c] == q.algebra->labels()[r]) {
        keep.push_back(c);
        break;
      }
  Matrix section = Matrix::identity(alg->field(), alg->dim()).select_columns(keep);
  for (std::size_t l = 0; l < alg->dim(); ++l) action.push_back(q.projection * alg->mult(l) * section);
  std::vector<int> degrees;
  std::optional<int> window;
  if (alg->graded()) {
    degrees = q.algebra->grading()->degrees;
    if (alg->grading()->truncated) window = alg->grading()->truncation;
  }
  return FiniteModule(alg, keep.size(), std::move(action), std::move(degrees), window);
}

FiniteModule FiniteModule::direct_sum(const FiniteModule& a, const FiniteModule& b) {
  std::vector<Matrix> action;
  for (std::size_t l = 0; l < a.alg_->dim(); ++l) {
    Matrix m(a.alg_->field(), a.dim_ + b.dim_, a.dim_ + b.dim_);
    m.set_block(0, 0, a.action_[l]);
    m.set_block(a.dim_, a.dim_, b.action_[l]);
    action.push_back(std::move(m));
  }
  std::vector<int> degrees = a.degrees_;
  degrees.insert(degrees.end(), b.degrees_.begin(), b.degrees_.end());
  if (a.degrees_.empty() != b.degrees_.empty()) degrees.clear();
  return FiniteModule(a.alg_, a.dim_ + b.dim_, std::move(action), std::move(degrees), a.window_);
}

FiniteModule FiniteModule::restrict(const AlgebraMorphism& phi) const {
  if (phi.target()->dim() != alg_->dim()) throw DimensionMismatch("restriction along a map into another algebra");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < phi.source()->dim(); ++i) action.push_back(act(phi.matrix().col(i)));
  return FiniteModule(phi.source(), dim_, std::move(action), degrees_, window_);
}

Matrix FiniteModule::act(const Matrix& a) const {
  Matrix out(alg_->field(), dim_, dim_);
  for (std::size_t l = 0; l < alg_->dim(); ++l)
    if (!a.entry_is_zero(l, 0)) out.add_block(0, 0, action_[l], a(l, 0));
  return out;
}

std::vector<std::string> FiniteModule::validate() const {
  std::vector<std::string> failures;
  if (!action_[0].is_identity()) failures.push_back("the unit does not act as the identity");
  for (std::size_t i = 1; i < alg_->dim(); ++i)
    for (std::size_t j = i; j < alg_->dim(); ++j)
      if (!(action_[i] * action_[j] == act(alg_->mult(i).col(j))))
        failures.push_back("action not multiplicative on " + alg_->labels()[i] + "*" + alg_->labels()[j]);
  return failures;
}

Matrix FiniteModule::m_times() const {
  if (alg_->dim() == 1 || dim_ == 0) return Matrix(alg_->field(), dim_, 0);
  std::vector<Matrix> parts(action_.begin() + 1, action_.end());
  return image_basis(Matrix::hstack(parts));
}

std::size_t FiniteModule::nu() const { return dim_ - m_times().cols(); }

Matrix FiniteModule::minimal_generators() const {
  return new_columns(m_times(), Matrix::identity(alg_->field(), dim_));
}

FreenessResult FiniteModule::is_free() const {
  FreenessResult out;
  Matrix gens = minimal_generators();
  out.rank = gens.cols();
  const std::size_t n = alg_->dim();
  if (!window_) {
    out.free = dim_ == out.rank * n;
    if (!out.free) {
      // Exhibit a kernel element of B^nu -> M.
      Matrix p(alg_->field(), dim_, out.rank * n);
      for (std::size_t j = 0; j < out.rank; ++j)
        for (std::size_t l = 0; l < n; ++l) p.set_block(0, j * n + l, action_[l] * gens.col(j));
      Matrix k = kernel_basis(p);
      if (k.cols() > 0) out.kernel_witness = k.col(0);
    }
    return out;
  }
  // Graded, truncated: only elements of degree <= D are trustworthy.
  const auto& adeg = alg_->grading()->degrees;
  std::vector<std::size_t> cols;
  Matrix p(alg_->field(), dim_, out.rank * n);
  for (std::size_t j = 0; j < out.rank; ++j) {
    int gdeg = 0;
    for (std::size_t r = 0; r < dim_; ++r)
      if (!gens.entry_is_zero(r, j)) gdeg = degrees_[r];
    for (std::size_t l = 0; l < n; ++l) {
      p.set_block(0, j * n + l, action_[l] * gens.col(j));
      if (gdeg + adeg[l] <= *window_) cols.push_back(j * n + l);
    }
  }
  Matrix k = kernel_basis(p.select_columns(cols));
  if (k.cols() > 0) {
    Matrix w(alg_->field(), out.rank * n, 1);
    for (std::size_t t = 0; t < cols.size(); ++t) w.set(cols[t], 0, k(t, 0));
    out.kernel_witness = w;
    out.free = false;
  } else {
    out.free = true;
    out.window = window_;
  }
  return out;
}

Matrix FiniteModule::annihilator() const {
  const std::size_t n = alg_->dim();
  Matrix m(alg_->field(), dim_ * dim_, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t r = 0; r < dim_; ++r) m.set_block(r * dim_, l, action_[l].block(r, 0, 1, dim_).transpose());
  return kernel_basis(m);
}

FiniteModule FiniteModule::syzygy() const {
  Matrix gens = minimal_generators();
  const std::size_t nu = gens.cols(), n = alg_->dim();
  Matrix p(alg_->field(), dim_, nu * n);
  for (std::size_t j = 0; j < nu; ++j)
    for (std::size_t l = 0; l < n; ++l) p.set_block(0, j * n + l, action_[l] * gens.col(j));
  Matrix k = kernel_basis(p);
  std::vector<Matrix> action;
  for (std::size_t l = 0; l < n; ++l) {
    auto x = solve(k, block_diag_copies(alg_->mult(l), nu) * k);
    if (!x) throw Error("internal: syzygy is not a submodule");
    action.push_back(std::move(*x));
  }
  std::vector<int> degrees;
  if (!degrees_.empty()) {
    std::vector<int> coord;
    for (std::size_t j = 0; j < nu; ++j) {
      int gdeg = 0;
      for (std::size_t r = 0; r < dim_; ++r)
        if (!gens.entry_is_zero(r, j)) gdeg = degrees_[r];
      for (std::size_t l = 0; l < n; ++l) coord.push_back(gdeg + alg_->grading()->degrees[l]);
    }
    for (std::size_t c = 0; c < k.cols(); ++c)
      for (std::size_t r = 0; r < k.rows(); ++r)
        if (!k.entry_is_zero(r, c)) {
          degrees.push_back(coord[r]);
          break;
        }
  }
  return FiniteModule(alg_, k.cols(), std::move(action), std::move(degrees), window_);
}

std::vector<std::size_t> FiniteModule::poincare(std::size_t n) const {
  std::vector<std::size_t> out;
  FiniteModule cur = *this;
  for (std::size_t i = 0; i <= n; ++i) {
    if (cur.dim() == 0) {
      out.resize(n + 1, 0);
      break;
    }
    out.push_back(cur.nu());
    if (i < n) cur = cur.syzygy();
  }
  return out;
}

Bound FiniteModule::depth() const {
  if (dim_ == 0) return Bound::plus_inf();
  std::vector<Matrix> rows;
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < dim_; ++r)
    if (!window_ || degrees_.empty() || degrees_[r] < *window_) cols.push_back(r);
  for (std::size_t l = 1; l < alg_->dim(); ++l) rows.push_back(action_[l].select_columns(cols));
  if (rows.empty()) return Bound::exact(0);  // over a field every nonzero module has depth 0
  Matrix socle = kernel_basis(Matrix::vstack(rows));
  if (socle.cols() > 0) return Bound::exact(0);
  return Bound::at_least(0);
}

Bound FiniteModule::dim_module() const {
  if (dim_ == 0) return Bound::minus_inf();
  if (window_) return Bound::at_least(0);
  return Bound::exact(0);
}

Lemma43Result FiniteModule::lemma43_freeness(std::size_t n) const {
  Lemma43Result out;
  out.betti = poincare(std::max<std::size_t>(n, 1));
  out.rank = out.betti[0];
  out.free = out.betti[1] == 0;
  return out;
}

std::optional<FiniteModule> extend_action(const FiniteModule& m, const AlgebraMorphism& phi,
                                          const std::vector<std::pair<std::string, Matrix>>& generators,
                                          std::vector<std::string>& failures) {
  const ArtinAlgebra& a = *phi.source();
  const ArtinAlgebra& b = *phi.target();
  if (m.algebra()->dim() != a.dim()) throw DimensionMismatch("module is not over the source of the morphism");
  const Field& f = b.field();
  const std::size_t fails_before = failures.size();

  std::vector<std::pair<Matrix, Matrix>> seeds;  // (element of B, action on M)
  for (std::size_t i = 0; i < a.dim(); ++i) seeds.emplace_back(phi.matrix().col(i), m.action()[i]);
  for (const auto& [name, mat] : generators) {
    if (mat.rows() != m.dim() || mat.cols() != m.dim()) throw DimensionMismatch("action of " + name + " has wrong shape");
    seeds.emplace_back(b.parse(name), mat);
  }
  Matrix span(f, b.dim(), 0);
  std::vector<Matrix> acts;
  std::vector<Matrix> elems;
  auto offer = [&](const Matrix& e, const Matrix& t) {
    Matrix next = Matrix::hstack({span, e});
    if (rank(next) == span.cols()) return;
    span = next;
    elems.push_back(e);
    acts.push_back(t);
  };
  for (const auto& [e, t] : seeds) offer(e, t);
  for (std::size_t idx = 0; idx < elems.size() && span.cols() < b.dim(); ++idx)
    for (const auto& [e, t] : seeds) offer(b.mul(e, elems[idx]), t * acts[idx]);
  if (span.cols() < b.dim()) {
    failures.push_back("the generators and the image of A do not span B");
    return std::nullopt;
  }
  Matrix coeff = *inverse(span);
  std::vector<Matrix> action;
  for (std::size_t l = 0; l < b.dim(); ++l) {
    Matrix t(f, m.dim(), m.dim());
    for (std::size_t j = 0; j < acts.size(); ++j)
      if (!coeff.entry_is_zero(j, l)) t.add_block(0, 0, acts[j], coeff(j, l));
    action.push_back(std::move(t));
  }
  FiniteModule out(phi.target(), m.dim(), std::move(action), m.degrees(), m.window());
  for (auto& msg : out.validate()) failures.push_back(msg);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(out.act(phi.matrix().col(i)) == m.action()[i]))
      failures.push_back("A-action of " + a.labels()[i] + " is not the restriction of the B-action");
  for (const auto& [name, mat] : generators)
    if (!(out.act(b.parse(name)) == mat)) failures.push_back("action of " + name + " is inconsistent with B");
  if (failures.size() != fails_before) return std::nullopt;
  return out;
}

std::vector<std::size_t> poincare_truncated(const FreeComplex& f, std::size_t n) {
  return FiniteModule::from_homology(f.algebra(), f.homology(0)).poincare(n);
}

}  // namespace freecrit

namespace freecrit {

FreeComplex minimal_resolution(const FiniteModule& m, std::size_t n) {
  const AlgebraPtr& alg = m.algebra();
  const std::size_t dimA = alg->dim();
  Matrix gens = m.minimal_generators();
  std::vector<std::size_t> ranks{gens.cols()};
  std::vector<AMatrix> d;
  Matrix cover(alg->field(), m.dim(), gens.cols() * dimA);
  for (std::size_t j = 0; j < gens.cols(); ++j)
    for (std::size_t l = 0; l < dimA; ++l) cover.set_block(0, j * dimA + l, m.action()[l] * gens.col(j));
  Matrix k = kernel_basis(cover);
  for (std::size_t step = 1; step <= n && k.cols() > 0; ++step) {
    std::vector<Matrix> acts;
    for (std::size_t l = 0; l < dimA; ++l) acts.push_back(*solve(k, block_diag_copies(alg->mult(l), ranks.back()) * k));
    FiniteModule syz(alg, k.cols(), std::move(acts));
    Matrix v = k * syz.minimal_generators();
    d.emplace_back(alg, ranks.back(), v.cols(), v);
    ranks.push_back(v.cols());
    k = kernel_basis(d.back().flatten());
  }
  return FreeComplex(alg, ranks, d);
}

namespace {

Matrix differential(const ModuleComplex& c, std::size_t i) {
  const Field& f = c.terms.front().algebra()->field();
  if (i >= 1 && i <= c.d.size()) return c.d[i - 1];
  const std::size_t rows = i >= 1 && i - 1 < c.terms.size() ? c.terms[i - 1].dim() : 0;
  const std::size_t cols = i < c.terms.size() ? c.terms[i].dim() : 0;
  return Matrix(f, rows, cols);
}

}  // namespace

std::vector<std::string> ModuleComplex::validate() const {
  std::vector<std::string> out;
  if (d.size() + 1 != terms.size() && !(terms.empty() && d.empty())) out.push_back("one differential per step expected");
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (auto& f : terms[i].validate()) out.push_back("term " + std::to_string(i) + ": " + f);
  for (std::size_t i = 1; i <= d.size(); ++i) {
    if (d[i - 1].rows() != terms[i - 1].dim() || d[i - 1].cols() != terms[i].dim()) {
      out.push_back("d_" + std::to_string(i) + " has the wrong shape");
      continue;
    }
    for (std::size_t l = 0; l < terms[i].algebra()->dim(); ++l)
      if (!(d[i - 1] * terms[i].action()[l] == terms[i - 1].action()[l] * d[i - 1]))
        out.push_back("d_" + std::to_string(i) + " is not linear over " + terms[i].algebra()->labels()[l]);
    if (i >= 2 && !(d[i - 2] * d[i - 1]).is_zero()) out.push_back("d^2 != 0 at degree " + std::to_string(i));
  }
  return out;
}

FiniteModule ModuleComplex::homology(std::size_t i) const {
  const FiniteModule& t = terms.at(i);
  Matrix din = differential(*this, i), dout = differential(*this, i + 1);
  Matrix z = kernel_basis(din);
  Matrix b = dout.cols() ? image_basis(dout) : Matrix(t.algebra()->field(), t.dim(), 0);
  Matrix reps = new_columns(b, z);
  Matrix basis = Matrix::hstack({b, reps});
  std::vector<Matrix> action;
  for (std::size_t l = 0; l < t.algebra()->dim(); ++l) {
    auto x = solve(basis, t.action()[l] * reps);
    action.push_back(x->block(b.cols(), 0, reps.cols(), reps.cols()));
  }
  return FiniteModule(t.algebra(), reps.cols(), std::move(action));
}

ModuleComplex ModuleComplex::restrict(const AlgebraMorphism& phi) const {
  ModuleComplex out;
  for (const auto& t : terms) out.terms.push_back(t.restrict(phi));
  out.d = d;
  return out;
}

std::vector<std::size_t> tor_with_residue(const ModuleComplex& c, std::size_t n) {
  if (c.terms.empty()) return std::vector<std::size_t>(n + 1, 0);
  const AlgebraPtr& alg = c.terms.front().algebra();
  const Field& f = alg->field();
  FreeComplex r = minimal_resolution(FiniteModule::residue_field(alg), n + 1);
  const std::size_t top = n + 1;
  // Offsets of R_a (x) C_b inside the total degree a + b.
  auto block_dim = [&](std::size_t a, std::size_t b) { return b < c.terms.size() ? r.rank(a) * c.terms[b].dim() : 0; };
  auto offset = [&](std::size_t a, std::size_t t) {
    std::size_t o = 0;
    for (std::size_t a2 = 0; a2 < a; ++a2)
      if (t >= a2) o += block_dim(a2, t - a2);
    return o;
  };
  auto total_dim = [&](std::size_t t) { return offset(t + 1, t); };
  std::vector<Matrix> dt(top + 2);
  for (std::size_t t = 1; t <= top; ++t) {
    Matrix m(f, total_dim(t - 1), total_dim(t));
    for (std::size_t a = 0; a <= t; ++a) {
      const std::size_t b = t - a;
      if (b >= c.terms.size() || r.rank(a) == 0) continue;
      const std::size_t dimb = c.terms[b].dim(), col0 = offset(a, t);
      if (a >= 1) {
        AMatrix dr = r.d(a);
        const std::size_t row0 = offset(a - 1, t - 1);
        for (std::size_t s = 0; s < r.rank(a); ++s)
          for (std::size_t s2 = 0; s2 < r.rank(a - 1); ++s2)
            if (!dr.entry_is_zero(s2, s))
              m.set_block(row0 + s2 * dimb, col0 + s * dimb, c.terms[b].act(dr.entry(s2, s)));
      }
      if (b >= 1) {
        Matrix dc = differential(c, b);
        const std::size_t row0 = offset(a, t - 1), dimb1 = c.terms[b - 1].dim();
        Scalar sign = a % 2 ? -f.one() : f.one();
        for (std::size_t s = 0; s < r.rank(a); ++s) m.set_block(row0 + s * dimb1, col0 + s * dimb, dc.scaled(sign));
      }
    }
    dt[t] = std::move(m);
  }
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t <= n; ++t) {
    const std::size_t dim = total_dim(t);
    const std::size_t rin = t >= 1 ? rank(dt[t]) : 0;
    const std::size_t rout = rank(dt[t + 1]);
    out.push_back(dim - rin - rout);
  }
  return out;
}

}  // namespace freecrit
