#include "freecrit/linalg.hpp"

#include <algorithm>

#include "freecrit/errors.hpp"

namespace freecrit {

namespace {

struct PrimeOps {
  using T = std::uint64_t;
  explicit PrimeOps(std::uint64_t p) : p(p), red(p) {}
  static bool zero(T v) { return v == 0; }
  T inv(T v) const { return modular::inverse(v, p); }
  T neg(T v) const { return v == 0 ? 0 : p - v; }
  T mul(T a, T b) const { return red.mul(a, b); }
  // dst += f * src
  void axpy(T& dst, T f, T src) const { dst = red.mul_add(dst, f, src); }
  static std::vector<T>& data(Matrix& m) { return m.residues(); }
  static const std::vector<T>& data(const Matrix& m) { return m.residues(); }

  std::uint64_t p;
  modular::Reducer red;
};

struct RationalOps {
  using T = mpq_class;
  static bool zero(const T& v) { return v == 0; }
  static T inv(const T& v) { return 1 / v; }
  static T neg(const T& v) { return -v; }
  static T mul(const T& a, const T& b) { return a * b; }
  static void axpy(T& dst, const T& f, const T& src) { dst += f * src; }
  static std::vector<T>& data(Matrix& m) { return m.rationals(); }
  static const std::vector<T>& data(const Matrix& m) { return m.rationals(); }
};

template <class Ops>
std::vector<std::size_t> forward_impl(const Ops& ops, Matrix& m, std::size_t limit) {
  using T = typename Ops::T;
  auto& a = Ops::data(m);
  const std::size_t n = m.rows(), w = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < limit && rank < n; ++c) {
    std::size_t r = rank;
    while (r < n && Ops::zero(a[r * w + c])) ++r;
    if (r == n) continue;
    if (r != rank) std::swap_ranges(a.begin() + r * w, a.begin() + (r + 1) * w, a.begin() + rank * w);
    T* piv = &a[rank * w];
    T s = ops.inv(piv[c]);
    nz.clear();
    for (std::size_t j = c; j < w; ++j) {
      if (Ops::zero(piv[j])) continue;
      piv[j] = ops.mul(piv[j], s);
      nz.push_back(j);
    }
    for (std::size_t r2 = rank + 1; r2 < n; ++r2) {
      T* row = &a[r2 * w];
      if (Ops::zero(row[c])) continue;
      T f = ops.neg(row[c]);
      for (std::size_t j : nz) ops.axpy(row[j], f, piv[j]);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

template <class Ops>
void back_impl(const Ops& ops, Matrix& m, const std::vector<std::size_t>& pivots) {
  using T = typename Ops::T;
  auto& a = Ops::data(m);
  const std::size_t w = m.cols();
  std::vector<std::size_t> nz;
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    const T* piv = &a[k * w];
    nz.clear();
    for (std::size_t j = c; j < w; ++j)
      if (!Ops::zero(piv[j])) nz.push_back(j);
    for (std::size_t r = 0; r < k; ++r) {
      T* row = &a[r * w];
      if (Ops::zero(row[c])) continue;
      T f = ops.neg(row[c]);
      for (std::size_t j : nz) ops.axpy(row[j], f, piv[j]);
    }
  }
}

// Solve echelon rows (pivot columns < limit) for the unknowns given the
// right-hand side columns `rhs` (one per row of the echelon block); free
// variables are zero.
template <class Ops>
void back_substitute_impl(const Ops& ops, const Matrix& e, const std::vector<std::size_t>& pivots, Matrix& x, Matrix& rhs) {
  auto& a = Ops::data(e);
  auto& xs = Ops::data(x);
  auto& b = Ops::data(rhs);
  const std::size_t w = e.cols(), m = rhs.cols();
  for (std::size_t k = pivots.size(); k-- > 0;) {
    for (std::size_t j = k + 1; j < pivots.size(); ++j) {
      const std::size_t pc = pivots[j];
      if (Ops::zero(a[k * w + pc])) continue;
      auto f = ops.neg(a[k * w + pc]);
      for (std::size_t col = 0; col < m; ++col)
        if (!Ops::zero(xs[pc * m + col])) ops.axpy(b[k * m + col], f, xs[pc * m + col]);
    }
    for (std::size_t col = 0; col < m; ++col) xs[pivots[k] * m + col] = b[k * m + col];
  }
}

// Solve echelon rows (pivot columns < limit, pivots scaled to 1) for the
// unknowns given the right-hand side columns `rhs` (one per row of the
// echelon block); free variables are zero.
Matrix back_substitute(const Matrix& e, const std::vector<std::size_t>& pivots, std::size_t unknowns,
                       const Matrix& rhs) {
  Matrix x(e.field(), unknowns, rhs.cols());
  Matrix work = rhs;
  if (e.prime_storage()) {
    back_substitute_impl(PrimeOps(e.field().characteristic()), e, pivots, x, work);
  } else {
    back_substitute_impl(RationalOps{}, e, pivots, x, work);
  }
  return x;
}

}  // namespace

namespace detail {

std::vector<std::size_t> forward_eliminate(Matrix& m, std::size_t limit) {
  limit = std::min(limit, m.cols());
  if (m.prime_storage()) return forward_impl(PrimeOps(m.field().characteristic()), m, limit);
  return forward_impl(RationalOps{}, m, limit);
}

void back_reduce(Matrix& m, const std::vector<std::size_t>& pivots) {
  if (m.prime_storage()) {
    back_impl(PrimeOps(m.field().characteristic()), m, pivots);
  } else {
    back_impl(RationalOps{}, m, pivots);
  }
}

}  // namespace detail

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}};
  out.pivots = detail::forward_eliminate(out.reduced, m.cols());
  detail::back_reduce(out.reduced, out.pivots);
  return out;
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return detail::forward_eliminate(work, m.cols()).size();
}

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  Matrix k(m.field(), n, n - r.rank());
  std::size_t col = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k.set(free, col, m.field().one());
    for (std::size_t i = 0; i < r.rank(); ++i) {
      if (r.reduced.entry_is_zero(i, free)) continue;
      k.set(r.pivots[i], col, -r.reduced(i, free));
    }
    ++col;
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw DimensionMismatch("solve: right-hand side has wrong row count");
  Matrix aug = Matrix::hstack({m, b});
  auto pivots = detail::forward_eliminate(aug, m.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    for (std::size_t c = m.cols(); c < aug.cols(); ++c)
      if (!aug.entry_is_zero(r, c)) return std::nullopt;
  Matrix rhs = aug.block(0, m.cols(), pivots.size(), b.cols());
  return back_substitute(aug, pivots, m.cols(), rhs);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Matrix aug = Matrix::hstack({m, Matrix::identity(m.field(), m.rows())});
  auto pivots = detail::forward_eliminate(aug, m.cols());
  if (pivots.size() != m.rows()) return std::nullopt;
  detail::back_reduce(aug, pivots);
  return aug.block(0, m.cols(), m.rows(), m.cols());
}

Matrix image_basis(const Matrix& m) { return m.select_columns(rref(m).pivots); }

Matrix solve_and_project(const Matrix& m, std::size_t split) { return SplitSystem(m, split).projection(); }

SplitSystem::SplitSystem(const Matrix& m, std::size_t split) : split_(split) {
  if (split > m.cols()) throw DimensionMismatch("solve_and_project: split exceeds column count");
  rest_ = m.cols() - split;
  echelon_ = Matrix::hstack({m.block(0, split, m.rows(), rest_), m.block(0, 0, m.rows(), split)});
  if (echelon_.cols() == 0) echelon_ = Matrix(m.field(), m.rows(), 0);
  pivots_ = detail::forward_eliminate(echelon_, rest_);
  // Rows past the h-pivots only involve a: they cut out the projection.
  const std::size_t r0 = pivots_.size();
  Matrix constraints = echelon_.block(r0, rest_, echelon_.rows() - r0, split);
  projection_ = kernel_basis(constraints);
}

Matrix SplitSystem::complete(const Matrix& a) const {
  if (a.rows() != split_) throw DimensionMismatch("SplitSystem::complete: wrong length");
  Matrix first = echelon_.block(0, rest_, pivots_.size(), split_);
  Matrix rhs = -(first * a);
  return back_substitute(echelon_, pivots_, rest_, rhs);
}

LeftSolver::LeftSolver(const Matrix& m) : unknowns_(m.cols()) {
  Matrix aug = Matrix::hstack({m, Matrix::identity(m.field(), m.rows())});
  pivots_ = detail::forward_eliminate(aug, m.cols());
  echelon_ = aug.block(0, 0, pivots_.size(), aug.cols());
  transform_ = aug.block(0, m.cols(), m.rows(), m.rows());
}

Matrix LeftSolver::constraints(const Matrix& b) const {
  if (b.rows() != transform_.rows()) throw DimensionMismatch("LeftSolver: right-hand side has wrong row count");
  const std::size_t r = rank();
  return transform_.block(r, 0, transform_.rows() - r, transform_.cols()) * b;
}

Matrix LeftSolver::reduce(const Matrix& b) const {
  if (b.rows() != transform_.rows()) throw DimensionMismatch("LeftSolver: right-hand side has wrong row count");
  return transform_ * b;
}

Matrix LeftSolver::particular_reduced(const Matrix& reduced) const {
  if (reduced.rows() != transform_.rows()) throw DimensionMismatch("LeftSolver: right-hand side has wrong row count");
  return back_substitute(echelon_, pivots_, unknowns_, reduced.block(0, 0, rank(), reduced.cols()));
}

}  // namespace freecrit
