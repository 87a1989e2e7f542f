#include "freecrit/homotopy.hpp"

#include "freecrit/errors.hpp"

namespace freecrit {

namespace {

AMatrix hcomp(const FreeComplex& f, const FreeComplex& g, const Homotopy& h, std::size_t i) {
  if (i < h.h.size()) return h.h[i];
  return AMatrix(f.algebra(), g.rank(i + 1), f.rank(i));
}

// A stacked (k*n) x r matrix of k A-coordinate blocks as n x (k*r), block b
// in columns [b*r, (b+1)*r), and back.
Matrix to_wide(const Matrix& m, std::size_t n) {
  const std::size_t k = m.rows() / n, r = m.cols();
  Matrix out(m.field(), n, k * r);
  for (std::size_t b = 0; b < k; ++b) out.set_block(0, b * r, m.block(b * n, 0, n, r));
  return out;
}

Matrix from_wide(const Matrix& w, std::size_t k, std::size_t r) {
  const std::size_t n = w.rows();
  Matrix out(w.field(), k * n, r);
  for (std::size_t b = 0; b < k; ++b) out.set_block(b * n, 0, w.block(0, b * r, n, r));
  return out;
}

Homotopy unstack(const FreeComplex& f, const FreeComplex& g, const std::vector<Matrix>& hs, std::size_t c) {
  const std::size_t n = f.algebra()->dim();
  Homotopy h;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::size_t hrows = g.rank(i + 1) * n;
    Matrix st(f.algebra()->field(), hrows, f.rank(i));
    for (std::size_t s = 0; s < f.rank(i); ++s) st.set_block(0, s, hs[i].block(s * hrows, c, hrows, 1));
    h.h.emplace_back(f.algebra(), g.rank(i + 1), f.rank(i), std::move(st));
  }
  return h;
}

// Solves dh + hd = sum_j c_j maps[j] one degree at a time: h_i is the
// particular solution of d h_i = target_i - h_{i-1} d with free variables
// zero. Every returned witness is genuine, but the coefficient space can be
// smaller than the true one when an early choice obstructs a later degree.
struct Staged {
  Matrix coeffs;               // q x r
  std::vector<Homotopy> h;     // one per column of coeffs
};

Staged staged_solve(const FreeComplex& f, const FreeComplex& g, const std::vector<ChainMap>& maps) {
  const ArtinAlgebra& alg = *f.algebra();
  const Field& fld = alg.field();
  const std::size_t n = alg.dim();
  Matrix basis = Matrix::identity(fld, maps.size());
  std::vector<Matrix> hs;  // hs[i] column c: h_i for coefficient vector c, column s at rows s*hrows
  for (std::size_t i = 0; i <= f.top(); ++i) {
    const std::size_t rows_i = g.rank(i) * n;
    const std::size_t hrows = g.rank(i + 1) * n;
    const std::size_t r = basis.cols();
    Matrix t(fld, rows_i, f.rank(i) * maps.size());
    for (std::size_t j = 0; j < maps.size(); ++j) {
      AMatrix c = component(f, g, maps[j], i);
      for (std::size_t s = 0; s < f.rank(i); ++s) t.set_block(0, s * maps.size() + j, c.stacked().col(s));
    }
    // rhs column block s holds (target - h_{i-1} d)(e_s) for every coefficient column.
    Matrix rhs(fld, rows_i, f.rank(i) * r);
    for (std::size_t s = 0; s < f.rank(i); ++s)
      rhs.set_block(0, s * r, t.block(0, s * maps.size(), rows_i, maps.size()) * basis);
    if (i > 0 && rows_i > 0 && r > 0) {
      Matrix fl = f.d(i).flatten();
      std::vector<Matrix> wide;
      for (std::size_t u = 0; u < f.rank(i - 1); ++u) wide.push_back(to_wide(hs[i - 1].block(u * rows_i, 0, rows_i, r), n));
      Matrix prev = Matrix::vstack(wide);
      for (std::size_t s = 0; s < f.rank(i); ++s) {
        std::vector<Matrix> ls;
        for (std::size_t u = 0; u < f.rank(i - 1); ++u) ls.push_back(fl.block(u * n, s * n, n, n));
        Matrix hd = from_wide(Matrix::hstack(ls) * prev, g.rank(i), r);
        rhs.add_block(0, s * r, hd, -fld.one());
      }
    }
    LeftSolver solver(g.rank(i + 1) > 0 ? g.d(i + 1).flatten() : Matrix(fld, rows_i, 0));
    Matrix red = solver.reduce(rhs);
    const std::size_t extra = rows_i - solver.rank();
    if (extra > 0 && r > 0) {
      std::vector<Matrix> cons;
      for (std::size_t s = 0; s < f.rank(i); ++s) cons.push_back(red.block(solver.rank(), s * r, extra, r));
      Matrix all = Matrix::vstack(cons);
      if (!all.is_zero()) {
        Matrix keep = kernel_basis(all);
        basis = basis * keep;
        for (auto& h : hs) h = h * keep;
        std::vector<Matrix> parts;
        for (std::size_t s = 0; s < f.rank(i); ++s) parts.push_back(red.block(0, s * r, rows_i, r) * keep);
        red = parts.empty() ? Matrix(fld, rows_i, 0) : Matrix::hstack(parts);
      }
    }
    const std::size_t r2 = basis.cols();
    Matrix sol = solver.particular_reduced(red);
    Matrix hi(fld, hrows * f.rank(i), r2);
    for (std::size_t s = 0; s < f.rank(i); ++s) hi.set_block(s * hrows, 0, sol.block(0, s * r2, hrows, r2));
    hs.push_back(std::move(hi));
  }
  Staged out{basis, {}};
  for (std::size_t c = 0; c < basis.cols(); ++c) out.h.push_back(unstack(f, g, hs, c));
  return out;
}

// {a : a H_0(F) = 0}: a e_s must be a boundary for each generator e_s.
Matrix h0_annihilator(const FreeComplex& f) {
  const ArtinAlgebra& alg = *f.algebra();
  const std::size_t n = alg.dim();
  const std::size_t rows = f.rank(0) * n;
  if (rows == 0) return Matrix::identity(alg.field(), n);
  LeftSolver b(f.rank(1) > 0 ? f.d(1).flatten() : Matrix(alg.field(), rows, 0));
  Matrix cons = b.constraints(Matrix::identity(alg.field(), rows));
  std::vector<Matrix> parts;
  for (std::size_t s = 0; s < f.rank(0); ++s) parts.push_back(cons.block(0, s * n, cons.rows(), n));
  return kernel_basis(Matrix::vstack(parts));
}

// {a : a H_i(F) = 0 for all i}; contains the derived annihilator.
Matrix homology_annihilator(const FreeComplex& f) {
  const ArtinAlgebra& alg = *f.algebra();
  const std::size_t n = alg.dim();
  std::vector<Matrix> mults;
  for (std::size_t j = 0; j < n; ++j) mults.push_back(alg.mult_matrix(alg.basis(j)));
  std::vector<Matrix> cons;
  for (std::size_t i = 0; i <= f.top(); ++i) {
    const std::size_t rows_i = f.rank(i) * n;
    if (rows_i == 0) continue;
    Matrix z = i > 0 ? kernel_basis(f.d(i).flatten()) : Matrix::identity(alg.field(), rows_i);
    LeftSolver b(f.rank(i + 1) > 0 ? f.d(i + 1).flatten() : Matrix(alg.field(), rows_i, 0));
    for (std::size_t c = 0; c < z.cols(); ++c) {
      Matrix zc = z.col(c);
      Matrix m(alg.field(), rows_i, n);
      for (std::size_t j = 0; j < n; ++j) m.set_block(0, j, from_wide(mults[j] * to_wide(zc, n), f.rank(i), 1));
      cons.push_back(b.constraints(m));
    }
  }
  if (cons.empty()) return Matrix::identity(alg.field(), n);
  return kernel_basis(Matrix::vstack(cons));
}

}  // namespace

bool is_chain_map(const FreeComplex& f, const FreeComplex& g, const ChainMap& map) {
  const std::size_t top = std::max(f.top(), g.top());
  for (std::size_t i = 0; i <= top; ++i) {
    AMatrix fi = component(f, g, map, i);
    if (fi.rows() != g.rank(i) || fi.cols() != f.rank(i)) return false;
  }
  for (std::size_t i = 1; i <= top; ++i)
    if (!(g.d(i) * component(f, g, map, i) == component(f, g, map, i - 1) * f.d(i))) return false;
  return true;
}

AMatrix dh_plus_hd(const FreeComplex& f, const FreeComplex& g, const Homotopy& h, std::size_t i) {
  AMatrix out = g.d(i + 1) * hcomp(f, g, h, i);
  if (i > 0) out = out + hcomp(f, g, h, i - 1) * f.d(i);
  return out;
}

bool is_homotopy(const FreeComplex& f, const FreeComplex& g, const ChainMap& target, const Homotopy& h) {
  for (std::size_t i = 0; i <= f.top(); ++i)
    if (!(dh_plus_hd(f, g, h, i) == component(f, g, target, i))) return false;
  return true;
}

HomotopySystem::HomotopySystem(const FreeComplex& f, const FreeComplex& g) : f_(f), g_(g) {
  const std::size_t n = f.algebra()->dim();
  const std::size_t top = f.top();
  std::size_t eq = 0, un = 0;
  for (std::size_t i = 0; i <= top; ++i) {
    eq_off_.push_back(eq);
    h_off_.push_back(un);
    eq += g.rank(i) * n * f.rank(i);
    un += g.rank(i + 1) * n * f.rank(i);
  }
  d_ = Matrix(f.algebra()->field(), eq, un);
  for (std::size_t i = 0; i <= top; ++i) {
    const std::size_t rows_i = g.rank(i) * n;
    // d^G_{i+1} h_i, column by column
    if (g.rank(i + 1) > 0 && rows_i > 0) {
      Matrix dg = g.d(i + 1).flatten();
      const std::size_t hrows = g.rank(i + 1) * n;
      for (std::size_t s = 0; s < f.rank(i); ++s) d_.set_block(eq_off_[i] + s * rows_i, h_off_[i] + s * hrows, dg);
    }
    // h_{i-1} d^F_i: column s of the product is sum_t d^F_i(t, s) * column t of h_{i-1}
    if (i == 0 || rows_i == 0) continue;
    AMatrix df = f.d(i);
    for (std::size_t s = 0; s < f.rank(i); ++s)
      for (std::size_t t = 0; t < f.rank(i - 1); ++t) {
        if (df.entry_is_zero(t, s)) continue;
        Matrix l = f.algebra()->mult_matrix(df.entry(t, s));
        for (std::size_t r = 0; r < g.rank(i); ++r)
          d_.set_block(eq_off_[i] + s * rows_i + r * n, h_off_[i - 1] + t * rows_i + r * n, l);
      }
  }
}

Matrix HomotopySystem::pack(const ChainMap& map) const {
  const std::size_t n = f_.algebra()->dim();
  Matrix v(f_.algebra()->field(), equations(), 1);
  for (std::size_t i = 0; i <= f_.top(); ++i) {
    AMatrix fi = component(f_, g_, map, i);
    const std::size_t rows_i = g_.rank(i) * n;
    for (std::size_t s = 0; s < f_.rank(i); ++s) v.set_block(eq_off_[i] + s * rows_i, 0, fi.stacked().col(s));
  }
  return v;
}

Homotopy HomotopySystem::unpack(const Matrix& x) const {
  const std::size_t n = f_.algebra()->dim();
  Homotopy h;
  for (std::size_t i = 0; i <= f_.top(); ++i) {
    const std::size_t hrows = g_.rank(i + 1) * n;
    Matrix st(f_.algebra()->field(), hrows, f_.rank(i));
    for (std::size_t s = 0; s < f_.rank(i); ++s) st.set_block(0, s, x.block(h_off_[i] + s * hrows, 0, hrows, 1));
    h.h.emplace_back(f_.algebra(), g_.rank(i + 1), f_.rank(i), std::move(st));
  }
  return h;
}

Matrix HomotopySystem::scalar_columns() const {
  const std::size_t n = f_.algebra()->dim();
  Matrix m(f_.algebra()->field(), equations(), n);
  Matrix id = Matrix::identity(f_.algebra()->field(), n);
  for (std::size_t i = 0; i <= f_.top(); ++i) {
    const std::size_t rows_i = g_.rank(i) * n;
    for (std::size_t s = 0; s < f_.rank(i); ++s) m.set_block(eq_off_[i] + s * rows_i + s * n, 0, id);
  }
  return m;
}

std::optional<Homotopy> solve_homotopy(const FreeComplex& f, const FreeComplex& g, const ChainMap& map) {
  Staged quick = staged_solve(f, g, {map});
  if (quick.coeffs.cols() == 1) {
    Homotopy h = scaled(quick.h[0], quick.coeffs(0, 0).inverse());
    if (!is_homotopy(f, g, map, h)) throw Error("internal: staged homotopy fails");
    return h;
  }
  HomotopySystem sys(f, g);
  auto x = solve(sys.matrix(), sys.pack(map));
  if (!x) return std::nullopt;
  Homotopy h = sys.unpack(*x);
  if (!is_homotopy(f, g, map, h)) throw Error("internal: homotopy solver returned an invalid witness");
  return h;
}

bool homotopy_class_eq(const FreeComplex& f, const FreeComplex& g, const ChainMap& a, const ChainMap& b) {
  return solve_homotopy(f, g, sub(a, b)).has_value();
}

bool DerivedAnnihilator::contains(const Matrix& a) const {
  return rank(Matrix::hstack({basis, a})) == basis.cols();
}

DerivedAnnihilator derived_annihilator(const FreeComplex& f) {
  const ArtinAlgebra& alg = *f.algebra();
  DerivedAnnihilator out;
  // The staged witnesses give a lower bound and the annihilator of homology
  // an upper bound; when they meet, the full system is not needed.
  Matrix candidates = h0_annihilator(f);
  std::vector<ChainMap> scalars;
  for (std::size_t j = 0; j < candidates.cols(); ++j) scalars.push_back(scalar_map(f, candidates.col(j)));
  Staged quick = staged_solve(f, f, scalars);
  const std::size_t found = quick.coeffs.cols();
  if (found == candidates.cols() || found == homology_annihilator(f).cols()) {
    out.basis = candidates * quick.coeffs;
    out.witnesses = std::move(quick.h);
  } else {
    HomotopySystem sys(f, f);
    SplitSystem split(Matrix::hstack({sys.scalar_columns(), -sys.matrix()}), alg.dim());
    out.basis = split.projection();
    for (std::size_t c = 0; c < out.basis.cols(); ++c) out.witnesses.push_back(sys.unpack(split.complete(out.basis.col(c))));
  }
  for (std::size_t c = 0; c < out.basis.cols() && out.is_ideal; ++c)
    for (std::size_t j = 1; j < alg.dim(); ++j)
      if (!out.contains(alg.mul(alg.basis(j), out.basis.col(c)))) {
        out.is_ideal = false;
        break;
      }
  if (alg.graded() && alg.grading()->truncated) out.window = alg.grading()->truncation;
  return out;
}

ChainMap scalar_map(const FreeComplex& f, const Matrix& a) {
  ChainMap m;
  for (std::size_t i = 0; i <= f.top(); ++i) m.f.push_back(AMatrix::scalar(f.algebra(), f.rank(i), a));
  return m;
}

ChainMap add(const ChainMap& a, const ChainMap& b) {
  if (a.f.size() != b.f.size()) throw DimensionMismatch("chain maps of different length");
  ChainMap out;
  for (std::size_t i = 0; i < a.f.size(); ++i) out.f.push_back(a.f[i] + b.f[i]);
  return out;
}

ChainMap sub(const ChainMap& a, const ChainMap& b) {
  if (a.f.size() != b.f.size()) throw DimensionMismatch("chain maps of different length");
  ChainMap out;
  for (std::size_t i = 0; i < a.f.size(); ++i) out.f.push_back(a.f[i] - b.f[i]);
  return out;
}

Homotopy add(const Homotopy& a, const Homotopy& b) {
  if (a.h.size() != b.h.size()) throw DimensionMismatch("homotopies of different length");
  Homotopy out;
  for (std::size_t i = 0; i < a.h.size(); ++i) out.h.push_back(a.h[i] + b.h[i]);
  return out;
}

Homotopy scaled(const Homotopy& h, const Scalar& s) {
  Homotopy out;
  for (const auto& m : h.h) out.h.push_back(m.scaled(s));
  return out;
}

}  // namespace freecrit
