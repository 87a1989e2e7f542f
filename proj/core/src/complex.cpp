#include "freecrit/complex.hpp"

#include <algorithm>

#include "freecrit/errors.hpp"
#include "freecrit/linalg.hpp"

namespace freecrit {

namespace {

Matrix empty_cols(const Field& f, std::size_t rows) { return Matrix(f, rows, 0); }

// Columns of `cols` not in the span of `base`, chosen by rref order.
Matrix new_columns(const Matrix& base, const Matrix& cols) {
  auto piv = rref(Matrix::hstack({base, cols})).pivots;
  std::vector<std::size_t> keep;
  for (auto c : piv)
    if (c >= base.cols()) keep.push_back(c - base.cols());
  return cols.select_columns(keep);
}

// Kernel of m restricted to the given columns, embedded back.
Matrix restricted_kernel(const Matrix& m, const std::vector<std::size_t>& cols, std::size_t full) {
  Matrix k = kernel_basis(m.select_columns(cols));
  Matrix out(m.field(), full, k.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) out.set_block(cols[j], 0, k.block(j, 0, 1, k.cols()));
  return out;
}

}  // namespace

FreeComplex::FreeComplex(AlgebraPtr alg, std::vector<std::size_t> ranks, std::vector<AMatrix> d)
    : alg_(std::move(alg)), ranks_(std::move(ranks)), d_(std::move(d)) {
  if (ranks_.empty()) ranks_.push_back(0);
  if (d_.size() != ranks_.size() - 1) throw DimensionMismatch("expected one differential per positive degree");
  for (std::size_t i = 1; i <= top(); ++i) {
    const AMatrix& m = d_[i - 1];
    if (m.rows() != ranks_[i - 1] || m.cols() != ranks_[i])
      throw DimensionMismatch("d_" + std::to_string(i) + " has shape " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(ranks_[i - 1]) + "x" +
                              std::to_string(ranks_[i]));
    if (m.algebra()->dim() != alg_->dim()) throw DimensionMismatch("differential over another algebra");
  }
  if (alg_->graded()) {
    infer_degrees();
    homogeneous_ = check_homogeneous();
  }
}

bool FreeComplex::graded() const noexcept {
  return alg_ && alg_->graded() && (homogeneous_ || alg_->grading()->truncated);
}

bool FreeComplex::check_homogeneous() const {
  const auto& deg = alg_->grading()->degrees;
  const std::size_t n = alg_->dim();
  for (std::size_t i = 1; i <= top(); ++i)
    for (std::size_t r = 0; r < rank(i - 1); ++r)
      for (std::size_t s = 0; s < rank(i); ++s)
        for (std::size_t l = 0; l < n; ++l)
          if (!d_[i - 1].stacked().entry_is_zero(r * n + l, s) && degrees_[i - 1][r] + deg[l] != degrees_[i][s])
            return false;
  return true;
}

AMatrix FreeComplex::d(std::size_t i) const {
  if (i >= 1 && i <= top()) return d_[i - 1];
  return AMatrix(alg_, i == 0 ? 0 : rank(i - 1), rank(i));
}

void FreeComplex::set_labels(std::vector<std::vector<std::string>> labels) {
  if (labels.size() != ranks_.size()) throw DimensionMismatch("one label list per degree expected");
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i].size() != ranks_[i]) throw DimensionMismatch("label count differs from rank in degree " + std::to_string(i));
  labels_ = std::move(labels);
}

void FreeComplex::set_degrees(std::vector<std::vector<int>> degrees) {
  if (degrees.size() != ranks_.size()) throw DimensionMismatch("one degree list per homological degree expected");
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i].size() != ranks_[i]) throw DimensionMismatch("degree count differs from rank in degree " + std::to_string(i));
  degrees_ = std::move(degrees);
  if (alg_->graded()) homogeneous_ = check_homogeneous();
}

void FreeComplex::infer_degrees() {
  const auto& deg = alg_->grading()->degrees;
  const std::size_t n = alg_->dim();
  degrees_.assign(ranks_.size(), {});
  degrees_[0].assign(ranks_[0], 0);
  for (std::size_t i = 1; i <= top(); ++i) {
    degrees_[i].assign(ranks_[i], 0);
    const AMatrix& m = d_[i - 1];
    for (std::size_t s = 0; s < ranks_[i]; ++s) {
      bool found = false;
      for (std::size_t r = 0; r < ranks_[i - 1] && !found; ++r)
        for (std::size_t l = 0; l < n; ++l)
          if (!m.stacked().entry_is_zero(r * n + l, s)) {
            degrees_[i][s] = degrees_[i - 1][r] + deg[l];
            found = true;
            break;
          }
    }
  }
}

std::vector<int> FreeComplex::coordinate_degrees(std::size_t i) const {
  std::vector<int> out;
  if (!graded()) return out;
  const auto& deg = alg_->grading()->degrees;
  for (std::size_t s = 0; s < rank(i); ++s)
    for (int dl : deg) out.push_back(degrees_[i][s] + dl);
  return out;
}

ComplexReport FreeComplex::validate() const {
  ComplexReport rep;
  for (std::size_t i = 1; i < top(); ++i) {
    AMatrix sq = d_[i - 1] * d_[i];
    for (std::size_t r = 0; r < sq.rows(); ++r)
      for (std::size_t c = 0; c < sq.cols(); ++c)
        if (!sq.entry_is_zero(r, c)) {
          rep.valid = false;
          rep.failures.push_back("d_" + std::to_string(i) + "*d_" + std::to_string(i + 1) + " is " +
                                 alg_->format(sq.entry(r, c)) + " at (" + std::to_string(r) + "," +
                                 std::to_string(c) + ")");
        }
  }
  if (graded()) {
    const auto& deg = alg_->grading()->degrees;
    const std::size_t n = alg_->dim();
    for (std::size_t i = 1; i <= top(); ++i)
      for (std::size_t r = 0; r < rank(i - 1); ++r)
        for (std::size_t s = 0; s < rank(i); ++s)
          for (std::size_t l = 0; l < n; ++l) {
            if (d_[i - 1].stacked().entry_is_zero(r * n + l, s)) continue;
            if (degrees_[i - 1][r] + deg[l] != degrees_[i][s]) {
              rep.valid = false;
              rep.failures.push_back("d_" + std::to_string(i) + " entry (" + std::to_string(r) + "," +
                                     std::to_string(s) + ") is not homogeneous of the expected degree");
              l = n;
            }
          }
  }
  return rep;
}

bool FreeComplex::is_minimal() const {
  return std::all_of(d_.begin(), d_.end(), [](const AMatrix& m) { return m.entries_in_m(); });
}

HomologyModule FreeComplex::homology(std::size_t i) const {
  const Field& f = alg_->field();
  const std::size_t n = alg_->dim();
  const std::size_t width = rank(i) * n;
  HomologyModule h;
  h.degree = i;
  Matrix din = d(i).flatten();
  Matrix dout = d(i + 1).flatten();
  const bool windowed = graded() && alg_->grading()->truncated;
  if (!graded()) {
    Matrix z = kernel_basis(din);
    h.boundaries = dout.cols() ? image_basis(dout) : empty_cols(f, width);
    h.reps = new_columns(h.boundaries, z);
  } else {
    auto cd = coordinate_degrees(i);
    auto cd_next = coordinate_degrees(i + 1);
    std::vector<int> strands(cd.begin(), cd.end());
    std::sort(strands.begin(), strands.end());
    strands.erase(std::unique(strands.begin(), strands.end()), strands.end());
    std::vector<Matrix> bs{empty_cols(f, width)}, rs{empty_cols(f, width)};
    for (int t : strands) {
      if (windowed && t > alg_->grading()->truncation) break;
      std::vector<std::size_t> cols, cols_next;
      for (std::size_t j = 0; j < cd.size(); ++j)
        if (cd[j] == t) cols.push_back(j);
      for (std::size_t j = 0; j < cd_next.size(); ++j)
        if (cd_next[j] == t) cols_next.push_back(j);
      Matrix z = restricted_kernel(din, cols, width);
      Matrix b = cols_next.empty() ? empty_cols(f, width) : image_basis(dout.select_columns(cols_next));
      Matrix r = new_columns(b, z);
      bs.push_back(b);
      rs.push_back(r);
      h.internal_degrees.insert(h.internal_degrees.end(), r.cols(), t);
    }
    h.boundaries = Matrix::hstack(bs);
    h.reps = Matrix::hstack(rs);
    if (windowed) h.window = alg_->grading()->truncation;
  }
  // Induced action of each basis element of A.
  const std::size_t dh = h.dim();
  std::vector<Matrix> images;
  for (std::size_t l = 0; l < n; ++l) {
    Matrix v(f, width, dh);
    for (std::size_t c = 0; c < dh; ++c) {
      if (h.window && h.internal_degrees[c] + alg_->grading()->degrees[l] > *h.window) continue;
      for (std::size_t s = 0; s < rank(i); ++s)
        v.set_block(s * n, c, alg_->mult(l) * h.reps.block(s * n, c, n, 1));
    }
    images.push_back(std::move(v));
  }
  Matrix all = images.empty() ? empty_cols(f, width) : Matrix::hstack(images);
  Matrix coords = h.classify(all);
  for (std::size_t l = 0; l < n; ++l) h.action.push_back(coords.block(0, l * dh, dh, dh));
  return h;
}

Matrix HomologyModule::classify(const Matrix& cycles) const {
  Matrix basis = Matrix::hstack({boundaries, reps});
  auto x = solve(basis, cycles);
  if (!x) throw Error("homology: vector is not a cycle inside the computed window");
  return x->block(boundaries.cols(), 0, reps.cols(), cycles.cols());
}

std::size_t FreeComplex::homology_dim(std::size_t i) const {
  if (!graded()) {
    Matrix din = d(i).flatten();
    Matrix dout = d(i + 1).flatten();
    return din.cols() - freecrit::rank(din) - freecrit::rank(dout);
  }
  return homology(i).dim();
}

std::optional<std::pair<std::size_t, std::size_t>> FreeComplex::inf_sup() const {
  std::optional<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i <= top(); ++i) {
    if (homology_dim(i) == 0) continue;
    if (!out) out = std::make_pair(i, i);
    out->second = i;
  }
  return out;
}

std::vector<std::size_t> FreeComplex::betti() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= top(); ++i) {
    std::size_t rin = freecrit::rank(d(i).residue()), rout = freecrit::rank(d(i + 1).residue());
    out.push_back(rank(i) - rin - rout);
  }
  return out;
}

std::optional<std::size_t> FreeComplex::proj_dim() const {
  auto b = betti();
  for (std::size_t i = b.size(); i-- > 0;)
    if (b[i] != 0) return i;
  return std::nullopt;
}

ChainMap identity_map(const FreeComplex& f) {
  ChainMap m;
  for (std::size_t i = 0; i <= f.top(); ++i) m.f.push_back(AMatrix::identity(f.algebra(), f.rank(i)));
  return m;
}

AMatrix component(const FreeComplex& src, const FreeComplex& dst, const ChainMap& f, std::size_t i) {
  if (i < f.f.size()) return f.f[i];
  return AMatrix(src.algebra(), dst.rank(i), src.rank(i));
}

ChainMap compose(const FreeComplex& f, const FreeComplex& g, const FreeComplex& h, const ChainMap& a,
                 const ChainMap& b) {
  ChainMap out;
  const std::size_t top = std::max({f.top(), g.top(), h.top()});
  for (std::size_t i = 0; i <= top; ++i) out.f.push_back(component(g, h, b, i) * component(f, g, a, i));
  return out;
}

FreeComplex direct_sum(const FreeComplex& f, const FreeComplex& g) {
  const std::size_t top = std::max(f.top(), g.top());
  std::vector<std::size_t> ranks;
  std::vector<AMatrix> d;
  for (std::size_t i = 0; i <= top; ++i) ranks.push_back(f.rank(i) + g.rank(i));
  for (std::size_t i = 1; i <= top; ++i) d.push_back(AMatrix::block_diag({f.d(i), g.d(i)}));
  FreeComplex out(f.algebra(), std::move(ranks), std::move(d));
  if (!f.labels().empty() && !g.labels().empty()) {
    std::vector<std::vector<std::string>> labels(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
      if (i <= f.top()) labels[i] = f.labels()[i];
      if (i <= g.top()) labels[i].insert(labels[i].end(), g.labels()[i].begin(), g.labels()[i].end());
    }
    out.set_labels(std::move(labels));
  }
  if (out.graded()) {
    std::vector<std::vector<int>> degrees(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
      if (i <= f.top()) degrees[i] = f.degrees()[i];
      if (i <= g.top()) degrees[i].insert(degrees[i].end(), g.degrees()[i].begin(), g.degrees()[i].end());
    }
    out.set_degrees(std::move(degrees));
  }
  return out;
}

FreeComplex direct_sum(const std::vector<FreeComplex>& parts) {
  FreeComplex out = parts.at(0);
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

FreeComplex shift(const FreeComplex& f, std::size_t n) {
  std::vector<std::size_t> ranks(n, 0);
  ranks.insert(ranks.end(), f.ranks().begin(), f.ranks().end());
  std::vector<AMatrix> d;
  const Scalar sign = n % 2 ? -f.algebra()->field().one() : f.algebra()->field().one();
  for (std::size_t i = 1; i < ranks.size(); ++i)
    d.push_back(i > n ? f.d(i - n).scaled(sign) : AMatrix(f.algebra(), ranks[i - 1], ranks[i]));
  FreeComplex out(f.algebra(), std::move(ranks), std::move(d));
  if (!f.labels().empty()) {
    std::vector<std::vector<std::string>> labels(n);
    labels.insert(labels.end(), f.labels().begin(), f.labels().end());
    out.set_labels(std::move(labels));
  }
  if (out.graded()) {
    std::vector<std::vector<int>> degrees(n);
    degrees.insert(degrees.end(), f.degrees().begin(), f.degrees().end());
    out.set_degrees(std::move(degrees));
  }
  return out;
}

FreeComplex cone(const FreeComplex& f, const FreeComplex& g, const ChainMap& map) {
  const std::size_t top = std::max(f.top() + 1, g.top());
  auto rf = [&](std::size_t i) { return i == 0 ? std::size_t{0} : f.rank(i - 1); };
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i <= top; ++i) ranks.push_back(rf(i) + g.rank(i));
  std::vector<AMatrix> d;
  for (std::size_t i = 1; i <= top; ++i) {
    AMatrix m(f.algebra(), ranks[i - 1], ranks[i]);
    const std::size_t top_rows = rf(i - 1);
    m.set_block(0, 0, -f.d(i - 1).block(0, 0, top_rows, rf(i)));
    m.set_block(top_rows, 0, component(f, g, map, i - 1));
    m.set_block(top_rows, rf(i), g.d(i));
    d.push_back(std::move(m));
  }
  FreeComplex out(f.algebra(), std::move(ranks), std::move(d));
  if (out.graded()) {
    std::vector<std::vector<int>> degrees(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
      if (i >= 1 && i - 1 <= f.top()) degrees[i] = f.degrees()[i - 1];
      if (i <= g.top()) degrees[i].insert(degrees[i].end(), g.degrees()[i].begin(), g.degrees()[i].end());
    }
    out.set_degrees(std::move(degrees));
  }
  return out;
}

bool is_quasi_iso(const FreeComplex& f, const FreeComplex& g, const ChainMap& map) {
  FreeComplex c = cone(f, g, map);
  for (std::size_t i = 0; i <= c.top(); ++i)
    if (c.homology_dim(i) != 0) return false;
  return true;
}

FreeComplex conjugate(const FreeComplex& f, const ChainMap& g) {
  std::vector<AMatrix> inv;
  for (std::size_t i = 0; i <= f.top(); ++i) {
    auto x = component(f, f, g, i).inverse();
    if (!x) throw NotInvertibleModM("conjugating map is not invertible in degree " + std::to_string(i));
    inv.push_back(std::move(*x));
  }
  std::vector<AMatrix> d;
  for (std::size_t i = 1; i <= f.top(); ++i) d.push_back(component(f, f, g, i - 1) * f.d(i) * inv[i]);
  FreeComplex out(f.algebra(), f.ranks(), std::move(d));
  if (out.graded()) out.set_degrees(f.degrees());
  return out;
}

}  // namespace freecrit
