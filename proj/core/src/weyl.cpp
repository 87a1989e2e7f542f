#include "freecrit/weyl.hpp"

#include "freecrit/errors.hpp"
#include "freecrit/koszul.hpp"
#include "freecrit/linalg.hpp"

namespace freecrit {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Matrix s_product(const WModuleRep& rep, const std::vector<std::size_t>& seq) {
  Matrix out = Matrix::identity(rep.field, rep.total_dim());
  for (auto i : seq) out = out * rep.s(i);
  return out;
}

Matrix t_product_reversed(const WModuleRep& rep, const std::vector<std::size_t>& seq) {
  Matrix out = Matrix::identity(rep.field, rep.total_dim());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out = out * rep.t(*it);
  return out;
}

// First degree j in which the operator differs from zero, for messages.
std::string degree_of(const WModuleRep& rep, const Matrix& m) {
  for (std::size_t j = 0; j <= rep.top(); ++j)
    if (!m.block(0, rep.offset(j), m.rows(), rep.dims[j]).is_zero()) return "V_" + std::to_string(j);
  return "?";
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

AMatrix kron_identity(const AMatrix& m, std::size_t b) {
  AMatrix out(m.algebra(), m.rows() * b, m.cols() * b);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t s = 0; s < m.cols(); ++s) {
      if (m.entry_is_zero(r, s)) continue;
      Matrix e = m.entry(r, s);
      for (std::size_t c = 0; c < b; ++c) out.set(r * b + c, s * b + c, e);
    }
  return out;
}

}  // namespace

std::size_t WModuleRep::total_dim() const {
  std::size_t n = 0;
  for (auto d : dims) n += d;
  return n;
}

std::size_t WModuleRep::offset(std::size_t j) const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < j; ++k) n += dims[k];
  return n;
}

Matrix WModuleRep::s(std::size_t i) const {
  Matrix out(field, total_dim(), total_dim());
  for (std::size_t j = 0; j < top(); ++j) out.set_block(offset(j + 1), offset(j), S[i][j]);
  return out;
}

Matrix WModuleRep::t(std::size_t i) const {
  Matrix out(field, total_dim(), total_dim());
  for (std::size_t j = 0; j < top(); ++j) out.set_block(offset(j), offset(j + 1), T[i][j]);
  return out;
}

std::vector<std::string> WModuleRep::shape_errors() const {
  std::vector<std::string> out;
  if (S.size() != p || T.size() != p) out.push_back("expected p matrices S_i and T_i");
  for (std::size_t i = 0; i < S.size() && i < T.size(); ++i) {
    if (S[i].size() != top() || T[i].size() != top()) {
      out.push_back("s_" + std::to_string(i + 1) + "/t_" + std::to_string(i + 1) + ": one matrix per degree step");
      continue;
    }
    for (std::size_t j = 0; j < top(); ++j) {
      if (S[i][j].rows() != dims[j + 1] || S[i][j].cols() != dims[j])
        out.push_back("S_" + std::to_string(i + 1) + " has the wrong shape on V_" + std::to_string(j));
      if (T[i][j].rows() != dims[j] || T[i][j].cols() != dims[j + 1])
        out.push_back("T_" + std::to_string(i + 1) + " has the wrong shape on V_" + std::to_string(j + 1));
    }
  }
  return out;
}

WeylReport check_weyl_relations(const WModuleRep& rep, bool extended) {
  WeylReport out;
  out.failures = rep.shape_errors();
  if (!out.failures.empty()) {
    out.passed = false;
    return out;
  }
  const std::size_t n = rep.total_dim();
  std::vector<Matrix> s, t;
  for (std::size_t i = 0; i < rep.p; ++i) {
    s.push_back(rep.s(i));
    t.push_back(rep.t(i));
  }
  auto fail = [&](const std::string& what, const Matrix& residual) {
    out.passed = false;
    out.failures.push_back(what + " fails on " + degree_of(rep, residual));
  };
  const Matrix id = Matrix::identity(rep.field, n);
  for (std::size_t i = 0; i < rep.p; ++i)
    for (std::size_t j = 0; j < rep.p; ++j) {
      Matrix r = s[i] * t[j] + t[j] * s[i];
      if (i == j) r -= id;
      if (!r.is_zero()) fail("[s" + std::to_string(i + 1) + ",t" + std::to_string(j + 1) + "]", r);
    }
  if (!extended) return out;
  for (std::size_t i = 0; i < rep.p; ++i)
    for (std::size_t j = i; j < rep.p; ++j) {
      const std::string tag = std::to_string(i + 1) + std::to_string(j + 1);
      Matrix ss = i == j ? s[i] * s[i] : s[i] * s[j] + s[j] * s[i];
      Matrix tt = i == j ? t[i] * t[i] : t[i] * t[j] + t[j] * t[i];
      for (std::size_t k = 0; k < rep.p; ++k) {
        Matrix a = commutator(ss, t[k]);
        if (!a.is_zero()) fail("centrality of s-product " + tag + " against t" + std::to_string(k + 1), a);
        Matrix b = commutator(tt, s[k]);
        if (!b.is_zero()) fail("centrality of t-product " + tag + " against s" + std::to_string(k + 1), b);
      }
      if (!ss.is_zero()) fail("vanishing of s-product " + tag, ss);
      if (!tt.is_zero()) fail("vanishing of t-product " + tag, tt);
    }
  return out;
}

bool check_lemmaA1(const WModuleRep& rep, const std::vector<std::size_t>& subset) {
  const std::size_t n = rep.total_dim();
  Matrix lhs1 = t_product_reversed(rep, subset) * s_product(rep, subset);
  Matrix lhs2 = s_product(rep, subset) * t_product_reversed(rep, subset);
  Matrix rhs1(rep.field, n, n), rhs2(rep.field, n, n);
  const std::size_t count = std::size_t{1} << subset.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<std::size_t> j;
    for (std::size_t b = 0; b < subset.size(); ++b)
      if (mask >> b & 1) j.push_back(subset[b]);
    Scalar sign = j.size() % 2 ? -rep.field.one() : rep.field.one();
    rhs1.add_block(0, 0, s_product(rep, j) * t_product_reversed(rep, j), sign);
    rhs2.add_block(0, 0, t_product_reversed(rep, j) * s_product(rep, j), sign);
  }
  return lhs1 == rhs1 && lhs2 == rhs2;
}

WModuleRep exterior_model(const Field& field, std::size_t p, std::size_t dim0) {
  WModuleRep rep;
  rep.field = field;
  rep.p = p;
  for (std::size_t j = 0; j <= p; ++j) rep.dims.push_back(binom(p, j) * dim0);
  rep.S.assign(p, {});
  rep.T.assign(p, {});
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      Matrix s(field, rep.dims[j + 1], rep.dims[j]);
      Matrix t(field, rep.dims[j], rep.dims[j + 1]);
      for (const auto& set : monotone_subsets(p, j)) {
        bool present = false;
        std::size_t below = 0;
        for (auto l : set) {
          present = present || l == i;
          below += l < i;
        }
        if (present) continue;
        // s_i e_I = (-1)^below e_{I + i}; t_i is the transpose on these basis vectors
        std::vector<std::size_t> bigger = set;
        bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), i), i);
        Scalar sign = below % 2 ? -field.one() : field.one();
        const std::size_t from = subset_index(p, set), to = subset_index(p, bigger);
        for (std::size_t c = 0; c < dim0; ++c) {
          s.set(to * dim0 + c, from * dim0 + c, sign);
          t.set(from * dim0 + c, to * dim0 + c, sign);
        }
      }
      rep.S[i].push_back(std::move(s));
      rep.T[i].push_back(std::move(t));
    }
  return rep;
}

Scalar random_scalar(const Field& field, std::mt19937_64& rng) {
  if (field.is_prime()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
    return field.from_int(static_cast<std::int64_t>(dist(rng)));
  }
  std::uniform_int_distribution<int> dist(-3, 3);
  return field.from_int(dist(rng));
}

Matrix random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, random_scalar(field, rng));
    if (rank(m) == n) return m;
  }
}

WModuleRep random_graded_conjugate(const WModuleRep& rep, std::mt19937_64& rng) {
  std::vector<Matrix> g, ginv;
  for (auto d : rep.dims) {
    g.push_back(random_invertible(rep.field, d, rng));
    ginv.push_back(*inverse(g.back()));
  }
  WModuleRep out = rep;
  for (std::size_t i = 0; i < rep.p; ++i)
    for (std::size_t j = 0; j < rep.top(); ++j) {
      out.S[i][j] = g[j + 1] * rep.S[i][j] * ginv[j];
      out.T[i][j] = g[j] * rep.T[i][j] * ginv[j + 1];
    }
  return out;
}

StructureMap structure_map(const WModuleRep& rep) {
  if (rep.dims.empty() || rep.dims[0] == 0) throw NotIso("structure map needs V_0 != 0");
  for (std::size_t j = rep.p + 1; j < rep.dims.size(); ++j)
    if (rep.dims[j] != 0) throw NotIso("V_" + std::to_string(j) + " is nonzero above degree p");
  StructureMap out;
  const std::size_t d0 = rep.dims[0];
  out.nonvanishing = rep.dims.size() > rep.p;
  out.dimension_law = out.nonvanishing;
  for (std::size_t j = 0; j <= rep.p && j < rep.dims.size(); ++j) {
    if (rep.dims[j] == 0) out.nonvanishing = false;
    if (rep.dims[j] != binom(rep.p, j) * d0) out.dimension_law = false;
  }
  out.iso = true;
  for (std::size_t n = 0; n <= rep.p; ++n) {
    const std::size_t dn = n < rep.dims.size() ? rep.dims[n] : 0;
    const std::size_t off = n < rep.dims.size() ? rep.offset(n) : 0;
    auto sets = monotone_subsets(rep.p, n);
    Matrix phi(rep.field, dn, sets.size() * d0);
    if (dn > 0)
      for (std::size_t k = 0; k < sets.size(); ++k) {
        Matrix sI = s_product(rep, sets[k]);
        phi.set_block(0, k * d0, sI.block(off, 0, dn, d0));
      }
    if (phi.rows() != phi.cols() || rank(phi) != phi.rows()) {
      out.iso = false;
      if (!out.failing_degree) out.failing_degree = n;
    }
    out.phi.push_back(std::move(phi));
  }
  return out;
}

WModuleRep rep_from_homotopies(const FreeComplex& f, const std::vector<Matrix>& adapted, const std::vector<Homotopy>& h) {
  const ArtinAlgebra& a = *f.algebra();
  const std::size_t e = adapted.size();
  std::vector<Matrix> lin;
  for (const auto& x : adapted) lin.push_back(a.linear_part(x));
  auto to_adapted = inverse(Matrix::hstack(lin));
  if (!to_adapted || lin.size() != a.edim()) throw DependentModM2("adapted basis does not give a basis of m/m^2");
  WModuleRep rep;
  rep.field = a.field();
  rep.p = h.size();
  rep.dims = f.ranks();
  rep.S.assign(rep.p, {});
  rep.T.assign(rep.p, {});
  for (std::size_t j = 0; j < f.top(); ++j) {
    AMatrix d = f.d(j + 1);
    std::vector<Matrix> dbar(rep.p, Matrix(a.field(), d.rows(), d.cols()));
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        if (d.entry_is_zero(r, c)) continue;
        Matrix coords = *to_adapted * a.linear_part(d.entry(r, c));
        for (std::size_t i = 0; i < rep.p && i < e; ++i) dbar[i].set(r, c, coords(i, 0));
      }
    for (std::size_t i = 0; i < rep.p; ++i) {
      rep.S[i].push_back(h[i].h[j].residue());
      rep.T[i].push_back(dbar[i]);
    }
  }
  return rep;
}

KoszulLift koszul_lift(const FreeComplex& f, const std::vector<Matrix>& x, const std::vector<Homotopy>& h) {
  const AlgebraPtr& alg = f.algebra();
  const std::size_t p = x.size(), b = f.rank(0);
  FreeComplex k = koszul(alg, x);
  std::vector<std::size_t> ranks;
  std::vector<AMatrix> d;
  for (std::size_t n = 0; n <= p; ++n) ranks.push_back(k.rank(n) * b);
  for (std::size_t n = 1; n <= p; ++n) d.push_back(kron_identity(k.d(n), b));
  KoszulLift out;
  out.source = FreeComplex(alg, ranks, d);
  for (std::size_t n = 0; n <= p; ++n) {
    AMatrix phi(alg, f.rank(n), ranks[n]);
    auto sets = monotone_subsets(p, n);
    for (std::size_t s = 0; s < sets.size(); ++s) {
      AMatrix hI = AMatrix::identity(alg, b);
      for (std::size_t pos = sets[s].size(); pos-- > 0;) {
        const std::size_t deg = sets[s].size() - 1 - pos;
        const auto& hi = h[sets[s][pos]].h;
        hI = (deg < hi.size() ? hi[deg] : AMatrix(alg, f.rank(deg + 1), f.rank(deg))) * hI;
      }
      phi.set_block(0, s * b, hI);
    }
    out.phi.f.push_back(std::move(phi));
  }
  if (f.top() > p)
    for (std::size_t n = p + 1; n <= f.top(); ++n) out.phi.f.push_back(AMatrix(alg, f.rank(n), 0));
  if (!is_chain_map(out.source, f, out.phi)) throw NotChainMap("e_I (x) f -> h_I(f) is not a chain map");
  for (std::size_t n = 0; n < out.phi.f.size(); ++n) {
    Matrix r = out.phi.f[n].residue();
    if (r.rows() != r.cols() || rank(r) != r.rows())
      throw NotInvertibleModM("Phi is not invertible modulo m in degree " + std::to_string(n));
  }
  return out;
}

}  // namespace freecrit
