#include "freecrit/checkers.hpp"

#include <sstream>

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

using Value = std::optional<long>;

std::string show(const Value& v) { return v ? std::to_string(*v) : "unknown"; }

template <class T>
std::string show_list(const std::vector<T>& xs) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << ")";
  return out.str();
}

bool truncated(const AlgebraPtr& a) { return a->graded() && a->grading()->truncated; }

Value krull_dim(const AlgebraPtr& a, const std::optional<GradedMonomialAlgebra>& mono) {
  if (!truncated(a)) return 0;
  if (mono) return static_cast<long>(mono->krull_dim());
  return std::nullopt;
}

Value depth_of(const AlgebraPtr& a) {
  Bound d = FiniteModule::free(a, 1).depth();
  if (d.kind == Bound::Kind::exact) return d.value;
  return std::nullopt;
}

Value proj_dim(const FreeComplex& f) {
  auto p = f.proj_dim();
  if (!p) return std::nullopt;
  return static_cast<long>(*p);
}

struct HomologyRange {
  Value inf, sup;
};

// On truncated algebras homology is only known inside the window; sup is
// still exact when the top degree carries homology.
HomologyRange homology_range(const FreeComplex& f) {
  HomologyRange out;
  auto is = f.inf_sup();
  const bool windowed = truncated(f.algebra());
  if (!is) {
    if (!windowed) out.inf = out.sup = std::nullopt;
    return out;
  }
  if (is->first == 0 || !windowed) out.inf = static_cast<long>(is->first);
  if (is->second == f.top() || !windowed) out.sup = static_cast<long>(is->second);
  return out;
}

Verdict compare_le(const Value& a, const Value& b) {
  if (!a || !b) return Verdict::not_applicable;
  return verdict_of(*a <= *b);
}

Value minus(const Value& a, const Value& b) {
  if (!a || !b) return std::nullopt;
  return *a - *b;
}

Value plus(const Value& a, const Value& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

// The B-module H_0, from a verified certificate or an action on homology.
struct HActions {
  bool available = false;
  bool derived = false;
  std::string detail;
  std::vector<FiniteModule> modules;
};

HActions homology_over_B(const InstanceBundle& b) {
  HActions out;
  if (b.certificate) {
    auto rep = verify_certificate(b.F, *b.certificate);
    if (!rep.verified) {
      out.detail = rep.failures.empty() ? "certificate relations fail" : rep.failures.front();
      for (const auto& r : rep.relations)
        if (!r.passed()) out.detail = "relation " + r.poly + ": " + r.detail;
      return out;
    }
    try {
      out.modules = induced_action_on_homology(b.F, *b.certificate).modules;
      out.available = out.derived = true;
    } catch (const Error& e) {
      out.detail = e.what();
    }
    return out;
  }
  if (b.h_action) {
    auto rep = check_H_action_only(b.F, b.morphism(), b.h_action_names, *b.h_action);
    if (rep.valid) {
      out.available = true;
      out.modules = std::move(rep.modules);
    } else {
      out.detail = rep.failures.empty() ? "invalid" : rep.failures.front();
    }
    return out;
  }
  out.detail = "no action supplied";
  return out;
}

void freeness_conclusion(CheckReport& r, const FiniteModule& h0, const std::string& name) {
  auto fr = h0.is_free();
  std::string value = fr.free ? "free of rank " + std::to_string(fr.rank) : "not free (nu = " + std::to_string(fr.rank) + ")";
  std::string note;
  if (fr.window) note = "verified up to degree " + std::to_string(*fr.window);
  r.conclusion(name, value, "free", verdict_of(fr.free), note);
}

void add_window_caveat(CheckReport& r, const AlgebraPtr& a) {
  if (truncated(a))
    r.caveats.push_back("graded algebra truncated at degree " + std::to_string(a->grading()->truncation) +
                        "; homology and freeness are verified up to that degree");
}

Matrix linear_parts(const ArtinAlgebra& a, const Matrix& cols) {
  std::vector<Matrix> parts;
  for (std::size_t c = 0; c < cols.cols(); ++c) parts.push_back(a.linear_part(cols.col(c)));
  if (parts.empty()) return Matrix(a.field(), a.edim(), 0);
  return Matrix::hstack(parts);
}

AlgebraPtr fiber(const AlgebraMorphism& phi) { return phi.target()->quotient(phi.mAB()).algebra; }

}  // namespace

const AlgebraMorphism& InstanceBundle::morphism() const {
  if (phi) return *phi;
  if (certificate) return certificate->phi;
  throw Error("bundle " + name + " has no morphism");
}

CIResult is_artinian_ci(const AlgebraPtr& c) {
  CIResult out;
  if (truncated(c)) {
    out.detail = "not Artinian";
    return out;
  }
  const std::size_t e = c->edim();
  auto betti = FiniteModule::residue_field(c).poincare(3);
  std::vector<std::size_t> want;
  for (std::size_t i = 0; i <= 3; ++i) want.push_back(e == 0 ? (i == 0) : binom(e + i - 1, i));
  out.verdict = verdict_of(betti == want);
  out.detail = "edim " + std::to_string(e) + ", Betti numbers of k " + show_list(betti) + ", complete intersection " +
               show_list(want);
  return out;
}

CIResult is_exceptional_ci_surjective(const AlgebraMorphism& phi) {
  CIResult out;
  if (!phi.is_surjective()) {
    out.detail = "only surjective maps are decided";
    return out;
  }
  const ArtinAlgebra& a = *phi.source();
  Matrix ker = phi.kernel();
  Matrix gens = minimal_generators(a, ker);
  if (rank(linear_parts(a, gens)) != gens.cols()) {
    out.verdict = Verdict::fail;
    out.detail = "kernel generators are dependent modulo m^2";
    return out;
  }
  std::vector<Matrix> xs;
  for (std::size_t c = 0; c < gens.cols(); ++c) xs.push_back(gens.col(c));
  FreeComplex k = koszul(phi.source(), xs);
  const std::size_t h1 = k.homology_dim(1);
  out.verdict = verdict_of(h1 == 0);
  out.detail = std::to_string(gens.cols()) + " kernel generators, dim H_1(K) = " + std::to_string(h1);
  if (truncated(phi.source())) out.detail += " up to degree " + std::to_string(a.grading()->truncation);
  return out;
}

CheckReport check_question(const InstanceBundle& b) {
  CheckReport r;
  r.title = "question " + b.name;
  const AlgebraMorphism& phi = b.morphism();
  const AlgebraPtr& A = b.A();
  const AlgebraPtr& B = phi.target();
  HActions act = homology_over_B(b);
  if (b.certificate) {
    r.hypothesis("derived_action", act.derived ? "verified" : "broken: " + act.detail, "certificate",
                 verdict_of(act.derived));
  } else {
    r.hypothesis("derived_action", b.h_action ? "action on homology only" : "none", "certificate", Verdict::fail,
                 "not an instance of the question");
    r.flags.push_back("not a question instance: no derived action certificate");
  }
  auto hr = homology_range(b.F);
  r.hypothesis("inf_H", show(hr.inf), "0", hr.inf ? verdict_of(*hr.inf == 0) : Verdict::not_applicable);
  const Value p = proj_dim(b.F);
  const long gap = static_cast<long>(A->edim()) - static_cast<long>(B->edim());
  r.hypothesis("proj_dim", show(p), "<= edim A - edim B = " + std::to_string(gap), compare_le(p, gap));
  if (act.available && !act.modules.empty())
    freeness_conclusion(r, act.modules[0], "H0_free_over_B");
  else
    r.conclusion("H0_free_over_B", "unknown", "free", Verdict::not_applicable, act.detail);
  const long beta0 = static_cast<long>(phi.beta0_of_mAB());
  if (p && *p > static_cast<long>(A->edim()) - beta0 && !truncated(B)) {
    auto ci = is_artinian_ci(fiber(phi));
    if (ci.verdict != Verdict::pass)
      r.flags.push_back("open instance: beta0(m_A B) = " + std::to_string(beta0) + " > edim A - p and B/m_A B is not a "
                        "complete intersection, so no theorem applies");
  }
  add_window_caveat(r, A);
  return r;
}

CheckReport check_lemma32(const InstanceBundle& b) {
  CheckReport r;
  r.title = "lemma32 " + b.name;
  const AlgebraMorphism& phi = b.morphism();
  const AlgebraPtr& A = b.A();
  HActions act = homology_over_B(b);
  r.hypothesis("B_action_on_H", act.available ? "yes" : "no: " + act.detail, "yes", verdict_of(act.available));
  auto hr = homology_range(b.F);
  r.hypothesis("inf_H", show(hr.inf), "0", hr.inf ? verdict_of(*hr.inf == 0) : Verdict::not_applicable);
  const Value p = proj_dim(b.F), depthA = depth_of(A), dimA = krull_dim(A, b.monomial_A),
              dimB = krull_dim(phi.target(), b.monomial_B);
  const Value rhs1 = plus(minus(depthA, dimB), hr.sup);
  r.conclusion("ineq1", show(p), ">= depth A - dim B + sup H = " + show(rhs1), compare_le(rhs1, p));
  const Value rhs2 = minus(dimA, dimB);
  r.conclusion("ineq2", show(p), ">= dim A - dim B = " + show(rhs2), compare_le(rhs2, p));
  if (!truncated(A) && p && act.available) {
    // Artinian: dim F = -inf H = 0 and depth F = -p, so cmd F = p and cmd A = 0.
    const bool equality = *p == *rhs2;
    const bool criterion = *p == 0 && act.modules[0].dim() > 0;
    r.conclusion("equality_criterion", equality ? "equality" : "strict", criterion ? "criterion holds" : "criterion fails",
                 verdict_of(equality == criterion));
  } else {
    r.conclusion("equality_criterion", "unknown", "", Verdict::not_applicable,
                 "dimensions of homology are not exactly computable here");
  }
  add_window_caveat(r, A);
  return r;
}

CheckReport check_thm31(const InstanceBundle& b) {
  CheckReport r;
  r.title = "thm31 " + b.name;
  const AlgebraMorphism& phi = b.morphism();
  const AlgebraPtr& A = b.A();
  const AlgebraPtr& B = phi.target();
  HActions act = homology_over_B(b);
  r.hypothesis("B_action_on_H", act.available ? "yes" : "no: " + act.detail, "yes", verdict_of(act.available));
  auto hr = homology_range(b.F);
  r.hypothesis("inf_H", show(hr.inf), "0", hr.inf ? verdict_of(*hr.inf == 0) : Verdict::not_applicable);
  const Value p = proj_dim(b.F), depthA = depth_of(A), dimB = krull_dim(B, b.monomial_B);
  const Value gap = static_cast<long>(A->edim()) - static_cast<long>(B->edim());
  const Value room = minus(depthA, dimB);
  r.hypothesis("proj_dim_le_edim_gap", show(p), "<= " + show(gap), compare_le(p, gap));
  r.hypothesis("edim_gap_le_depthA_minus_dimB", show(gap), "<= " + show(room), compare_le(gap, room));
  if (r.hypotheses_verdict() != Verdict::pass) {
    for (const char* name : {"H0_free_and_sup_zero", "equalities", "cohen_macaulay", "exceptional_ci"})
      r.conclusion(name, "not asserted", "", Verdict::not_applicable, "hypotheses not met");
    add_window_caveat(r, A);
    return r;
  }
  auto fr = act.modules[0].is_free();
  const bool sup0 = hr.sup && *hr.sup == 0;
  r.conclusion("H0_free_and_sup_zero", std::string(fr.free ? "free" : "not free") + ", sup H = " + show(hr.sup), "free, 0",
               verdict_of(fr.free && sup0));
  r.conclusion("equalities", show(p) + ", " + show(gap) + ", " + show(room), "all equal",
               verdict_of(*p == *gap && *gap == *room));
  const Value dimA = krull_dim(A, b.monomial_A), depthB = depth_of(B);
  Verdict cm = Verdict::not_applicable;
  if (dimA && depthA && dimB && depthB) cm = verdict_of(*dimA == *depthA && *dimB == *depthB);
  r.conclusion("cohen_macaulay", "depth/dim A " + show(depthA) + "/" + show(dimA) + ", B " + show(depthB) + "/" + show(dimB),
               "equal", cm);
  auto ci = is_exceptional_ci_surjective(phi);
  r.conclusion("exceptional_ci", ci.detail, "yes", ci.verdict);
  add_window_caveat(r, A);
  return r;
}

CheckReport check_thm51(const InstanceBundle& b) {
  CheckReport r;
  r.title = "thm51 " + b.name;
  const AlgebraMorphism& phi = b.morphism();
  const AlgebraPtr& A = b.A();
  const AlgebraPtr& B = phi.target();
  HActions act = homology_over_B(b);
  r.hypothesis("derived_action", act.derived ? "verified" : "missing or broken: " + act.detail, "certificate",
               verdict_of(act.derived));
  auto hr = homology_range(b.F);
  r.hypothesis("inf_H", show(hr.inf), "0", hr.inf ? verdict_of(*hr.inf == 0) : Verdict::not_applicable);
  const bool minimal = b.F.is_minimal();
  r.hypothesis("minimal", minimal ? "yes" : "no", "yes", verdict_of(minimal));
  const Value p = proj_dim(b.F);
  const long edimA = static_cast<long>(A->edim());
  const long beta0 = static_cast<long>(phi.beta0_of_mAB());
  r.hypothesis("proj_dim_le_edimA_minus_beta0", show(p), "<= " + std::to_string(edimA) + " - " + std::to_string(beta0),
               compare_le(p, edimA - beta0));
  if (truncated(A) || truncated(B)) r.caveats.push_back("Theorem 5.1 checks need Artinian A and B");
  if (r.hypotheses_verdict() != Verdict::pass || truncated(A) || truncated(B)) {
    for (const char* name : {"H0_free", "beta1_eq_p_beta0", "fiber_complete_intersection", "p_equalities", "binomial_betti"})
      r.conclusion(name, "not asserted", "", Verdict::not_applicable, "hypotheses not met");
    if (r.hypotheses_verdict() == Verdict::fail) r.flags.push_back("Theorem 5.1 does not apply");
    return r;
  }
  const long pv = *p;
  freeness_conclusion(r, act.modules[0], "H0_free");
  FiniteModule m = FiniteModule::from_homology(A, b.F.homology(0));
  auto bm = m.poincare(1);
  r.conclusion("beta1_eq_p_beta0", show_list(bm), "beta1 = " + std::to_string(pv) + " * beta0",
               verdict_of(static_cast<long>(bm[1]) == pv * static_cast<long>(bm[0])));
  auto ci = is_artinian_ci(fiber(phi));
  r.conclusion("fiber_complete_intersection", ci.detail, "complete intersection", ci.verdict);
  const long edimB = static_cast<long>(B->edim());
  r.conclusion("p_equalities", std::to_string(pv) + ", " + std::to_string(edimA - beta0) + ", " + std::to_string(edimA - edimB),
               "p = edim A - beta0(m_A B) = edim A - edim B", verdict_of(pv == edimA - beta0 && pv == edimA - edimB));
  auto betti = b.F.betti();
  bool binomial = true;
  std::vector<std::size_t> want;
  for (std::size_t i = 0; i < betti.size() || i <= static_cast<std::size_t>(pv); ++i) {
    want.push_back(binom(static_cast<std::size_t>(pv), i) * (betti.empty() ? 0 : betti[0]));
    if ((i < betti.size() ? betti[i] : 0) != want.back()) binomial = false;
  }
  r.conclusion("binomial_betti", show_list(betti), show_list(want), verdict_of(binomial));

  // The constructive proof: adapted x_1..x_n with x_{p+1..n} generating m_A B,
  // homotopies h_i for x_i - sum_j x_j b_ij, and the W-module F (x) k.
  try {
    const ArtinAlgebra& a = *A;
    const ArtinAlgebra& bb = *B;
    AdaptedBasis ab = a.adapted_basis({});
    const std::size_t e = ab.generators.size();
    Matrix I = phi.mAB();
    Matrix mI = bb.m_times(I);
    Matrix ibasis = image_basis(I);
    // Coordinates of phi(g) modulo m_B m_A B.
    std::vector<Matrix> cls;
    for (const auto& g : ab.generators) cls.push_back(phi.apply(g));
    Matrix sys = Matrix::hstack({mI.cols() ? mI : Matrix(bb.field(), bb.dim(), 0), ibasis});
    Matrix coords = *solve(sys, Matrix::hstack(cls));
    Matrix lambda = coords.block(mI.cols(), 0, ibasis.cols(), e);
    Matrix kerl = kernel_basis(lambda);
    Matrix chosen = kerl.block(0, 0, e, static_cast<std::size_t>(pv));
    auto piv = rref(Matrix::hstack({chosen, Matrix::identity(a.field(), e)})).pivots;
    Matrix basis_change = Matrix::hstack({chosen, Matrix::identity(a.field(), e).select_columns([&] {
                                            std::vector<std::size_t> keep;
                                            for (auto c : piv)
                                              if (c >= chosen.cols()) keep.push_back(c - chosen.cols());
                                            return keep;
                                          }())});
    Matrix gens = Matrix::hstack(ab.generators);
    std::vector<Matrix> xs;
    for (std::size_t c = 0; c < e; ++c) xs.push_back(gens * basis_change.col(c));
    std::vector<ChainMap> lifts = lift_basis(b.F, *b.certificate);
    std::vector<Homotopy> hs;
    for (std::size_t i = 0; i < static_cast<std::size_t>(pv); ++i) {
      std::vector<Matrix> cols;
      for (std::size_t j = pv; j < e; ++j) cols.push_back(bb.mult_matrix(phi.apply(xs[j])));
      ChainMap target = scalar_map(b.F, xs[i]);
      if (!cols.empty()) {
        auto y = solve(Matrix::hstack(cols), phi.apply(xs[i]));
        if (!y) throw Error("phi(x_i) is not in the ideal generated by the other x_j");
        for (std::size_t j = pv; j < e; ++j) {
          Matrix bij = y->block((j - pv) * bb.dim(), 0, bb.dim(), 1);
          ChainMap lifted = scalar_map(b.F, a.zero());
          for (std::size_t l = 0; l < bb.dim(); ++l)
            if (!bij.entry_is_zero(l, 0)) {
              ChainMap term = lifts[l];
              for (auto& fm : term.f) fm = fm.scaled(bij(l, 0));
              lifted = add(lifted, term);
            }
          for (auto& fm : lifted.f) fm = fm.scaled(xs[j]);
          target = sub(target, lifted);
        }
      }
      auto h = solve_homotopy(b.F, b.F, target);
      if (!h) throw Error("no homotopy for x_" + std::to_string(i + 1));
      hs.push_back(std::move(*h));
    }
    WModuleRep rep = rep_from_homotopies(b.F, xs, hs);
    auto wr = check_weyl_relations(rep);
    bool iso = false, law = false;
    if (wr.passed) {
      auto sm = structure_map(rep);
      iso = sm.iso;
      law = sm.dimension_law;
    }
    r.conclusion("weyl_structure",
                 std::string(wr.passed ? "relations hold" : "relations fail") + ", structure map " +
                     (iso ? "bijective" : "not bijective"),
                 "E (x) F0 = F (x) k", verdict_of(wr.passed && iso && law));
  } catch (const Error& err) {
    r.conclusion("weyl_structure", std::string("construction failed: ") + err.what(), "E (x) F0 = F (x) k", Verdict::fail);
  }

  Matrix ker = phi.kernel();
  if (rank(linear_parts(*A, ker.cols() ? minimal_generators(*A, ker) : ker)) >= static_cast<std::size_t>(pv) && pv > 0) {
    auto dec = koszul_decompose(b.F);
    r.conclusion("koszul_decomposition",
                 dec.success ? "K(x)^" + std::to_string(dec.multiplicity) : "failed: " + dec.obstruction,
                 "direct sum of Koszul complexes", verdict_of(dec.success));
  }
  return r;
}

std::optional<ModuleComplex> strict_from_certificate(const FreeComplex& f, const ActionCertificate& cert,
                                                     std::vector<std::string>& failures) {
  ModuleComplex out;
  const std::size_t before = failures.size();
  for (std::size_t i = 0; i <= f.top(); ++i) {
    FiniteModule fi = FiniteModule::free(f.algebra(), f.rank(i));
    std::vector<std::pair<std::string, Matrix>> gens;
    for (const auto& g : cert.generators) gens.emplace_back(g.name, g.map.f.at(i).flatten());
    std::vector<std::string> fails;
    auto m = extend_action(fi, cert.phi, gens, fails);
    for (auto& s : fails) failures.push_back("F_" + std::to_string(i) + ": " + s);
    if (m) out.terms.push_back(std::move(*m));
  }
  if (failures.size() != before) return std::nullopt;
  for (std::size_t i = 1; i <= f.top(); ++i) out.d.push_back(f.d(i).flatten());
  return out;
}

CheckReport check_thm41(const ModuleComplex& f, const AlgebraMorphism& phi) {
  CheckReport r;
  r.title = "thm41";
  const AlgebraPtr& A = phi.source();
  const AlgebraPtr& B = phi.target();
  auto errs = f.validate();
  r.hypothesis("complex_of_B_modules", errs.empty() ? "valid" : errs.front(), "valid", verdict_of(errs.empty()));
  if (!errs.empty()) return r;
  if (truncated(A) || truncated(B)) {
    r.hypothesis("flat_dim_le_edim_gap", "unknown", "", Verdict::not_applicable, "Tor is computed for Artinian A only");
    return r;
  }
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i <= f.top(); ++i) h.push_back(f.homology(i).dim());
  std::size_t inf = 0;
  while (inf < h.size() && h[inf] == 0) ++inf;
  r.hypothesis("inf_H", inf < h.size() ? std::to_string(inf) : "none", "0", verdict_of(inf == 0 && !h.empty()));
  const long gap = static_cast<long>(A->edim()) - static_cast<long>(B->edim());
  const std::size_t window = static_cast<std::size_t>(std::max<long>(gap, 0)) + 2;
  auto tor = tor_with_residue(f.restrict(phi), window);
  bool vanish = gap >= 0;
  for (std::size_t i = 0; i < tor.size(); ++i)
    if (static_cast<long>(i) > gap && tor[i] != 0) vanish = false;
  r.hypothesis("flat_dim_le_edim_gap", "Tor dims " + show_list(tor), "0 above " + std::to_string(gap), verdict_of(vanish));
  r.caveats.push_back("flat dimension is tested through Tor_" + std::to_string(window) + " only");
  if (r.hypotheses_verdict() != Verdict::pass) {
    for (const char* name : {"H_vanish_off_zero", "H0_free_over_B", "exceptional_ci"})
      r.conclusion(name, "not asserted", "", Verdict::not_applicable, "hypotheses not met");
    return r;
  }
  bool off = true;
  for (std::size_t i = 1; i < h.size(); ++i) off = off && h[i] == 0;
  r.conclusion("H_vanish_off_zero", show_list(h), "zero above degree 0", verdict_of(off));
  auto fr = f.homology(0).is_free();
  r.conclusion("H0_free_over_B", fr.free ? "free of rank " + std::to_string(fr.rank) : "not free", "free",
               verdict_of(fr.free));
  auto ci = is_exceptional_ci_surjective(phi);
  r.conclusion("exceptional_ci", ci.detail, "yes", ci.verdict);
  return r;
}

KoszulDecomposition koszul_decompose(const FreeComplex& f) {
  KoszulDecomposition out;
  out.p = f.proj_dim().value_or(0);
  if (!f.is_minimal()) {
    out.obstruction = "complex is not minimal";
    return out;
  }
  const ArtinAlgebra& a = *f.algebra();
  DerivedAnnihilator ann = derived_annihilator(f);
  out.annihilator_dim = ann.basis.cols();
  for (std::size_t c = 0; c < ann.basis.cols(); ++c)
    if (!a.in_m(ann.basis.col(c))) {
      out.obstruction = "a unit annihilates F, so F is null-homotopic";
      return out;
    }
  auto piv = rref(linear_parts(a, ann.basis)).pivots;
  out.annihilator_rank_mod_m2 = piv.size();
  if (piv.size() < out.p) {
    out.obstruction = "derived annihilator has rank " + std::to_string(piv.size()) + " modulo m^2, need " +
                      std::to_string(out.p);
    return out;
  }
  std::vector<Homotopy> hs;
  for (std::size_t i = 0; i < out.p; ++i) {
    out.x.push_back(ann.basis.col(piv[i]));
    hs.push_back(ann.witnesses[piv[i]]);
  }
  try {
    out.lift = koszul_lift(f, out.x, hs);
  } catch (const Error& e) {
    out.obstruction = e.what();
    return out;
  }
  out.multiplicity = f.rank(0);
  out.success = true;
  return out;
}

Prop44Result prop44_divisibility(const FreeComplex& f, std::size_t c) {
  Prop44Result out;
  for (auto b : f.betti()) out.betti.push_back(static_cast<long>(b));
  if (c == 0) {
    out.precondition = true;
  } else {
    DerivedAnnihilator ann = derived_annihilator(f);
    bool in_m = true;
    for (std::size_t k = 0; k < ann.basis.cols(); ++k) in_m = in_m && f.algebra()->in_m(ann.basis.col(k));
    out.precondition = in_m && rank(linear_parts(*f.algebra(), ann.basis)) >= c;
  }
  std::vector<long> q = out.betti;
  while (!q.empty() && q.back() == 0) q.pop_back();
  out.divisible = true;
  for (std::size_t step = 0; step < c; ++step) {
    if (q.empty()) break;
    std::vector<long> next(q.size() - 1);
    long carry = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      next[k] = q[k] - carry;
      carry = next[k];
    }
    if (q.back() != carry) out.divisible = false;
    q = std::move(next);
  }
  for (auto v : q)
    if (v < 0) out.divisible = false;
  if (c > 0 && out.betti.empty()) out.divisible = true;
  out.quotient = q;
  return out;
}

FreeComplex koszul_on_endomorphisms(const AlgebraPtr& alg, const std::vector<AMatrix>& z) {
  const std::size_t c = z.size();
  const std::size_t b = c ? z[0].rows() : 0;
  std::vector<std::size_t> ranks;
  std::vector<AMatrix> d;
  for (std::size_t n = 0; n <= c; ++n) ranks.push_back(binom(c, n) * b);
  for (std::size_t n = 1; n <= c; ++n) {
    AMatrix m(alg, ranks[n - 1], ranks[n]);
    auto sets = monotone_subsets(c, n);
    for (std::size_t s = 0; s < sets.size(); ++s)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> rest = sets[s];
        rest.erase(rest.begin() + static_cast<long>(j));
        AMatrix blk = z[sets[s][j]];
        if (j % 2) blk = -blk;
        m.set_block(subset_index(c, rest) * b, s * b, blk);
      }
    d.push_back(std::move(m));
  }
  return FreeComplex(alg, ranks, d);
}

CheckReport check_question58(const FreeComplex& f, const std::vector<AMatrix>& z, const std::optional<ChainMap>& candidate) {
  CheckReport r;
  r.title = "question58";
  bool commute = true;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) commute = commute && z[i] * z[j] == z[j] * z[i];
  r.hypothesis("z_commute", commute ? "yes" : "no", "yes", verdict_of(commute));
  FreeComplex k = koszul_on_endomorphisms(f.algebra(), z);
  r.hypothesis("ranks", show_list(k.ranks()), show_list(f.ranks()), verdict_of(k.ranks() == f.ranks()));
  if (r.hypotheses_verdict() != Verdict::pass) {
    r.conclusion("isomorphism", "not attempted", "", Verdict::not_applicable);
    return r;
  }
  auto iso = [&](const ChainMap& m) {
    if (!is_chain_map(k, f, m)) return false;
    for (const auto& x : m.f) {
      Matrix res = x.residue();
      if (rank(res) != res.rows()) return false;
    }
    return true;
  };
  if (candidate) {
    const bool ok = iso(*candidate);
    r.conclusion("isomorphism", ok ? "supplied map is an isomorphism" : "supplied map is not an isomorphism",
                 "F = K(z) (x) F0", verdict_of(ok));
    return r;
  }
  const std::size_t degrees = f.top() + 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << degrees); ++mask) {
    ChainMap m;
    for (std::size_t i = 0; i < degrees; ++i) {
      AMatrix id = AMatrix::identity(f.algebra(), f.rank(i));
      m.f.push_back(mask >> i & 1 ? -id : id);
    }
    if (iso(m)) {
      std::string signs;
      for (std::size_t i = 0; i < degrees; ++i) signs += mask >> i & 1 ? '-' : '+';
      r.conclusion("isomorphism", "signed identity " + signs, "F = K(z) (x) F0", Verdict::pass);
      return r;
    }
  }
  r.conclusion("isomorphism", "no certificate found", "F = K(z) (x) F0", Verdict::not_applicable,
               "only signed identities are searched");
  return r;
}

}  // namespace freecrit
