// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Every criterion runs over GF(101) and over the rationals and must finish
// within the time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "freecrit/checkers.hpp"
#include "freecrit/errors.hpp"
#include "freecrit/fixtures.hpp"
#include "freecrit/io.hpp"
#include "freecrit/koszul.hpp"
#include "support/generators.hpp"

using namespace freecrit;
using namespace freecrit::testing;

namespace {

constexpr double kBudgetSeconds = 5.0;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> f{Field::prime(101), Field::rational()};
  return f;
}

InstanceBundle load_fixture(Loader& loader, const std::string& name) {
  const Fixture* fx = find_fixture(name);
  require(fx != nullptr, "missing fixture " + name);
  return loader.bundle(fx->document);
}

const RelationResult& relation(const CertificateReport& rep, const std::string& poly) {
  for (const auto& r : rep.relations)
    if (r.poly == poly) return r;
  throw Failure{"relation " + poly + " not reported"};
}

Homotopy constant_homotopy(const FreeComplex& f, const Scalar& s) {
  Homotopy h;
  for (std::size_t i = 0; i < f.top(); ++i) {
    AMatrix m(f.algebra(), f.rank(i + 1), f.rank(i));
    for (std::size_t r = 0; r < std::min(f.rank(i + 1), f.rank(i)); ++r) m.set(r, r, f.algebra()->scalar(s));
    h.h.push_back(m);
  }
  return h;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void example55(const Field& field) {
  Loader loader(field);
  InstanceBundle b = load_fixture(loader, "ex5.5");
  const ActionCertificate& cert = *b.certificate;
  require(is_chain_map(b.F, b.F, cert.generators.at(0).map), "U is not a chain map");
  CertificateReport rep = verify_certificate(b.F, cert);
  require(rep.verified, "certificate rejected");
  require(relation(rep, "u^2 - x").method == RelationResult::Method::exact, "U^2 = x id is not exact");
  require(relation(rep, "u^3 - y").method == RelationResult::Method::witness, "U^3 - y not certified by the witness");
  ChainMap u3y = evaluate_relation(b.F, cert, "u^3 - y");
  require(is_homotopy(b.F, b.F, u3y, constant_homotopy(b.F, -field.one())), "-id is not a homotopy U^3 ~ y");
  FiniteModule h0 = induced_action_on_homology(b.F, cert).modules.at(0);
  auto fr = h0.is_free();
  require(h0.dim() == 4 && h0.nu() == 1, "H_0 should have dim 4 and nu 1");
  require(fr.free && fr.rank == 1 && !fr.window, "H_0 should be free of rank 1 over B");
  auto dec = koszul_decompose(b.F);
  require(!dec.success && !dec.obstruction.empty(), "koszul_decompose should fail with an obstruction");
}

void example56(const Field& field) {
  Loader loader(field);
  InstanceBundle b = load_fixture(loader, "ex5.6");
  CertificateReport rep = verify_certificate(b.F, *b.certificate);
  require(rep.verified, "certificate rejected");
  require(relation(rep, "u^3 - x").method == RelationResult::Method::exact, "U^3 = x id is not exact");
  require(relation(rep, "u^4 - y").method == RelationResult::Method::solved, "no homotopy found for U^4 ~ y");
  require(relation(rep, "u^5 - z").method == RelationResult::Method::solved, "no homotopy found for U^5 ~ z");
  for (std::size_t i = 0; i <= 2; ++i) require(b.F.rank(i) == binom(2, i) * 3, "ranks are not C(2,i)*3");
  auto fr = induced_action_on_homology(b.F, *b.certificate).modules.at(0).is_free();
  require(fr.free && fr.rank == 1, "H_0 is not free of rank 1");
  CheckReport r = check_thm51(b);
  require(r.hypotheses_verdict() == Verdict::pass, "Theorem 5.1 hypotheses should hold");
  for (const char* name : {"H0_free", "beta1_eq_p_beta0", "fiber_complete_intersection", "p_equalities", "binomial_betti"}) {
    const Check* c = r.find(name);
    require(c && c->verdict == Verdict::pass, std::string("conclusion ") + name + " does not pass");
  }
}

void example57(const Field& field) {
  Loader loader(field);
  InstanceBundle b = load_fixture(loader, "ex5.7");
  const ActionCertificate& cert = *b.certificate;
  CertificateReport rep = verify_certificate(b.F, cert);
  require(rep.relations.size() == 5, "expected five relations");
  for (const auto& r : rep.relations) require(r.passed(), "relation " + r.poly + " fails");
  require(rep.verified, "certificate rejected");
  const AMatrix& u0 = cert.generators.at(0).map.f.at(0);
  const AMatrix& v0 = cert.generators.at(1).map.f.at(0);
  require(v0 * u0 - u0 * v0 == b.F.d(1), "[d] != V0 U0 - U0 V0");
  require(relation(rep, "u*v - v*u").method == RelationResult::Method::witness, "commutator not witnessed");
  CheckReport t = check_thm51(b);
  const Check* h = t.find("proj_dim_le_edimA_minus_beta0");
  require(b.morphism().beta0_of_mAB() == 3, "beta0(m_A B) should be 3");
  require(h && h->verdict == Verdict::fail, "Theorem 5.1 hypothesis should fail");
  CheckReport q = check_question(b);
  bool open = false;
  for (const auto& f : q.flags) open = open || f.rfind("open instance", 0) == 0;
  require(open, "question report does not flag the open instance");
}

void graded_examples(const Field& field) {
  Loader loader(field);
  InstanceBundle e23 = load_fixture(loader, "ex2.3");
  const AlgebraPtr& A = e23.A();
  require(A->grading() && A->grading()->truncated && A->grading()->truncation == 6, "expected truncation D = 6");
  auto hrep = check_H_action_only(e23.F, e23.morphism(), e23.h_action_names, *e23.h_action);
  require(hrep.valid, "H-level action rejected");
  FiniteModule h0 = hrep.modules.at(0);
  require(h0.dim() == 1, "H_0 should be k");
  require(!h0.is_free().free, "H_0 = k must not be free over B");
  const Matrix x = A->parse("x");
  require(FiniteModule::from_homology(A, e23.F.homology(1)).act(x).is_zero(), "x H_1 != 0");
  require(!derived_annihilator(e23.F).contains(x), "derived annihilator contains x");

  InstanceBundle e45 = load_fixture(loader, "ex4.5");
  HomologyModule h1 = e45.F.homology(1);
  const GradedMonomialAlgebra& mono = *e45.monomial_A;
  for (int d = 1; d <= 5; ++d) {
    std::size_t n = 0;
    for (int t : h1.internal_degrees) n += t == d + 1;
    require(n == mono.hilbert(d), "H_1(K(x)) and m_A differ in degree " + std::to_string(d));
  }
  require(FiniteModule::from_homology(e45.A(), h1).nu() == 2, "nu(H_1(K(x))) should be 2");
}

void round_trip(const Field& field) {
  std::mt19937_64 rng(20240501);
  std::size_t total = 0, recovered = 0;
  for (const auto& entry : catalog()) {
    AlgebraPtr a = make_algebra(entry, field);
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t b = 1; b <= 3; ++b) {
        FreeComplex k = koszul_power(a, entry.vars, p, b);
        for (int trial = 0; trial < 10; ++trial) {
          FreeComplex f = conjugate(k, random_automorphism(k, rng));
          auto dec = koszul_decompose(f);
          ++total;
          if (dec.success && dec.multiplicity == b && dec.lift && is_chain_map(dec.lift->source, f, dec.lift->phi))
            ++recovered;
        }
      }
  }
  require(recovered == total, std::to_string(recovered) + "/" + std::to_string(total) + " recovered");
}

void appendix(const Field& field) {
  std::mt19937_64 rng(7);
  auto check = [&](const WModuleRep& rep, const std::string& label) {
    require(check_weyl_relations(rep, true).passed, label + ": Weyl relations fail");
    for (std::size_t n = 1; n <= rep.p; ++n)
      for (const auto& s : monotone_subsets(rep.p, n)) require(check_lemmaA1(rep, s), label + ": Lemma A.1 fails");
    auto sm = structure_map(rep);
    require(sm.iso, label + ": structure map not bijective");
    require(sm.dimension_law, label + ": dimension law fails");
    for (std::size_t i = 0; i <= rep.p; ++i)
      require(rep.dims[i] == binom(rep.p, i) * rep.dims[0], label + ": dim V_i != C(p,i) dim V_0");
  };
  for (std::size_t p = 1; p <= 4; ++p)
    for (std::size_t d0 = 1; d0 <= 2; ++d0)
      check(exterior_model(field, p, d0), "model p=" + std::to_string(p));
  for (int n = 0; n < 50; ++n) {
    const std::size_t p = 1 + rng() % 4;
    const std::size_t d0 = 1 + rng() % 2;
    check(random_graded_conjugate(exterior_model(field, p, d0), rng), "conjugate " + std::to_string(n));
  }
}

void divisibility(const Field& field) {
  std::mt19937_64 rng(44);
  for (const auto& entry : catalog()) {
    AlgebraPtr a = make_algebra(entry, field);
    for (std::size_t p = 1; p <= 3; ++p) {
      for (std::size_t b = 1; b <= 3; ++b) {
        FreeComplex k = koszul_power(a, entry.vars, p, b);
        FreeComplex f = conjugate(k, random_automorphism(k, rng));
        auto r = prop44_divisibility(f, p);
        require(r.precondition && r.divisible, entry.name + ": Betti polynomial not divisible");
        require(r.quotient == std::vector<long>{static_cast<long>(b)}, entry.name + ": quotient is not b");
      }
      FreeComplex k1 = koszul_power(a, entry.vars, p, 1);
      for (std::size_t x = 1; x <= 2; ++x)
        for (std::size_t c = 1; c <= 2; ++c) {
          std::vector<FreeComplex> parts(x, k1);
          FreeComplex f = direct_sum(direct_sum(parts), shift(koszul_power(a, entry.vars, p, c), 1));
          auto r = prop44_divisibility(f, p);
          require(r.divisible && r.quotient == std::vector<long>{static_cast<long>(x), static_cast<long>(c)},
                  entry.name + ": quotient of K^a + Sigma K^c is not a + c t");
        }
    }
  }
}

void h_action_separation(const Field& field) {
  Loader loader(field);
  InstanceBundle b = load_fixture(loader, "ex2.3");
  require(check_H_action_only(b.F, b.morphism(), b.h_action_names, *b.h_action).valid, "H-level action rejected");
  CheckReport q = check_question(b);
  const Check* c = q.find("derived_action");
  require(c && c->verdict == Verdict::fail, "question checker accepted an H-level action");
  bool flagged = false;
  for (const auto& f : q.flags) flagged = flagged || f.rfind("not a question instance", 0) == 0;
  require(flagged && q.verdict() != Verdict::pass, "Example 2.3 not rejected as a question instance");
}

void freeness_agreement(const Field& field) {
  std::mt19937_64 rng(9);
  for (int n = 0; n < 200; ++n) {
    const auto& entry = catalog()[rng() % catalog().size()];
    AlgebraPtr a = make_algebra(entry, field);
    const bool planted_free = n % 2 == 0;
    FiniteModule m = FiniteModule::free(a, 1 + rng() % 2);
    if (!planted_free) {
      m = FiniteModule::cyclic(a, random_proper_ideal(*a, rng));
      if (rng() % 2) m = FiniteModule::direct_sum(m, FiniteModule::free(a, 1));
    }
    m = random_basis_change(m, rng);
    auto direct = m.is_free();
    auto criterion = m.lemma43_freeness(2);
    require(direct.free == planted_free, "is_free disagrees with the planted answer at sample " + std::to_string(n));
    require(criterion.free == planted_free, "lemma43_freeness disagrees at sample " + std::to_string(n));
    require(direct.rank == criterion.rank, "ranks disagree at sample " + std::to_string(n));
  }
}

std::string suite_report() {
  std::vector<FixtureOutcome> outs;
  for (const auto& f : fields())
    for (const auto& fx : paper_fixtures()) outs.push_back(run_fixture(fx, f));
  return outcomes_json(outs);
}

void determinism(const Field& field) {
  if (!(field == fields().front())) return;  // the suite itself covers both fields
  const std::string a = suite_report();
  const std::string b = suite_report();
  require(a == b, "two runs produced different reports");
  require(a.find("\"passed\": false") == std::string::npos, "fixture suite has failures");
}

struct Criterion {
  const char* label;
  std::function<void(const Field&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"example 5.5: U^2 = x, U^3 ~ y via -id, H_0 free of rank 1, no Koszul decomposition", example55},
      {"example 5.6: relations, ranks (3,6,3), H_0 free, Theorem 5.1 conclusions", example56},
      {"example 5.7: five relations, commutator from [d], Theorem 5.1 hypothesis fails, open flag", example57},
      {"examples 2.3 and 4.5 (graded, D = 6): H_0 = k not free, x H_1 = 0, annihilator, H_1(K(x))", graded_examples},
      {"Koszul round trip: 5 algebras x p<=3 x b<=3 x 10 conjugations", round_trip},
      {"appendix: Weyl relations, Lemma A.1, structure map on models and 50 conjugates", appendix},
      {"Betti polynomial divisibility by (1+t)^p", divisibility},
      {"example 2.3: H-level action accepted, rejected as a question instance", h_action_separation},
      {"is_free and the Betti criterion agree on 200 random modules", freeness_agreement},
      {"fixture reports are byte-identical across runs", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    double worst = 0;
    for (const auto& f : fields()) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        criteria[i].run(f);
      } catch (const Failure& e) {
        detail = f.name() + ": " + e.what;
      } catch (const std::exception& e) {
        detail = f.name() + ": exception: " + e.what();
      }
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      worst = std::max(worst, s);
      if (detail.empty() && s > kBudgetSeconds) detail = f.name() + ": took " + std::to_string(s) + " s";
      if (!detail.empty()) break;
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", total);
    std::cout << (detail.empty() ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].label << " (" << timing
              << ")";
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << std::endl;
    if (!detail.empty()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
