#include "freecrit/fixtures.hpp"

#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "freecrit/checkers.hpp"
#include "freecrit/errors.hpp"
#include "freecrit/io.hpp"
#include "freecrit/koszul.hpp"

namespace freecrit {

using json = nlohmann::ordered_json;

namespace {

const char* kEx23 = R"({
  "name": "ex2.3",
  "description": "A = k[x,y]/(x^2,xy), F = [x, y] : A^2 -> A, B = A/x; H_*(F) is a B-module but H_0(F) is not B-free",
  "complex": {
    "algebra": {"kind": "monomial_quotient", "vars": ["x", "y"], "ideal": ["x^2", "x*y"], "truncation": 6},
    "ranks": [1, 2],
    "differentials": [[["x", "y"]]]
  },
  "morphism": {
    "source": {"kind": "monomial_quotient", "vars": ["x", "y"], "ideal": ["x^2", "x*y"], "truncation": 6},
    "target": {"kind": "monomial_quotient", "vars": ["y"], "ideal": [], "truncation": 6},
    "images": [["x", "0"], ["y", "y"]]
  },
  "h_action": {"names": [], "matrices": [[], []]},
  "expected": [
    {"key": "H0.dim", "value": "1", "source": "paper"},
    {"key": "H0.free_over_B", "value": "false", "source": "paper"},
    {"key": "x.H1", "value": "0", "source": "paper"},
    {"key": "h_action.valid", "value": "true", "source": "paper"},
    {"key": "edim_gap", "value": "1", "source": "paper"},
    {"key": "derived_annihilator.contains_x", "value": "false", "source": "derived"},
    {"key": "question.instance", "value": "false", "source": "paper"},
    {"key": "thm31.hypotheses", "value": "fail", "source": "derived"},
    {"key": "lemma32.ineq1", "value": "pass", "source": "derived"},
    {"key": "lemma32.ineq2", "value": "pass", "source": "derived"},
    {"key": "window", "value": "6", "source": "trivial"}
  ]
})";

const char* kEx45 = R"({
  "name": "ex4.5",
  "description": "Koszul complex K(x) over A = k[x,y]/(x^2,xy) with B = A/x; H_0 = B but H_1(K) = m_A is not free",
  "complex": {
    "algebra": {"kind": "monomial_quotient", "vars": ["x", "y"], "ideal": ["x^2", "x*y"], "truncation": 6},
    "ranks": [1, 1],
    "differentials": [[["x"]]]
  },
  "certificate": {
    "morphism": {
      "source": {"kind": "monomial_quotient", "vars": ["x", "y"], "ideal": ["x^2", "x*y"], "truncation": 6},
      "target": {"kind": "monomial_quotient", "vars": ["y"], "ideal": [], "truncation": 6},
      "images": [["x", "0"], ["y", "y"]]
    },
    "generators": [],
    "relations": [{"poly": "x", "witness": [[["1"]]]}]
  },
  "expected": [
    {"key": "certificate.verified", "value": "true", "source": "paper"},
    {"key": "H0.free_over_B", "value": "true", "source": "paper"},
    {"key": "H1.hilbert", "value": "2,1,1,1,1", "source": "derived"},
    {"key": "H1.nu", "value": "2", "source": "paper"},
    {"key": "question.verdict", "value": "pass", "source": "paper"},
    {"key": "exceptional_ci", "value": "fail", "source": "derived"},
    {"key": "thm41.strict", "value": "false", "source": "derived"},
    {"key": "lemma32.ineq1", "value": "pass", "source": "derived"}
  ]
})";

const char* kEx55 = R"({
  "name": "ex5.5",
  "description": "A = k[x,y]/(x,y)^2, B = k[u]/(u^4), x -> u^2, y -> u^3; derived action by U with U^2 = x, U^3 ~ y",
  "complex": {
    "algebra": {"kind": "monomial_quotient", "vars": ["x", "y"], "ideal": ["x^2", "x*y", "y^2"], "truncation": 2},
    "ranks": [2, 2],
    "differentials": [[["y", "0"], ["-x", "y"]]]
  },
  "certificate": {
    "morphism": {
      "source": {"kind": "monomial_quotient", "vars": ["x", "y"], "ideal": ["x^2", "x*y", "y^2"], "truncation": 2},
      "target": {"kind": "monomial_quotient", "vars": ["u"], "ideal": ["u^4"], "truncation": 4},
      "images": [["x", "u^2"], ["y", "u^3"]]
    },
    "generators": [{"name": "u", "matrices": [[["0", "x"], ["1", "0"]], [["0", "x"], ["1", "0"]]]}],
    "relations": [
      {"poly": "u^2 - x"},
      {"poly": "u^3 - y", "witness": [[["-1", "0"], ["0", "-1"]]]}
    ]
  },
  "expected": [
    {"key": "U.chain_map", "value": "true", "source": "paper"},
    {"key": "relation[u^2 - x]", "value": "exact", "source": "paper"},
    {"key": "relation[u^3 - y]", "value": "witness", "source": "paper"},
    {"key": "H0.dim", "value": "4", "source": "derived"},
    {"key": "H0.nu", "value": "1", "source": "derived"},
    {"key": "H0.free_over_B", "value": "true", "source": "paper"},
    {"key": "ranks", "value": "2,2", "source": "paper"},
    {"key": "thm51.verdict", "value": "pass", "source": "paper"},
    {"key": "decompose.success", "value": "false", "source": "paper"}
  ]
})";

const char* kEx56 = R"({
  "name": "ex5.6",
  "description": "A = k[x,y,z]/(x,y,z)^2, B = k[u]/(u^6), x,y,z -> u^3,u^4,u^5; F : A^3 -> A^6 -> A^3 built from E",
  "complex": {
    "algebra": {"kind": "monomial_quotient", "vars": ["x", "y", "z"],
                "ideal": ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"], "truncation": 2},
    "ranks": [3, 6, 3],
    "differentials": [
      [["-y", "0", "0", "-z", "0", "0"],
       ["x", "-y", "0", "y", "-z", "0"],
       ["0", "x", "-y", "0", "y", "-z"]],
      [["-z", "0", "0"], ["y", "-z", "0"], ["0", "y", "-z"],
       ["y", "0", "0"], ["-x", "y", "0"], ["0", "-x", "y"]]
    ]
  },
  "certificate": {
    "morphism": {
      "source": {"kind": "monomial_quotient", "vars": ["x", "y", "z"],
                 "ideal": ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"], "truncation": 2},
      "target": {"kind": "monomial_quotient", "vars": ["u"], "ideal": ["u^6"], "truncation": 6},
      "images": [["x", "u^3"], ["y", "u^4"], ["z", "u^5"]]
    },
    "generators": [{"name": "u", "matrices": [
      [["0", "0", "x"], ["1", "0", "0"], ["0", "1", "0"]],
      [["0", "0", "x", "0", "0", "0"], ["1", "0", "0", "0", "0", "0"], ["0", "1", "0", "0", "0", "0"],
       ["0", "0", "0", "0", "0", "x"], ["0", "0", "0", "1", "0", "0"], ["0", "0", "0", "0", "1", "0"]],
      [["0", "0", "x"], ["1", "0", "0"], ["0", "1", "0"]]
    ]}],
    "relations": [{"poly": "u^3 - x"}, {"poly": "u^4 - y"}, {"poly": "u^5 - z"}]
  },
  "expected": [
    {"key": "relation[u^3 - x]", "value": "exact", "source": "paper"},
    {"key": "relation[u^4 - y]", "value": "solved", "source": "paper"},
    {"key": "relation[u^5 - z]", "value": "solved", "source": "paper"},
    {"key": "ranks", "value": "3,6,3", "source": "paper"},
    {"key": "H0.free_over_B", "value": "true", "source": "paper"},
    {"key": "H0.free_rank", "value": "1", "source": "paper"},
    {"key": "thm51.verdict", "value": "pass", "source": "paper"},
    {"key": "question.verdict", "value": "pass", "source": "paper"},
    {"key": "question58.verdict", "value": "pass", "source": "paper"}
  ]
})";

const char* kEx57 = R"({
  "name": "ex5.7",
  "description": "A = k[x,y,z]/(x,y,z)^2, B = k[u,v]/(u,v)^4, x,y,z -> u^2,uv,v^2; no theorem applies",
  "complex": {
    "algebra": {"kind": "monomial_quotient", "vars": ["x", "y", "z"],
                "ideal": ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"], "truncation": 2},
    "ranks": [3, 3],
    "differentials": [[["-y", "-z", "0"], ["x", "y", "0"], ["0", "0", "0"]]]
  },
  "certificate": {
    "morphism": {
      "source": {"kind": "monomial_quotient", "vars": ["x", "y", "z"],
                 "ideal": ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"], "truncation": 2},
      "target": {"kind": "monomial_quotient", "vars": ["u", "v"],
                 "ideal": ["u^4", "u^3*v", "u^2*v^2", "u*v^3", "v^4"], "truncation": 4},
      "images": [["x", "u^2"], ["y", "u*v"], ["z", "v^2"]]
    },
    "generators": [
      {"name": "u", "matrices": [[["0", "0", "1"], ["0", "0", "0"], ["x", "y", "0"]],
                                 [["0", "0", "-y"], ["0", "0", "x"], ["0", "1", "0"]]]},
      {"name": "v", "matrices": [[["0", "0", "0"], ["0", "0", "1"], ["y", "z", "0"]],
                                 [["0", "0", "-z"], ["0", "0", "y"], ["-1", "0", "0"]]]}
    ],
    "relations": [
      {"poly": "u^2 - x"},
      {"poly": "u*v - y"},
      {"poly": "v*u - y"},
      {"poly": "v^2 - z"},
      {"poly": "u*v - v*u", "witness": [[["-1", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]]]}
    ]
  },
  "expected": [
    {"key": "relations.passed", "value": "5", "source": "paper"},
    {"key": "relation[u*v - v*u]", "value": "witness", "source": "paper"},
    {"key": "beta0_mAB", "value": "3", "source": "derived"},
    {"key": "thm51.hypotheses", "value": "fail", "source": "paper"},
    {"key": "question.open_flag", "value": "true", "source": "paper"},
    {"key": "H0.free_rank", "value": "1", "source": "paper"},
    {"key": "ker_d_in_mF1", "value": "false", "source": "paper"}
  ]
})";

const char* kAppA = R"({
  "name": "appA",
  "description": "Exterior model of a graded module over the skew Weyl algebra, p = 3, dim V_0 = 2",
  "rep": {"p": 3, "dim0": 2},
  "expected": [
    {"key": "weyl.relations", "value": "true", "source": "paper"},
    {"key": "lemmaA1.all", "value": "true", "source": "paper"},
    {"key": "structure_map.bijective", "value": "true", "source": "paper"},
    {"key": "dims", "value": "2,6,6,2", "source": "paper"}
  ]
})";

std::string yesno(bool b) { return b ? "true" : "false"; }

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

using Actual = std::map<std::string, std::string>;

void record_relations(const CertificateReport& rep, Actual& out) {
  std::size_t passed = 0;
  for (const auto& r : rep.relations) {
    out["relation[" + r.poly + "]"] = to_string(r.method);
    if (r.passed()) ++passed;
  }
  out["relations.passed"] = std::to_string(passed);
  out["certificate.verified"] = yesno(rep.verified);
}

void evaluate_bundle(const InstanceBundle& b, Actual& out, std::vector<CheckReport>& reports) {
  const AlgebraPtr& A = b.A();
  out["ranks"] = join(b.F.ranks());
  out["edim_gap"] = std::to_string(static_cast<long>(A->edim()) - static_cast<long>(b.morphism().target()->edim()));
  if (A->graded() && A->grading()->truncated) out["window"] = std::to_string(A->grading()->truncation);
  out["beta0_mAB"] = std::to_string(b.morphism().beta0_of_mAB());

  std::optional<FiniteModule> h0;
  if (b.certificate) {
    bool chain = true;
    for (const auto& g : b.certificate->generators) chain = chain && is_chain_map(b.F, b.F, g.map);
    out["U.chain_map"] = yesno(chain);
    auto rep = verify_certificate(b.F, *b.certificate);
    record_relations(rep, out);
    if (rep.verified) h0 = induced_action_on_homology(b.F, *b.certificate).modules.at(0);
    std::vector<std::string> failures;
    out["thm41.strict"] = yesno(strict_from_certificate(b.F, *b.certificate, failures).has_value());
  } else if (b.h_action) {
    auto rep = check_H_action_only(b.F, b.morphism(), b.h_action_names, *b.h_action);
    out["h_action.valid"] = yesno(rep.valid);
    if (rep.valid) {
      h0 = rep.modules.at(0);
      if (rep.modules.size() > 1) {
        // x H_1 = 0 for the generators of ker(phi)
        Matrix ker = b.morphism().kernel();
        bool zero = true;
        for (std::size_t c = 0; c < ker.cols(); ++c)
          zero = zero && FiniteModule::from_homology(A, b.F.homology(1)).act(ker.col(c)).is_zero();
        out["x.H1"] = zero ? "0" : "nonzero";
      }
    }
  }
  if (h0) {
    auto fr = h0->is_free();
    out["H0.dim"] = std::to_string(h0->dim());
    out["H0.nu"] = std::to_string(h0->nu());
    out["H0.free_over_B"] = yesno(fr.free);
    if (fr.free) out["H0.free_rank"] = std::to_string(fr.rank);
  }
  if (b.F.top() >= 1) {
    HomologyModule h1 = b.F.homology(1);
    FiniteModule m1 = FiniteModule::from_homology(A, h1);
    out["H1.nu"] = std::to_string(m1.nu());
    if (!h1.internal_degrees.empty() && h1.window) {
      std::vector<std::size_t> counts;
      for (int t = 2; t <= *h1.window; ++t) {
        std::size_t n = 0;
        for (int d : h1.internal_degrees) n += d == t;
        counts.push_back(n);
      }
      out["H1.hilbert"] = join(counts);
    }
    // ker(F_1 -> F_0) inside m F_1
    Matrix cyc = kernel_basis(b.F.d(1).flatten());
    bool inside = true;
    const std::size_t n = A->dim();
    for (std::size_t c = 0; c < cyc.cols(); ++c)
      for (std::size_t s = 0; s < b.F.rank(1); ++s) inside = inside && cyc.entry_is_zero(s * n, c);
    out["ker_d_in_mF1"] = yesno(inside);
  }
  {
    DerivedAnnihilator ann = derived_annihilator(b.F);
    if (A->names().count("x")) out["derived_annihilator.contains_x"] = yesno(ann.contains(A->parse("x")));
  }

  CheckReport q = check_question(b);
  out["question.verdict"] = to_string(q.verdict());
  out["question.instance"] = yesno(q.find("derived_action")->verdict == Verdict::pass);
  bool open = false;
  for (const auto& f : q.flags) open = open || f.rfind("open instance", 0) == 0;
  out["question.open_flag"] = yesno(open);
  reports.push_back(q);

  CheckReport l = check_lemma32(b);
  out["lemma32.verdict"] = to_string(l.verdict());
  out["lemma32.ineq1"] = to_string(l.find("ineq1")->verdict);
  out["lemma32.ineq2"] = to_string(l.find("ineq2")->verdict);
  reports.push_back(l);

  CheckReport t31 = check_thm31(b);
  out["thm31.hypotheses"] = to_string(t31.hypotheses_verdict());
  reports.push_back(t31);

  if (b.certificate) {
    CheckReport t51 = check_thm51(b);
    out["thm51.verdict"] = to_string(t51.verdict());
    out["thm51.hypotheses"] = to_string(t51.hypotheses_verdict());
    reports.push_back(t51);
    if (!(A->graded() && A->grading()->truncated)) {
      auto dec = koszul_decompose(b.F);
      out["decompose.success"] = yesno(dec.success);
    }
  }
  if (b.morphism().is_surjective()) out["exceptional_ci"] = to_string(is_exceptional_ci_surjective(b.morphism()).verdict);

  // Koszul-on-endomorphisms comparison for one-generator certificates with two Koszul variables.
  if (b.certificate && b.certificate->generators.size() == 1 && b.F.top() == 2 && A->edim() == 3) {
    const AMatrix& u0 = b.certificate->generators[0].map.f.at(0);
    const std::size_t r = u0.rows();
    auto sc = [&](const char* e) { return AMatrix::scalar(A, r, A->parse(e)); };
    std::vector<AMatrix> z{sc("x") * u0 - sc("y"), sc("y") * u0 - sc("z")};
    CheckReport q58 = check_question58(b.F, z);
    out["question58.verdict"] = to_string(q58.verdict());
    reports.push_back(q58);
  }
}

void evaluate_rep(const json& spec, const Field& field, Actual& out) {
  const std::size_t p = spec.at("p").get<std::size_t>();
  WModuleRep rep = exterior_model(field, p, spec.at("dim0").get<std::size_t>());
  out["weyl.relations"] = yesno(check_weyl_relations(rep, true).passed);
  bool all = true;
  for (std::size_t n = 1; n <= p; ++n)
    for (const auto& s : monotone_subsets(p, n)) all = all && check_lemmaA1(rep, s);
  out["lemmaA1.all"] = yesno(all);
  auto sm = structure_map(rep);
  out["structure_map.bijective"] = yesno(sm.iso);
  out["dims"] = join(rep.dims);
}

}  // namespace

const std::vector<Fixture>& paper_fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> v;
    for (const char* doc : {kEx23, kEx45, kEx55, kEx56, kEx57, kAppA}) {
      json j = json::parse(doc);
      v.push_back({j["name"].get<std::string>(), j["description"].get<std::string>(), doc});
    }
    return v;
  }();
  return all;
}

const Fixture* find_fixture(const std::string& name) {
  for (const auto& f : paper_fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

FixtureOutcome run_fixture(const Fixture& fx, const Field& field) {
  FixtureOutcome out;
  out.name = fx.name;
  out.field = field.name();
  json doc = json::parse(fx.document);
  Actual actual;
  try {
    if (doc.contains("rep")) {
      evaluate_rep(doc["rep"], field, actual);
    } else {
      Loader loader(field);
      InstanceBundle b = loader.bundle(fx.document);
      evaluate_bundle(b, actual, out.reports);
    }
  } catch (const Error& e) {
    out.error = e.what();
  }
  for (const auto& e : doc["expected"]) {
    FixtureCheck c;
    c.key = e["key"].get<std::string>();
    c.expected = e["value"].get<std::string>();
    c.source = e["source"].get<std::string>();
    auto it = actual.find(c.key);
    c.actual = it == actual.end() ? "missing" : it->second;
    c.passed = c.actual == c.expected;
    out.checks.push_back(std::move(c));
  }
  return out;
}

bool FixtureOutcome::passed() const {
  if (!error.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string FixtureOutcome::to_text() const {
  std::ostringstream out;
  out << name << " [" << field << "]: " << (passed() ? "pass" : "fail") << "\n";
  if (!error.empty()) out << "  error: " << error << "\n";
  for (const auto& c : checks)
    out << "  " << (c.passed ? "ok  " : "FAIL") << " " << c.key << " = " << c.actual
        << (c.passed ? "" : " (expected " + c.expected + ")") << "  [" << c.source << "]\n";
  for (const auto& r : reports) {
    std::istringstream lines(r.to_text());
    for (std::string line; std::getline(lines, line);) out << "  | " << line << "\n";
  }
  return out.str();
}

namespace {

json outcome_json(const FixtureOutcome& o) {
  json j;
  j["name"] = o.name;
  j["field"] = o.field;
  j["passed"] = o.passed();
  if (!o.error.empty()) j["error"] = o.error;
  json checks = json::array();
  for (const auto& c : o.checks)
    checks.push_back(json{{"key", c.key}, {"expected", c.expected}, {"actual", c.actual}, {"source", c.source},
                          {"passed", c.passed}});
  j["checks"] = std::move(checks);
  json reports = json::array();
  for (const auto& r : o.reports) reports.push_back(json::parse(r.to_json(0)));
  j["reports"] = std::move(reports);
  return j;
}

}  // namespace

std::string FixtureOutcome::to_json(int indent) const { return outcome_json(*this).dump(indent); }

std::string outcomes_json(const std::vector<FixtureOutcome>& outcomes, int indent) {
  json j;
  bool all = true;
  json arr = json::array();
  for (const auto& o : outcomes) {
    all = all && o.passed();
    arr.push_back(outcome_json(o));
  }
  j["passed"] = all;
  j["fixtures"] = std::move(arr);
  return j.dump(indent);
}

}  // namespace freecrit
