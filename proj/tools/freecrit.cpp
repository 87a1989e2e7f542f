// Command-line front end: reads JSON documents, runs one computation or
// checker and prints a text or JSON report.
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "freecrit/checkers.hpp"
#include "freecrit/errors.hpp"
#include "freecrit/fixtures.hpp"
#include "freecrit/io.hpp"
#include "freecrit/koszul.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace freecrit;

namespace {

struct Options {
  std::string field = "gfp:101";
  int trunc = -1;
  bool json_out = false;
};

struct Input {
  Loader loader;
  std::string text;
  fs::path base;
};

Input open_input(const Options& o, const std::string& path) {
  std::optional<int> t;
  if (o.trunc >= 0) t = o.trunc;
  Input in{Loader(Field::parse(o.field), t), Loader::read_file(path), fs::path(path).parent_path()};
  return in;
}

std::string detect_kind(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("complex")) return "bundle";
  if (j.contains("generators")) return "certificate";
  if (j.contains("images")) return "morphism";
  if (j.contains("ranks")) return "complex";
  if (j.contains("dims")) return "rep";
  if (j.contains("rep")) return "model";
  if (j.contains("action")) return "module";
  if (j.contains("kind")) return "algebra";
  throw ParseError("cannot tell which kind of document this is");
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int emit_report(const Options& o, const CheckReport& r) {
  if (o.json_out)
    std::cout << r.to_json(2) << "\n";
  else
    std::cout << r.to_text();
  return r.verdict() == Verdict::fail ? 1 : 0;
}

FreeComplex load_complex(Input& in) {
  if (detect_kind(in.text) == "bundle") return in.loader.bundle(in.text, in.base).F;
  return in.loader.complex(in.text, in.base);
}

int cmd_validate(const Options& o, const std::string& path) {
  Input in = open_input(o, path);
  const std::string kind = detect_kind(in.text);
  std::vector<std::string> problems;
  if (kind == "algebra") {
    auto a = in.loader.algebra(in.text, in.base).algebra;
    auto rep = a->validate();
    problems = rep.failures;
  } else if (kind == "complex") {
    problems = in.loader.complex(in.text, in.base).validate().failures;
  } else if (kind == "morphism") {
    in.loader.morphism(in.text, in.base);
  } else if (kind == "certificate") {
    in.loader.certificate(in.text, in.base);
  } else if (kind == "bundle") {
    InstanceBundle b = in.loader.bundle(in.text, in.base);
    if (b.certificate) {
      auto rep = verify_certificate(b.F, *b.certificate);
      problems = rep.failures;
      for (const auto& r : rep.relations)
        if (!r.passed()) problems.push_back(r.poly + ": " + r.detail);
    }
  } else if (kind == "rep") {
    problems = in.loader.rep(in.text).shape_errors();
  } else if (kind == "model") {
    // Exterior model given by p and dim V_0.
    const json spec = json::parse(in.text).at("rep");
    WModuleRep rep = exterior_model(in.loader.field(), spec.at("p").get<std::size_t>(), spec.at("dim0").get<std::size_t>());
    problems = rep.shape_errors();
    for (const auto& f : check_weyl_relations(rep, true).failures) problems.push_back(f);
  } else {
    problems = in.loader.module(in.text, in.base).validate();
  }
  json j{{"kind", kind}, {"valid", problems.empty()}, {"problems", problems}};
  std::string text = kind + ": " + (problems.empty() ? "valid" : "invalid") + "\n";
  for (const auto& p : problems) text += "  " + p + "\n";
  emit(o, j, text);
  return problems.empty() ? 0 : 1;
}

int cmd_homology(const Options& o, const std::string& path) {
  Input in = open_input(o, path);
  FreeComplex f = load_complex(in);
  json arr = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i <= f.top(); ++i) {
    HomologyModule h = f.homology(i);
    FiniteModule m = FiniteModule::from_homology(f.algebra(), h);
    json e{{"degree", i}, {"dim", h.dim()}, {"nu", m.nu()}};
    text << "H_" << i << ": dim " << h.dim() << ", nu " << m.nu();
    if (h.window) {
      e["window"] = *h.window;
      text << " (up to degree " << *h.window << ")";
    }
    text << "\n";
    arr.push_back(std::move(e));
  }
  emit(o, json{{"homology", arr}}, text.str());
  return 0;
}

int cmd_betti(const Options& o, const std::string& path) {
  Input in = open_input(o, path);
  FreeComplex f = load_complex(in);
  auto b = f.betti();
  json j{{"betti", b}, {"minimal", f.is_minimal()}};
  auto p = f.proj_dim();
  if (p) j["proj_dim"] = *p;
  emit(o, j, "betti: " + join(b) + "\nminimal: " + (f.is_minimal() ? "yes" : "no") + "\n");
  return 0;
}

int cmd_poincare(const Options& o, const std::string& path, std::size_t n) {
  Input in = open_input(o, path);
  const std::string kind = detect_kind(in.text);
  std::vector<std::size_t> b;
  if (kind == "module")
    b = in.loader.module(in.text, in.base).poincare(n);
  else
    b = poincare_truncated(load_complex(in), n);
  emit(o, json{{"poincare", b}}, "poincare: " + join(b) + "\n");
  return 0;
}

int cmd_annihilator(const Options& o, const std::string& path) {
  Input in = open_input(o, path);
  FreeComplex f = load_complex(in);
  DerivedAnnihilator ann = derived_annihilator(f);
  std::vector<std::string> basis;
  for (std::size_t c = 0; c < ann.basis.cols(); ++c) basis.push_back(f.algebra()->format(ann.basis.col(c)));
  json j{{"basis", basis}, {"is_ideal", ann.is_ideal}};
  std::string text = "derived annihilator (dim " + std::to_string(basis.size()) + "):\n";
  for (const auto& s : basis) text += "  " + s + "\n";
  if (ann.window) {
    j["window"] = *ann.window;
    text += "verified up to degree " + std::to_string(*ann.window) + "\n";
  }
  emit(o, j, text);
  return 0;
}

int cmd_homotopy(const Options& o, const std::string& path, const std::string& element) {
  Input in = open_input(o, path);
  FreeComplex f = load_complex(in);
  Matrix a = f.algebra()->parse(element);
  auto h = solve_homotopy(f, f, scalar_map(f, a));
  json j{{"element", element}, {"null_homotopic", h.has_value()}};
  std::string text = element + " * id: " + (h ? "null-homotopic" : "not null-homotopic") + "\n";
  if (h) {
    json hs = json::array();
    for (std::size_t i = 0; i < h->h.size(); ++i) {
      hs.push_back(h->h[i].format());
      if (h->h[i].rows() == 0) continue;
      text += "h_" + std::to_string(i) + " =\n" + h->h[i].to_string() + "\n";
    }
    j["witness"] = std::move(hs);
  }
  emit(o, j, text);
  return h ? 0 : 1;
}

int cmd_verify_action(const Options& o, const std::string& path) {
  Input in = open_input(o, path);
  InstanceBundle b = in.loader.bundle(in.text, in.base);
  if (!b.certificate) throw ParseError("bundle has no certificate");
  auto rep = verify_certificate(b.F, *b.certificate);
  json rels = json::array();
  std::string text;
  for (const auto& r : rep.relations) {
    rels.push_back(json{{"poly", r.poly}, {"method", to_string(r.method)}, {"detail", r.detail}});
    text += r.poly + ": " + to_string(r.method) + (r.detail.empty() ? "" : " (" + r.detail + ")") + "\n";
  }
  for (const auto& f : rep.failures) text += "failure: " + f + "\n";
  text += std::string("certificate ") + (rep.verified ? "verified" : "rejected") + "\n";
  emit(o, json{{"verified", rep.verified}, {"relations", rels}, {"failures", rep.failures}}, text);
  return rep.verified ? 0 : 1;
}

int cmd_decompose(const Options& o, const std::string& path) {
  Input in = open_input(o, path);
  FreeComplex f = load_complex(in);
  auto d = koszul_decompose(f);
  std::vector<std::string> xs;
  for (const auto& x : d.x) xs.push_back(f.algebra()->format(x));
  json j{{"success", d.success}, {"p", d.p}, {"multiplicity", d.multiplicity}, {"x", xs},
         {"annihilator_dim", d.annihilator_dim}, {"annihilator_rank_mod_m2", d.annihilator_rank_mod_m2}};
  std::string text;
  if (d.success) {
    text = "F = K(" + join(xs) + ")^" + std::to_string(d.multiplicity) + "\n";
  } else {
    j["obstruction"] = d.obstruction;
    text = "no Koszul decomposition: " + d.obstruction + "\n";
  }
  emit(o, j, text);
  return d.success ? 0 : 1;
}

int cmd_freeness(const Options& o, const std::string& path) {
  Input in = open_input(o, path);
  const std::string kind = detect_kind(in.text);
  std::optional<FiniteModule> m;
  if (kind == "module") {
    m = in.loader.module(in.text, in.base);
  } else if (kind == "bundle") {
    InstanceBundle b = in.loader.bundle(in.text, in.base);
    if (b.certificate)
      m = induced_action_on_homology(b.F, *b.certificate).modules.at(0);
    else if (b.h_action) {
      auto rep = check_H_action_only(b.F, b.morphism(), b.h_action_names, *b.h_action);
      if (!rep.valid) throw ParseError("the given action on homology is not a module structure");
      m = rep.modules.at(0);
    } else {
      throw ParseError("bundle has no action on homology");
    }
  } else {
    throw ParseError("freeness expects a module or a bundle");
  }
  auto fr = m->is_free();
  json j{{"free", fr.free}, {"rank", fr.rank}, {"dim", m->dim()}};
  std::string text = std::string(fr.free ? "free" : "not free") + ", nu = " + std::to_string(fr.rank) + ", dim " +
                     std::to_string(m->dim());
  if (fr.window) {
    j["window"] = *fr.window;
    text += " (up to degree " + std::to_string(*fr.window) + ")";
  } else {
    auto l = m->lemma43_freeness(2);
    j["lemma43_free"] = l.free;
    j["betti"] = l.betti;
    text += "\nbetti over the algebra: " + join(l.betti);
  }
  emit(o, j, text + "\n");
  return fr.free ? 0 : 1;
}

int cmd_check(const Options& o, const std::string& theorem, const std::string& path, std::size_t c) {
  Input in = open_input(o, path);
  InstanceBundle b = in.loader.bundle(in.text, in.base);
  if (theorem == "question") return emit_report(o, check_question(b));
  if (theorem == "lemma32") return emit_report(o, check_lemma32(b));
  if (theorem == "thm31") return emit_report(o, check_thm31(b));
  if (theorem == "thm51") return emit_report(o, check_thm51(b));
  if (theorem == "thm41") {
    if (!b.certificate) throw ParseError("thm41 needs a certificate describing the B-action");
    std::vector<std::string> failures;
    auto strict = strict_from_certificate(b.F, *b.certificate, failures);
    if (!strict) {
      CheckReport r;
      r.title = "thm41 " + b.name;
      r.hypothesis("strict_B_action", failures.empty() ? "no" : failures.front(), "differentials B-linear",
                   Verdict::fail);
      return emit_report(o, r);
    }
    return emit_report(o, check_thm41(*strict, b.morphism()));
  }
  if (theorem == "prop44") {
    auto r = prop44_divisibility(b.F, c);
    json j{{"precondition", r.precondition}, {"divisible", r.divisible}, {"betti", r.betti}, {"quotient", r.quotient}};
    emit(o, j,
         "betti " + join(r.betti) + "; quotient by (1+t)^" + std::to_string(c) + ": " + join(r.quotient) +
             (r.divisible ? "" : " (not divisible)") + (r.precondition ? "" : "\nprecondition not met") + "\n");
    return r.divisible ? 0 : 1;
  }
  throw ParseError("unknown theorem '" + theorem + "'");
}

int cmd_paper_examples(const Options& o, const std::string& only, const std::string& export_dir) {
  std::vector<const Fixture*> chosen;
  if (only.empty()) {
    for (const auto& f : paper_fixtures()) chosen.push_back(&f);
  } else {
    const Fixture* f = find_fixture(only);
    if (!f) throw ParseError("unknown example '" + only + "'");
    chosen.push_back(f);
  }
  if (!export_dir.empty()) {
    fs::create_directories(export_dir);
    for (const auto* f : chosen) {
      std::ofstream out(fs::path(export_dir) / (f->name + ".json"));
      out << json::parse(f->document).dump(2) << "\n";
    }
  }
  const Field field = Field::parse(o.field);
  std::vector<FixtureOutcome> outcomes;
  bool all = true;
  for (const auto* f : chosen) {
    outcomes.push_back(run_fixture(*f, field));
    all = all && outcomes.back().passed();
  }
  if (o.json_out) {
    std::cout << outcomes_json(outcomes) << "\n";
  } else {
    for (const auto& out : outcomes) std::cout << out.to_text();
  }
  return all ? 0 : 1;
}

int cmd_koszul(const Options& o, const std::string& path, const std::string& vars, const std::string& output) {
  Input in = open_input(o, path);
  LoadedAlgebra a = in.loader.algebra(in.text, in.base);
  std::vector<Matrix> xs;
  std::stringstream ss(vars);
  for (std::string v; std::getline(ss, v, ',');)
    if (!v.empty()) xs.push_back(a.algebra->parse(v));
  FreeComplex k = koszul(a.algebra, xs);
  std::string doc = save_complex(k, &in.loader);
  if (output.empty()) {
    std::cout << doc << "\n";
  } else {
    std::ofstream(output) << doc << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of freeness criteria for complexes with a derived action"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--field", opt.field, "gfp:P or rational")->capture_default_str();
  app.add_option("--trunc", opt.trunc, "truncation degree for graded algebras");
  app.add_flag("--json", opt.json_out, "machine-readable output");

  std::string file, theorem, only, export_dir, element, vars, output;
  std::size_t n = 3, c = 0;
  std::function<int()> run;

  auto* validate = app.add_subcommand("validate", "check a document");
  validate->add_option("file", file)->required();
  validate->callback([&] { run = [&] { return cmd_validate(opt, file); }; });

  auto* homology = app.add_subcommand("homology", "homology of a complex");
  homology->add_option("file", file)->required();
  homology->callback([&] { run = [&] { return cmd_homology(opt, file); }; });

  auto* betti = app.add_subcommand("betti", "Betti numbers of a complex");
  betti->add_option("file", file)->required();
  betti->callback([&] { run = [&] { return cmd_betti(opt, file); }; });

  auto* poincare = app.add_subcommand("poincare", "Betti numbers of a module or of H_0 of a complex");
  poincare->add_option("file", file)->required();
  poincare->add_option("--trunc", n, "highest homological degree")->capture_default_str();
  poincare->callback([&] { run = [&] { return cmd_poincare(opt, file, n); }; });

  auto* annihilator = app.add_subcommand("annihilator", "derived annihilator of a complex");
  annihilator->add_option("file", file)->required();
  annihilator->callback([&] { run = [&] { return cmd_annihilator(opt, file); }; });

  auto* homotopy = app.add_subcommand("homotopy", "null-homotopy of a * id");
  homotopy->add_option("file", file)->required();
  homotopy->add_option("--solve", element, "algebra element a")->required();
  homotopy->callback([&] { run = [&] { return cmd_homotopy(opt, file, element); }; });

  auto* verify = app.add_subcommand("verify-action", "verify the certificate of a bundle");
  verify->add_option("file", file)->required();
  verify->callback([&] { run = [&] { return cmd_verify_action(opt, file); }; });

  auto* decompose = app.add_subcommand("decompose", "split a complex into Koszul complexes");
  decompose->add_option("file", file)->required();
  decompose->callback([&] { run = [&] { return cmd_decompose(opt, file); }; });

  auto* freeness = app.add_subcommand("freeness", "freeness of a module, or of H_0 of a bundle over B");
  freeness->add_option("file", file)->required();
  freeness->callback([&] { run = [&] { return cmd_freeness(opt, file); }; });

  auto* check = app.add_subcommand("check", "run a theorem checker on a bundle");
  check->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"question", "lemma32", "thm31", "thm41", "thm51", "prop44"}));
  check->add_option("--c", c, "number of annihilator elements for prop44");
  check->add_option("file", file)->required();
  check->callback([&] { run = [&] { return cmd_check(opt, theorem, file, c); }; });

  auto* examples = app.add_subcommand("paper-examples", "replay the worked examples");
  examples->add_option("--only", only, "run one example");
  examples->add_option("--export", export_dir, "write the example documents to a directory");
  examples->callback([&] { run = [&] { return cmd_paper_examples(opt, only, export_dir); }; });

  auto* kz = app.add_subcommand("koszul", "write the Koszul complex on elements of an algebra");
  kz->add_option("file", file, "algebra document")->required();
  kz->add_option("--vars", vars, "comma-separated elements (may be empty)")->required();
  kz->add_option("-o,--output", output);
  kz->callback([&] { run = [&] { return cmd_koszul(opt, file, vars, output); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
