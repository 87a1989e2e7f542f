#include "freecrit/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "freecrit/errors.hpp"
#include "freecrit/expr.hpp"

namespace freecrit {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Loader::State {
  std::map<std::string, LoadedAlgebra> algebras;  // keyed by canonical document text
  bool field_fixed = false;
};

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

template <class T>
T get(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Field parse_field_config(const json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  const std::string kind = get<std::string>(member(j, "field", "field"), "field.field");
  if (kind == "rational") return Field::rational();
  if (kind == "gfp") return Field::prime(j.contains("p") ? get<std::uint64_t>(j["p"], "field.p") : 101);
  throw ParseError("unknown field '" + kind + "'");
}

json field_config(const Field& f) {
  if (!f.is_prime()) return json{{"field", "rational"}};
  return json{{"field", "gfp"}, {"p", f.characteristic()}};
}

Scalar parse_scalar(const Field& f, const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    if (j.is_string()) return f.parse_scalar(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected an integer or \"num/den\"");
}

json scalar_json(const Scalar& s) {
  std::string t = s.to_string();
  if (t.find('/') != std::string::npos) return t;
  return json(std::stoll(t));
}

Matrix parse_grid(const Field& f, const json& j, const std::string& where, std::optional<std::size_t> cols = {}) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
  const std::size_t rows = j.size();
  std::size_t c = cols.value_or(rows ? j[0].size() : 0);
  Matrix m(f, rows, c);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != c) throw ParseError(where + ": row " + std::to_string(r) + " has wrong length");
    for (std::size_t k = 0; k < c; ++k)
      m.set(r, k, parse_scalar(f, j[r][k], where + "[" + std::to_string(r) + "][" + std::to_string(k) + "]"));
  }
  return m;
}

json grid_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix parse_element(const ArtinAlgebra& a, const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return a.scalar(a.field().from_int(j.get<std::int64_t>()));
    if (j.is_string()) return a.parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what(), e.position());
  }
  throw ParseError(where + ": expected an algebra element string");
}

AMatrix parse_amatrix(const AlgebraPtr& a, const json& j, const std::string& where, std::optional<std::size_t> rows = {},
                      std::optional<std::size_t> cols = {}) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
  const std::size_t r = j.size();
  if (rows && *rows != r)
    throw ParseError(where + ": expected " + std::to_string(*rows) + " rows, found " + std::to_string(r));
  const std::size_t c = cols.value_or(r ? j[0].size() : 0);
  AMatrix m(a, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c)
      throw ParseError(where + ": row " + std::to_string(i) + " should have " + std::to_string(c) + " entries");
    for (std::size_t k = 0; k < c; ++k)
      m.set(i, k, parse_element(*a, j[i][k], where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  return m;
}

json amatrix_json(const AMatrix& m) {
  json out = json::array();
  for (const auto& row : m.format()) out.push_back(row);
  return out;
}

std::vector<AMatrix> parse_amatrix_list(const AlgebraPtr& a, const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of matrices");
  std::vector<AMatrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_amatrix(a, j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json amatrix_list_json(const std::vector<AMatrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(amatrix_json(m));
  return out;
}

// A reference is either a path (relative to base) or an inline document.
std::pair<json, fs::path> resolve(const json& ref, const fs::path& base, const std::string& where) {
  if (ref.is_string()) {
    fs::path p = base / ref.get<std::string>();
    try {
      return {parse_json(Loader::read_file(p)), p.parent_path()};
    } catch (const ParseError& e) {
      throw ParseError(p.string() + ": " + e.what());
    }
  }
  if (ref.is_object()) return {ref, base};
  throw ParseError(where + ": expected a path or an inline document");
}

}  // namespace

Loader::Loader(std::optional<Field> field, std::optional<int> truncation)
    : field_(field.value_or(Field::prime(101))), truncation_(truncation), state_(std::make_unique<State>()) {
  state_->field_fixed = field.has_value();
}
Loader::~Loader() = default;
Loader::Loader(Loader&&) noexcept = default;
Loader& Loader::operator=(Loader&&) noexcept = default;

std::string Loader::read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

namespace {

struct Reader {
  Loader& loader;
  Loader::State& st;
  Field& field;
  std::optional<int> truncation;

  void declare_field(const json& doc, const std::string& where) {
    if (!doc.is_object() || !doc.contains("field")) return;
    Field f = parse_field_config(doc["field"]);
    if (f == field) {
      st.field_fixed = true;
      return;
    }
    if (st.field_fixed)
      throw FieldMismatch(where + ": document is over " + f.name() + " but " + field.name() + " was requested");
    field = f;
    st.field_fixed = true;
  }

  LoadedAlgebra algebra(const json& ref, const fs::path& base) {
    auto [doc, dir] = resolve(ref, base, "algebra");
    declare_field(doc, "algebra");
    const std::string key = field.name() + "|" + doc.dump();
    if (auto it = st.algebras.find(key); it != st.algebras.end()) return it->second;
    const std::string kind = get<std::string>(member(doc, "kind", "algebra"), "algebra.kind");
    LoadedAlgebra out;
    if (kind == "monomial_quotient") {
      auto vars = get<std::vector<std::string>>(member(doc, "vars", "algebra"), "algebra.vars");
      auto ideal = get<std::vector<std::string>>(member(doc, "ideal", "algebra"), "algebra.ideal");
      int d = truncation ? *truncation : get<int>(member(doc, "truncation", "algebra"), "algebra.truncation");
      GradedMonomialAlgebra mono = GradedMonomialAlgebra::parse(vars, ideal, d);
      out.algebra = std::make_shared<const ArtinAlgebra>(mono.truncated_model(field));
      out.monomial = std::move(mono);
    } else if (kind == "artinian") {
      auto labels = get<std::vector<std::string>>(member(doc, "labels", "algebra"), "algebra.labels");
      const json& cs = member(doc, "constants", "algebra");
      if (!cs.is_array()) throw ParseError("algebra.constants: expected an array");
      std::vector<ArtinAlgebra::Constant> constants;
      for (std::size_t n = 0; n < cs.size(); ++n) {
        const std::string where = "algebra.constants[" + std::to_string(n) + "]";
        if (!cs[n].is_array() || cs[n].size() != 4) throw ParseError(where + ": expected [i, j, k, value]");
        constants.push_back({get<std::size_t>(cs[n][0], where), get<std::size_t>(cs[n][1], where),
                             get<std::size_t>(cs[n][2], where), parse_scalar(field, cs[n][3], where)});
      }
      ArtinAlgebra a = ArtinAlgebra::from_constants(field, labels, constants);
      if (doc.contains("grading")) {
        const json& g = doc["grading"];
        Grading gr;
        gr.degrees = get<std::vector<int>>(member(g, "degrees", "algebra.grading"), "algebra.grading.degrees");
        gr.truncation = g.value("truncation", 0);
        gr.truncated = g.value("truncated", false);
        std::vector<Matrix> mult;
        for (std::size_t i = 0; i < a.dim(); ++i) mult.push_back(a.mult(i));
        a = ArtinAlgebra(field, labels, std::move(mult), gr);
      }
      auto report = a.validate();
      if (!report.valid) throw ParseError("algebra: " + (report.failures.empty() ? "invalid" : report.failures.front()));
      out.algebra = std::make_shared<const ArtinAlgebra>(std::move(a));
    } else {
      throw ParseError("algebra.kind: unknown kind '" + kind + "'");
    }
    st.algebras.emplace(key, out);
    return out;
  }

  FreeComplex complex(const json& ref, const fs::path& base) {
    auto [doc, dir] = resolve(ref, base, "complex");
    declare_field(doc, "complex");
    AlgebraPtr a = algebra(member(doc, "algebra", "complex"), dir).algebra;
    auto ranks = get<std::vector<std::size_t>>(member(doc, "ranks", "complex"), "complex.ranks");
    const json& ds = doc.contains("differentials") ? doc["differentials"] : json::array();
    if (!ds.is_array() || (ranks.size() > 0 && ds.size() != ranks.size() - 1))
      throw ParseError("complex.differentials: expected " + std::to_string(ranks.empty() ? 0 : ranks.size() - 1) +
                       " matrices");
    std::vector<AMatrix> d;
    for (std::size_t i = 0; i < ds.size(); ++i)
      d.push_back(parse_amatrix(a, ds[i], "complex.differentials[" + std::to_string(i) + "]", ranks[i], ranks[i + 1]));
    FreeComplex f(a, ranks, d);
    if (doc.contains("labels"))
      f.set_labels(get<std::vector<std::vector<std::string>>>(doc["labels"], "complex.labels"));
    if (doc.contains("degrees")) f.set_degrees(get<std::vector<std::vector<int>>>(doc["degrees"], "complex.degrees"));
    auto rep = f.validate();
    if (!rep.valid) throw ParseError("complex: " + (rep.failures.empty() ? "invalid" : rep.failures.front()));
    return f;
  }

  AlgebraMorphism morphism(const json& ref, const fs::path& base) {
    auto [doc, dir] = resolve(ref, base, "morphism");
    declare_field(doc, "morphism");
    AlgebraPtr s = algebra(member(doc, "source", "morphism"), dir).algebra;
    AlgebraPtr t = algebra(member(doc, "target", "morphism"), dir).algebra;
    const json& im = member(doc, "images", "morphism");
    std::vector<std::pair<std::string, Matrix>> images;
    if (im.is_object()) {
      for (auto it = im.begin(); it != im.end(); ++it)
        images.emplace_back(it.key(), parse_element(*t, it.value(), "morphism.images." + it.key()));
    } else if (im.is_array()) {
      for (std::size_t n = 0; n < im.size(); ++n) {
        const std::string where = "morphism.images[" + std::to_string(n) + "]";
        if (!im[n].is_array() || im[n].size() != 2) throw ParseError(where + ": expected [name, image]");
        images.emplace_back(get<std::string>(im[n][0], where), parse_element(*t, im[n][1], where));
      }
    } else {
      throw ParseError("morphism.images: expected an array of [name, image] pairs");
    }
    return AlgebraMorphism::from_images(s, t, std::move(images));
  }

  ActionCertificate certificate(const json& ref, const fs::path& base) {
    auto [doc, dir] = resolve(ref, base, "certificate");
    declare_field(doc, "certificate");
    ActionCertificate c{morphism(member(doc, "morphism", "certificate"), dir), {}, {}};
    const AlgebraPtr& a = c.phi.source();
    const json& gens = member(doc, "generators", "certificate");
    for (std::size_t n = 0; n < gens.size(); ++n) {
      const std::string where = "certificate.generators[" + std::to_string(n) + "]";
      ActionGenerator g;
      g.name = get<std::string>(member(gens[n], "name", where), where + ".name");
      g.map.f = parse_amatrix_list(a, member(gens[n], "matrices", where), where + ".matrices");
      c.generators.push_back(std::move(g));
    }
    if (doc.contains("relations")) {
      const json& rels = doc["relations"];
      for (std::size_t n = 0; n < rels.size(); ++n) {
        const std::string where = "certificate.relations[" + std::to_string(n) + "]";
        ActionRelation r;
        if (rels[n].is_string()) {
          r.poly = rels[n].get<std::string>();
        } else {
          r.poly = get<std::string>(member(rels[n], "poly", where), where + ".poly");
          if (rels[n].contains("witness") && rels[n]["witness"].is_array())
            r.witness = Homotopy{parse_amatrix_list(a, rels[n]["witness"], where + ".witness")};
        }
        try {
          parse_expr(r.poly);
        } catch (const ParseError& e) {
          throw ParseError(where + ".poly: " + e.what(), e.position());
        }
        c.relations.push_back(std::move(r));
      }
    }
    return c;
  }

  FiniteModule module(const json& ref, const fs::path& base) {
    auto [doc, dir] = resolve(ref, base, "module");
    declare_field(doc, "module");
    AlgebraPtr a = algebra(member(doc, "algebra", "module"), dir).algebra;
    auto dim = get<std::size_t>(member(doc, "dim", "module"), "module.dim");
    const json& act = member(doc, "action", "module");
    if (!act.is_array() || act.size() != a->dim())
      throw ParseError("module.action: expected one matrix per algebra basis element");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < act.size(); ++i)
      action.push_back(parse_grid(field, act[i], "module.action[" + std::to_string(i) + "]", dim));
    std::vector<int> degrees;
    if (doc.contains("degrees")) degrees = get<std::vector<int>>(doc["degrees"], "module.degrees");
    std::optional<int> window;
    if (doc.contains("window")) window = get<int>(doc["window"], "module.window");
    FiniteModule m(a, dim, std::move(action), std::move(degrees), window);
    auto errs = m.validate();
    if (!errs.empty()) throw ParseError("module: " + errs.front());
    return m;
  }
};

}  // namespace

LoadedAlgebra Loader::algebra(const std::string& text, const fs::path& base) {
  Reader r{*this, *state_, field_, truncation_};
  return r.algebra(parse_json(text), base);
}

FreeComplex Loader::complex(const std::string& text, const fs::path& base) {
  Reader r{*this, *state_, field_, truncation_};
  return r.complex(parse_json(text), base);
}

AlgebraMorphism Loader::morphism(const std::string& text, const fs::path& base) {
  Reader r{*this, *state_, field_, truncation_};
  return r.morphism(parse_json(text), base);
}

ActionCertificate Loader::certificate(const std::string& text, const fs::path& base) {
  Reader r{*this, *state_, field_, truncation_};
  return r.certificate(parse_json(text), base);
}

FiniteModule Loader::module(const std::string& text, const fs::path& base) {
  Reader r{*this, *state_, field_, truncation_};
  return r.module(parse_json(text), base);
}

InstanceBundle Loader::bundle(const std::string& text, const fs::path& base) {
  Reader r{*this, *state_, field_, truncation_};
  json doc = parse_json(text);
  r.declare_field(doc, "bundle");
  InstanceBundle b;
  b.name = doc.value("name", std::string("bundle"));
  b.F = r.complex(member(doc, "complex", "bundle"), base);
  if (doc.contains("morphism")) b.phi = r.morphism(doc["morphism"], base);
  if (doc.contains("certificate")) b.certificate = r.certificate(doc["certificate"], base);
  if (doc.contains("h_action")) {
    const json& h = doc["h_action"];
    b.h_action_names = get<std::vector<std::string>>(member(h, "names", "bundle.h_action"), "bundle.h_action.names");
    const json& ms = member(h, "matrices", "bundle.h_action");
    std::vector<std::vector<Matrix>> mats;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      std::vector<Matrix> per;
      for (std::size_t g = 0; g < ms[i].size(); ++g)
        per.push_back(parse_grid(field_, ms[i][g],
                                 "bundle.h_action.matrices[" + std::to_string(i) + "][" + std::to_string(g) + "]"));
      mats.push_back(std::move(per));
    }
    b.h_action = std::move(mats);
  }
  if (!b.phi && !b.certificate) throw ParseError("bundle: needs a morphism or a certificate");
  if (b.certificate && b.phi && !equal(b.certificate->phi, *b.phi))
    throw ParseError("bundle: certificate morphism differs from the bundle morphism");
  if (b.F.algebra() != b.morphism().source())
    throw ParseError("bundle: the complex and the morphism use different algebras");
  b.monomial_A = monomial_of(b.morphism().source());
  b.monomial_B = monomial_of(b.morphism().target());
  return b;
}

WModuleRep Loader::rep(const std::string& text) {
  json doc = parse_json(text);
  Reader r{*this, *state_, field_, truncation_};
  r.declare_field(doc, "rep");
  WModuleRep rep;
  rep.field = field_;
  rep.p = get<std::size_t>(member(doc, "p", "rep"), "rep.p");
  rep.dims = get<std::vector<std::size_t>>(member(doc, "dims", "rep"), "rep.dims");
  const std::size_t top = rep.dims.empty() ? 0 : rep.dims.size() - 1;
  for (const char* key : {"S", "T"}) {
    const json& all = member(doc, key, "rep");
    if (!all.is_array() || all.size() != rep.p) throw ParseError(std::string("rep.") + key + ": expected p lists");
    auto& dst = key[0] == 'S' ? rep.S : rep.T;
    for (std::size_t i = 0; i < rep.p; ++i) {
      if (!all[i].is_array() || all[i].size() != top)
        throw ParseError(std::string("rep.") + key + ": expected one matrix per degree step");
      std::vector<Matrix> per;
      for (std::size_t j = 0; j < top; ++j) {
        const std::size_t cols = key[0] == 'S' ? rep.dims[j] : rep.dims[j + 1];
        per.push_back(parse_grid(field_, all[i][j],
                                 std::string("rep.") + key + "[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                                 cols));
        if (per.back().rows() == 0) per.back() = Matrix(field_, key[0] == 'S' ? rep.dims[j + 1] : rep.dims[j], cols);
      }
      dst.push_back(std::move(per));
    }
  }
  auto errs = rep.shape_errors();
  if (!errs.empty()) throw ParseError("rep: " + errs.front());
  return rep;
}

std::optional<GradedMonomialAlgebra> Loader::monomial_of(const AlgebraPtr& a) const {
  for (const auto& [key, loaded] : state_->algebras)
    if (loaded.algebra == a) return loaded.monomial;
  return std::nullopt;
}

namespace {

json algebra_doc(const AlgebraPtr& a, const Loader* origin) {
  json out;
  out["field"] = field_config(a->field());
  if (origin) {
    if (auto mono = origin->monomial_of(a)) {
      out["kind"] = "monomial_quotient";
      out["vars"] = mono->vars();
      out["ideal"] = mono->ideal_strings();
      out["truncation"] = mono->truncation();
      return out;
    }
  }
  out["kind"] = "artinian";
  out["labels"] = a->labels();
  json cs = json::array();
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j)
      for (std::size_t k = 0; k < a->dim(); ++k)
        if (!a->mult(i).entry_is_zero(k, j)) cs.push_back(json{i, j, k, scalar_json(a->mult(i)(k, j))});
  out["constants"] = std::move(cs);
  if (a->grading()) {
    const Grading& g = *a->grading();
    out["grading"] = json{{"degrees", g.degrees}, {"truncation", g.truncation}, {"truncated", g.truncated}};
  }
  return out;
}

json complex_doc(const FreeComplex& f, const Loader* origin) {
  json out;
  out["algebra"] = algebra_doc(f.algebra(), origin);
  out["ranks"] = f.ranks();
  out["differentials"] = amatrix_list_json(f.differentials());
  if (!f.labels().empty()) out["labels"] = f.labels();
  return out;
}

json morphism_doc(const AlgebraMorphism& phi, const Loader* origin) {
  json out;
  out["source"] = algebra_doc(phi.source(), origin);
  out["target"] = algebra_doc(phi.target(), origin);
  json im = json::array();
  for (const auto& [name, img] : phi.images()) im.push_back(json{name, phi.target()->format(img)});
  out["images"] = std::move(im);
  return out;
}

json certificate_doc(const ActionCertificate& c, const Loader* origin) {
  json out;
  out["morphism"] = morphism_doc(c.phi, origin);
  json gens = json::array();
  for (const auto& g : c.generators) gens.push_back(json{{"name", g.name}, {"matrices", amatrix_list_json(g.map.f)}});
  out["generators"] = std::move(gens);
  json rels = json::array();
  for (const auto& r : c.relations) {
    json rel{{"poly", r.poly}};
    if (r.witness) {
      // h_top maps into F_{top+1} = 0 and carries no data.
      std::vector<AMatrix> h = r.witness->h;
      while (!h.empty() && h.back().rows() == 0) h.pop_back();
      rel["witness"] = amatrix_list_json(h);
    }
    rels.push_back(std::move(rel));
  }
  out["relations"] = std::move(rels);
  return out;
}

}  // namespace

std::string save_algebra(const AlgebraPtr& a, const Loader* origin) { return algebra_doc(a, origin).dump(2); }
std::string save_complex(const FreeComplex& f, const Loader* origin) { return complex_doc(f, origin).dump(2); }
std::string save_morphism(const AlgebraMorphism& phi, const Loader* origin) {
  return morphism_doc(phi, origin).dump(2);
}
std::string save_certificate(const ActionCertificate& c, const Loader* origin) {
  return certificate_doc(c, origin).dump(2);
}

std::string save_bundle(const InstanceBundle& b, const Loader* origin) {
  json out;
  out["name"] = b.name;
  out["complex"] = complex_doc(b.F, origin);
  if (b.phi) out["morphism"] = morphism_doc(*b.phi, origin);
  if (b.certificate) out["certificate"] = certificate_doc(*b.certificate, origin);
  if (b.h_action) {
    json ms = json::array();
    for (const auto& per : *b.h_action) {
      json row = json::array();
      for (const auto& m : per) row.push_back(grid_json(m));
      ms.push_back(std::move(row));
    }
    out["h_action"] = json{{"names", b.h_action_names}, {"matrices", std::move(ms)}};
  }
  return out.dump(2);
}

std::string save_rep(const WModuleRep& rep) {
  json out;
  out["field"] = field_config(rep.field);
  out["p"] = rep.p;
  out["dims"] = rep.dims;
  for (const char* key : {"S", "T"}) {
    const auto& src = key[0] == 'S' ? rep.S : rep.T;
    json all = json::array();
    for (const auto& per : src) {
      json row = json::array();
      for (const auto& m : per) row.push_back(grid_json(m));
      all.push_back(std::move(row));
    }
    out[key] = std::move(all);
  }
  return out.dump(2);
}

std::string save_module(const FiniteModule& m, const Loader* origin) {
  json out;
  out["algebra"] = algebra_doc(m.algebra(), origin);
  out["dim"] = m.dim();
  json act = json::array();
  for (const auto& a : m.action()) act.push_back(grid_json(a));
  out["action"] = std::move(act);
  if (!m.degrees().empty()) out["degrees"] = m.degrees();
  if (m.window()) out["window"] = *m.window();
  return out.dump(2);
}

bool equal(const ArtinAlgebra& a, const ArtinAlgebra& b) {
  if (!(a.field() == b.field()) || a.labels() != b.labels()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(a.mult(i) == b.mult(i))) return false;
  if (a.graded() != b.graded()) return false;
  if (a.graded()) {
    const auto& x = *a.grading();
    const auto& y = *b.grading();
    if (x.degrees != y.degrees || x.truncated != y.truncated || (x.truncated && x.truncation != y.truncation)) return false;
  }
  return true;
}

bool equal(const FreeComplex& a, const FreeComplex& b) {
  if (!equal(*a.algebra(), *b.algebra()) || a.ranks() != b.ranks()) return false;
  for (std::size_t i = 0; i < a.differentials().size(); ++i)
    if (!(a.differentials()[i].stacked() == b.differentials()[i].stacked())) return false;
  return true;
}

bool equal(const AlgebraMorphism& a, const AlgebraMorphism& b) {
  return equal(*a.source(), *b.source()) && equal(*a.target(), *b.target()) && a.matrix() == b.matrix();
}

bool equal(const ActionCertificate& a, const ActionCertificate& b) {
  if (!equal(a.phi, b.phi) || a.generators.size() != b.generators.size() || a.relations.size() != b.relations.size())
    return false;
  auto same = [](const std::vector<AMatrix>& x, const std::vector<AMatrix>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].rows() != y[i].rows() || x[i].cols() != y[i].cols() || !(x[i].stacked() == y[i].stacked())) return false;
    return true;
  };
  for (std::size_t g = 0; g < a.generators.size(); ++g)
    if (a.generators[g].name != b.generators[g].name || !same(a.generators[g].map.f, b.generators[g].map.f)) return false;
  for (std::size_t r = 0; r < a.relations.size(); ++r) {
    const auto& x = a.relations[r];
    const auto& y = b.relations[r];
    if (x.poly != y.poly || x.witness.has_value() != y.witness.has_value()) return false;
    if (!x.witness) continue;
    auto trim = [](std::vector<AMatrix> h) {
      while (!h.empty() && h.back().rows() == 0) h.pop_back();
      return h;
    };
    if (!same(trim(x.witness->h), trim(y.witness->h))) return false;
  }
  return true;
}

bool equal(const WModuleRep& a, const WModuleRep& b) {
  return a.field == b.field && a.p == b.p && a.dims == b.dims && a.S == b.S && a.T == b.T;
}

bool equal(const FiniteModule& a, const FiniteModule& b) {
  return equal(*a.algebra(), *b.algebra()) && a.dim() == b.dim() && a.action() == b.action() &&
         a.degrees() == b.degrees() && a.window() == b.window();
}

}  // namespace freecrit
