#include "freecrit/derived_action.hpp"

#include "freecrit/errors.hpp"
#include "freecrit/expr.hpp"

namespace freecrit {

namespace {

ChainMap mul_maps(const ChainMap& a, const ChainMap& b) {
  ChainMap out;
  for (std::size_t i = 0; i < a.f.size(); ++i) out.f.push_back(a.f[i] * b.f[i]);
  return out;
}

ChainMap scaled_map(const ChainMap& a, const Scalar& s) {
  ChainMap out;
  for (const auto& m : a.f) out.f.push_back(m.scaled(s));
  return out;
}

struct RelationContext {
  using value_type = ChainMap;
  const FreeComplex& f;
  const ActionCertificate& cert;

  ChainMap number(const std::string& digits) {
    return scaled_map(identity_map(f), f.algebra()->field().parse_scalar(digits));
  }
  ChainMap ident(const std::string& name, std::size_t pos) {
    for (const auto& g : cert.generators)
      if (g.name == name) return g.map;
    try {
      return scalar_map(f, f.algebra()->parse(name));
    } catch (const ParseError&) {
      throw ParseError("unknown name '" + name + "' in relation", pos);
    }
  }
  ChainMap add(const ChainMap& a, const ChainMap& b) { return freecrit::add(a, b); }
  ChainMap sub(const ChainMap& a, const ChainMap& b) { return freecrit::sub(a, b); }
  ChainMap mul(const ChainMap& a, const ChainMap& b) { return mul_maps(a, b); }
  ChainMap neg(const ChainMap& a) { return scaled_map(a, -f.algebra()->field().one()); }
  ChainMap pow(const ChainMap& a, unsigned e) {
    ChainMap out = identity_map(f);
    for (unsigned k = 0; k < e; ++k) out = mul_maps(out, a);
    return out;
  }
  ChainMap div(const ChainMap& a, const std::string& digits) {
    Scalar s = f.algebra()->field().parse_scalar(digits);
    if (s.is_zero()) throw ParseError("division by zero", 0);
    return scaled_map(a, s.inverse());
  }
};

bool is_zero_map(const ChainMap& m) {
  for (const auto& x : m.f)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

const char* to_string(RelationResult::Method m) {
  switch (m) {
    case RelationResult::Method::exact:
      return "exact";
    case RelationResult::Method::witness:
      return "witness";
    case RelationResult::Method::solved:
      return "solved";
    case RelationResult::Method::failed:
      return "failed";
  }
  return "?";
}

ChainMap evaluate_relation(const FreeComplex& f, const ActionCertificate& cert, const std::string& poly) {
  RelationContext ctx{f, cert};
  return evaluate(parse_expr(poly), ctx);
}

CertificateReport verify_certificate(const FreeComplex& f, const ActionCertificate& cert) {
  CertificateReport rep;
  if (cert.phi.source()->dim() != f.algebra()->dim())
    throw DimensionMismatch("certificate morphism does not start at the algebra of the complex");
  for (const auto& g : cert.generators)
    if (g.map.f.size() != f.top() + 1 || !is_chain_map(f, f, g.map)) {
      rep.verified = false;
      rep.failures.push_back("generator " + g.name + " is not a chain endomorphism");
    }
  if (!rep.verified) return rep;
  for (const auto& rel : cert.relations) {
    RelationResult r;
    r.poly = rel.poly;
    ChainMap value = evaluate_relation(f, cert, rel.poly);
    if (rel.witness) {
      if (is_homotopy(f, f, value, *rel.witness)) {
        r.method = is_zero_map(value) ? RelationResult::Method::exact : RelationResult::Method::witness;
        r.witness = rel.witness;
      } else {
        r.detail = "supplied witness does not satisfy dh + hd = relation";
      }
    } else if (is_zero_map(value)) {
      r.method = RelationResult::Method::exact;
    } else if (auto h = solve_homotopy(f, f, value)) {
      r.method = RelationResult::Method::solved;
      r.witness = std::move(h);
    } else {
      r.detail = "relation is not null-homotopic";
    }
    if (!r.passed()) rep.verified = false;
    rep.relations.push_back(std::move(r));
  }
  return rep;
}

std::vector<ChainMap> lift_basis(const FreeComplex& f, const ActionCertificate& cert) {
  const ArtinAlgebra& a = *cert.phi.source();
  const ArtinAlgebra& b = *cert.phi.target();
  std::vector<std::pair<Matrix, ChainMap>> seeds;
  for (std::size_t i = 0; i < a.dim(); ++i) seeds.emplace_back(cert.phi.matrix().col(i), scalar_map(f, a.basis(i)));
  for (const auto& g : cert.generators) seeds.emplace_back(b.parse(g.name), g.map);
  Matrix span(b.field(), b.dim(), 0);
  std::vector<Matrix> elems;
  std::vector<ChainMap> maps;
  auto offer = [&](const Matrix& e, const ChainMap& m) {
    Matrix next = Matrix::hstack({span, e});
    if (rank(next) == span.cols()) return;
    span = next;
    elems.push_back(e);
    maps.push_back(m);
  };
  for (const auto& [e, m] : seeds) offer(e, m);
  for (std::size_t idx = 0; idx < elems.size() && span.cols() < b.dim(); ++idx)
    for (const auto& [e, m] : seeds) offer(b.mul(e, elems[idx]), mul_maps(m, maps[idx]));
  if (span.cols() < b.dim()) throw Error("generators and the image of A do not generate B");
  Matrix coeff = *inverse(span);
  std::vector<ChainMap> out;
  for (std::size_t l = 0; l < b.dim(); ++l) {
    ChainMap c = scaled_map(identity_map(f), f.algebra()->field().zero());
    for (std::size_t j = 0; j < maps.size(); ++j)
      if (!coeff.entry_is_zero(j, l)) c = freecrit::add(c, scaled_map(maps[j], coeff(j, l)));
    out.push_back(std::move(c));
  }
  return out;
}

InducedHomologyAction induced_action_on_homology(const FreeComplex& f, const ActionCertificate& cert) {
  InducedHomologyAction out;
  std::vector<std::string> names;
  for (const auto& g : cert.generators) names.push_back(g.name);
  for (std::size_t i = 0; i <= f.top(); ++i) {
    HomologyModule h = f.homology(i);
    if (h.window && !cert.generators.empty())
      throw TruncationInsufficient("induced actions of generators need an untruncated algebra");
    std::vector<Matrix> mats;
    for (const auto& g : cert.generators) mats.push_back(h.classify(g.map.f[i].flatten() * h.reps));
    out.generator_matrices.push_back(mats);
  }
  auto rep = check_H_action_only(f, cert.phi, names, out.generator_matrices);
  if (!rep.valid) {
    std::string msg = "induced action is not a B-module";
    if (!rep.failures.empty()) msg += ": " + rep.failures.front();
    throw RelationFailsOnHomology(msg);
  }
  out.modules = std::move(rep.modules);
  return out;
}

HActionReport check_H_action_only(const FreeComplex& f, const AlgebraMorphism& phi, const std::vector<std::string>& names,
                                  const std::vector<std::vector<Matrix>>& matrices) {
  HActionReport rep;
  for (std::size_t i = 0; i <= f.top(); ++i) {
    FiniteModule h = FiniteModule::from_homology(f.algebra(), f.homology(i));
    std::vector<std::pair<std::string, Matrix>> gens;
    for (std::size_t g = 0; g < names.size(); ++g) {
      if (i >= matrices.size() || g >= matrices[i].size()) throw DimensionMismatch("missing action matrix");
      gens.emplace_back(names[g], matrices[i][g]);
    }
    std::vector<std::string> fails;
    auto m = extend_action(h, phi, gens, fails);
    for (auto& s : fails) rep.failures.push_back("H_" + std::to_string(i) + ": " + s);
    if (m) {
      rep.modules.push_back(std::move(*m));
    } else {
      rep.valid = false;
    }
  }
  return rep;
}

}  // namespace freecrit
