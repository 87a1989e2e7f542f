#include "freecrit/monomial.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "freecrit/errors.hpp"
#include "freecrit/expr.hpp"

namespace freecrit {

namespace {

int degree(const Exponent& e) {
  int d = 0;
  for (auto v : e) d += static_cast<int>(v);
  return d;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// All exponents of total degree d in n variables, lexicographically descending.
void compositions(std::size_t n, int d, std::size_t pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == n) {
    cur[pos] = static_cast<unsigned>(d);
    out.push_back(cur);
    return;
  }
  for (int v = d; v >= 0; --v) {
    cur[pos] = static_cast<unsigned>(v);
    compositions(n, d - v, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

struct MonomialContext {
  using value_type = std::optional<Exponent>;  // empty = the number 1
  const std::vector<std::string>& vars;

  value_type number(const std::string& lit) const {
    if (lit != "1") throw ParseError("monomial generators must have coefficient 1");
    return std::nullopt;
  }
  value_type ident(const std::string& name, std::size_t pos) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) {
        Exponent e(vars.size(), 0);
        e[i] = 1;
        return e;
      }
    throw ParseError("unknown variable '" + name + "'", pos);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    if (!a) return b;
    if (!b) return a;
    Exponent e = *a;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += (*b)[i];
    return e;
  }
  value_type pow(const value_type& a, unsigned n) const {
    value_type r;
    for (unsigned i = 0; i < n; ++i) r = mul(r, a);
    return r;
  }
  [[noreturn]] value_type add(const value_type&, const value_type&) const { not_monomial(); }
  [[noreturn]] value_type sub(const value_type&, const value_type&) const { not_monomial(); }
  [[noreturn]] value_type neg(const value_type&) const { not_monomial(); }
  [[noreturn]] value_type div(const value_type&, const std::string&) const { not_monomial(); }
  [[noreturn]] static void not_monomial() { throw ParseError("ideal generator is not a monomial"); }
};

}  // namespace

GradedMonomialAlgebra::GradedMonomialAlgebra(std::vector<std::string> vars, std::vector<Exponent> ideal,
                                             int truncation)
    : vars_(std::move(vars)), ideal_(std::move(ideal)), truncation_(truncation) {
  if (truncation_ < 0) throw DimensionMismatch("truncation degree must be nonnegative");
  for (const auto& g : ideal_) {
    if (g.size() != vars_.size()) throw DimensionMismatch("monomial has wrong number of exponents");
    if (degree(g) == 0) throw NotLocal("the unit ideal does not define a local ring");
  }
}

GradedMonomialAlgebra GradedMonomialAlgebra::parse(std::vector<std::string> vars,
                                                   const std::vector<std::string>& ideal, int truncation) {
  std::vector<Exponent> gens;
  MonomialContext ctx{vars};
  for (const auto& s : ideal) {
    auto e = evaluate(parse_expr(s), ctx);
    if (!e) throw NotLocal("the unit ideal does not define a local ring");
    gens.push_back(*e);
  }
  return GradedMonomialAlgebra(std::move(vars), std::move(gens), truncation);
}

bool GradedMonomialAlgebra::is_standard(const Exponent& e) const {
  return std::none_of(ideal_.begin(), ideal_.end(), [&](const Exponent& g) { return divides(g, e); });
}

std::vector<Exponent> GradedMonomialAlgebra::standard_monomials(int d) const {
  std::vector<Exponent> all, out;
  if (vars_.empty()) {
    if (d == 0) out.push_back({});
    return out;
  }
  Exponent cur(vars_.size(), 0);
  compositions(vars_.size(), d, 0, cur, all);
  for (auto& e : all)
    if (is_standard(e)) out.push_back(std::move(e));
  return out;
}

std::string GradedMonomialAlgebra::label(const Exponent& e) const {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::string> GradedMonomialAlgebra::ideal_strings() const {
  std::vector<std::string> out;
  for (const auto& g : ideal_) out.push_back(label(g));
  return out;
}

std::size_t GradedMonomialAlgebra::krull_dim() const {
  const std::size_t n = vars_.size();
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    bool ok = true;
    for (const auto& g : ideal_) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > 0 && !(mask >> i & 1)) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

ArtinAlgebra GradedMonomialAlgebra::artinize(const Field& field) const {
  for (int d = 0; d <= truncation_ + 1; ++d)
    if (standard_monomials(d).empty()) return build(field, d - 1, false);
  throw NotArtinian("standard monomials survive in every degree up to " + std::to_string(truncation_ + 1));
}

ArtinAlgebra GradedMonomialAlgebra::truncated_model(const Field& field) const {
  bool truncated = !standard_monomials(truncation_ + 1).empty();
  return build(field, truncation_, truncated);
}

ArtinAlgebra GradedMonomialAlgebra::build(const Field& field, int top, bool truncated) const {
  std::vector<Exponent> basis;
  std::vector<int> degrees;
  for (int d = 0; d <= top; ++d)
    for (auto& e : standard_monomials(d)) {
      basis.push_back(std::move(e));
      degrees.push_back(d);
    }
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  const std::size_t n = basis.size();
  std::vector<Matrix> mult(n, Matrix(field, n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponent prod = basis[i];
      for (std::size_t v = 0; v < prod.size(); ++v) prod[v] += basis[j][v];
      auto it = index.find(prod);
      if (it != index.end()) mult[i].set(it->second, j, field.one());
    }
  std::vector<std::string> labels;
  for (const auto& e : basis) labels.push_back(label(e));
  ArtinAlgebra alg(field, std::move(labels), std::move(mult), Grading{std::move(degrees), top, truncated});
  std::map<std::string, Matrix> names;
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    Exponent e(vars_.size(), 0);
    e[v] = 1;
    auto it = index.find(e);
    names.emplace(vars_[v], it != index.end() ? alg.basis(it->second) : alg.zero());
  }
  alg.set_names(std::move(names));
  return alg;
}

}  // namespace freecrit
