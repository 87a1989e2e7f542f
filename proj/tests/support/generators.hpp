#pragma once

// Hand-rolled generators shared by the property tests and the acceptance
// suite. Everything is driven by an explicit std::mt19937_64 so that runs are
// reproducible.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "freecrit/complex.hpp"
#include "freecrit/koszul.hpp"
#include "freecrit/linalg.hpp"
#include "freecrit/module.hpp"
#include "freecrit/monomial.hpp"
#include "freecrit/weyl.hpp"

namespace freecrit::testing {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> ideal;
  int top;  // m^(top+1) = 0
};

/// Artinian monomial algebras of embedding dimension >= 3.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c{
      {"k[x,y,z]/(x,y,z)^2", {"x", "y", "z"}, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}, 1},
      {"k[x,y,z,w]/(x,y,z,w)^2",
       {"x", "y", "z", "w"},
       {"x^2", "x*y", "x*z", "x*w", "y^2", "y*z", "y*w", "z^2", "z*w", "w^2"},
       1},
      {"k[x,y,z]/(x^2,y^2,z^2,xy,xz)", {"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y", "x*z"}, 2},
      {"k[x,y,z]/(x^2,y^2,z^2,xy)", {"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y"}, 2},
      {"k[x,y,z]/(x^2,y^2,z^2)", {"x", "y", "z"}, {"x^2", "y^2", "z^2"}, 3},
  };
  return c;
}

inline GradedMonomialAlgebra presentation(const CatalogEntry& e) {
  return GradedMonomialAlgebra::parse(e.vars, e.ideal, e.top);
}

inline AlgebraPtr make_algebra(const CatalogEntry& e, const Field& field) {
  return std::make_shared<const ArtinAlgebra>(presentation(e).artinize(field));
}

inline Matrix random_element(const ArtinAlgebra& a, std::mt19937_64& rng, bool in_m = false) {
  Matrix v(a.field(), a.dim(), 1);
  for (std::size_t i = in_m ? 1 : 0; i < a.dim(); ++i) v.set(i, 0, random_scalar(a.field(), rng));
  return v;
}

/// Invertible matrix over A: random invertible residue plus random entries in m.
inline AMatrix random_unit_matrix(const AlgebraPtr& a, std::size_t n, std::mt19937_64& rng) {
  AMatrix g = AMatrix::constant(a, random_invertible(a->field(), n, rng));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g.set(r, c, g.entry(r, c) + random_element(*a, rng, true));
  return g;
}

/// A degreewise invertible family of matrices (not a chain map).
inline ChainMap random_automorphism(const FreeComplex& f, std::mt19937_64& rng) {
  ChainMap g;
  for (std::size_t i = 0; i <= f.top(); ++i) g.f.push_back(random_unit_matrix(f.algebra(), f.rank(i), rng));
  return g;
}

/// K(x_1..x_p)^b on the first p variables.
inline FreeComplex koszul_power(const AlgebraPtr& a, const std::vector<std::string>& vars, std::size_t p,
                                std::size_t b) {
  std::vector<Matrix> xs;
  for (std::size_t i = 0; i < p; ++i) xs.push_back(a->parse(vars[i]));
  FreeComplex k = koszul(a, xs);
  std::vector<FreeComplex> parts(b, k);
  return direct_sum(parts);
}

/// M with the action conjugated by a random change of basis.
inline FiniteModule random_basis_change(const FiniteModule& m, std::mt19937_64& rng) {
  Matrix g = random_invertible(m.algebra()->field(), m.dim(), rng);
  Matrix gi = *inverse(g);
  std::vector<Matrix> action;
  for (const auto& x : m.action()) action.push_back(g * x * gi);
  return FiniteModule(m.algebra(), m.dim(), std::move(action));
}

/// A proper nonzero ideal: generated by one or two random elements of m.
inline Matrix random_proper_ideal(const ArtinAlgebra& a, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Matrix> gens{random_element(a, rng, true)};
    if (rng() % 2) gens.push_back(random_element(a, rng, true));
    Matrix span = a.ideal_span(gens);
    if (span.cols() > 0) return span;
  }
}

}  // namespace freecrit::testing
