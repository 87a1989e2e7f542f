#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "freecrit/algebra.hpp"

namespace freecrit {

using Exponent = std::vector<unsigned>;

/// k[vars]/(monomials), standard grading, with all computations confined to
/// degrees <= truncation.
class GradedMonomialAlgebra {
 public:
  GradedMonomialAlgebra(std::vector<std::string> vars, std::vector<Exponent> ideal, int truncation);
  /// Generators as strings such as "x^2" or "x*y".
  static GradedMonomialAlgebra parse(std::vector<std::string> vars, const std::vector<std::string>& ideal,
                                     int truncation);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<Exponent>& ideal() const noexcept { return ideal_; }
  int truncation() const noexcept { return truncation_; }

  bool is_standard(const Exponent& e) const;
  /// Standard monomials of degree d, lexicographically descending.
  std::vector<Exponent> standard_monomials(int degree) const;
  std::size_t hilbert(int degree) const { return standard_monomials(degree).size(); }
  std::string label(const Exponent& e) const;
  std::vector<std::string> ideal_strings() const;

  /// Krull dimension: the largest set of variables whose monomials avoid the ideal.
  std::size_t krull_dim() const;

  /// Exact finite-dimensional model; NotArtinian if every degree <= D has
  /// standard monomials.
  ArtinAlgebra artinize(const Field& field) const;
  /// A/m^(D+1), graded; marked truncated unless the ring is already zero in
  /// degree D+1.
  ArtinAlgebra truncated_model(const Field& field) const;

 private:
  ArtinAlgebra build(const Field& field, int top, bool truncated) const;

  std::vector<std::string> vars_;
  std::vector<Exponent> ideal_;
  int truncation_;
};

}  // namespace freecrit
