#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "freecrit/complex.hpp"
#include "freecrit/linalg.hpp"

namespace freecrit {

bool is_chain_map(const FreeComplex& f, const FreeComplex& g, const ChainMap& map);

/// (d h + h d)_i = d^G_{i+1} h_i + h_{i-1} d^F_i.
AMatrix dh_plus_hd(const FreeComplex& f, const FreeComplex& g, const Homotopy& h, std::size_t i);
bool is_homotopy(const FreeComplex& f, const FreeComplex& g, const ChainMap& target, const Homotopy& h);

/// The k-linear map h -> dh + hd between flattened coordinates. Unknowns and
/// equations are the stacked entries of h_i and of (dh + hd)_i, degree by
/// degree, column by column.
class HomotopySystem {
 public:
  HomotopySystem(const FreeComplex& f, const FreeComplex& g);

  const Matrix& matrix() const noexcept { return d_; }
  std::size_t unknowns() const noexcept { return d_.cols(); }
  std::size_t equations() const noexcept { return d_.rows(); }

  Matrix pack(const ChainMap& map) const;
  Homotopy unpack(const Matrix& h) const;
  /// Equation coordinates of a * identity (needs F = G).
  Matrix scalar_columns() const;

 private:
  const FreeComplex& f_;
  const FreeComplex& g_;
  std::vector<std::size_t> eq_off_, h_off_;
  Matrix d_;
};

/// Some h with dh + hd = map, or empty if none exists.
std::optional<Homotopy> solve_homotopy(const FreeComplex& f, const FreeComplex& g, const ChainMap& map);
bool homotopy_class_eq(const FreeComplex& f, const FreeComplex& g, const ChainMap& a, const ChainMap& b);

/// {a in A : a * id_F is null-homotopic}, with one witness per basis column.
struct DerivedAnnihilator {
  Matrix basis;  // dim A x r
  std::vector<Homotopy> witnesses;
  bool is_ideal = true;
  std::optional<int> window;  // set for truncated graded algebras

  bool contains(const Matrix& a) const;
};

DerivedAnnihilator derived_annihilator(const FreeComplex& f);

/// a * id_F for a in A.
ChainMap scalar_map(const FreeComplex& f, const Matrix& a);
ChainMap add(const ChainMap& a, const ChainMap& b);
ChainMap sub(const ChainMap& a, const ChainMap& b);
Homotopy add(const Homotopy& a, const Homotopy& b);
Homotopy scaled(const Homotopy& h, const Scalar& s);

}  // namespace freecrit
