#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "freecrit/homotopy.hpp"

namespace freecrit {

/// Graded representation V_0 + ... + V_top of the skew Weyl algebra over a
/// field: s_i raises degree by one, t_i lowers it.
struct WModuleRep {
  Field field = Field::prime(101);
  std::size_t p = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> S;  // S[i][j] : V_j -> V_{j+1}, j < top
  std::vector<std::vector<Matrix>> T;  // T[i][j] : V_{j+1} -> V_j, j < top

  std::size_t top() const noexcept { return dims.empty() ? 0 : dims.size() - 1; }
  std::size_t total_dim() const;
  /// Offset of V_j inside the total space.
  std::size_t offset(std::size_t j) const;
  /// s_i and t_i on the total space.
  Matrix s(std::size_t i) const;
  Matrix t(std::size_t i) const;
  /// Shape check only.
  std::vector<std::string> shape_errors() const;
};

struct WeylReport {
  bool passed = true;
  std::vector<std::string> failures;
};

/// s_i t_j + t_j s_i = delta_ij in every degree. Extended mode also checks
/// that s_i^2 and s_i s_j + s_j s_i commute with every t_k (and symmetrically),
/// and that they vanish, as they must on a bounded module.
WeylReport check_weyl_relations(const WModuleRep& rep, bool extended = false);

/// t_op(I) s_I = sum_J (-1)^|J| s_J t_op(J) and s_I t_op(I) = sum_J (-1)^|J|
/// t_op(J) s_J, J running over subsequences of I (indices from 0).
bool check_lemmaA1(const WModuleRep& rep, const std::vector<std::size_t>& subset);

/// Exterior algebra on s_1..s_p tensored with a space of dimension dim0.
WModuleRep exterior_model(const Field& field, std::size_t p, std::size_t dim0);

/// g_{j+1} S g_j^-1 and g_{j-1} T g_j^-1 for random invertible g_j.
WModuleRep random_graded_conjugate(const WModuleRep& rep, std::mt19937_64& rng);

struct StructureMap {
  bool iso = false;
  bool nonvanishing = false;       // V_i != 0 for 0 <= i <= p
  bool dimension_law = false;      // dim V_i = C(p, i) dim V_0
  std::vector<Matrix> phi;         // degree n: columns s_I f over |I| = n, f in a basis of V_0
  std::optional<std::size_t> failing_degree;
};

/// The map E (x) V_0 -> V. Throws NotIso when V_0 = 0 or V_i != 0 for i > p.
StructureMap structure_map(const WModuleRep& rep);

/// Reduction mod m of a minimal complex with s_i = h_i and t_j = d_j, where
/// d = sum_j x_j d_j over the adapted basis x_1..x_n of m/m^2 and
/// x_i id = d h_i + h_i d for i <= p (up to terms in the other x_j).
WModuleRep rep_from_homotopies(const FreeComplex& f, const std::vector<Matrix>& adapted,
                               const std::vector<Homotopy>& h);

struct KoszulLift {
  FreeComplex source;  // K(x) (x) F_0, basis e_I (x) f_c with I major
  ChainMap phi;        // e_I (x) f -> h_I(f)
};

/// Throws NotChainMap or NotInvertibleModM.
KoszulLift koszul_lift(const FreeComplex& f, const std::vector<Matrix>& x, const std::vector<Homotopy>& h);

/// Random element of GL_n(k); entries are small integers over Q.
Matrix random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng);
Scalar random_scalar(const Field& field, std::mt19937_64& rng);

}  // namespace freecrit
