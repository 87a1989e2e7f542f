#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "freecrit/complex.hpp"

namespace freecrit {

/// Increasing index sequences of length i in [0, c), lexicographic.
std::vector<std::vector<std::size_t>> monotone_subsets(std::size_t c, std::size_t i);
/// Position of I among monotone_subsets(c, |I|).
std::size_t subset_index(std::size_t c, const std::vector<std::size_t>& subset);

/// K(x) with basis e_I and d(e_I) = sum_j (-1)^j x_{I_j} e_{I - I_j} (j from 0).
FreeComplex koszul(AlgebraPtr alg, const std::vector<Matrix>& x);

/// Left multiplication by e_i on K(x); satisfies d s + s d = x_i.
Homotopy koszul_contraction(const FreeComplex& k, std::size_t c, std::size_t i);

}  // namespace freecrit
