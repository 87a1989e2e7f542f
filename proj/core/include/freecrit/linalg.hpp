#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "freecrit/matrix.hpp"

namespace freecrit {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row-echelon form; leftmost pivot, first nonzero row below.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of the null space, one per free column in order.
Matrix kernel_basis(const Matrix& m);

/// Particular solution of m·x = b (b may have several columns), free
/// variables set to zero. Empty when some column of b is not in the image.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Columns of m at its pivot positions: a basis of the column space.
Matrix image_basis(const Matrix& m);

/// Basis of the projection of ker(m) onto the first `split` coordinates.
Matrix solve_and_project(const Matrix& m, std::size_t split);

/// The homogeneous system m·(a, h) = 0 with a the first `split` unknowns.
/// Keeps the echelon form so that any a in the projection can be completed
/// to a full solution.
class SplitSystem {
 public:
  SplitSystem(const Matrix& m, std::size_t split);

  /// split x d matrix whose columns span the admissible a.
  const Matrix& projection() const noexcept { return projection_; }
  /// h with m·(a, h) = 0, free variables zero. Requires a in the projection.
  Matrix complete(const Matrix& a) const;

 private:
  std::size_t split_;
  std::size_t rest_;
  Matrix echelon_;  // rows of [m_rest | m_first], forward reduced
  std::vector<std::size_t> pivots_;
  Matrix projection_;
};

/// Factorisation of a fixed m for many right-hand sides of m·x = b.
class LeftSolver {
 public:
  explicit LeftSolver(const Matrix& m);

  std::size_t rank() const noexcept { return pivots_.size(); }
  /// The row operations applied to b. Rows past rank() are linear
  /// conditions: b lies in the column space iff they vanish.
  Matrix reduce(const Matrix& b) const;
  Matrix constraints(const Matrix& b) const;
  /// Particular solution, free variables zero. Assumes constraints(b) = 0.
  Matrix particular(const Matrix& b) const { return particular_reduced(reduce(b)); }
  Matrix particular_reduced(const Matrix& reduced) const;

 private:
  std::size_t unknowns_;
  Matrix echelon_;    // the pivot rows of m
  Matrix transform_;  // row operations: transform_·m is echelon over zero rows
  std::vector<std::size_t> pivots_;
};

namespace detail {
/// In-place forward elimination restricted to pivot columns < limit. Pivot
/// rows are scaled to 1; rows below the rank are zero in columns < limit.
std::vector<std::size_t> forward_eliminate(Matrix& m, std::size_t limit);
/// Clears the entries above each pivot.
void back_reduce(Matrix& m, const std::vector<std::size_t>& pivots);
}  // namespace detail

}  // namespace freecrit
