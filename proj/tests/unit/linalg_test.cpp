#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "freecrit/errors.hpp"
#include "freecrit/linalg.hpp"
#include "support/common.hpp"

using namespace freecrit;
using namespace freecrit::testing;

namespace {

// Leibniz expansion; only for tiny matrices.
Scalar brute_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = m.field().zero();
  do {
    Scalar term = m.field().one();
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix gf2_vector(const Field& f, std::uint64_t v, std::size_t n) {
  Matrix out(f, n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if ((v >> i) & 1) out.set(i, 0, f.one());
  return out;
}

bool in_span(const Matrix& basis, const Matrix& v) {
  if (basis.cols() == 0) return v.is_zero();
  return rank(Matrix::hstack({basis, v})) == rank(basis);
}

}  // namespace

TEST(Field, PrimeArithmetic) {
  Field f = Field::prime(7);
  EXPECT_EQ(f.from_int(3) * f.from_int(5), f.from_int(1));
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
  EXPECT_EQ(f.from_int(3).inverse(), f.from_int(5));
  EXPECT_EQ(f.parse_scalar("1/3"), f.from_int(5));
  EXPECT_EQ(f.from_int(6).to_string(), "-1");
  EXPECT_THROW(Field::prime(91), std::invalid_argument);
}

TEST(Field, RationalArithmetic) {
  Field q = Field::rational();
  EXPECT_EQ(q.parse_scalar("3/6"), q.parse_scalar("1/2"));
  EXPECT_EQ((q.parse_scalar("2/3") * q.from_int(3)).to_string(), "2");
  EXPECT_EQ(q.parse_scalar("-4/6").to_string(), "-2/3");
  EXPECT_EQ(Field::parse("q"), q);
  EXPECT_EQ(Field::parse("gfp:13").characteristic(), 13u);
}

TEST(Field, BarrettAgreesWithDivision) {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {2ull, 101ull, 65521ull, 4294967291ull, 2305843009213693951ull}) {
    modular::Reducer red(p);
    for (int i = 0; i < 2000; ++i) {
      std::uint64_t a = rng() % p, b = rng() % p, c = rng() % p;
      EXPECT_EQ(red.mul(a, b), modular::mul(a, b, p));
      EXPECT_EQ(red.mul_add(c, a, b), modular::add(c, modular::mul(a, b, p), p));
    }
  }
}

TEST(Rref, TrivialCases) {
  Field f = Field::prime(101);
  Matrix id = Matrix::identity(f, 3);
  EXPECT_EQ(rref(id).reduced, id);
  EXPECT_EQ(rank(id), 3u);
  Matrix z(f, 2, 4);
  EXPECT_EQ(rref(z).reduced, z);
  EXPECT_EQ(rank(z), 0u);
}

TEST(Rref, SmallGF5MatrixAgainstDeterminant) {
  // det [[1,2],[3,1]] = 1 - 6 = -5 = 0 in GF(5), so the rank drops to 1.
  Field f = Field::prime(5);
  Matrix m = mat(f, {{1, 2}, {3, 1}});
  EXPECT_TRUE(brute_det(m).is_zero());
  EXPECT_EQ(rank(m), 1u);
}

TEST(Rref, RankMatchesDeterminantExhaustivelyOverGF5) {
  Field f = Field::prime(5);
  for (int code = 0; code < 625; ++code) {
    Matrix m = mat(f, {{code % 5, code / 5 % 5}, {code / 25 % 5, code / 125}});
    EXPECT_EQ(rank(m) == 2, !brute_det(m).is_zero()) << m.to_string();
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 3 + i % 2;
    Matrix m = random_matrix(f, n, n, rng, 20);
    EXPECT_EQ(rank(m) == n, !brute_det(m).is_zero()) << m.to_string();
    EXPECT_EQ(inverse(m).has_value(), rank(m) == n);
  }
}

TEST_P(BothFields, RrefIsIdempotentAndKernelIsComplete) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    Matrix m = random_matrix(field(), 1 + rng() % 6, 1 + rng() % 8, rng);
    RrefResult r = rref(m);
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    Matrix k = kernel_basis(m);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(r.rank() + k.cols(), m.cols());
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST_P(BothFields, KernelExamples) {
  Field f = field();
  EXPECT_EQ(kernel_basis(Matrix::identity(f, 3)).cols(), 0u);
  EXPECT_EQ(kernel_basis(Matrix(f, 3, 3)), Matrix::identity(f, 3));
  Matrix k = kernel_basis(mat(f, {{1, 1}}));
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k, mat(f, {{-1}, {1}}));
}

TEST_P(BothFields, SolveFindsPlantedSolutions) {
  Field f = field();
  std::mt19937_64 rng(17);
  EXPECT_EQ(*solve(Matrix::identity(f, 3), mat(f, {{1}, {2}, {3}})), mat(f, {{1}, {2}, {3}}));
  EXPECT_FALSE(solve(Matrix(f, 2, 2), mat(f, {{1}, {0}})).has_value());
  for (int i = 0; i < 50; ++i) {
    Matrix m = random_matrix(f, 5, 7, rng);
    Matrix x = random_matrix(f, 7, 2, rng, 0);
    Matrix b = m * x;
    auto got = solve(m, b);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(m * *got, b);
  }
}

TEST_P(BothFields, InverseRoundTrip) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    Matrix g = random_invertible(field(), 1 + rng() % 6, rng);
    auto inv = inverse(g);
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE((g * *inv).is_identity());
    EXPECT_TRUE((*inv * g).is_identity());
  }
}

TEST_P(BothFields, LeftSolverMatchesSolve) {
  Field f = field();
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    Matrix m = random_matrix(f, 2 + rng() % 6, 1 + rng() % 6, rng, 50);
    LeftSolver ls(m);
    EXPECT_EQ(ls.rank(), rank(m));
    Matrix b = random_matrix(f, m.rows(), 3, rng);
    Matrix cons = ls.constraints(b);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      auto direct = solve(m, b.col(c));
      EXPECT_EQ(direct.has_value(), cons.col(c).is_zero());
      if (direct) EXPECT_EQ(m * ls.particular(b.col(c)), b.col(c));
    }
  }
}

TEST_P(BothFields, SplitSystemTrivialCases) {
  Field f = field();
  EXPECT_EQ(SplitSystem(Matrix(f, 2, 5), 3).projection().cols(), 3u);
  EXPECT_EQ(SplitSystem(Matrix::identity(f, 4), 2).projection().cols(), 0u);
}

TEST(SplitSystem, ProjectionMatchesExhaustiveKernelOverGF2) {
  Field f = Field::prime(2);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t cols = 3 + rng() % 6, rows = 1 + rng() % 5, split = 1 + rng() % (cols - 1);
    // Two coupled blocks: a-columns and h-columns.
    Matrix m = random_matrix(f, rows, cols, rng, 40);
    SplitSystem sys(m, split);
    std::set<std::uint64_t> projections;
    for (std::uint64_t v = 0; v < (1ull << cols); ++v)
      if ((m * gf2_vector(f, v, cols)).is_zero()) projections.insert(v & ((1ull << split) - 1));
    EXPECT_EQ(projections.size(), 1ull << sys.projection().cols());
    for (auto a : projections) {
      Matrix av = gf2_vector(f, a, split);
      EXPECT_TRUE(in_span(sys.projection(), av));
    }
    for (std::size_t c = 0; c < sys.projection().cols(); ++c) {
      Matrix a = sys.projection().col(c);
      Matrix full = Matrix::vstack({a, sys.complete(a)});
      EXPECT_TRUE((m * full).is_zero());
    }
  }
}

TEST(Matrix, RejectsMixedFields) {
  Matrix a = Matrix::identity(Field::prime(101), 2);
  Matrix b = Matrix::identity(Field::rational(), 2);
  EXPECT_THROW(a * b, FieldMismatch);
  EXPECT_THROW(a * Matrix::identity(Field::prime(101), 3), DimensionMismatch);
}

FREECRIT_BOTH_FIELDS(BothFields);
