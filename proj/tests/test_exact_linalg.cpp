#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "hopfint/exact_linalg.hpp"
#include "hopfint/matrix.hpp"
#include "hopfint/scalar.hpp"
#include "test_util.hpp"

using namespace hopfint;
using hopfint::test_support::Gen;

namespace {

// Leibniz expansion; independent of the Bareiss code path.
Scalar leibniz_det(const Matrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    Scalar term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Scalar, ParseAndFormat) {
  EXPECT_EQ(parse_scalar("6/4"), make_scalar(3, 2));
  EXPECT_EQ(parse_scalar("-7"), Scalar(-7));
  EXPECT_EQ(parse_scalar("+3/9"), make_scalar(1, 3));
  EXPECT_EQ(format_scalar(Scalar(0)), "0/1");
  EXPECT_EQ(format_scalar(make_scalar(-4, 6)), "-2/3");
  EXPECT_EQ(pretty_scalar(Scalar(5)), "5");
  EXPECT_EQ(pretty_scalar(make_scalar(7, 2)), "7/2");
}

TEST(Scalar, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "1/-2", " 1", "--1", "1/2/3"})
    EXPECT_THROW(parse_scalar(bad), Error) << bad;
  EXPECT_THROW(make_scalar(1, 0), Error);
}

TEST(Scalar, FormatParseRoundTrip) {
  Gen g(1);
  for (int i = 0; i < 200; ++i) {
    const Scalar s = g.scalar();
    EXPECT_EQ(parse_scalar(format_scalar(s)), s);
  }
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), Error);
  EXPECT_THROW(Matrix(2, 2) + Matrix(3, 3), Error);
  EXPECT_THROW(Matrix::identity(2).apply(Vector(3)), Error);
}

TEST(Matrix, KronMixedProduct) {
  Gen g(2);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = g.matrix(2, 3), b = g.matrix(2, 2), c = g.matrix(3, 2), d = g.matrix(2, 3);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(Matrix, EmbedIsKronWithIdentities) {
  Gen g(3);
  const Matrix m = g.matrix(4, 4);
  EXPECT_EQ(embed(2, m, 3), kron(kron(Matrix::identity(2), m), Matrix::identity(3)));
  EXPECT_EQ(embed(1, m, 1), m);
}

TEST(Matrix, KronIndexConvention) {
  // (a (x) b)(e_i (x) e_j) has flat index i * dim(b) + j
  const Matrix a{{0, 1}, {1, 0}};
  const Matrix b = Matrix::identity(3);
  const Matrix k = kron(a, b);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(k(1 * 3 + j, 0 * 3 + j), 1);
}

TEST(ExactLinalg, RankPlusNullity) {
  Gen g(4);
  for (int i = 0; i < 60; ++i) {
    const std::size_t rows = g.integer(1, 7), cols = g.integer(1, 7);
    const Matrix m = i % 2 ? g.matrix(rows, cols) : g.low_rank(rows, cols, g.integer(1, 3));
    const auto kernel = kernel_basis(m);
    EXPECT_EQ(rank(m) + kernel.size(), cols);
    for (const auto& v : kernel) {
      for (const auto& x : m.apply(v)) EXPECT_EQ(sgn(x), 0);
    }
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(ExactLinalg, KernelVectorsIndependent) {
  Gen g(5);
  const Matrix m = g.low_rank(3, 8, 2);
  const auto kernel = kernel_basis(m);
  ASSERT_EQ(kernel.size(), 6u);
  EXPECT_EQ(rank(Matrix::from_columns(8, kernel)), 6u);
}

TEST(ExactLinalg, LowRankProducts) {
  Gen g(6);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_LE(rank(g.low_rank(6, 6, k)), k);
  EXPECT_EQ(rank(Matrix(3, 4)), 0u);
  EXPECT_EQ(rank(Matrix::identity(5)), 5u);
}

TEST(ExactLinalg, DeterminantMatchesLeibniz) {
  Gen g(7);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = g.integer(1, 5);
    const Matrix m = g.matrix(n, n);
    EXPECT_EQ(determinant(m), leibniz_det(m));
  }
  EXPECT_THROW(determinant(Matrix(2, 3)), Error);
}

TEST(ExactLinalg, InverseRoundTrip) {
  Gen g(8);
  int invertible = 0;
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = g.integer(1, 6);
    const Matrix m = g.matrix(n, n);
    const auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), sgn(determinant(m)) != 0);
    if (inv) {
      ++invertible;
      EXPECT_EQ(m * *inv, Matrix::identity(n));
      EXPECT_EQ(*inv * m, Matrix::identity(n));
    }
  }
  EXPECT_GT(invertible, 10);
  EXPECT_FALSE(inverse(g.low_rank(4, 4, 2)).has_value());
}

TEST(ExactLinalg, SolveConsistentAndInconsistent) {
  Gen g(9);
  for (int i = 0; i < 40; ++i) {
    const Matrix a = g.low_rank(5, 4, 3);
    Vector x0(4);
    for (auto& x : x0) x = g.scalar();
    const Vector b = a.apply(x0);
    const auto x = solve(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a.apply(*x), b);
  }
  // x = 1 and x = 2
  const Matrix a{{1}, {1}};
  EXPECT_FALSE(solve(a, Vector{1, 2}).has_value());
}

TEST(ExactLinalg, ColumnSpanRank) {
  const Matrix e11{{1, 0}, {0, 0}};
  const Matrix e12{{0, 1}, {0, 0}};
  const Matrix e21{{0, 0}, {1, 0}};
  const std::vector<Matrix> ms{e11, e12};
  EXPECT_EQ(column_span_rank(ms), 1u);
  const std::vector<Matrix> ms2{e11, e21};
  EXPECT_EQ(column_span_rank(ms2), 2u);
}

TEST(ExactLinalg, RowEchelonIncremental) {
  RowEchelon ech(3);
  EXPECT_TRUE(ech.add_row(Vector{1, 2, 3}));
  EXPECT_FALSE(ech.add_row(Vector{2, 4, 6}));
  EXPECT_TRUE(ech.add_row(Vector{0, 1, make_scalar(1, 2)}));
  EXPECT_FALSE(ech.add_row(Vector{1, 3, make_scalar(7, 2)}));
  EXPECT_EQ(ech.rank(), 2u);
  EXPECT_FALSE(ech.full());
  EXPECT_EQ(ech.kernel_basis().size(), 1u);
  EXPECT_TRUE(ech.add_row(Vector{0, 0, 5}));
  EXPECT_TRUE(ech.full());
}

TEST(ExactLinalg, LargeEntriesStayExact) {
  // Hilbert matrices are famously ill-conditioned; exact arithmetic does not care.
  const std::size_t n = 8;
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = make_scalar(1, static_cast<long>(i + j + 1));
  const auto inv = inverse(h);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(h * *inv, Matrix::identity(n));
  EXPECT_EQ(rank(h), n);
}
