#include <gtest/gtest.h>

#include <vector>

#include "hopfint/exact_linalg.hpp"
#include "hopfint/fusion.hpp"
#include "hopfint/hecke_symmetry.hpp"
#include "hopfint/quantum_algebra.hpp"

using namespace hopfint;

namespace {

// Dimension of the unital algebra generated by the braid operators, found by
// closing the span of words under right multiplication by generators.
std::size_t generated_algebra_dim(const HeckeSymmetry& h, unsigned n) {
  const auto gens = detail::braid_generators(h, n);
  const std::size_t dd = detail::ipow(h.dim, n);
  RowEchelon ech(dd * dd);
  std::vector<Matrix> frontier{Matrix::identity(dd)};
  ech.add_row(frontier.front().data());
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        Matrix wg = w * g;
        if (ech.add_row(wg.data())) next.push_back(std::move(wg));
      }
    frontier = std::move(next);
  }
  return ech.rank();
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(QuantumAlgebra, ManinPoincareSeries) {
  for (const Scalar& q : {Scalar(3), Scalar(5), make_scalar(7, 2), Scalar(1)}) {
    const auto h = manin_standard(q);
    for (unsigned n = 0; n <= 5; ++n) {
      const std::size_t expected = n == 0 ? 1 : 2;
      EXPECT_EQ(sym_dim(h, n), expected) << q << " n=" << n;
      EXPECT_EQ(ext_dim(h, n), expected) << q << " n=" << n;
    }
  }
}

TEST(QuantumAlgebra, FlipGivesClassicalAlgebras) {
  const auto h = flip(2);
  const std::vector<std::size_t> sym{1, 2, 3, 4, 5};
  const std::vector<std::size_t> ext{1, 2, 1, 0, 0};
  EXPECT_EQ(poincare_table(h, AlgebraKind::symmetric, 4).dims, sym);
  EXPECT_EQ(poincare_table(h, AlgebraKind::antisymmetric, 4).dims, ext);
  // d = 3: binomial coefficients
  const auto h3 = flip(3);
  for (unsigned n = 0; n <= 3; ++n) {
    EXPECT_EQ(ext_dim(h3, n), binom(3, n));
    EXPECT_EQ(sym_dim(h3, n), binom(n + 2, 2));
  }
}

TEST(QuantumAlgebra, SuperFlipDimensions) {
  const auto h = super_flip({0, 1});
  const auto t = poincare_table(h, AlgebraKind::antisymmetric, 4);
  EXPECT_EQ(t.dims, (std::vector<std::size_t>{1, 2, 2, 2, 2}));
  ASSERT_TRUE(t.fitted_a && t.fitted_b);
  EXPECT_EQ(*t.fitted_a, 1);
  EXPECT_EQ(*t.fitted_b, 1);
}

TEST(QuantumAlgebra, FitOnlyWhenGeometric) {
  const auto t = poincare_table(flip(2), AlgebraKind::antisymmetric, 4);
  EXPECT_FALSE(t.fitted_a.has_value());
  const auto s = poincare_table(flip(2), AlgebraKind::symmetric, 4);
  EXPECT_FALSE(s.fitted_b.has_value());
}

TEST(QuantumAlgebra, Birank11Detection) {
  EXPECT_TRUE(detect_birank11(manin_standard(3), 6).birank11);
  EXPECT_TRUE(detect_birank11(super_flip({0, 1}), 4).birank11);
  EXPECT_FALSE(detect_birank11(flip(2), 4).birank11);
  EXPECT_THROW(detect_birank11(manin_standard(3), 2), Error);
}

TEST(QuantumAlgebra, Birank11GenericCheck) {
  const HeckeFamily family = [](const Scalar& q) { return manin_standard(q); };
  const auto res = detect_birank11(manin_standard(3), 4, &family);
  EXPECT_TRUE(res.generic_check_performed);
  EXPECT_TRUE(res.generic_check_agreed);
  ASSERT_TRUE(res.second_q.has_value());
  EXPECT_EQ(*res.second_q, 4);
  EXPECT_TRUE(res.birank11);
  // q' = q + 1 would be 0; the check must skip past it.
  const auto skip = detect_birank11(manin_standard(-2), 3, &family);
  EXPECT_EQ(*skip.second_q, 1);
}

TEST(QuantumAlgebra, RequiresHeckeRelation) {
  const HeckeSymmetry id(2, 3, Matrix::identity(4));
  EXPECT_THROW(sym_dim(id, 2), Error);
  EXPECT_THROW(ext_dim(id, 2), Error);
}

TEST(QuantumAlgebra, DegreeCaps) {
  const auto h = manin_standard(3);
  EXPECT_THROW(ext_dim(h, 7), Error);
  QuantumAlgebraLimits lim;
  lim.poincare_degree_cap = 2;
  EXPECT_THROW(sym_dim(h, 3, lim), Error);
  EXPECT_EQ(sym_dim(h, 2, lim), 2u);
  EXPECT_THROW(commutant_dim(h, 5), Error);
  EXPECT_THROW(commutant_dim(h, 0), Error);
}

TEST(QuantumAlgebra, CommutantSmallDegrees) {
  const auto h = manin_standard(3);
  EXPECT_EQ(commutant_dim(h, 1), 1u);
  EXPECT_EQ(commutant_dim(h, 2), 2u);
  EXPECT_EQ(commutant_dim(h, 3), 6u);
}

TEST(QuantumAlgebra, CommutantMatchesGeneratedAlgebra) {
  for (const Scalar& q : {Scalar(3), make_scalar(7, 2)}) {
    const auto h = manin_standard(q);
    for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(commutant_dim(h, n), generated_algebra_dim(h, n)) << q << " " << n;
  }
  // classical flip: group algebra image of S_3 on (k^2)^{(x)3} has dim 1 + 4 = 5
  EXPECT_EQ(commutant_dim(flip(2), 3), generated_algebra_dim(flip(2), 3));
  EXPECT_EQ(commutant_dim(flip(2), 3), 5u);
}

TEST(QuantumAlgebra, IntertwinerAlgebraIsSumOfSquaredSimpleDims) {
  const auto h = manin_standard(3);
  for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(intertwiner_algebra_dim(h, n), 4u * n) << n;
}

// The tensor powers of the fundamental comodule are semisimple, so the
// endomorphism dimension is the sum of squared fusion multiplicities.
TEST(QuantumAlgebra, CommutantAgreesWithFusionRules) {
  const auto h = manin_standard(3);
  for (unsigned n = 1; n <= 3; ++n) {
    std::size_t squares = 0, total = 0, distinct = 0;
    for (const auto& [label, mult] : tensor_power_multiplicities(n)) {
      ASSERT_TRUE(is_splitting(label));
      squares += mult * mult;
      total += mult * dim(label);
      ++distinct;
    }
    EXPECT_EQ(commutant_dim(h, n), squares) << n;
    EXPECT_EQ(intertwiner_algebra_dim(h, n), distinct * 4) << n;
    EXPECT_EQ(total, detail::ipow(2, n));
  }
}
