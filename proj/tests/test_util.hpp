#pragma once

// Small hand-rolled generators for the property tests.

#include <cstdint>
#include <random>
#include <string>

#include "hopfint/matrix.hpp"
#include "hopfint/scalar.hpp"

namespace hopfint::test_support {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  /// Small rationals, zero with probability about `zero_bias`.
  Scalar scalar(double zero_bias = 0.3) {
    if (std::bernoulli_distribution(zero_bias)(rng_)) return 0;
    return make_scalar(integer(-9, 9), integer(1, 4));
  }

  Matrix matrix(std::size_t rows, std::size_t cols, double zero_bias = 0.3) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(zero_bias);
    return m;
  }

  /// rows x cols matrix of rank at most k, built as a product of random factors.
  Matrix low_rank(std::size_t rows, std::size_t cols, std::size_t k) {
    return matrix(rows, k, 0.1) * matrix(k, cols, 0.1);
  }

 private:
  std::mt19937_64 rng_;
};

inline std::string data_file(const std::string& name) { return std::string(HOPFINT_DATA_DIR) + "/" + name; }

}  // namespace hopfint::test_support
