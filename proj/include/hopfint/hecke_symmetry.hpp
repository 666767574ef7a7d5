#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfint/error.hpp"
#include "hopfint/exact_linalg.hpp"
#include "hopfint/matrix.hpp"

namespace hopfint {

/// Candidate Hecke symmetry R : V (x) V -> V (x) V with parameter q.
///
/// r_matrix(idx(c,d), idx(a,b)) is the coefficient of e_c (x) e_d in
/// R(e_a (x) e_b), where idx(i,j) = i * dim + j.
struct HeckeSymmetry {
  std::size_t dim = 0;
  Scalar q;
  Matrix r_matrix;

  HeckeSymmetry() = default;
  HeckeSymmetry(std::size_t d, Scalar q_param, Matrix r) : dim(d), q(std::move(q_param)), r_matrix(std::move(r)) {
    if (r_matrix.rows() != d * d || r_matrix.cols() != d * d)
      throw Error("R-matrix must be dim^2 x dim^2");
  }

  std::size_t index(std::size_t i, std::size_t j) const { return i * dim + j; }

  /// q must avoid 0 and -1 (the only roots of unity in Q that matter here).
  bool q_valid() const { return sgn(q) != 0 && q != -1; }

  friend bool operator==(const HeckeSymmetry&, const HeckeSymmetry&) = default;
};

/// Half-dual P : V* (x) V -> V (x) V*. Input basis e^a (x) e_b at idx(a,b),
/// output basis e_c (x) e^k at idx(c,k).
struct HalfDual {
  Matrix p_matrix;
};

struct YangBaxterReport {
  bool holds = false;
  /// First entry (row-major) where the two sides differ.
  struct Mismatch {
    std::size_t row, col;
    Scalar lhs, rhs;
  };
  std::optional<Mismatch> first_mismatch;
};

/// Checks (R (x) 1)(1 (x) R)(R (x) 1) = (1 (x) R)(R (x) 1)(1 (x) R) on V^{(x)3}.
inline YangBaxterReport verify_yang_baxter(const HeckeSymmetry& h) {
  const Matrix r12 = embed(1, h.r_matrix, h.dim);
  const Matrix r23 = embed(h.dim, h.r_matrix, 1);
  const Matrix lhs = r12 * r23 * r12;
  const Matrix rhs = r23 * r12 * r23;
  YangBaxterReport report;
  report.holds = true;
  for (std::size_t r = 0; r < lhs.rows() && report.holds; ++r)
    for (std::size_t c = 0; c < lhs.cols(); ++c)
      if (lhs(r, c) != rhs(r, c)) {
        report.holds = false;
        report.first_mismatch = YangBaxterReport::Mismatch{r, c, lhs(r, c), rhs(r, c)};
        break;
      }
  return report;
}

/// (R - q)(R + 1) = 0.
inline bool verify_hecke_relation(const HeckeSymmetry& h) {
  const std::size_t n = h.r_matrix.rows();
  const Matrix id = Matrix::identity(n);
  return ((h.r_matrix - h.q * id) * (h.r_matrix + id)).is_zero();
}

/// P[(c,k),(a,b)] = R[(a,c),(b,k)].
inline HalfDual half_dual(const HeckeSymmetry& h) {
  const std::size_t d = h.dim;
  Matrix p(d * d, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t k = 0; k < d; ++k)
          p(h.index(c, k), h.index(a, b)) = h.r_matrix(h.index(a, c), h.index(b, k));
  return {std::move(p)};
}

inline bool verify_closed(const HeckeSymmetry& h) {
  const Matrix& p = half_dual(h).p_matrix;
  return rank(p) == p.rows();
}

/// rank_q R = ev o P^{-1} o db with db(1) = sum_i e_i (x) e^i and
/// ev(e^a (x) e_b) = delta_ab, i.e. sum_{a,i} P^{-1}[(a,a),(i,i)].
inline Scalar q_rank(const HeckeSymmetry& h) {
  const auto p_inv = inverse(half_dual(h).p_matrix);
  if (!p_inv) throw Error("q_rank: half-dual is not invertible (R is not closed)");
  Scalar total = 0;
  for (std::size_t a = 0; a < h.dim; ++a)
    for (std::size_t i = 0; i < h.dim; ++i) total += (*p_inv)(h.index(a, a), h.index(i, i));
  return total;
}

/// Eigenspace dimensions of a Hecke instance: dim ker(R - q), dim ker(R + 1).
struct HeckeEigenspaces {
  std::size_t q_dim = 0;
  std::size_t minus_one_dim = 0;
};

inline HeckeEigenspaces hecke_eigenspaces(const HeckeSymmetry& h) {
  const std::size_t n = h.r_matrix.rows();
  const Matrix id = Matrix::identity(n);
  return {n - rank(h.r_matrix - h.q * id), n - rank(h.r_matrix + id)};
}

// ---------------------------------------------------------------------------
// Builtin instances

/// Tensor flip e_a (x) e_b -> e_b (x) e_a, a Hecke symmetry with q = 1.
inline HeckeSymmetry flip(std::size_t d) {
  Matrix r(d * d, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) r(b * d + a, a * d + b) = 1;
  return {d, Scalar(1), std::move(r)};
}

/// Signed flip e_a (x) e_b -> (-1)^{|a||b|} e_b (x) e_a for the given parities.
inline HeckeSymmetry super_flip(const std::vector<int>& parity) {
  const std::size_t d = parity.size();
  Matrix r(d * d, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) r(b * d + a, a * d + b) = (parity[a] && parity[b]) ? -1 : 1;
  return {d, Scalar(1), std::move(r)};
}

/// Manin's two-parameter family on a 2-dimensional space:
///   R(e1e1) = q e1e1,  R(e1e2) = p e2e1,
///   R(e2e1) = (q/p) e1e2 + (q-1) e2e1,  R(e2e2) = -e2e2.
/// p = 1 is the standard one-parameter specialization; q = 1 gives the
/// (1|1) super-flip.
inline HeckeSymmetry manin_standard(const Scalar& q, const Scalar& p = 1) {
  if (sgn(q) == 0 || q == -1) throw Error("manin_standard: q must avoid 0 and -1");
  if (sgn(p) == 0) throw Error("manin_standard: p must be nonzero");
  Matrix r(4, 4);
  auto idx = [](std::size_t i, std::size_t j) { return i * 2 + j; };
  r(idx(0, 0), idx(0, 0)) = q;
  r(idx(1, 0), idx(0, 1)) = p;
  r(idx(0, 1), idx(1, 0)) = q / p;
  r(idx(1, 0), idx(1, 0)) = q - 1;
  r(idx(1, 1), idx(1, 1)) = -1;
  return {2, q, std::move(r)};
}

}  // namespace hopfint
