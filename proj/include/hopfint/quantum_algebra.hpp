#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hopfint/error.hpp"
#include "hopfint/exact_linalg.hpp"
#include "hopfint/hecke_symmetry.hpp"

namespace hopfint {

struct QuantumAlgebraLimits {
  unsigned poincare_degree_cap = 6;
  unsigned commutant_degree_cap = 4;
};

enum class AlgebraKind { symmetric, antisymmetric };

struct PoincareTable {
  AlgebraKind algebra_kind = AlgebraKind::antisymmetric;
  std::vector<std::size_t> dims;  // d_0 .. d_N
  /// Set only when d_n = (a + b) b^{n-1} holds for every 1 <= n <= N.
  std::optional<Scalar> fitted_a;
  std::optional<Scalar> fitted_b;
};

namespace detail {

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

inline void require_hecke(const HeckeSymmetry& h, const char* op) {
  if (!verify_hecke_relation(h))
    throw Error(std::string(op) + ": Hecke relation (R - q)(R + 1) = 0 does not hold");
}

// dim of the degree-n part of T(V) / <Im(relation)>.
inline std::size_t quotient_dim(const HeckeSymmetry& h, const Matrix& relation, unsigned n) {
  if (n == 0) return 1;
  if (n == 1) return h.dim;
  std::vector<Matrix> ops;
  ops.reserve(n - 1);
  for (unsigned i = 0; i + 1 < n; ++i)
    ops.push_back(embed(ipow(h.dim, i), relation, ipow(h.dim, n - i - 2)));
  return ipow(h.dim, n) - column_span_rank(ops);
}

inline void check_cap(unsigned n, unsigned cap, const char* op) {
  if (n > cap)
    throw Error(std::string(op) + ": degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

}  // namespace detail

/// dim S_n: quotient of V^{(x)n} by the ideal generated by Im(R - q).
inline std::size_t sym_dim(const HeckeSymmetry& h, unsigned n, const QuantumAlgebraLimits& lim = {}) {
  detail::require_hecke(h, "sym_dim");
  detail::check_cap(n, lim.poincare_degree_cap, "sym_dim");
  const Matrix id = Matrix::identity(h.r_matrix.rows());
  return detail::quotient_dim(h, h.r_matrix - h.q * id, n);
}

/// dim Lambda_n: quotient of V^{(x)n} by the ideal generated by Im(R + 1).
inline std::size_t ext_dim(const HeckeSymmetry& h, unsigned n, const QuantumAlgebraLimits& lim = {}) {
  detail::require_hecke(h, "ext_dim");
  detail::check_cap(n, lim.poincare_degree_cap, "ext_dim");
  const Matrix id = Matrix::identity(h.r_matrix.rows());
  return detail::quotient_dim(h, h.r_matrix + id, n);
}

inline PoincareTable poincare_table(const HeckeSymmetry& h, AlgebraKind kind, unsigned max_degree,
                                    const QuantumAlgebraLimits& lim = {}) {
  PoincareTable t;
  t.algebra_kind = kind;
  for (unsigned n = 0; n <= max_degree; ++n)
    t.dims.push_back(kind == AlgebraKind::symmetric ? sym_dim(h, n, lim) : ext_dim(h, n, lim));
  if (t.dims.size() >= 3 && t.dims[1] != 0) {
    Scalar b(static_cast<unsigned long>(t.dims[2]), static_cast<unsigned long>(t.dims[1]));
    b.canonicalize();
    const Scalar a = Scalar(static_cast<unsigned long>(t.dims[1])) - b;
    Scalar expected = a + b;
    bool fits = true;
    for (std::size_t n = 1; n < t.dims.size(); ++n) {
      if (expected != Scalar(static_cast<unsigned long>(t.dims[n]))) fits = false;
      expected *= b;
    }
    if (fits) {
      t.fitted_a = a;
      t.fitted_b = b;
    }
  }
  return t;
}

/// Builds the member of a parametric family at a given q.
using HeckeFamily = std::function<HeckeSymmetry(const Scalar&)>;

struct Birank11Result {
  bool birank11 = false;
  PoincareTable table;
  bool generic_check_performed = false;
  bool generic_check_agreed = true;
  std::optional<Scalar> second_q;
};

/// Fits the antisymmetric Poincare series to (1 + a t)(1 - b t)^{-1} and
/// reports birank (1,1) iff a = b = 1 and d_n = 2 for 1 <= n <= max_degree.
/// With a family, d_2 and d_3 are recomputed at q' = q + 1 (skipping 0, -1)
/// to rule out an accidental rank drop at the chosen specialization.
inline Birank11Result detect_birank11(const HeckeSymmetry& h, unsigned max_degree,
                                      const HeckeFamily* family = nullptr,
                                      const QuantumAlgebraLimits& lim = {}) {
  if (max_degree < 3) throw Error("detect_birank11: max_degree must be at least 3");
  if (h.dim == 0) throw Error("detect_birank11: d_1 = 0");
  Birank11Result res;
  res.table = poincare_table(h, AlgebraKind::antisymmetric, max_degree, lim);
  const auto& t = res.table;
  bool all_two = true;
  for (std::size_t n = 1; n < t.dims.size(); ++n) all_two = all_two && t.dims[n] == 2;
  res.birank11 = t.fitted_a && t.fitted_b && *t.fitted_a == 1 && *t.fitted_b == 1 && all_two;
  if (family) {
    Scalar q2 = h.q + 1;
    while (sgn(q2) == 0 || q2 == -1) q2 += 1;
    const HeckeSymmetry other = (*family)(q2);
    res.generic_check_performed = true;
    res.second_q = q2;
    res.generic_check_agreed = ext_dim(other, 2, lim) == t.dims[2] && ext_dim(other, 3, lim) == t.dims[3];
    res.birank11 = res.birank11 && res.generic_check_agreed;
  }
  return res;
}

namespace detail {

// Rows of the linear system X Y - Y X = 0 in the D*D unknowns X[r][c]
// (flattened r * D + c), fed straight into `ech`.
inline void add_commutator_rows(RowEchelon& ech, const Matrix& y) {
  const std::size_t dd = y.rows();
  Vector row(dd * dd);
  for (std::size_t r = 0; r < dd && !ech.full(); ++r)
    for (std::size_t c = 0; c < dd && !ech.full(); ++c) {
      std::fill(row.begin(), row.end(), Scalar(0));
      for (std::size_t k = 0; k < dd; ++k) {
        if (sgn(y(k, c)) != 0) row[r * dd + k] += y(k, c);
        if (sgn(y(r, k)) != 0) row[k * dd + c] -= y(r, k);
      }
      ech.add_row(row);
    }
}

inline std::vector<Matrix> braid_generators(const HeckeSymmetry& h, unsigned n) {
  std::vector<Matrix> gens;
  for (unsigned i = 0; i + 1 < n; ++i) gens.push_back(embed(ipow(h.dim, i), h.r_matrix, ipow(h.dim, n - i - 2)));
  return gens;
}

inline std::vector<Matrix> commutant_basis(std::span<const Matrix> ops, std::size_t dd) {
  RowEchelon ech(dd * dd);
  for (const auto& y : ops) add_commutator_rows(ech, y);
  std::vector<Matrix> basis;
  for (auto& v : ech.kernel_basis()) basis.emplace_back(dd, dd, std::move(v));
  return basis;
}

}  // namespace detail

/// dim { X in End(V^{(x)n}) : X R_i = R_i X for all i } -- the commutant of
/// the braid operators R_i = 1^{(x)i-1} (x) R (x) 1^{(x)n-i-1}.
inline std::size_t intertwiner_algebra_dim(const HeckeSymmetry& h, unsigned n, const QuantumAlgebraLimits& lim = {}) {
  if (n == 0) throw Error("intertwiner_algebra_dim: n must be positive");
  detail::check_cap(n, lim.commutant_degree_cap, "intertwiner_algebra_dim");
  const std::size_t dd = detail::ipow(h.dim, n);
  const auto gens = detail::braid_generators(h, n);
  return detail::commutant_basis(gens, dd).size();
}

/// dim End(V^{(x)n}) as a comodule: the double commutant of the R_i, found
/// by solving two stacked commutator systems.
inline std::size_t commutant_dim(const HeckeSymmetry& h, unsigned n, const QuantumAlgebraLimits& lim = {}) {
  if (n == 0) throw Error("commutant_dim: n must be positive");
  detail::check_cap(n, lim.commutant_degree_cap, "commutant_dim");
  const std::size_t dd = detail::ipow(h.dim, n);
  const auto gens = detail::braid_generators(h, n);
  const auto first = detail::commutant_basis(gens, dd);
  RowEchelon ech(dd * dd);
  for (const auto& y : first) detail::add_commutator_rows(ech, y);
  return dd * dd - ech.rank();
}

}  // namespace hopfint
