#pragma once

// Right comodules over a finite-dimensional Hopf algebra, viewed as left
// modules over the dual algebra H* via phi -> v = v_0 phi(v_1).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfint/error.hpp"
#include "hopfint/exact_linalg.hpp"
#include "hopfint/hopf.hpp"

namespace hopfint {

/// rho(v_i) = sum_{j,h} coef(i,j,h) v_j (x) e_h.
class Comodule {
 public:
  Comodule() = default;
  Comodule(std::size_t dim, std::size_t hopf_dim, std::vector<Scalar> coaction)
      : dim_(dim), hopf_dim_(hopf_dim), coaction_(std::move(coaction)) {
    if (coaction_.size() != dim_ * dim_ * hopf_dim_) throw Error("comodule coaction size mismatch");
  }

  std::size_t dim() const { return dim_; }
  std::size_t hopf_dim() const { return hopf_dim_; }
  const Scalar& coef(std::size_t i, std::size_t j, std::size_t h) const {
    return coaction_[(i * dim_ + j) * hopf_dim_ + h];
  }
  const std::vector<Scalar>& coaction() const { return coaction_; }

  /// Matrix of the dual basis functional e^h acting on M: A(j,i) = coef(i,j,h).
  Matrix action(std::size_t h) const {
    Matrix a(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) a(j, i) = coef(i, j, h);
    return a;
  }

  friend bool operator==(const Comodule&, const Comodule&) = default;

 private:
  std::size_t dim_ = 0;
  std::size_t hopf_dim_ = 0;
  std::vector<Scalar> coaction_;
};

inline ValidationReport validate_comodule(const HopfAlgebra& h, const Comodule& m) {
  const std::size_t n = h.size();
  const std::size_t d = m.dim();
  if (m.hopf_dim() != n) return {false, "comodule is over an algebra of different dimension"};
  for (std::size_t i = 0; i < d; ++i) {
    // (rho (x) id) rho(v_i) and (id (x) Delta) rho(v_i) as d*n*n tensors.
    std::vector<Scalar> lhs(d * n * n), rhs(d * n * n);
    Vector counit_side(d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t hh = 0; hh < n; ++hh) {
        const Scalar& c = m.coef(i, j, hh);
        if (sgn(c) == 0) continue;
        for (std::size_t j2 = 0; j2 < d; ++j2)
          for (std::size_t h2 = 0; h2 < n; ++h2)
            if (sgn(m.coef(j, j2, h2)) != 0) lhs[(j2 * n + h2) * n + hh] += c * m.coef(j, j2, h2);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (sgn(h.comult(hh, a, b)) != 0) rhs[(j * n + a) * n + b] += c * h.comult(hh, a, b);
        counit_side[j] += c * h.counit()[hh];
      }
    if (lhs != rhs) return {false, "comodule coassociativity"};
    Vector expected(d);
    expected[i] = 1;
    if (counit_side != expected) return {false, "comodule counit"};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Standard comodules

/// k with rho(v) = v (x) 1.
inline Comodule trivial_comodule(const HopfAlgebra& h) {
  std::vector<Scalar> c(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) c[i] = h.unit()[i];
  return {1, h.size(), std::move(c)};
}

/// H coacting on itself by Delta.
inline Comodule regular_comodule(const HopfAlgebra& h) {
  const std::size_t n = h.size();
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = h.comult(i, j, k);
  return {n, n, std::move(c)};
}

/// One-dimensional comodule rho(v) = v (x) e_g for a group-like basis element.
inline Comodule character_comodule(const HopfAlgebra& h, std::size_t g) {
  const std::size_t n = h.size();
  if (g >= n) throw Error("character_comodule: basis index out of range");
  const Vector eg = h.basis_vector(g);
  Matrix expected(n, n);
  expected(g, g) = 1;
  if (h.coproduct(eg) != expected || h.apply_counit(eg) != 1)
    throw Error("character_comodule: basis element '" + h.basis_names()[g] + "' is not group-like");
  std::vector<Scalar> c(n);
  c[g] = 1;
  return {1, n, std::move(c)};
}

// ---------------------------------------------------------------------------
// Coefficient space

struct CoefficientSpace {
  std::vector<Vector> basis;  // elements of H
};

/// Span of the matrix coefficients sum_h coef(i,j,h) e_h.
inline CoefficientSpace coefficient_space(const HopfAlgebra& h, const Comodule& m) {
  const std::size_t n = h.size();
  RowEchelon ech(n);
  CoefficientSpace cf;
  Vector v(n);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      for (std::size_t k = 0; k < n; ++k) v[k] = m.coef(i, j, k);
      if (ech.add_row(v)) cf.basis.push_back(v);
    }
  return cf;
}

// ---------------------------------------------------------------------------
// Morphisms

namespace detail {

// Rows of F A1_h - A2_h F = 0 for F : M1 -> M2 (d2 x d1, flattened r * d1 + c).
inline void add_intertwiner_rows(RowEchelon& ech, const Matrix& a1, const Matrix& a2) {
  const std::size_t d1 = a1.rows();
  const std::size_t d2 = a2.rows();
  Vector row(d1 * d2);
  for (std::size_t r = 0; r < d2; ++r)
    for (std::size_t c = 0; c < d1; ++c) {
      std::fill(row.begin(), row.end(), Scalar(0));
      for (std::size_t k = 0; k < d1; ++k)
        if (sgn(a1(k, c)) != 0) row[r * d1 + k] += a1(k, c);
      for (std::size_t k = 0; k < d2; ++k)
        if (sgn(a2(r, k)) != 0) row[k * d1 + c] -= a2(r, k);
      ech.add_row(row);
    }
}

}  // namespace detail

/// Basis of Hom^H(M1, M2) as d2 x d1 matrices.
inline std::vector<Matrix> hom_basis(const HopfAlgebra& h, const Comodule& m1, const Comodule& m2) {
  if (m1.hopf_dim() != h.size() || m2.hopf_dim() != h.size()) throw Error("hom_basis: comodules over a different algebra");
  RowEchelon ech(m1.dim() * m2.dim());
  for (std::size_t k = 0; k < h.size(); ++k) detail::add_intertwiner_rows(ech, m1.action(k), m2.action(k));
  std::vector<Matrix> basis;
  for (auto& v : ech.kernel_basis()) basis.emplace_back(m2.dim(), m1.dim(), std::move(v));
  return basis;
}

inline std::size_t hom_dim(const HopfAlgebra& h, const Comodule& m1, const Comodule& m2) {
  return hom_basis(h, m1, m2).size();
}

/// An invertible comodule map M1 -> M2, or nullopt if none exists.
///
/// det(sum t_i b_i) over the Hom basis b has degree <= d in each t_i, so if
/// it is not identically zero it is nonzero somewhere on the grid {0..d}^k.
/// The grid is searched exhaustively up to `grid_cap` points; beyond that
/// 256 pseudo-random integer points are tried, which makes a nullopt answer
/// correct with overwhelming (but not certain) probability.
inline std::optional<Matrix> find_isomorphism(const HopfAlgebra& h, const Comodule& m1, const Comodule& m2,
                                              std::size_t grid_cap = 100000) {
  if (m1.dim() != m2.dim()) return std::nullopt;
  const std::size_t d = m1.dim();
  const auto basis = hom_basis(h, m1, m2);
  if (basis.empty()) return std::nullopt;
  for (const auto& b : basis)
    if (rank(b) == d) return b;

  auto combine = [&](const std::vector<long>& t) {
    Matrix c(d, d);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (t[i] != 0) c = c + Scalar(t[i]) * basis[i];
    return c;
  };
  const std::size_t k = basis.size();
  std::size_t points = 1;
  for (std::size_t i = 0; i < k && points <= grid_cap; ++i) points *= d + 1;
  std::vector<long> t(k, 0);
  if (points <= grid_cap) {
    for (std::size_t p = 0; p < points; ++p) {
      std::size_t rest = p;
      for (auto& ti : t) {
        ti = static_cast<long>(rest % (d + 1));
        rest /= d + 1;
      }
      Matrix c = combine(t);
      if (rank(c) == d) return c;
    }
    return std::nullopt;
  }
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int trial = 0; trial < 256; ++trial) {
    for (auto& ti : t) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      ti = static_cast<long>((state >> 33) % (100 * d)) + 1;
    }
    Matrix c = combine(t);
    if (rank(c) == d) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Simplicity

namespace detail {

/// Coefficients c_0..c_n (c_n = 1) of det(t - A), Faddeev-LeVerrier.
inline std::vector<Scalar> characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / Scalar(static_cast<unsigned long>(k));
  }
  return c;
}

inline std::vector<Integer> small_divisors(Integer v) {
  v = abs(v);
  std::vector<Integer> out;
  if (v == 0 || v > Integer("1000000000000")) return out;
  for (Integer d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

/// Rational roots of a polynomial with rational coefficients (rational root
/// theorem). Coefficients beyond 10^12 are not searched.
inline std::vector<Scalar> rational_roots(std::vector<Scalar> c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (low < c.size() && sgn(c[low]) == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (c.size() - low <= 1) return roots;
  Integer den_lcm = 1;
  for (const auto& x : c) den_lcm = lcm(den_lcm, x.get_den());
  const Integer a0 = c[low].get_num() * (den_lcm / c[low].get_den());
  const Integer an = c.back().get_num() * (den_lcm / c.back().get_den());
  for (const auto& p : small_divisors(a0))
    for (const auto& q : small_divisors(an))
      for (int sign : {1, -1}) {
        Scalar cand(p * sign, q);
        cand.canonicalize();
        Scalar value = 0;
        for (std::size_t i = c.size(); i-- > 0;) value = value * cand + c[i];
        if (sgn(value) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
      }
  return roots;
}

// Linearly independent members of the image of H* in End(M).
inline std::vector<Matrix> image_algebra_basis(const Comodule& m) {
  const std::size_t d = m.dim();
  RowEchelon ech(d * d);
  std::vector<Matrix> basis;
  for (std::size_t k = 0; k < m.hopf_dim(); ++k) {
    Matrix a = m.action(k);
    if (ech.add_row(a.data())) basis.push_back(std::move(a));
  }
  return basis;
}

inline std::vector<Vector> column_space(std::span<const Matrix> ms, std::size_t rows) {
  RowEchelon ech(rows);
  std::vector<Vector> cols;
  for (const auto& m : ms)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Vector v = m.column(c);
      if (ech.add_row(v)) cols.push_back(std::move(v));
    }
  return cols;
}

}  // namespace detail

struct SimplicityReport {
  bool simple = false;
  /// Basis of a proper nonzero subcomodule when not simple.
  std::vector<Vector> witness;
  std::string reason;
};

/// Exact decision for desk-scale comodules. With B the image of H* in End(M):
///  - rad(B) = {x in B : tr(xy) = 0 for all y in B} (characteristic 0); if
///    nonzero, rad(B) M is a proper nonzero subcomodule;
///  - otherwise M is semisimple, and End^H(M) = k means M is simple;
///  - otherwise a singular nonzero element X - lambda of End^H(M) (lambda a
///    rational eigenvalue) has a proper nonzero kernel that is a subcomodule.
/// Anything left over (End a proper division algebra candidate) raises.
inline SimplicityReport simplicity(const HopfAlgebra& h, const Comodule& m, std::size_t search_cap = 6) {
  const std::size_t d = m.dim();
  if (d == 0) return {false, {}, "zero comodule"};
  if (d == 1) return {true, {}, "one-dimensional"};

  const auto b = detail::image_algebra_basis(m);
  Matrix gram(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) gram(i, j) = (b[i] * b[j]).trace();
  const auto rad = kernel_basis(gram);
  if (!rad.empty()) {
    std::vector<Matrix> rad_elems;
    for (const auto& coeffs : rad) {
      Matrix x(d, d);
      for (std::size_t i = 0; i < b.size(); ++i)
        if (sgn(coeffs[i]) != 0) x = x + coeffs[i] * b[i];
      rad_elems.push_back(std::move(x));
    }
    return {false, detail::column_space(rad_elems, d), "nonzero radical of the dual-algebra image"};
  }

  const auto ends = hom_basis(h, m, m);
  if (ends.size() == 1) return {true, {}, "semisimple with scalar endomorphisms"};

  if (d > search_cap)
    throw Error("simplicity: endomorphism search capped at dimension " + std::to_string(search_cap));
  std::vector<Matrix> candidates = ends;
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i + 1; j < ends.size(); ++j) candidates.push_back(ends[i] + ends[j]);
  const Matrix id = Matrix::identity(d);
  for (const auto& x : candidates)
    for (const auto& lambda : detail::rational_roots(detail::characteristic_polynomial(x))) {
      const Matrix shifted = x - lambda * id;
      if (shifted.is_zero()) continue;
      return {false, kernel_basis(shifted), "singular endomorphism"};
    }
  throw Error("simplicity: undecided (endomorphism algebra has no rational zero divisor candidate)");
}

inline bool is_simple(const HopfAlgebra& h, const Comodule& m) { return simplicity(h, m).simple; }

// ---------------------------------------------------------------------------
// Splitting criterion and projectivity oracle

struct SplittingResult {
  bool splitting = false;
  CoefficientSpace coefficients;
  /// C(i,j) = c(f_i, f_j) = r(f_j S(f_i)) over the basis f of Cf(M).
  Matrix c_form;
  bool c_full_rank = false;
};

/// M is splitting iff c is not identically zero on Cf(M); when it is not,
/// c is also nondegenerate there (reported in c_full_rank).
inline SplittingResult splitting_test(const HopfAlgebra& h, const Comodule& m) {
  if (!is_simple(h, m)) throw Error("splitting_test: comodule is not simple");
  const auto right = find_integral(h, Side::right);
  if (!right) throw Error("splitting_test: no right integral");
  SplittingResult res;
  res.coefficients = coefficient_space(h, m);
  const auto& f = res.coefficients.basis;
  res.c_form = Matrix(f.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) res.c_form(i, j) = form_c(h, *right, f[i], f[j]);
  res.splitting = !res.c_form.is_zero();
  res.c_full_rank = rank(res.c_form) == f.size();
  return res;
}

/// Left multiplication by e^h in H*, where (phi psi)(a) = phi(a_1) psi(a_2):
/// L(a,k) = comult(a, h, k).
inline Matrix dual_left_multiplication(const HopfAlgebra& h, std::size_t phi) {
  const std::size_t n = h.size();
  Matrix l(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k) l(a, k) = h.comult(a, phi, k);
  return l;
}

/// Is M projective as a left H*-module? Solves for an H*-linear section of
/// the surjection (H*)^{dim M} -> M sending the t-th generator to v_t.
inline bool projectivity_oracle(const HopfAlgebra& h, const Comodule& m) {
  const std::size_t n = h.size();
  const std::size_t d = m.dim();
  // Unknown S : M -> F, F = (H*)^d. S[(t,k), i] at ((t * n + k) * d + i).
  const std::size_t fdim = n * d;
  const std::size_t unknowns = fdim * d;
  auto var = [&](std::size_t t, std::size_t k, std::size_t i) { return (t * n + k) * d + i; };

  std::vector<Matrix> acts, mults;
  for (std::size_t k = 0; k < n; ++k) {
    acts.push_back(m.action(k));
    mults.push_back(dual_left_multiplication(h, k));
  }
  std::vector<Vector> rows;
  Vector rhs;
  Vector row(unknowns);
  // S A_phi = (I_d (x) L_phi) S
  for (std::size_t phi = 0; phi < n; ++phi)
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < d; ++i) {
          std::fill(row.begin(), row.end(), Scalar(0));
          for (std::size_t j = 0; j < d; ++j)
            if (sgn(acts[phi](j, i)) != 0) row[var(t, a, j)] += acts[phi](j, i);
          for (std::size_t k = 0; k < n; ++k)
            if (sgn(mults[phi](a, k)) != 0) row[var(t, k, i)] -= mults[phi](a, k);
          rows.push_back(row);
          rhs.push_back(0);
        }
  // pi S = id, pi(t-th copy of e^k) = A_k v_t
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t i = 0; i < d; ++i) {
      std::fill(row.begin(), row.end(), Scalar(0));
      for (std::size_t t = 0; t < d; ++t)
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(acts[k](r, t)) != 0) row[var(t, k, i)] += acts[k](r, t);
      rows.push_back(row);
      rhs.push_back(r == i ? 1 : 0);
    }
  Matrix sys(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) sys(r, c) = rows[r][c];
  return solve(sys, rhs).has_value();
}

// ---------------------------------------------------------------------------
// Double dual and M-bullet

/// M** identified with M: rho(v) = v_0 (x) S^2(v_1).
inline Comodule double_dual(const HopfAlgebra& h, const Comodule& m) {
  const std::size_t n = h.size();
  const Matrix s2 = h.antipode() * h.antipode();
  std::vector<Scalar> c(m.dim() * m.dim() * n);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (std::size_t h0 = 0; h0 < n; ++h0) {
        const Scalar& x = m.coef(i, j, h0);
        if (sgn(x) == 0) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(s2(k, h0)) != 0) c[(i * m.dim() + j) * n + k] += x * s2(k, h0);
      }
  Comodule out(m.dim(), n, std::move(c));
  if (!validate_comodule(h, out)) throw Error("double_dual: result fails the comodule axioms");
  return out;
}

/// M-bullet for simple M: with generator v = v_0 of M and the circle action
/// a o v = v_0 l(a S(v_1)), each basis vector is written w = a o v and given
/// the coaction (a_1 o v) (x) a_2.
inline Comodule bullet(const HopfAlgebra& h, const Comodule& m) {
  if (!is_simple(h, m)) throw Error("bullet: comodule is not simple");
  const auto left = find_integral(h, Side::left);
  if (!left) throw Error("bullet: no left integral");
  const std::size_t n = h.size();
  const std::size_t d = m.dim();
  // circ(j, a): coefficient of v_j in e_a o v_0
  Matrix circ(d, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = m.coef(0, j, k);
        if (sgn(c) == 0) continue;
        circ(j, a) += c * (*left)(h.multiply(h.basis_vector(a), h.apply_antipode(h.basis_vector(k))));
      }
  // coaction image of an element a of H: sum_{j,k} Delta(a)_{jk} circ(:, j) (x) e_k
  auto coaction_of = [&](const Vector& a) {
    const Matrix da = h.coproduct(a);
    Matrix out(d, n);  // (v_out, h)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(da(j, k)) == 0) continue;
        for (std::size_t v = 0; v < d; ++v)
          if (sgn(circ(v, j)) != 0) out(v, k) += da(j, k) * circ(v, j);
      }
    return out;
  };
  for (const auto& z : kernel_basis(circ))
    if (!coaction_of(z).is_zero()) throw Error("bullet: coaction is not well defined");
  std::vector<Scalar> c(d * d * n);
  Vector target(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::fill(target.begin(), target.end(), Scalar(0));
    target[i] = 1;
    const auto a = solve(circ, target);
    if (!a) throw Error("bullet: circle action does not reach every vector");
    const Matrix co = coaction_of(*a);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * d + j) * n + k] = co(j, k);
  }
  Comodule out(d, n, std::move(c));
  if (!validate_comodule(h, out)) throw Error("bullet: result fails the comodule axioms");
  return out;
}

}  // namespace hopfint
