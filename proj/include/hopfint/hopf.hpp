#pragma once

// Finite-dimensional Hopf algebras given by structure constants, their
// integrals, the integral-twisted convolution product and the bilinear
// forms b(x, y) = l(x S(y)), c(x, y) = r(y S(x)).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfint/error.hpp"
#include "hopfint/exact_linalg.hpp"
#include "hopfint/matrix.hpp"

namespace hopfint {

/// Structure constants over a basis e_0 .. e_{n-1}:
///   e_i e_j = sum_k mult(i,j,k) e_k,
///   Delta(e_i) = sum_{j,k} comult(i,j,k) e_j (x) e_k,
///   S(e_i) = sum_r antipode()(r,i) e_r.
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  HopfAlgebra(std::vector<std::string> basis_names, std::vector<Scalar> mult, Vector unit,
              std::vector<Scalar> comult, Vector counit, Matrix antipode)
      : names_(std::move(basis_names)),
        mult_(std::move(mult)),
        unit_(std::move(unit)),
        comult_(std::move(comult)),
        counit_(std::move(counit)),
        antipode_(std::move(antipode)) {
    const std::size_t n = names_.size();
    if (mult_.size() != n * n * n || comult_.size() != n * n * n || unit_.size() != n ||
        counit_.size() != n || antipode_.rows() != n || antipode_.cols() != n)
      throw Error("Hopf algebra structure constants have inconsistent sizes");
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }

  const Scalar& mult(std::size_t i, std::size_t j, std::size_t k) const { return mult_[(i * size() + j) * size() + k]; }
  const Scalar& comult(std::size_t i, std::size_t j, std::size_t k) const {
    return comult_[(i * size() + j) * size() + k];
  }
  const Vector& unit() const { return unit_; }
  const Vector& counit() const { return counit_; }
  const Matrix& antipode() const { return antipode_; }

  Vector basis_vector(std::size_t i) const {
    Vector v(size());
    v.at(i) = 1;
    return v;
  }

  Vector multiply(const Vector& a, const Vector& b) const {
    const std::size_t n = size();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(b[j]) == 0) continue;
        const Scalar ab = a[i] * b[j];
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(mult(i, j, k)) != 0) out[k] += ab * mult(i, j, k);
      }
    }
    return out;
  }

  /// Coefficients T(j,k) of Delta(a) = sum T(j,k) e_j (x) e_k.
  Matrix coproduct(const Vector& a) const {
    const std::size_t n = size();
    Matrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(comult(i, j, k)) != 0) t(j, k) += a[i] * comult(i, j, k);
    }
    return t;
  }

  Vector apply_antipode(const Vector& a) const { return antipode_.apply(a); }

  Scalar apply_counit(const Vector& a) const {
    Scalar s = 0;
    for (std::size_t i = 0; i < size(); ++i) s += counit_[i] * a[i];
    return s;
  }

  friend bool operator==(const HopfAlgebra&, const HopfAlgebra&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Scalar> mult_;
  Vector unit_;
  std::vector<Scalar> comult_;
  Vector counit_;
  Matrix antipode_;
};

inline Scalar pair(const Vector& functional, const Vector& element) {
  Scalar s = 0;
  for (std::size_t i = 0; i < element.size(); ++i)
    if (sgn(element[i]) != 0) s += functional[i] * element[i];
  return s;
}

inline Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector scale(const Scalar& s, Vector a) {
  for (auto& x : a) x *= s;
  return a;
}

// ---------------------------------------------------------------------------
// Axioms

struct ValidationReport {
  bool ok = true;
  std::string failed_axiom;  // empty when ok

  explicit operator bool() const { return ok; }
};

/// Checks every Hopf axiom as an exact identity on basis elements. Stops at
/// the first failure.
inline ValidationReport validate(const HopfAlgebra& h) {
  const std::size_t n = h.size();
  auto fail = [](std::string axiom) { return ValidationReport{false, std::move(axiom)}; };
  std::vector<Vector> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = h.basis_vector(i);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = h.multiply(e[i], e[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (h.multiply(ij, e[k]) != h.multiply(e[i], h.multiply(e[j], e[k]))) return fail("associativity");
    }
  for (std::size_t i = 0; i < n; ++i)
    if (h.multiply(h.unit(), e[i]) != e[i] || h.multiply(e[i], h.unit()) != e[i]) return fail("unit");

  for (std::size_t i = 0; i < n; ++i) {
    const Matrix d = h.coproduct(e[i]);
    // (Delta (x) id) Delta vs (id (x) Delta) Delta, as n^3 tensors.
    std::vector<Scalar> left(n * n * n), right(n * n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(d(j, k)) == 0) continue;
        const Matrix dj = h.coproduct(e[j]);
        const Matrix dk = h.coproduct(e[k]);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            left[(a * n + b) * n + k] += d(j, k) * dj(a, b);
            right[(j * n + a) * n + b] += d(j, k) * dk(a, b);
          }
      }
    if (left != right) return fail("coassociativity");
    Vector via_left(n), via_right(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        via_left[k] += h.counit()[j] * d(j, k);
        via_right[j] += d(j, k) * h.counit()[k];
      }
    if (via_left != e[i] || via_right != e[i]) return fail("counit");
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix lhs = h.coproduct(h.multiply(e[i], e[j]));
      const Matrix di = h.coproduct(e[i]);
      const Matrix dj = h.coproduct(e[j]);
      Matrix rhs(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (sgn(di(a, b)) == 0) continue;
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d) {
              if (sgn(dj(c, d)) == 0) continue;
              const Vector ac = h.multiply(e[a], e[c]);
              const Vector bd = h.multiply(e[b], e[d]);
              const Scalar w = di(a, b) * dj(c, d);
              for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                  if (sgn(ac[x]) != 0 && sgn(bd[y]) != 0) rhs(x, y) += w * ac[x] * bd[y];
            }
        }
      if (lhs != rhs) return fail("comultiplication is multiplicative");
      if (h.apply_counit(h.multiply(e[i], e[j])) != h.counit()[i] * h.counit()[j])
        return fail("counit is multiplicative");
    }
  {
    const Matrix du = h.coproduct(h.unit());
    Matrix expected(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) expected(a, b) = h.unit()[a] * h.unit()[b];
    if (du != expected) return fail("comultiplication preserves unit");
    if (h.apply_counit(h.unit()) != 1) return fail("counit preserves unit");
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Matrix d = h.coproduct(e[i]);
    Vector left(n), right(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(d(j, k)) == 0) continue;
        left = add(left, scale(d(j, k), h.multiply(h.apply_antipode(e[j]), e[k])));
        right = add(right, scale(d(j, k), h.multiply(e[j], h.apply_antipode(e[k]))));
      }
    const Vector expected = scale(h.counit()[i], h.unit());
    if (left != expected || right != expected) return fail("antipode");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Integrals

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// Left: a_1 l(a_2) = l(a) 1.  Right: r(a_1) a_2 = r(a) 1.
struct IntegralFunctional {
  Side side = Side::left;
  Vector covector;

  Scalar operator()(const Vector& a) const { return pair(covector, a); }
};

namespace detail {

// Row (a, r) of the integral system: coefficient of e_r in the defining identity
// evaluated at basis element a, as a linear form in the covector.
inline Matrix integral_system(const HopfAlgebra& h, Side side) {
  const std::size_t n = h.size();
  Matrix sys(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t row = a * n + r;
      for (std::size_t k = 0; k < n; ++k)
        sys(row, k) += side == Side::left ? h.comult(a, r, k) : h.comult(a, k, r);
      sys(row, a) -= h.unit()[r];
    }
  return sys;
}

}  // namespace detail

/// Basis of all functionals satisfying the integral identity on `side`.
inline std::vector<Vector> integral_space(const HopfAlgebra& h, Side side) {
  return kernel_basis(detail::integral_system(h, side));
}

inline bool satisfies_integral_axiom(const HopfAlgebra& h, const Vector& covector, Side side) {
  const Matrix sys = detail::integral_system(h, side);
  for (const auto& x : sys.apply(covector))
    if (sgn(x) != 0) return false;
  return true;
}

/// The integral normalised to first nonzero entry 1, or nullopt. A solution
/// space of dimension > 1 contradicts uniqueness and raises.
inline std::optional<IntegralFunctional> find_integral(const HopfAlgebra& h, Side side) {
  auto space = integral_space(h, side);
  if (space.empty()) return std::nullopt;
  if (space.size() > 1)
    throw Error(std::string(to_string(side)) + " integral space has dimension " + std::to_string(space.size()));
  Vector v = std::move(space.front());
  Scalar lead = 0;
  for (const auto& x : v)
    if (sgn(x) != 0) {
      lead = x;
      break;
    }
  for (auto& x : v) x /= lead;
  return IntegralFunctional{side, std::move(v)};
}

/// l o S for a left integral l; a right integral.
inline IntegralFunctional compose_with_antipode(const HopfAlgebra& h, const IntegralFunctional& left) {
  return {Side::right, h.antipode().transpose().apply(left.covector)};
}

// ---------------------------------------------------------------------------
// Convolution product  g * f := f_1 l(f_2 S(g))

inline Vector convolution(const HopfAlgebra& h, const IntegralFunctional& left, const Vector& g, const Vector& f) {
  if (left.side != Side::left) throw Error("convolution needs a left integral");
  const std::size_t n = h.size();
  const Vector sg = h.apply_antipode(g);
  const Matrix df = h.coproduct(f);
  Vector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    bool any = false;
    for (std::size_t j = 0; j < n && !any; ++j) any = sgn(df(j, k)) != 0;
    if (!any) continue;
    const Scalar weight = left(h.multiply(h.basis_vector(k), sg));
    if (sgn(weight) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(df(j, k)) != 0) out[j] += df(j, k) * weight;
  }
  return out;
}

/// The other expression of the same product: l(f S(g_1)) g_2.
inline Vector convolution_alt(const HopfAlgebra& h, const IntegralFunctional& left, const Vector& g, const Vector& f) {
  const std::size_t n = h.size();
  const Matrix dg = h.coproduct(g);
  Vector out(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(dg(j, k)) == 0) continue;
      const Scalar w = left(h.multiply(f, h.apply_antipode(h.basis_vector(j))));
      if (sgn(w) != 0) out[k] += dg(j, k) * w;
    }
  return out;
}

/// h_1 l(h_2 S(g)) = l(h S(g_1)) g_2 on all basis pairs.
inline bool first_identity_holds(const HopfAlgebra& h, const IntegralFunctional& left) {
  for (std::size_t g = 0; g < h.size(); ++g)
    for (std::size_t x = 0; x < h.size(); ++x)
      if (convolution(h, left, h.basis_vector(g), h.basis_vector(x)) !=
          convolution_alt(h, left, h.basis_vector(g), h.basis_vector(x)))
        return false;
  return true;
}

/// r(h_1 S(g)) h_2 = S^2(g_1) r(h S(g_2)) on all basis pairs.
inline bool second_identity_holds(const HopfAlgebra& h, const IntegralFunctional& right) {
  const std::size_t n = h.size();
  const Matrix s2 = h.antipode() * h.antipode();
  for (std::size_t gi = 0; gi < n; ++gi) {
    const Vector sg = h.apply_antipode(h.basis_vector(gi));
    const Matrix dg = h.coproduct(h.basis_vector(gi));
    for (std::size_t hi = 0; hi < n; ++hi) {
      const Matrix dh = h.coproduct(h.basis_vector(hi));
      Vector lhs(n), rhs(n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(dh(j, k)) != 0) {
            const Scalar w = right(h.multiply(h.basis_vector(j), sg));
            if (sgn(w) != 0) lhs[k] += dh(j, k) * w;
          }
          if (sgn(dg(j, k)) != 0) {
            const Scalar w = right(h.multiply(h.basis_vector(hi), h.apply_antipode(h.basis_vector(k))));
            if (sgn(w) != 0) rhs = add(rhs, scale(dg(j, k) * w, s2.column(j)));
          }
        }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

inline bool convolution_associative(const HopfAlgebra& h, const IntegralFunctional& left) {
  const std::size_t n = h.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vector xy = convolution(h, left, h.basis_vector(x), h.basis_vector(y));
      for (std::size_t z = 0; z < n; ++z) {
        const Vector lhs = convolution(h, left, xy, h.basis_vector(z));
        const Vector rhs = convolution(h, left, h.basis_vector(x), convolution(h, left, h.basis_vector(y), h.basis_vector(z)));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Bilinear forms

/// B(i,j) = l(e_i S(e_j)).
inline Matrix bilinear_form_b(const HopfAlgebra& h, const IntegralFunctional& left) {
  const std::size_t n = h.size();
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b(i, j) = left(h.multiply(h.basis_vector(i), h.apply_antipode(h.basis_vector(j))));
  return b;
}

inline bool check_nondegenerate_b(const HopfAlgebra& h, const IntegralFunctional& left) {
  return rank(bilinear_form_b(h, left)) == h.size();
}

/// b(x <- phi, y) = b(x, phi -> y) for phi ranging over the dual basis, where
/// x <- phi = phi(x_1) x_2 and phi -> y = y_1 phi(y_2).
inline bool b_is_balanced(const HopfAlgebra& h, const IntegralFunctional& left) {
  const std::size_t n = h.size();
  const Matrix b = bilinear_form_b(h, left);
  for (std::size_t phi = 0; phi < n; ++phi)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Scalar lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(h.comult(x, phi, k)) != 0) lhs += h.comult(x, phi, k) * b(k, y);
          if (sgn(h.comult(y, k, phi)) != 0) rhs += h.comult(y, k, phi) * b(x, k);
        }
        if (lhs != rhs) return false;
      }
  return true;
}

/// c(x, y) = r(y S(x)).
inline Scalar form_c(const HopfAlgebra& h, const IntegralFunctional& right, const Vector& x, const Vector& y) {
  return right(h.multiply(y, h.apply_antipode(x)));
}

// ---------------------------------------------------------------------------
// Bundled algebras

/// Group algebra of the cyclic group C_n: basis g^0 .. g^{n-1}, all group-like.
inline HopfAlgebra cyclic_group_algebra(std::size_t order) {
  if (order == 0) throw Error("cyclic group order must be positive");
  const std::size_t n = order;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  std::vector<Scalar> mult(n * n * n), comult(n * n * n);
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult[(i * n + j) * n + (i + j) % n] = 1;
    comult[(i * n + i) * n + i] = 1;
    s((n - i) % n, i) = 1;
  }
  Vector unit(n);
  unit[0] = 1;
  return {std::move(names), std::move(mult), std::move(unit), std::move(comult), Vector(n, Scalar(1)), std::move(s)};
}

/// Sweedler's 4-dimensional algebra: basis 1, g, x, gx with g^2 = 1, x^2 = 0,
/// xg = -gx, Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x, S(x) = -gx.
inline HopfAlgebra sweedler_h4() {
  enum : std::size_t { one = 0, g = 1, x = 2, gx = 3 };
  const std::size_t n = 4;
  std::vector<Scalar> mult(n * n * n), comult(n * n * n);
  auto m = [&](std::size_t a, std::size_t b, std::size_t c, long v) { mult[(a * n + b) * n + c] = v; };
  for (std::size_t a = 0; a < n; ++a) {
    m(one, a, a, 1);
    if (a != one) m(a, one, a, 1);
  }
  m(g, g, one, 1);
  m(g, x, gx, 1);
  m(g, gx, x, 1);
  m(x, g, gx, -1);
  m(gx, g, x, -1);
  // x*x = x*gx = gx*x = gx*gx = 0
  auto d = [&](std::size_t a, std::size_t b, std::size_t c, long v) { comult[(a * n + b) * n + c] = v; };
  d(one, one, one, 1);
  d(g, g, g, 1);
  d(x, x, one, 1);
  d(x, g, x, 1);
  d(gx, gx, g, 1);
  d(gx, one, gx, 1);
  Matrix s(n, n);
  s(one, one) = 1;
  s(g, g) = 1;
  s(gx, x) = -1;
  s(x, gx) = 1;
  return {{"1", "g", "x", "gx"}, std::move(mult), Vector{1, 0, 0, 0}, std::move(comult), Vector{1, 1, 0, 0}, std::move(s)};
}

}  // namespace hopfint
