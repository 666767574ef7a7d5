#pragma once

// Fusion calculus for simple comodules I_{m,n}, (m,n) in Z^2, of a quantum
// group of type A_{0|0}. D^k denotes the one-dimensional comodule I_{k,-k};
// D = D^1 is the super-determinant.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfint/error.hpp"

namespace hopfint {

struct SimpleLabel {
  std::int64_t m = 0;
  std::int64_t n = 0;

  constexpr std::int64_t total_degree() const { return m + n; }
  friend constexpr auto operator<=>(const SimpleLabel&, const SimpleLabel&) = default;
};

inline constexpr SimpleLabel fundamental{1, 0};
inline constexpr SimpleLabel trivial_label{0, 0};

/// D^k = (k, -k).
constexpr SimpleLabel det_power(std::int64_t k) { return {k, -k}; }

/// (m, n) -> (-m, -n).
constexpr SimpleLabel dual(SimpleLabel l) { return {-l.m, -l.n}; }

constexpr bool is_splitting(SimpleLabel l) { return l.total_degree() != 0; }

/// 2 for splitting labels, 1 for the powers of the super-determinant.
constexpr std::int64_t dim(SimpleLabel l) { return is_splitting(l) ? 2 : 1; }

/// (m, n) * D^k = (m + k, n - k).
constexpr SimpleLabel twist(SimpleLabel l, std::int64_t k) { return {l.m + k, l.n - k}; }

inline std::string to_string(SimpleLabel l) {
  return "(" + std::to_string(l.m) + "," + std::to_string(l.n) + ")";
}

/// Finitely supported integer combination of simple classes.
class K0Element {
 public:
  K0Element() = default;
  K0Element(SimpleLabel l) { add(l, 1); }  // NOLINT: a label is its own class
  K0Element(std::initializer_list<std::pair<SimpleLabel, std::int64_t>> terms) {
    for (const auto& [l, c] : terms) add(l, c);
  }

  void add(SimpleLabel l, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(l, coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }

  const std::map<SimpleLabel, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(SimpleLabel l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? 0 : it->second;
  }
  bool empty() const { return terms_.empty(); }

  /// Dimension homomorphism K0 -> Z.
  std::int64_t dimension() const {
    std::int64_t d = 0;
    for (const auto& [l, c] : terms_) d += c * hopfint::dim(l);
    return d;
  }

  K0Element dual() const {
    K0Element out;
    for (const auto& [l, c] : terms_) out.add(hopfint::dual(l), c);
    return out;
  }

  K0Element& operator+=(const K0Element& o) {
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
  }
  friend K0Element operator+(K0Element a, const K0Element& b) { return a += b; }
  friend K0Element operator*(std::int64_t k, const K0Element& a) {
    K0Element out;
    for (const auto& [l, c] : a.terms_) out.add(l, k * c);
    return out;
  }
  friend bool operator==(const K0Element&, const K0Element&) = default;

 private:
  std::map<SimpleLabel, std::int64_t> terms_;
};

/// "2·(0,0) + (1,-1)"; "0" for the empty element. Terms in label order.
inline std::string to_string(const K0Element& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [l, c] : x.terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) s += std::to_string(mag) + "·";
    s += to_string(l);
  }
  return s;
}

/// Result of tensoring two simples: either a direct sum of simples, or the
/// indecomposable injective I_{s,0}·I_{-s,0}·D^j with socle D^j and
/// composition factors 2·D^j + D^{j+1} + D^{j-1}.
struct TensorDecomposition {
  enum class Kind { semisimple, indecomposable_injective };
  Kind kind = Kind::semisimple;
  /// Semisimple summands in the order the rules produce them.
  std::vector<std::pair<SimpleLabel, std::int64_t>> summands;
  SimpleLabel socle{};
  K0Element factors;

  bool is_semisimple() const { return kind == Kind::semisimple; }

  /// Composition-factor class.
  K0Element to_k0() const {
    if (!is_semisimple()) return factors;
    K0Element out;
    for (const auto& [l, c] : summands) out.add(l, c);
    return out;
  }
};

inline std::string to_string(const TensorDecomposition& t) {
  if (!t.is_semisimple()) {
    const std::int64_t j = t.socle.m;
    return "INDEC-INJ socle " + to_string(t.socle) + "; factors 2·" + to_string(det_power(j)) + "+" +
           to_string(det_power(j + 1)) + "+" + to_string(det_power(j - 1));
  }
  std::string s;
  for (const auto& [l, c] : t.summands) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "·";
    s += to_string(l);
  }
  return s;
}

namespace detail {

// I_{a,0} · I_{b,0} with a, b, a + b all nonzero.
inline std::pair<SimpleLabel, SimpleLabel> symmetric_power_product(std::int64_t a, std::int64_t b) {
  const std::int64_t s = a + b;
  if (a > 0 && b > 0) return {{s, 0}, {s - 1, 1}};
  if (a < 0 && b < 0) return {{s, 0}, {s + 1, -1}};
  // mixed signs
  if (s > 0) return {{s, 0}, {s + 1, -1}};
  return {{s, 0}, {s - 1, 1}};
}

}  // namespace detail

/// Decomposes I_{m,n} · I_{p,q}.
inline TensorDecomposition tensor(SimpleLabel x, SimpleLabel y) {
  const std::int64_t s1 = x.total_degree();
  const std::int64_t s2 = y.total_degree();
  TensorDecomposition out;
  // D^m · I_{p,q} = I_{p+m, q-m}
  if (s1 == 0) {
    out.summands.emplace_back(twist(y, x.m), 1);
    return out;
  }
  if (s2 == 0) {
    out.summands.emplace_back(twist(x, y.m), 1);
    return out;
  }
  // I_{m,n} = I_{s,0} · D^{-n}, so the product is I_{s1,0} · I_{s2,0} · D^{-(n+q)}.
  const std::int64_t shift = -(x.n + y.n);
  if (s1 + s2 == 0) {
    out.kind = TensorDecomposition::Kind::indecomposable_injective;
    out.socle = det_power(shift);
    out.factors.add(det_power(shift), 2);
    out.factors.add(det_power(shift + 1), 1);
    out.factors.add(det_power(shift - 1), 1);
    return out;
  }
  const auto [first, second] = detail::symmetric_power_product(s1, s2);
  out.summands.emplace_back(twist(first, shift), 1);
  out.summands.emplace_back(twist(second, shift), 1);
  return out;
}

/// Bilinear extension of `tensor` on composition factors.
inline K0Element k0_mul(const K0Element& x, const K0Element& y) {
  K0Element out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out += (ca * cb) * tensor(a, b).to_k0();
  return out;
}

/// Multiplicities of the simples in V^{(x)n}, V = I_{1,0}.
inline std::map<SimpleLabel, std::int64_t> tensor_power_multiplicities(unsigned n) {
  if (n == 0) throw Error("tensor_power_multiplicities: n must be positive");
  K0Element acc(fundamental);
  for (unsigned i = 1; i < n; ++i) acc = k0_mul(acc, K0Element(fundamental));
  return acc.terms();
}

}  // namespace hopfint
