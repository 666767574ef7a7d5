#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hopfint/error.hpp"

namespace hopfint {

// mpq_class keeps num/den canonical (den > 0, gcd = 1) after every operation
// as long as we call canonicalize() on values built from raw parts.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw Error("zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

/// Parses "num/den" or "num". Whitespace is not accepted.
inline Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw Error("empty scalar literal");
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error("malformed scalar literal '" + std::string(text) + "'");
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

/// Canonical "num/den" form; integers keep the "/1" suffix.
inline std::string format_scalar(const Scalar& s) {
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

/// Shorter human form: "3", "-7/2".
inline std::string pretty_scalar(const Scalar& s) {
  return s.get_den() == 1 ? s.get_num().get_str() : s.get_str();
}

}  // namespace hopfint
