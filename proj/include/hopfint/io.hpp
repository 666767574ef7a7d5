#pragma once

// JSON file formats. Scalars are "num/den" strings; indices are 0-based.
//
//   R-matrix:  { "dim": d, "q": "3/1", "entries": [[out, in, "c"], ...] }
//              out/in are flat pair indices i*d + j; omitted entries are 0.
//   Hopf:      { "basis": [names], "unit": [c...], "mult": [[i,j,k,"c"], ...],
//                "comult": [[i,j,k,"c"], ...], "counit": [c...],
//                "antipode": [[c...] per basis element: coefficients of S(e_i)] }
//   Comodule:  { "dim": d, "coaction": [ [[v_out, h, "c"], ...] per v_in ] }

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopfint/comodule.hpp"
#include "hopfint/error.hpp"
#include "hopfint/hecke_symmetry.hpp"
#include "hopfint/hopf.hpp"
#include "hopfint/scalar.hpp"

namespace hopfint {

using json = nlohmann::json;

/// Malformed input file (as opposed to a mathematical failure).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

namespace detail {

inline Scalar scalar_from_json(const json& j, const char* where) {
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
      throw ParseError(std::string(where) + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError(std::string(where) + ": scalars must be \"num/den\" strings");
}

inline std::size_t index_from_json(const json& j, std::size_t bound, const char* where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string(where) + ": index must be a non-negative integer");
  const auto v = j.get<std::size_t>();
  if (v >= bound) throw ParseError(std::string(where) + ": index " + std::to_string(v) + " out of range");
  return v;
}

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

inline Vector vector_from_json(const json& j, std::size_t n, const char* where) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(std::string(where) + ": expected an array of length " + std::to_string(n));
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x, where));
  return v;
}

inline json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

inline std::vector<Scalar> triples_from_json(const json& j, std::size_t n, const char* where) {
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array");
  std::vector<Scalar> t(n * n * n);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) throw ParseError(std::string(where) + ": entries are [i, j, k, \"c\"]");
    const auto a = index_from_json(e[0], n, where);
    const auto b = index_from_json(e[1], n, where);
    const auto c = index_from_json(e[2], n, where);
    t[(a * n + b) * n + c] += scalar_from_json(e[3], where);
  }
  return t;
}

inline json triples_to_json(std::size_t n, auto&& get) {
  json out = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (const Scalar& v = get(a, b, c); sgn(v) != 0) out.push_back({a, b, c, format_scalar(v)});
  return out;
}

}  // namespace detail

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------

inline HeckeSymmetry rmatrix_from_json(const json& j) {
  const json& dim_j = detail::field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() <= 0) throw ParseError("\"dim\" must be a positive integer");
  const auto d = dim_j.get<std::size_t>();
  const Scalar q = detail::scalar_from_json(detail::field(j, "q"), "q");
  const json& entries = detail::field(j, "entries");
  if (!entries.is_array()) throw ParseError("\"entries\" must be an array");
  Matrix r(d * d, d * d);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) throw ParseError("R-matrix entries are [out, in, \"c\"]");
    const auto out = detail::index_from_json(e[0], d * d, "entries");
    const auto in = detail::index_from_json(e[1], d * d, "entries");
    r(out, in) += detail::scalar_from_json(e[2], "entries");
  }
  return {d, q, std::move(r)};
}

inline json to_json(const HeckeSymmetry& h) {
  json entries = json::array();
  for (std::size_t out = 0; out < h.r_matrix.rows(); ++out)
    for (std::size_t in = 0; in < h.r_matrix.cols(); ++in)
      if (sgn(h.r_matrix(out, in)) != 0) entries.push_back({out, in, format_scalar(h.r_matrix(out, in))});
  return {{"dim", h.dim}, {"q", format_scalar(h.q)}, {"entries", std::move(entries)}};
}

inline HopfAlgebra hopf_from_json(const json& j) {
  const json& basis = detail::field(j, "basis");
  if (!basis.is_array() || basis.empty()) throw ParseError("\"basis\" must be a non-empty array of names");
  std::vector<std::string> names;
  for (const auto& b : basis) {
    if (!b.is_string()) throw ParseError("basis names must be strings");
    names.push_back(b.get<std::string>());
  }
  const std::size_t n = names.size();
  Vector unit = detail::vector_from_json(detail::field(j, "unit"), n, "unit");
  auto mult = detail::triples_from_json(detail::field(j, "mult"), n, "mult");
  auto comult = detail::triples_from_json(detail::field(j, "comult"), n, "comult");
  Vector counit = detail::vector_from_json(detail::field(j, "counit"), n, "counit");
  const json& anti = detail::field(j, "antipode");
  if (!anti.is_array() || anti.size() != n) throw ParseError("\"antipode\" must list S(e_i) for every basis element");
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector col = detail::vector_from_json(anti[i], n, "antipode");
    for (std::size_t r = 0; r < n; ++r) s(r, i) = col[r];
  }
  return {std::move(names), std::move(mult), std::move(unit), std::move(comult), std::move(counit), std::move(s)};
}

inline json to_json(const HopfAlgebra& h) {
  const std::size_t n = h.size();
  json anti = json::array();
  for (std::size_t i = 0; i < n; ++i) anti.push_back(detail::vector_to_json(h.antipode().column(i)));
  return {{"basis", h.basis_names()},
          {"unit", detail::vector_to_json(h.unit())},
          {"mult", detail::triples_to_json(n, [&](auto a, auto b, auto c) -> const Scalar& { return h.mult(a, b, c); })},
          {"comult", detail::triples_to_json(n, [&](auto a, auto b, auto c) -> const Scalar& { return h.comult(a, b, c); })},
          {"counit", detail::vector_to_json(h.counit())},
          {"antipode", std::move(anti)}};
}

inline Comodule comodule_from_json(const json& j, std::size_t hopf_dim) {
  const json& dim_j = detail::field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() <= 0) throw ParseError("\"dim\" must be a positive integer");
  const auto d = dim_j.get<std::size_t>();
  const json& co = detail::field(j, "coaction");
  if (!co.is_array() || co.size() != d) throw ParseError("\"coaction\" must hold one entry list per basis vector");
  std::vector<Scalar> c(d * d * hopf_dim);
  for (std::size_t i = 0; i < d; ++i) {
    if (!co[i].is_array()) throw ParseError("coaction entries must be arrays");
    for (const auto& e : co[i]) {
      if (!e.is_array() || e.size() != 3) throw ParseError("coaction entries are [v_out, h, \"c\"]");
      const auto j_out = detail::index_from_json(e[0], d, "coaction");
      const auto h = detail::index_from_json(e[1], hopf_dim, "coaction");
      c[(i * d + j_out) * hopf_dim + h] += detail::scalar_from_json(e[2], "coaction");
    }
  }
  return {d, hopf_dim, std::move(c)};
}

inline json to_json(const Comodule& m) {
  json co = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (std::size_t h = 0; h < m.hopf_dim(); ++h)
        if (sgn(m.coef(i, j, h)) != 0) row.push_back({j, h, format_scalar(m.coef(i, j, h))});
    co.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"coaction", std::move(co)}};
}

}  // namespace hopfint
