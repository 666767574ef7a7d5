// hopfint: command-line front end.
//
// Exit codes: 0 success, 1 mathematical failure or disagreement, 2 input error.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hopfint/comodule.hpp"
#include "hopfint/fusion.hpp"
#include "hopfint/hecke_symmetry.hpp"
#include "hopfint/hopf.hpp"
#include "hopfint/io.hpp"
#include "hopfint/quantum_algebra.hpp"

using namespace hopfint;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

const char* verdict(bool b) { return b ? "pass" : "FAIL"; }
const char* yes_no(bool b) { return b ? "yes" : "no"; }

json scalar_or_null(const std::optional<Scalar>& s) { return s ? json(format_scalar(*s)) : json(nullptr); }

// ---------------------------------------------------------------------------
// hecke

int hecke_verify(const std::string& path, bool as_json) {
  const HeckeSymmetry h = rmatrix_from_json(load_json_file(path));
  const bool ybe = verify_yang_baxter(h).holds;
  const bool hecke = verify_hecke_relation(h);
  const bool closed = verify_closed(h);
  const bool q_ok = h.q_valid();
  std::optional<Scalar> qr;
  if (closed) qr = q_rank(h);
  const bool ok = ybe && hecke && closed && q_ok;

  if (as_json) {
    std::cout << json{{"ybe", ybe}, {"hecke", hecke}, {"closed", closed}, {"q_valid", q_ok}, {"qrank", scalar_or_null(qr)}}
                     .dump()
              << "\n";
  } else {
    std::cout << "Yang-Baxter equation  " << verdict(ybe) << "\n"
              << "Hecke relation        " << verdict(hecke) << "\n"
              << "closed                " << verdict(closed) << "\n"
              << "q valid (q != 0, -1)  " << verdict(q_ok) << "\n"
              << "q-rank                " << (qr ? format_scalar(*qr) : std::string("undefined (not closed)")) << "\n";
  }
  return ok ? kOk : kMathFailure;
}

int hecke_poincare(const std::string& path, unsigned max_degree, bool as_json) {
  const HeckeSymmetry h = rmatrix_from_json(load_json_file(path));
  if (!verify_yang_baxter(h).holds || !verify_hecke_relation(h)) {
    std::cerr << "hecke poincare: input is not a Hecke symmetry (run 'hecke verify')\n";
    return kMathFailure;
  }
  const auto sym = poincare_table(h, AlgebraKind::symmetric, max_degree);
  bool birank = false;
  PoincareTable ext;
  if (max_degree >= 3) {
    const auto res = detect_birank11(h, max_degree);
    birank = res.birank11;
    ext = res.table;
  } else {
    ext = poincare_table(h, AlgebraKind::antisymmetric, max_degree);
  }

  if (as_json) {
    std::cout << json{{"sym", sym.dims},
                      {"ext", ext.dims},
                      {"birank11", birank},
                      {"a", scalar_or_null(ext.fitted_a)},
                      {"b", scalar_or_null(ext.fitted_b)}}
                     .dump()
              << "\n";
    return kOk;
  }
  std::cout << " n  dim S_n  dim L_n\n";
  for (unsigned n = 0; n <= max_degree; ++n)
    std::cout << std::setw(2) << n << "  " << std::setw(7) << sym.dims[n] << "  " << std::setw(7) << ext.dims[n]
              << "\n";
  if (ext.fitted_a)
    std::cout << "fit (1 + a t)(1 - b t)^-1: a = " << pretty_scalar(*ext.fitted_a)
              << ", b = " << pretty_scalar(*ext.fitted_b) << "\n";
  else
    std::cout << "fit (1 + a t)(1 - b t)^-1: none\n";
  if (max_degree < 3) std::cout << "birank (1,1): undecided (needs --max-degree >= 3)\n";
  else std::cout << "birank (1,1): " << yes_no(birank) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// fusion

json label_json(SimpleLabel l) { return json::array({l.m, l.n}); }

json decomposition_json(const TensorDecomposition& t) {
  json j;
  if (t.is_semisimple()) {
    j["kind"] = "semisimple";
    j["summands"] = json::array();
    for (const auto& [l, c] : t.summands) j["summands"].push_back({label_json(l), c});
  } else {
    j["kind"] = "indecomposable_injective";
    j["socle"] = label_json(t.socle);
    j["factors"] = json::array();
    for (const auto& [l, c] : t.factors.terms()) j["factors"].push_back({label_json(l), c});
  }
  return j;
}

int fusion_mul(std::int64_t m, std::int64_t n, std::int64_t p, std::int64_t q, bool as_json) {
  const auto t = tensor({m, n}, {p, q});
  if (as_json) std::cout << decomposition_json(t).dump() << "\n";
  else std::cout << to_string(t) << "\n";
  return kOk;
}

int fusion_table(std::int64_t k, bool as_json) {
  if (k < 0) {
    std::cerr << "fusion table: --range must be non-negative\n";
    return kInputError;
  }
  json rows = json::array();
  std::size_t failures = 0;
  for (std::int64_t m = -k; m <= k; ++m)
    for (std::int64_t n = -k; n <= k; ++n)
      for (std::int64_t p = -k; p <= k; ++p)
        for (std::int64_t q = -k; q <= k; ++q) {
          const SimpleLabel x{m, n}, y{p, q};
          const auto t = tensor(x, y);
          const bool dim_ok = t.to_k0().dimension() == dim(x) * dim(y);
          failures += !dim_ok;
          if (as_json) {
            json row = decomposition_json(t);
            row["x"] = label_json(x);
            row["y"] = label_json(y);
            row["dim_ok"] = dim_ok;
            rows.push_back(std::move(row));
          } else {
            std::cout << to_string(x) << " x " << to_string(y) << " = " << to_string(t) << "   [dim "
                      << (dim_ok ? "ok" : "MISMATCH") << "]\n";
          }
        }
  if (as_json) std::cout << json{{"rows", rows}, {"dimension_failures", failures}}.dump() << "\n";
  else std::cout << "dimension check: " << failures << " failure(s)\n";
  return failures == 0 ? kOk : kMathFailure;
}

// ---------------------------------------------------------------------------
// hopf

std::string covector_string(const HopfAlgebra& h, const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (!s.empty()) s += " + ";
    if (v[i] != 1) s += pretty_scalar(v[i]) + "*";
    s += h.basis_names()[i] + "^*";
  }
  return s.empty() ? "0" : s;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

int hopf_analyze(const std::string& path, const std::string& comodule_path, bool as_json) {
  const HopfAlgebra h = hopf_from_json(load_json_file(path));
  if (const auto report = validate(h); !report) {
    std::cerr << "invalid Hopf algebra: axiom '" << report.failed_axiom << "' fails\n";
    return kInputError;
  }
  std::optional<Comodule> m;
  if (!comodule_path.empty()) {
    m = comodule_from_json(load_json_file(comodule_path), h.size());
    if (const auto report = validate_comodule(h, *m); !report) {
      std::cerr << "invalid comodule: axiom '" << report.failed_axiom << "' fails\n";
      return kInputError;
    }
  }

  const auto left = find_integral(h, Side::left);
  const auto right = find_integral(h, Side::right);
  if (!left || !right) {
    std::cerr << "hopf analyze: no nonzero integral found\n";
    return kMathFailure;
  }
  const std::size_t b_rank = rank(bilinear_form_b(h, *left));
  const bool assoc = convolution_associative(h, *left);
  const bool first_id = first_identity_holds(h, *left);
  const bool second_id = second_identity_holds(h, *right);

  json j{{"dim", h.size()},
         {"axioms", true},
         {"left_integral", vector_json(left->covector)},
         {"right_integral", vector_json(right->covector)},
         {"b_rank", b_rank},
         {"convolution_associative", assoc},
         {"first_identity", first_id},
         {"second_identity", second_id}};
  if (!as_json) {
    std::cout << "Hopf axioms               pass (dim " << h.size() << ")\n"
              << "left integral             " << covector_string(h, left->covector) << "\n"
              << "right integral            " << covector_string(h, right->covector) << "\n"
              << "rank of b                 " << b_rank << "\n"
              << "convolution associative   " << verdict(assoc) << "\n"
              << "first identity            " << verdict(first_id) << "\n"
              << "second identity           " << verdict(second_id) << "\n";
  }
  int code = (assoc && first_id && second_id) ? kOk : kMathFailure;

  if (m) {
    const auto simple = simplicity(h, *m);
    const bool projective = projectivity_oracle(h, *m);
    json cj{{"dim", m->dim()}, {"simple", simple.simple}, {"oracle_projective", projective}};
    if (!as_json) {
      std::cout << "comodule dimension        " << m->dim() << "\n"
                << "simple                    " << yes_no(simple.simple) << " (" << simple.reason << ")\n";
    }
    if (simple.simple) {
      const auto split = splitting_test(h, *m);
      const bool agree = split.splitting == projective;
      cj["coefficient_space_dim"] = split.coefficients.basis.size();
      cj["splitting"] = split.splitting;
      cj["agreement"] = agree ? "AGREE" : "DISAGREE";
      if (!as_json) {
        std::cout << "Cf(M) dimension           " << split.coefficients.basis.size() << "\n"
                  << "splitting                 " << yes_no(split.splitting) << "\n"
                  << "projective (oracle)       " << yes_no(projective) << "\n"
                  << (agree ? "AGREE" : "DISAGREE") << "\n";
      }
      if (!agree) code = kMathFailure;
    } else if (!as_json) {
      std::cout << "projective (oracle)       " << yes_no(projective) << "\n"
                << "splitting test skipped: the criterion applies to simple comodules\n";
    }
    j["comodule"] = std::move(cj);
  }
  if (as_json) std::cout << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Hecke symmetries, A(0|0) fusion rules and finite Hopf algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::function<int()> action;

  auto* hecke = app.add_subcommand("hecke", "R-matrix checks")->require_subcommand(1);
  std::string r_path;
  auto* verify = hecke->add_subcommand("verify", "Yang-Baxter, Hecke relation, closure, q-rank");
  verify->add_option("rmatrix", r_path, "R-matrix JSON file")->required();
  verify->add_flag("--json", as_json, "Machine-readable output");
  verify->callback([&] { action = [&] { return hecke_verify(r_path, as_json); }; });

  unsigned max_degree = 6;
  auto* poincare = hecke->add_subcommand("poincare", "Poincare series of the quantum symmetric and exterior algebras");
  poincare->add_option("rmatrix", r_path, "R-matrix JSON file")->required();
  poincare->add_option("--max-degree", max_degree, "Highest degree")->check(CLI::Range(0u, 6u));
  poincare->add_flag("--json", as_json, "Machine-readable output");
  poincare->callback([&] { action = [&] { return hecke_poincare(r_path, max_degree, as_json); }; });

  auto* fusion = app.add_subcommand("fusion", "Tensor products of simple comodules I(m,n)")->require_subcommand(1);
  std::int64_t labels[4] = {};
  auto* mul = fusion->add_subcommand("mul", "Decompose I(m,n) x I(p,q)");
  mul->add_option("m", labels[0])->required();
  mul->add_option("n", labels[1])->required();
  mul->add_option("p", labels[2])->required();
  mul->add_option("q", labels[3])->required();
  mul->add_flag("--json", as_json, "Machine-readable output");
  mul->callback([&] { action = [&] { return fusion_mul(labels[0], labels[1], labels[2], labels[3], as_json); }; });

  std::int64_t range = 1;
  auto* table = fusion->add_subcommand("table", "All products with labels in [-K, K]^2");
  table->add_option("--range", range, "K")->required();
  table->add_flag("--json", as_json, "Machine-readable output");
  table->callback([&] { action = [&] { return fusion_table(range, as_json); }; });

  auto* hopf = app.add_subcommand("hopf", "Finite-dimensional Hopf algebras")->require_subcommand(1);
  std::string hopf_path, comodule_path;
  auto* analyze = hopf->add_subcommand("analyze", "Integrals, convolution, splitting criterion");
  analyze->add_option("hopf", hopf_path, "Hopf algebra JSON file")->required();
  analyze->add_option("--comodule", comodule_path, "Comodule JSON file");
  analyze->add_flag("--json", as_json, "Machine-readable output");
  analyze->callback([&] { action = [&] { return hopf_analyze(hopf_path, comodule_path, as_json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathFailure;
  }
}
