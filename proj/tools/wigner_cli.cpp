// Command line front end: tables, matrices, wave-function samples, and
// verification reports in CSV or JSON.
#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wigner/acceptance.hpp"
#include "wigner/numerics.hpp"
#include "wigner/orthopoly.hpp"
#include "wigner/osprep.hpp"
#include "wigner/spectral.hpp"
#include "wigner/wavefunc.hpp"

namespace {

using json = nlohmann::ordered_json;
using wigner::numerics::Complex;

struct OutputConfig {
  std::string format = "csv";
  std::string path;  // empty = stdout
  int precision = 12;
};

std::string fmt_num(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

// One table cell: a label or a number already rounded to the configured
// precision; JSON keeps the numeric type.
struct Cell {
  std::string text;
  bool numeric;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

Cell num(double v, const OutputConfig& cfg) { return {fmt_num(v, cfg.precision), true}; }
Cell num(int v) { return {std::to_string(v), true}; }
Cell label(std::string s) { return {std::move(s), false}; }

void write_output(const Table& table, const OutputConfig& cfg) {
  std::ostringstream out;
  if (cfg.format == "csv") {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? "," : "") << table.columns[c];
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c].text;
      out << "\n";
    }
  } else {
    json records = json::array();
    for (const auto& row : table.rows) {
      json rec = json::object();
      for (std::size_t c = 0; c < row.size(); ++c)
        rec[table.columns[c]] =
            row[c].numeric ? json::parse(row[c].text) : json(row[c].text);
      records.push_back(std::move(rec));
    }
    out << records.dump(2) << "\n";
  }
  if (cfg.path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(cfg.path);
    if (!f) throw wigner::DomainError("cannot open output file: " + cfg.path);
    f << out.str();
  }
}

void write_text(const std::string& text, const OutputConfig& cfg) {
  if (cfg.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.path);
    if (!f) throw wigner::DomainError("cannot open output file: " + cfg.path);
    f << text;
  }
}

std::vector<double> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw CLI::ValidationError("grid", "expected lo:hi:count");
  const double lo = std::stod(text.substr(0, c1));
  const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const long count = std::stol(text.substr(c2 + 1));
  if (count < 1) throw CLI::ValidationError("grid", "count must be >= 1");
  if (count > 1 && !(lo < hi))
    throw CLI::ValidationError("grid", "need lo < hi for count > 1");
  std::vector<double> grid(count);
  for (long i = 0; i < count; ++i)
    grid[i] = (count == 1) ? lo : lo + (hi - lo) * static_cast<double>(i) /
                                      static_cast<double>(count - 1);
  return grid;
}

// Complex literals of the form "re", "imi", or "re+imi" ("0.5-0.5i").
Complex parse_complex(std::string s) {
  std::erase(s, ' ');
  if (s.empty()) throw CLI::ValidationError("complex", "empty literal");
  if (s.back() != 'i') return {std::stod(s), 0.0};
  s.pop_back();
  if (s.empty() || s == "+") return {0.0, 1.0};
  if (s == "-") return {0.0, -1.0};
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, std::stod(s)};
  const std::string re = s.substr(0, split);
  std::string im = s.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {std::stod(re), std::stod(im)};
}

// ---------------------------------------------------------------------------

int run_poly(const std::string& family, double a, int nmax,
             const std::string& grid_text, bool normalized, const OutputConfig& cfg) {
  using wigner::orthopoly::FamilyKind;
  FamilyKind kind;
  if (family == "mp") kind = FamilyKind::MeixnerPollaczek;
  else if (family == "laguerre") kind = FamilyKind::Laguerre;
  else if (family == "genhermite") kind = FamilyKind::GenHermite;
  else throw CLI::ValidationError("family", "one of mp|laguerre|genhermite");

  const auto grid = parse_grid(grid_text);
  try {
    wigner::orthopoly::make_family(kind, a);
  } catch (const wigner::DomainError& e) {
    throw CLI::ValidationError("a", e.what());
  }

  Table t;
  t.columns = {"family", "degree", "point", "value", "normalized"};
  for (int n = 0; n <= nmax; ++n)
    for (const double x : grid) {
      double v = 0.0;
      switch (kind) {
        case FamilyKind::MeixnerPollaczek:
          v = wigner::orthopoly::mp_eval(n, a, x, normalized);
          break;
        case FamilyKind::Laguerre:
          v = wigner::orthopoly::laguerre_eval(n, a, x, normalized);
          break;
        case FamilyKind::GenHermite:
          v = wigner::orthopoly::genhermite_eval(n, a, x, normalized);
          break;
      }
      t.add_row({label(family), num(n), num(x, cfg), num(v, cfg),
                 label(normalized ? "true" : "false")});
    }
  write_output(t, cfg);
  return 0;
}

int run_operators(double a, int trunc, const std::string& which,
                  const OutputConfig& cfg) {
  using wigner::osprep::Observable;
  const wigner::osprep::RepParams params{a, trunc};
  wigner::osprep::Operator op;
  if (which == "x") op = wigner::osprep::observable(params, Observable::X);
  else if (which == "p") op = wigner::osprep::observable(params, Observable::P);
  else if (which == "hb") op = wigner::osprep::observable(params, Observable::Hb);
  else if (which == "hf") op = wigner::osprep::observable(params, Observable::Hf);
  else if (which == "bplus") op = wigner::osprep::ladder_ops(params).first;
  else if (which == "bminus") op = wigner::osprep::ladder_ops(params).second;
  else if (which == "h") op = std::get<0>(wigner::osprep::even_triple(params));
  else if (which == "e") op = std::get<1>(wigner::osprep::even_triple(params));
  else if (which == "f") op = std::get<2>(wigner::osprep::even_triple(params));
  else throw CLI::ValidationError("which", "one of x|p|hb|hf|bplus|bminus|h|e|f");

  Table t;
  t.columns = {"row", "col", "re", "im"};
  for (int i = 0; i < op.dim(); ++i)
    for (int j = 0; j < op.dim(); ++j)
      t.add_row({num(i), num(j), num(op.mat(i, j).real(), cfg),
                 num(op.mat(i, j).imag(), cfg)});
  write_output(t, cfg);
  return 0;
}

wigner::spectral::CoefficientVector make_coeffs(const std::string& generator, double a,
                                                double value, int trunc) {
  using wigner::spectral::Subspace;
  if (generator == "alpha0")
    return wigner::spectral::alpha_coeffs(a, value, trunc, Subspace::V0);
  if (generator == "alpha1")
    return wigner::spectral::alpha_coeffs(a, value, trunc, Subspace::V1);
  if (generator == "beta") return wigner::spectral::beta_coeffs(a, value, trunc);
  if (generator == "gamma") return wigner::spectral::gamma_coeffs(a, value, trunc);
  if (generator == "epsilon0")
    return wigner::spectral::epsilon_coeffs(a, value, trunc, Subspace::V0);
  if (generator == "epsilon1")
    return wigner::spectral::epsilon_coeffs(a, value, trunc, Subspace::V1);
  throw CLI::ValidationError("generator",
                             "one of alpha0|alpha1|beta|gamma|epsilon0|epsilon1");
}

int run_spectrum(const std::string& generator, double a, double value, int trunc,
                 const OutputConfig& cfg) {
  const auto cv = make_coeffs(generator, a, value, trunc);
  Table t;
  t.columns = {"index", "re", "im"};
  for (int i = 0; i < cv.size(); ++i)
    t.add_row({num(i), num(cv.values(i).real(), cfg), num(cv.values(i).imag(), cfg)});
  write_output(t, cfg);
  return 0;
}

int run_wavefunction(const std::string& system, double a, double E,
                     const std::string& A_text, const std::string& B_text,
                     const std::string& grid_text, const OutputConfig& cfg) {
  const auto params =
      wigner::wavefunc::make_wave_params(a, parse_complex(A_text), parse_complex(B_text));
  const auto grid = parse_grid(grid_text);

  std::vector<wigner::wavefunc::SampleRow> rows;
  rows.reserve(grid.size());
  for (const double x : grid) {
    Complex v;
    if (system == "bk") v = wigner::wavefunc::psi_bk(params, x, E);
    else if (system == "free") v = wigner::wavefunc::psi_free(params, x, E);
    else throw CLI::ValidationError("system", "one of bk|free");
    rows.push_back({x, v});
  }
  const auto table = wigner::wavefunc::make_sample_table(std::move(rows));

  Table t;
  t.columns = {"x", "re", "im"};
  for (const auto& row : table.rows)
    t.add_row({num(row.point, cfg), num(row.value.real(), cfg),
               num(row.value.imag(), cfg)});
  write_output(t, cfg);
  return 0;
}

int run_kernel(const std::string& generator, double a, double s,
               const std::string& grid_text, int terms, const OutputConfig& cfg) {
  const auto grid = parse_grid(grid_text);
  Table t;
  t.columns = {"sprime", "re", "im"};
  for (const double sp : grid) {
    Complex v;
    if (generator == "pz-even")
      v = wigner::wavefunc::kernel_p_z(a, s, sp, terms, wigner::wavefunc::WaveParity::Even);
    else if (generator == "pz-odd")
      v = wigner::wavefunc::kernel_p_z(a, s, sp, terms, wigner::wavefunc::WaveParity::Odd);
    else {
      using wigner::spectral::KernelGenerator;
      KernelGenerator gen;
      if (generator == "alpha0") gen = KernelGenerator::AlphaV0;
      else if (generator == "alpha1") gen = KernelGenerator::AlphaV1;
      else if (generator == "beta") gen = KernelGenerator::Beta;
      else if (generator == "gamma") gen = KernelGenerator::Gamma;
      else if (generator == "epsilon0") gen = KernelGenerator::EpsilonV0;
      else if (generator == "epsilon1") gen = KernelGenerator::EpsilonV1;
      else
        throw CLI::ValidationError(
            "generator", "one of alpha0|alpha1|beta|gamma|epsilon0|epsilon1|pz-even|pz-odd");
      v = wigner::spectral::delta_kernel(gen, a, s, sp, terms);
    }
    t.add_row({num(sp, cfg), num(v.real(), cfg), num(v.imag(), cfg)});
  }
  write_output(t, cfg);
  return 0;
}

int run_gram(const std::string& family, double a, int maxdeg, double rel_tol,
             const OutputConfig& cfg) {
  using wigner::orthopoly::FamilyKind;
  FamilyKind kind;
  if (family == "mp") kind = FamilyKind::MeixnerPollaczek;
  else if (family == "laguerre") kind = FamilyKind::Laguerre;
  else if (family == "genhermite") kind = FamilyKind::GenHermite;
  else throw CLI::ValidationError("family", "one of mp|laguerre|genhermite");

  wigner::orthopoly::PolyFamily fam;
  try {
    fam = wigner::orthopoly::make_family(kind, a);
  } catch (const wigner::DomainError& e) {
    throw CLI::ValidationError("a", e.what());
  }
  const wigner::numerics::QuadratureSpec spec{0.0, 1.0, rel_tol, 48};
  const Eigen::MatrixXd g = wigner::orthopoly::gram_matrix(fam, maxdeg, spec);
  const double c = wigner::orthopoly::orthonormality_constant(kind);

  Table t;
  t.columns = {"m", "n", "value", "deviation"};
  for (int m = 0; m < g.rows(); ++m)
    for (int n = 0; n < g.cols(); ++n)
      t.add_row({num(m), num(n), num(g(m, n), cfg),
                 num(g(m, n) - (m == n ? c : 0.0), cfg)});
  write_output(t, cfg);
  return 0;
}

int run_verify(double a, int trunc, int margin, double tol, double gram_tol,
               int gram_maxdeg, const OutputConfig& cfg) {
  json checks = json::array();
  bool all_pass = true;
  auto push = [&](const std::string& name, double residual, double tolerance) {
    const bool pass = residual < tolerance;
    all_pass = all_pass && pass;
    checks.push_back({{"name", name},
                      {"residual", json::parse(fmt_num(residual, cfg.precision))},
                      {"tolerance", json::parse(fmt_num(tolerance, cfg.precision))},
                      {"pass", pass}});
  };

  const wigner::osprep::RepParams params{a, trunc};
  for (const auto& r : wigner::osprep::relation_report(params, margin))
    push(r.name, r.residual, tol);

  {
    using wigner::osprep::Observable;
    const auto x = wigner::osprep::observable(params, Observable::X);
    const auto p = wigner::osprep::observable(params, Observable::P);
    auto c = wigner::osprep::commutator(x, p);
    const Complex I{0.0, 1.0};
    for (int k = 0; k < trunc; ++k)
      c.mat(k, k) -= (k % 2 == 0) ? 2.0 * a * I : 2.0 * (1.0 - a) * I;
    push("canonical_commutator", wigner::osprep::interior_norm(c, margin), tol);
  }

  using wigner::orthopoly::FamilyKind;
  const wigner::numerics::QuadratureSpec spec{0.0, 1.0, 1e-9, 48};
  struct GramCase {
    const char* name;
    FamilyKind kind;
    double param;
  };
  const GramCase gram_cases[] = {
      {"gram_mp", FamilyKind::MeixnerPollaczek, a},
      {"gram_laguerre", FamilyKind::Laguerre, a - 1.0},
      {"gram_genhermite", FamilyKind::GenHermite, a},
  };
  for (const auto& gc : gram_cases) {
    const auto fam = wigner::orthopoly::make_family(gc.kind, gc.param);
    const Eigen::MatrixXd g = wigner::orthopoly::gram_matrix(fam, gram_maxdeg, spec);
    const double c = wigner::orthopoly::orthonormality_constant(gc.kind);
    const Eigen::MatrixXd dev =
        g - c * Eigen::MatrixXd::Identity(g.rows(), g.cols());
    push(gc.name, dev.cwiseAbs().maxCoeff(), gram_tol);
  }

  json report = {{"a", a},          {"trunc", trunc},     {"margin", margin},
                 {"tolerance", tol}, {"checks", checks},  {"all_pass", all_pass}};
  write_text(report.dump(2) + "\n", cfg);
  return all_pass ? 0 : 1;
}

int run_selftest(unsigned seed, const OutputConfig& cfg) {
  const auto results = wigner::acceptance::run_all(seed);
  // No timing fields here: selftest output is byte-identical across runs
  // for a fixed seed.
  std::string out;
  if (cfg.format == "json") {
    json records = json::array();
    for (const auto& r : results)
      records.push_back({{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"observed", json::parse(fmt_num(r.observed, cfg.precision))},
                         {"tolerance", json::parse(fmt_num(r.tolerance, cfg.precision))},
                         {"detail", r.detail}});
    out = records.dump(2) + "\n";
  } else {
    for (const auto& r : results) {
      char buf[320];
      std::snprintf(buf, sizeof buf, "[%s] %2d %-25s observed=%.3e tol=%.1e %s\n",
                    r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.observed,
                    r.tolerance, r.detail.c_str());
      out += buf;
    }
    out += std::to_string(results.size()) + " criteria, ";
    out += wigner::acceptance::all_pass(results) ? "all passed\n" : "FAILURES\n";
  }
  write_text(out, cfg);
  return wigner::acceptance::all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner quantization of xp and the free particle: osp(1|2) matrices, "
               "orthogonal-polynomial eigenvectors, and generalized wave functions"};
  app.require_subcommand(1);

  OutputConfig cfg;
  unsigned seed = 42;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.path, "Output file (default: stdout)");
  app.add_option("--precision", cfg.precision, "Significant digits in output")
      ->check(CLI::Range(4, 17))
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized sweeps")->capture_default_str();

  // poly
  auto* poly = app.add_subcommand("poly", "Tabulate an orthogonal polynomial family");
  std::string poly_family, poly_grid = "-2:2:9";
  double poly_a = 0.5;
  int poly_nmax = 4;
  bool poly_norm = false;
  poly->add_option("--family", poly_family, "mp|laguerre|genhermite")->required();
  poly->add_option("--a", poly_a, "family parameter (alpha for laguerre)")->required();
  poly->add_option("--nmax", poly_nmax, "highest degree")->check(CLI::Range(0, 200));
  poly->add_option("--grid", poly_grid, "evaluation grid lo:hi:count")->required();
  poly->add_flag("--normalized", poly_norm, "evaluate the normalized variant");

  // operators
  auto* ops = app.add_subcommand("operators", "Dump a truncated operator matrix");
  std::string ops_which;
  double ops_a = 0.5;
  int ops_trunc = 128;
  ops->add_option("--a", ops_a, "representation parameter")->required();
  ops->add_option("--trunc", ops_trunc, "truncation dimension");
  ops->add_option("--which", ops_which, "x|p|hb|hf|bplus|bminus|h|e|f")->required();

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "Formal-eigenvector coefficients");
  std::string spec_gen;
  double spec_a = 0.5, spec_value = 1.0;
  int spec_trunc = 128;
  spec->add_option("--generator", spec_gen,
                   "alpha0|alpha1|beta|gamma|epsilon0|epsilon1")
      ->required();
  spec->add_option("--a", spec_a, "representation parameter")->required();
  spec->add_option("--value", spec_value, "eigenvalue (E, x, or p)")->required();
  spec->add_option("--trunc", spec_trunc, "coefficient vector length");

  // wavefunction
  auto* wf = app.add_subcommand("wavefunction", "Generalized wave function samples");
  std::string wf_system, wf_A = "1", wf_B = "0", wf_grid;
  double wf_a = 0.5, wf_E = 1.0;
  wf->add_option("--system", wf_system, "bk|free")->required();
  wf->add_option("--a", wf_a, "representation parameter")->required();
  wf->add_option("--E", wf_E, "energy eigenvalue")->required();
  wf->add_option("--A", wf_A, "even weight, complex literal re+imi");
  wf->add_option("--B", wf_B, "odd weight, complex literal re+imi");
  wf->add_option("--grid", wf_grid, "x grid lo:hi:count")->required();

  // kernel
  auto* ker = app.add_subcommand("kernel", "Partial delta-normalization kernels");
  std::string ker_gen, ker_grid;
  double ker_a = 0.5, ker_s = 1.0;
  int ker_terms = 400;
  ker->add_option("--generator", ker_gen,
                  "alpha0|alpha1|beta|gamma|epsilon0|epsilon1|pz-even|pz-odd")
      ->required();
  ker->add_option("--a", ker_a, "representation parameter")->required();
  ker->add_option("--s", ker_s, "first argument (E, x, or p)")->required();
  ker->add_option("--grid", ker_grid, "second-argument grid lo:hi:count")->required();
  ker->add_option("--terms", ker_terms, "number of kernel terms")
      ->check(CLI::Range(1, 100000));

  // gram
  auto* gram = app.add_subcommand("gram", "Orthonormality Gram matrix");
  std::string gram_family;
  double gram_a = 0.5, gram_rel_tol = 1e-9;
  int gram_maxdeg = 6;
  gram->add_option("--family", gram_family, "mp|laguerre|genhermite")->required();
  gram->add_option("--a", gram_a, "family parameter (alpha for laguerre)")->required();
  gram->add_option("--maxdeg", gram_maxdeg, "highest degree")->check(CLI::Range(0, 20));
  gram->add_option("--rel-tol", gram_rel_tol, "quadrature tolerance");

  // verify
  auto* verify = app.add_subcommand("verify", "Algebraic relation and Gram report");
  double verify_a = 0.5, verify_tol = 1e-9, verify_gram_tol = 1e-7;
  int verify_trunc = 128, verify_margin = 4, verify_gram_maxdeg = 4;
  verify->add_option("--a", verify_a, "representation parameter");
  verify->add_option("--trunc", verify_trunc, "truncation dimension");
  verify->add_option("--margin", verify_margin, "interior mask margin");
  verify->add_option("--tol", verify_tol, "relation residual tolerance");
  verify->add_option("--gram-tol", verify_gram_tol, "Gram deviation tolerance");
  verify->add_option("--gram-maxdeg", verify_gram_maxdeg, "Gram matrix degree");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");

  // Global output flags are accepted after the subcommand name too.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    // Shared validation with the message the interface promises.
    for (const auto* sub : {poly, ops, spec, wf, ker, gram, verify})
      if (sub->parsed()) {
        const double a_flag = sub == poly ? poly_a
                              : sub == ops ? ops_a
                              : sub == spec ? spec_a
                              : sub == wf ? wf_a
                              : sub == ker ? ker_a
                              : sub == gram ? gram_a
                                            : verify_a;
        if (sub == gram || sub == poly) {
          // Laguerre admits negative parameters; family validation later.
        } else if (!(a_flag > 0.0)) {
          std::cerr << "a must be positive\n";
          return 2;
        }
      }

    if (poly->parsed())
      return run_poly(poly_family, poly_a, poly_nmax, poly_grid, poly_norm, cfg);
    if (ops->parsed()) return run_operators(ops_a, ops_trunc, ops_which, cfg);
    if (spec->parsed())
      return run_spectrum(spec_gen, spec_a, spec_value, spec_trunc, cfg);
    if (wf->parsed())
      return run_wavefunction(wf_system, wf_a, wf_E, wf_A, wf_B, wf_grid, cfg);
    if (ker->parsed()) return run_kernel(ker_gen, ker_a, ker_s, ker_grid, ker_terms, cfg);
    if (gram->parsed())
      return run_gram(gram_family, gram_a, gram_maxdeg, gram_rel_tol, cfg);
    if (verify->parsed())
      return run_verify(verify_a, verify_trunc, verify_margin, verify_tol,
                        verify_gram_tol, verify_gram_maxdeg, cfg);
    if (selftest->parsed()) return run_selftest(seed, cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const wigner::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
