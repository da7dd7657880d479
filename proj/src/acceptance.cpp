#include "wigner/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>

#include "wigner/numerics.hpp"
#include "wigner/orthopoly.hpp"
#include "wigner/osprep.hpp"
#include "wigner/spectral.hpp"
#include "wigner/wavefunc.hpp"

namespace wigner::acceptance {

namespace {

using numerics::Complex;
using osprep::Observable;
using osprep::RepParams;
using spectral::KernelGenerator;
using spectral::Subspace;
using wavefunc::WaveParity;

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr Complex kI{0.0, 1.0};
constexpr double kAGrid[4] = {0.3, 0.5, 1.0, 1.7};

struct Check {
  double observed = 0.0;
  std::string detail;
};

void track(double& worst, double value) { worst = std::max(worst, value); }

// --- criterion 1: algebra suite -------------------------------------------

Check algebra_suite() {
  double worst = 0.0;
  for (double a : kAGrid)
    track(worst, osprep::max_residual(osprep::relation_report({a, 128}, 4)));
  return {worst, "relation residuals, a in {0.3,0.5,1.0,1.7}, N=128, margin 4"};
}

// --- criterion 2: canonical commutator -------------------------------------

Check canonical_commutator() {
  double worst = 0.0;
  for (double a : kAGrid) {
    const RepParams params{a, 128};
    const auto x = osprep::observable(params, Observable::X);
    const auto p = osprep::observable(params, Observable::P);
    auto c = osprep::commutator(x, p);
    for (int k = 0; k < params.trunc; ++k)
      c.mat(k, k) -= (k % 2 == 0) ? 2.0 * a * kI : 2.0 * (1.0 - a) * kI;
    track(worst, osprep::interior_norm(c, 4));
  }
  return {worst, "[x,p] = 2ai on V0, 2(1-a)i on V1; equals i at a = 1/2"};
}

// --- criterion 3: closed form vs recurrence ---------------------------------

Check poly_equivalence() {
  using orthopoly::FamilyKind;
  struct Case {
    FamilyKind kind;
    double param;
    double point;
  };
  const Case cases[] = {
      {FamilyKind::MeixnerPollaczek, 1.1, 0.37},
      {FamilyKind::MeixnerPollaczek, 0.4, -1.25},
      {FamilyKind::Laguerre, 0.5, 3.1},
      {FamilyKind::Laguerre, -0.2, 7.4},
      {FamilyKind::GenHermite, 0.9, -1.4},
      {FamilyKind::GenHermite, 1.7, 0.8},
  };
  double worst = 0.0;
  for (const auto& c : cases) {
    const auto fam = orthopoly::make_family(c.kind, c.param);
    const auto rec = orthopoly::recurrence_all(fam, 40, c.point);
    for (int n = 0; n <= 40; ++n) {
      double closed = 0.0;
      switch (c.kind) {
        case FamilyKind::MeixnerPollaczek:
          closed = orthopoly::mp_eval(n, c.param, c.point, true);
          break;
        case FamilyKind::Laguerre:
          closed = orthopoly::laguerre_eval(n, c.param, c.point, true);
          break;
        case FamilyKind::GenHermite:
          closed = orthopoly::genhermite_eval(n, c.param, c.point, true);
          break;
      }
      track(worst, std::abs(closed - rec[n]) / std::abs(closed));
    }
  }
  return {worst, "three families, n <= 40, closed form vs recurrence"};
}

// --- criterion 4: orthogonality constants -----------------------------------

Check orthogonality_constants() {
  using orthopoly::FamilyKind;
  const numerics::QuadratureSpec spec{0.0, 1.0, 1e-9, 48};
  struct Case {
    FamilyKind kind;
    double param;
  };
  const Case cases[] = {
      {FamilyKind::MeixnerPollaczek, 0.8},
      {FamilyKind::Laguerre, 1.0},
      {FamilyKind::GenHermite, 0.3},
      {FamilyKind::GenHermite, 1.7},
  };
  double worst = 0.0;
  for (const auto& c : cases) {
    const auto fam = orthopoly::make_family(c.kind, c.param);
    const Eigen::MatrixXd g = orthopoly::gram_matrix(fam, 6, spec);
    const double target = orthopoly::orthonormality_constant(c.kind);
    const Eigen::MatrixXd dev =
        g - target * Eigen::MatrixXd::Identity(g.rows(), g.cols());
    track(worst, dev.cwiseAbs().maxCoeff());
  }
  return {worst, "Gram = I/2 (MP), 2I (Laguerre), I (GenHermite), degrees <= 6"};
}

// --- criterion 5: eigenvector residuals -------------------------------------

Check eigenvector_residuals() {
  double worst = 0.0;
  const int N = 256;

  const RepParams rep_hb{0.8, N};
  const auto hb = osprep::observable(rep_hb, Observable::Hb);
  for (double E : {-3.2, 1.7, 4.4})
    track(worst, spectral::eigen_residual(
                     hb, spectral::alpha_coeffs(0.8, E, N, Subspace::V0), E, 4));
  for (double E : {-2.4, 0.9, 3.1})
    track(worst, spectral::eigen_residual(
                     hb, spectral::alpha_coeffs(0.8, E, N, Subspace::V1), E, 4));

  const RepParams rep_x{0.5, N};
  const auto x_op = osprep::observable(rep_x, Observable::X);
  for (double x : {-2.1, 0.6, 1.0})
    track(worst,
          spectral::eigen_residual(x_op, spectral::beta_coeffs(0.5, x, N), x, 4));

  const RepParams rep_p{1.1, N};
  const auto p_op = osprep::observable(rep_p, Observable::P);
  for (double p : {-1.3, 0.6, 2.0})
    track(worst,
          spectral::eigen_residual(p_op, spectral::gamma_coeffs(1.1, p, N), p, 4));

  const RepParams rep_hf{1.2, N};
  const auto hf = osprep::observable(rep_hf, Observable::Hf);
  for (double E : {0.4, 0.9, 2.2})
    track(worst, spectral::eigen_residual(
                     hf, spectral::epsilon_coeffs(1.2, E, N, Subspace::V0), E, 4));
  for (double E : {0.3, 1.1, 1.8})
    track(worst, spectral::eigen_residual(
                     hf, spectral::epsilon_coeffs(1.2, E, N, Subspace::V1), E, 4));

  return {worst, "Hb u0/u1 (E<0 included), x v, p w, Hf z0/z1 (E>0), N=256"};
}

// --- criterion 6: canonical wave functions ----------------------------------

Check canonical_wave_functions() {
  double worst = 0.0;

  for (double x : {-2.0, 0.5, 3.0})
    for (double p : {-2.0, 0.5, 3.0}) {
      const Complex expected = std::exp(kI * (x * p)) / std::sqrt(2.0 * kPi);
      track(worst, std::abs(wavefunc::inner_x_p(0.5, x, p) - expected));
    }

  const double E = 1.0;
  const double k = std::sqrt(2.0 * E);
  for (int i = 0; i <= 10; ++i) {
    const double x = 0.5 * i;
    const double scale = std::pow(2.0 * E, -0.25) / std::sqrt(kPi);
    track(worst, std::abs(wavefunc::inner_x_z(0.5, x, E, WaveParity::Even) -
                          scale * std::cos(k * x)));
    track(worst, std::abs(wavefunc::inner_x_z(0.5, x, E, WaveParity::Odd) -
                          scale * std::sin(k * x)));
  }

  // Finite-difference eigenfunction checks at a = 1/2 (separate bound).
  double fd_worst = 0.0;
  {
    const auto even = wavefunc::make_wave_params(0.5, 1.0, 0.0);
    const auto odd = wavefunc::make_wave_params(0.5, 0.0, 1.0);
    const double Eb = 0.9;
    const double h = 1e-5;
    for (int i = 0; i <= 10; ++i) {
      const double x = 0.5 + 0.25 * i;
      for (const auto& wp : {even, odd}) {
        const Complex psi = wavefunc::psi_bk(wp, x, Eb);
        const Complex dpsi =
            (wavefunc::psi_bk(wp, x + h, Eb) - wavefunc::psi_bk(wp, x - h, Eb)) /
            (2.0 * h);
        const Complex applied = -kI * (x * dpsi + 0.5 * psi);
        track(fd_worst, std::abs(applied - Eb * psi) / std::abs(Eb * psi));
      }
    }
    const double Ef = 1.3;
    const double h2 = 1e-4;
    for (int i = 0; i <= 10; ++i) {
      const double x = 0.5 + 0.25 * i;
      for (const auto& wp : {even, odd}) {
        const Complex psi = wavefunc::psi_free(wp, x, Ef);
        const Complex lap = (wavefunc::psi_free(wp, x + h2, Ef) - 2.0 * psi +
                             wavefunc::psi_free(wp, x - h2, Ef)) /
                            (h2 * h2);
        const Complex applied = -0.5 * lap;
        track(fd_worst, std::abs(applied - Ef * psi) / std::abs(Ef * psi));
      }
    }
  }

  Check c;
  // One threshold covers both parts: closed forms at 1e-12, finite
  // differences at 1e-5 (scaled onto the same axis).
  c.observed = std::max(worst, fd_worst * 1e-7);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "closed forms %.2e (tol 1e-12); finite differences %.2e (tol 1e-5)",
                worst, fd_worst);
  c.detail = buf;
  return c;
}

// --- criterion 7: identity checkers -----------------------------------------

Check identity_checkers(unsigned seed) {
  std::mt19937 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };

  double worst = 0.0;
  for (int draw = 0; draw < 50; ++draw) {
    const double a = uniform(0.2, 2.0);
    const double t = uniform(-0.8, 0.8);
    const double x = uniform(0.0, 1.5);
    // Keep ((1+y)|t|)^n_terms within binary128 headroom.
    const double ymax = std::min(1.5, 1.25 / std::max(0.05, std::abs(t)) - 1.0);
    const double y = uniform(0.0, std::max(0.0, ymax));
    const Complex b(uniform(-1.5, 1.5), uniform(-1.5, 1.5));

    const auto [jl, jr] = numerics::jagannathan_pair(a, b, x, y, t, 200);
    track(worst, std::abs(jl - jr) / std::abs(jr));

    const double y2 = uniform(0.0, 1.5);
    const auto [il, ir] = numerics::intseries_pair(a, x, y2, t, 200);
    track(worst, std::abs(il - ir) / std::abs(ir));
  }

  // lim-2F1: 2F1(-n, b; c; z/b) -> 1F1(-n; c; z) along b = 1e2, 1e4, 1e6.
  const int n = 8;
  const double c = 1.3, z = 4.2;
  const double target = numerics::terminating_1f1(n, c, z);
  double prev = 1e300;
  bool monotone = true;
  double last = 0.0;
  for (double b : {1e2, 1e4, 1e6}) {
    last = std::abs(numerics::terminating_2f1(n, b, c, z / b) - target);
    monotone = monotone && last < prev;
    prev = last;
  }
  if (!monotone) worst = 1.0;

  char buf[120];
  std::snprintf(buf, sizeof buf,
                "50 draws, |t| <= 0.8; lim-2F1 gap %.1e at b=1e6, decreasing", last);
  return {worst, buf};
}

// --- criteria 8 and 9: smeared delta kernels --------------------------------

double smear_error(const std::function<double(double)>& kernel, double center,
                   double sigma, double lo_cap) {
  const auto phi = [&](double s) {
    const double d = (s - center) / sigma;
    return std::exp(-0.5 * d * d);
  };
  numerics::QuadratureSpec spec;
  spec.lo = std::max(lo_cap, center - 6.0 * sigma);
  spec.hi = center + 6.0 * sigma;
  spec.rel_tol = 1e-8;
  spec.max_refinements = 40;
  const double smeared =
      numerics::integrate_real([&](double s) { return kernel(s) * phi(s); }, spec);
  return std::abs(smeared - 1.0);
}

Check delta_normalization() {
  struct Case {
    KernelGenerator gen;
    double a;
    double s0;
    double sigma;
  };
  const Case cases[] = {
      {KernelGenerator::AlphaV0, 0.8, 1.0, 0.8},
      {KernelGenerator::Beta, 0.8, 0.8, 0.5},
      {KernelGenerator::Gamma, 1.1, 0.8, 0.25},
  };
  double worst = 0.0;
  bool monotone = true;
  for (const auto& c : cases) {
    double prev = 1e300;
    double err = 0.0;
    for (int N : {100, 200, 400}) {
      err = smear_error(
          [&](double s) { return spectral::delta_kernel(c.gen, c.a, c.s0, s, N); },
          c.s0, c.sigma, -1e300);
      monotone = monotone && err < prev;
      prev = err;
    }
    track(worst, err);
  }
  if (!monotone) worst = 1.0;
  return {worst, "alpha/beta/gamma kernels vs Gaussian, N in {100,200,400}"};
}

Check free_momentum_kernel() {
  const double a = 0.8, p = 1.1, sigma = 0.25;
  const double center = p * p / 2.0;
  const double target = std::sqrt(2.0) * std::sqrt(std::abs(p)) / 2.0;
  double prev = 1e300;
  bool monotone = true;
  double err = 0.0;
  for (int N : {100, 200, 400}) {
    err = smear_error(
        [&](double E) {
          return wavefunc::kernel_p_z(a, p, E, N, WaveParity::Even).real() / target;
        },
        center, sigma, 1e-8);
    monotone = monotone && err < prev;
    prev = err;
  }
  if (!monotone) err = 1.0;
  return {err, "smeared <w(p), z0(E)> vs sqrt2 sqrt|p| phi(p^2/2)/2"};
}

// --- criterion 10: phase and modulus facts ----------------------------------

Check phase_modulus() {
  double worst = 0.0;
  for (double a : {0.2, 0.5, 1.0, 1.7, 3.0})
    for (double E : {-20.0, -7.3, -1.0, 0.0, 2.6, 20.0}) {
      track(worst, std::abs(std::abs(wavefunc::phase_c0(a, E)) - 1.0));
      track(worst, std::abs(std::abs(wavefunc::phase_c1(a, E)) - 1.0));
    }

  for (double x : {0.3, 1.0, 2.5})
    for (double E : {-1.2, 0.7})
      for (auto parity : {WaveParity::Even, WaveParity::Odd}) {
        double lo = 1e300, hi = 0.0;
        for (double a : {0.3, 0.5, 1.7}) {
          const double m = std::abs(wavefunc::inner_x_u(a, x, E, parity));
          lo = std::min(lo, m);
          hi = std::max(hi, m);
        }
        track(worst, hi - lo);
      }
  return {worst, "|C0| = |C1| = 1; |psi0|, |psi1| carry no a dependence"};
}

// --- driver ------------------------------------------------------------------

CriterionResult run_one(int id, const std::string& name, double tolerance,
                        double budget_seconds,
                        const std::function<Check()>& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.tolerance = tolerance;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Check c = body();
    r.observed = c.observed;
    r.detail = c.detail;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
    r.pass = (c.observed < tolerance) &&
             (budget_seconds <= 0.0 || r.seconds < budget_seconds);
    if (budget_seconds > 0.0 && r.seconds >= budget_seconds)
      r.detail += " [runtime budget exceeded]";
  } catch (const std::exception& err) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
    r.pass = false;
    r.observed = std::numeric_limits<double>::infinity();
    r.detail = std::string("exception: ") + err.what();
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_all(unsigned seed) {
  std::vector<CriterionResult> results;
  results.push_back(run_one(1, "algebra-suite", 1e-11, 5.0, algebra_suite));
  results.push_back(
      run_one(2, "canonical-commutator", 1e-12, 0.0, canonical_commutator));
  results.push_back(run_one(3, "poly-equivalence", 1e-9, 2.0, poly_equivalence));
  results.push_back(
      run_one(4, "orthogonality-constants", 1e-7, 20.0, orthogonality_constants));
  results.push_back(
      run_one(5, "eigenvector-residuals", 1e-9, 0.0, eigenvector_residuals));
  results.push_back(
      run_one(6, "canonical-wave-functions", 1e-12, 0.0, canonical_wave_functions));
  results.push_back(run_one(7, "identity-checkers", 1e-8, 0.0,
                            [seed]() { return identity_checkers(seed); }));
  results.push_back(
      run_one(8, "delta-normalization", 5e-2, 0.0, delta_normalization));
  results.push_back(
      run_one(9, "free-momentum-kernel", 1e-1, 0.0, free_momentum_kernel));
  results.push_back(run_one(10, "phase-modulus", 1e-12, 0.0, phase_modulus));
  return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string format_line(const CriterionResult& r) {
  char buf[320];
  std::snprintf(buf, sizeof buf, "[%s] %2d %-25s observed=%.3e tol=%.1e (%.2fs) %s",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.observed,
                r.tolerance, r.seconds, r.detail.c_str());
  return buf;
}

}  // namespace wigner::acceptance
