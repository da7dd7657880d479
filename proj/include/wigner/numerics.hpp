#pragma once

#include <complex>
#include <functional>
#include <utility>

#include "wigner/errors.hpp"

namespace wigner::numerics {

using Complex = std::complex<double>;

// Integration request for a finite interval [lo, hi]. Improper integrals
// are truncated by the caller before they get here. The tolerance is
// relative for integrals of magnitude >= 1 and absolute below that, so
// near-zero integrals (orthogonality off-diagonals) still converge.
struct QuadratureSpec {
  double lo = 0.0;
  double hi = 1.0;
  double rel_tol = 1e-12;
  int max_refinements = 48;
};

// Rising factorial (a)_n = a (a+1) ... (a+n-1); 1 for n = 0.
// Overflow saturates to +/-inf rather than throwing.
double pochhammer_rising(double a, int n);
Complex pochhammer_rising(Complex a, int n);

// Terminating Gauss series 2F1(-n, b; c; z), summed as the exact
// (n+1)-term sum in binary128 accumulators. The alternating terms at
// z = 2 cancel down from ~3^n, so extended precision keeps n <= ~60
// meaningful; larger degrees go through the recurrence routes instead.
Complex terminating_2f1(int n, Complex b, double c, double z);

// Terminating Kummer series 1F1(-n; c; z).
double terminating_1f1(int n, double c, double z);

// Convergent 0F1(-; c; z), c > 0. Stops once a term drops below 1e-16
// of the partial sum; throws ConvergenceError past 10000 terms.
double hyp0f1(double c, double z);

// Convergent Kummer series 1F1(b; c; z) for complex b (closed forms of
// the generating-function identities need this); c > 0.
Complex hyp1f1(Complex b, double c, Complex z);

// Gamma on the complex plane: Lanczos (g = 7, 9 coefficients) with the
// reflection formula for re(z) < 1/2. PoleError at 0, -1, -2, ...
Complex gamma_complex(Complex z);

// |Gamma(z)|.
double abs_gamma(Complex z);

// Adaptive composite quadrature: 16-point Gauss-Legendre panels,
// bisected until two successive panel estimates agree. A panel never
// places a node at 0 (intervals straddling 0 are split there first),
// so integrable |x|^c singularities at the origin are fine.
Complex integrate(const std::function<Complex(double)>& f, const QuadratureSpec& spec);
double integrate_real(const std::function<double(double)>& f, const QuadratureSpec& spec);

// Generating-function identity checkers. Each returns (partial sum of
// the series side with n_terms terms, closed-form side); |t| < 1.
//
// jagannathan_pair:
//   sum_n (a)_n/n! 2F1(-n, b; a; y) 1F1(-n; a; x) t^n
//     = (1-t)^(b-a) (1-t+yt)^(-b) e^(xt/(t-1)) 1F1(b; a; xyt/((1-t)(1-t+yt)))
std::pair<Complex, Complex> jagannathan_pair(double a, Complex b, double x, double y,
                                             double t, int n_terms);

// intseries_pair:
//   sum_n (a)_n/n! 1F1(-n; a; x) 1F1(-n; a; y) t^n
//     = (1-t)^(-a) e^(t(x+y)/(t-1)) 0F1(-; a; txy/(1-t)^2)
std::pair<double, double> intseries_pair(double a, double x, double y, double t,
                                         int n_terms);

}  // namespace wigner::numerics
