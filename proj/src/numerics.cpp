#include "wigner/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace wigner::numerics {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// binary128 scalar/complex used as accumulator type for the terminating
// hypergeometric sums. Only +,-,*,/ are needed, so no libquadmath.
using quad = __float128;

struct QComplex {
  quad re = 0;
  quad im = 0;
};

inline QComplex operator+(QComplex a, QComplex b) { return {a.re + b.re, a.im + b.im}; }
inline QComplex operator*(QComplex a, QComplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline QComplex operator*(QComplex a, quad s) { return {a.re * s, a.im * s}; }
inline QComplex operator/(QComplex a, quad s) { return {a.re / s, a.im / s}; }

inline Complex to_complex(QComplex v) {
  return {static_cast<double>(v.re), static_cast<double>(v.im)};
}

// True when c lands on one of the vanishing denominators (c)_k, k < n,
// i.e. c in {0, -1, ..., -n+1}.
bool pochhammer_vanishes(double c, int n) {
  if (c > 0.0 || c <= -static_cast<double>(n)) return false;
  return c == std::floor(c);
}

}  // namespace

double pochhammer_rising(double a, int n) {
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

Complex pochhammer_rising(Complex a, int n) {
  Complex p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + static_cast<double>(k);
  return p;
}

Complex terminating_2f1(int n, Complex b, double c, double z) {
  if (n < 0) throw DomainError("terminating_2f1: n must be nonnegative");
  if (pochhammer_vanishes(c, n))
    throw DomainError("terminating_2f1: denominator Pochhammer (c)_k vanishes");
  QComplex sum{1, 0};
  QComplex term{1, 0};
  const quad zq = z;
  for (int k = 0; k < n; ++k) {
    const QComplex bk{static_cast<quad>(b.real()) + k, static_cast<quad>(b.imag())};
    const quad top = static_cast<quad>(-n + k);
    const quad bot = (static_cast<quad>(c) + k) * (static_cast<quad>(k) + 1);
    term = term * bk * (top * zq / bot);
    sum = sum + term;
  }
  return to_complex(sum);
}

double terminating_1f1(int n, double c, double z) {
  if (n < 0) throw DomainError("terminating_1f1: n must be nonnegative");
  if (pochhammer_vanishes(c, n))
    throw DomainError("terminating_1f1: denominator Pochhammer (c)_k vanishes");
  quad sum = 1;
  quad term = 1;
  for (int k = 0; k < n; ++k) {
    term *= static_cast<quad>(-n + k) * static_cast<quad>(z) /
            ((static_cast<quad>(c) + k) * (static_cast<quad>(k) + 1));
    sum += term;
  }
  return static_cast<double>(sum);
}

double hyp0f1(double c, double z) {
  if (c <= 0.0) throw DomainError("hyp0f1: require c > 0");
  long double sum = 1.0L;
  long double term = 1.0L;
  for (int k = 0; k < 10000; ++k) {
    term *= static_cast<long double>(z) /
            ((static_cast<long double>(c) + k) * (k + 1.0L));
    sum += term;
    if (std::abs(static_cast<double>(term)) <
        1e-16 * std::max(1.0, std::abs(static_cast<double>(sum))))
      return static_cast<double>(sum);
  }
  throw ConvergenceError("hyp0f1: series cap of 10000 terms reached");
}

Complex hyp1f1(Complex b, double c, Complex z) {
  if (c <= 0.0) throw DomainError("hyp1f1: require c > 0");
  std::complex<long double> sum = 1.0L;
  std::complex<long double> term = 1.0L;
  const std::complex<long double> zl(z.real(), z.imag());
  const std::complex<long double> bl(b.real(), b.imag());
  for (int k = 0; k < 10000; ++k) {
    term *= (bl + static_cast<long double>(k)) * zl /
            ((static_cast<long double>(c) + k) * (k + 1.0L));
    sum += term;
    if (std::abs(term) < 1e-16L * std::max<long double>(1.0L, std::abs(sum)))
      return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
  }
  throw ConvergenceError("hyp1f1: series cap of 10000 terms reached");
}

namespace {

// Standard Lanczos set, g = 7, 9 coefficients.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex gamma_positive_half(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

Complex gamma_complex(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw PoleError("gamma_complex: pole at nonpositive integer");
  if (z.real() < 0.5)
    return kPi / (std::sin(kPi * z) * gamma_positive_half(1.0 - z));
  return gamma_positive_half(z);
}

double abs_gamma(Complex z) { return std::abs(gamma_complex(z)); }

namespace {

struct GLNode {
  double x;
  double w;
};

constexpr std::array<GLNode, 16> kGL16 = {{
    {-9.89400934991649939e-01, 2.71524594117540374e-02},
    {-9.44575023073232600e-01, 6.22535239386477063e-02},
    {-8.65631202387831755e-01, 9.51585116824925914e-02},
    {-7.55404408355002999e-01, 1.24628971255534030e-01},
    {-6.17876244402643771e-01, 1.49595988816576764e-01},
    {-4.58016777657227370e-01, 1.69156519395002619e-01},
    {-2.81603550779258915e-01, 1.82603415044923612e-01},
    {-9.50125098376374544e-02, 1.89450610455068585e-01},
    {+9.50125098376374544e-02, 1.89450610455068585e-01},
    {+2.81603550779258915e-01, 1.82603415044923612e-01},
    {+4.58016777657227370e-01, 1.69156519395002619e-01},
    {+6.17876244402643771e-01, 1.49595988816576764e-01},
    {+7.55404408355002999e-01, 1.24628971255534030e-01},
    {+8.65631202387831755e-01, 9.51585116824925914e-02},
    {+9.44575023073232600e-01, 6.22535239386477063e-02},
    {+9.89400934991649939e-01, 2.71524594117540374e-02},
}};

Complex gl16(const std::function<Complex(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex acc = 0.0;
  for (const auto& node : kGL16) acc += node.w * f(mid + half * node.x);
  return half * acc;
}

// Depth-first bisection. A panel is accepted once the one-panel and
// two-panel estimates agree to the fixed absolute budget `tol`.
Complex adapt(const std::function<Complex(double)>& f, double a, double b, Complex whole,
              double tol, int depth, int max_depth) {
  const double mid = 0.5 * (a + b);
  const Complex left = gl16(f, a, mid);
  const Complex right = gl16(f, mid, b);
  const Complex refined = left + right;
  if (std::abs(refined - whole) <= tol) return refined;
  if (depth >= max_depth)
    throw ConvergenceError("integrate: max_refinements exhausted before tolerance");
  return adapt(f, a, mid, left, tol, depth + 1, max_depth) +
         adapt(f, mid, b, right, tol, depth + 1, max_depth);
}

Complex integrate_simple(const std::function<Complex(double)>& f,
                         const QuadratureSpec& spec) {
  const Complex rough = gl16(f, spec.lo, spec.hi);
  const double tol =
      0.05 * spec.rel_tol * std::max(1.0, std::abs(rough));
  return adapt(f, spec.lo, spec.hi, rough, tol, 1, spec.max_refinements);
}

}  // namespace

Complex integrate(const std::function<Complex(double)>& f, const QuadratureSpec& spec) {
  if (!(spec.lo < spec.hi)) throw DomainError("integrate: require lo < hi");
  if (spec.rel_tol <= 0.0) throw DomainError("integrate: require rel_tol > 0");
  if (spec.max_refinements < 1)
    throw DomainError("integrate: require max_refinements >= 1");
  if (spec.lo < 0.0 && spec.hi > 0.0) {
    QuadratureSpec neg = spec;
    neg.hi = 0.0;
    QuadratureSpec pos = spec;
    pos.lo = 0.0;
    return integrate_simple(f, neg) + integrate_simple(f, pos);
  }
  return integrate_simple(f, spec);
}

double integrate_real(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  return integrate([&f](double x) { return Complex(f(x), 0.0); }, spec).real();
}

std::pair<Complex, Complex> jagannathan_pair(double a, Complex b, double x, double y,
                                             double t, int n_terms) {
  if (a <= 0.0) throw DomainError("jagannathan_pair: require a > 0");
  if (!(std::abs(t) < 1.0)) throw DomainError("jagannathan_pair: require |t| < 1");
  if (n_terms < 1) throw DomainError("jagannathan_pair: require n_terms >= 1");

  Complex lhs = 0.0;
  double coeff = 1.0;  // (a)_n t^n / n!
  for (int n = 0; n < n_terms; ++n) {
    if (n > 0) coeff *= (a + n - 1.0) * t / n;
    lhs += coeff * terminating_2f1(n, b, a, y) * terminating_1f1(n, a, x);
  }

  const Complex one_m_t = 1.0 - t;
  const Complex base = 1.0 - t + y * t;
  const Complex arg = x * y * t / (one_m_t * base);
  const Complex rhs = std::pow(one_m_t, b - a) * std::pow(base, -b) *
                      std::exp(x * t / (t - 1.0)) * hyp1f1(b, a, arg);
  return {lhs, rhs};
}

std::pair<double, double> intseries_pair(double a, double x, double y, double t,
                                         int n_terms) {
  if (a <= 0.0) throw DomainError("intseries_pair: require a > 0");
  if (!(std::abs(t) < 1.0)) throw DomainError("intseries_pair: require |t| < 1");
  if (n_terms < 1) throw DomainError("intseries_pair: require n_terms >= 1");

  double lhs = 0.0;
  double coeff = 1.0;
  for (int n = 0; n < n_terms; ++n) {
    if (n > 0) coeff *= (a + n - 1.0) * t / n;
    lhs += coeff * terminating_1f1(n, a, x) * terminating_1f1(n, a, y);
  }

  const double om = 1.0 - t;
  const double rhs = std::pow(om, -a) * std::exp(t * (x + y) / (t - 1.0)) *
                     hyp0f1(a, t * x * y / (om * om));
  return {lhs, rhs};
}

}  // namespace wigner::numerics
