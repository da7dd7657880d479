#include "wigner/orthopoly.hpp"

#include <cmath>

namespace wigner::orthopoly {

using numerics::Complex;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// (a)_n / n! as an overflow-free running product.
double poch_over_factorial(double a, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= (a + k) / (k + 1.0);
  return r;
}

double sqrt_factorial_ratio(int n, double d) {
  // sqrt(n! / Gamma(n + d)) in log space.
  return std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + d)));
}

int checked_degree(int n) {
  if (n < 0) throw DomainError("polynomial degree must be nonnegative");
  return n;
}

}  // namespace

PolyFamily make_family(FamilyKind kind, double param) {
  if (kind == FamilyKind::Laguerre) {
    if (!(param > -1.0)) throw DomainError("Laguerre family requires alpha > -1");
  } else {
    if (!(param > 0.0)) throw DomainError("family parameter must be positive");
  }
  return {kind, param};
}

double orthonormality_constant(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::MeixnerPollaczek: return 0.5;
    case FamilyKind::Laguerre: return 2.0;
    case FamilyKind::GenHermite: return 1.0;
  }
  throw DomainError("unknown family kind");
}

double mp_eval(int n, double a, double E, bool normalized) {
  checked_degree(n);
  if (!(a > 0.0)) throw DomainError("mp_eval: require a > 0");
  const Complex f = numerics::terminating_2f1(n, Complex(a / 2.0, E), a, 2.0);
  // i^n rotates the series value onto the real axis.
  static constexpr Complex phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex value = phases[n % 4] * poch_over_factorial(a, n) * f;
  if (std::abs(value.imag()) > 1e-10 * std::max(1.0, std::abs(value.real())))
    throw NumericalError("mp_eval: imaginary residue exceeds threshold");
  const double raw = value.real();
  if (!normalized) return raw;
  const double weight = numerics::abs_gamma(Complex(a / 2.0, E)) / 2.0;
  const double scale =
      std::exp(0.5 * (a * std::log(2.0) + std::lgamma(n + 1.0) - std::log(kPi) -
                      std::lgamma(n + a)));
  return weight * scale * raw;
}

double laguerre_eval(int n, double alpha, double x, bool normalized) {
  checked_degree(n);
  if (!(alpha > -1.0)) throw DomainError("laguerre_eval: require alpha > -1");
  const double raw =
      poch_over_factorial(alpha + 1.0, n) * numerics::terminating_1f1(n, alpha + 1.0, x);
  if (!normalized) return raw;
  if (x < 0.0) throw DomainError("laguerre_eval: normalized variant needs x >= 0");
  return std::sqrt(2.0) * std::exp(-x / 2.0) * std::pow(x, alpha / 2.0) *
         sqrt_factorial_ratio(n, alpha + 1.0) * raw;
}

double genhermite_eval(int n, double a, double x, bool normalized) {
  checked_degree(n);
  if (!(a > 0.0)) throw DomainError("genhermite_eval: require a > 0");
  const int m = n / 2;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double lag = (n % 2 == 0) ? laguerre_eval(m, a - 1.0, x * x, false)
                                  : laguerre_eval(m, a, x * x, false);
  if (!normalized) return (n % 2 == 0) ? sign * lag : sign * x * lag;

  const double gauss = std::exp(-x * x / 2.0);
  if (n % 2 == 0) {
    // |x|^(a-1/2) diverges at x = 0 for a < 1/2; the quadrature never
    // samples x = 0, so the signed infinity is simply passed through.
    return std::pow(std::abs(x), a - 0.5) * gauss * sqrt_factorial_ratio(m, a) * sign *
           lag;
  }
  // x |x|^(a-1/2) written as sign(x) |x|^(a+1/2) so x = 0 is exact.
  const double odd_weight =
      (x >= 0.0 ? 1.0 : -1.0) * std::pow(std::abs(x), a + 0.5);
  return odd_weight * gauss * sqrt_factorial_ratio(m, a + 1.0) * sign * lag;
}

std::vector<double> recurrence_all(const PolyFamily& family, int nmax, double point) {
  checked_degree(nmax);
  std::vector<double> v(nmax + 1);
  switch (family.kind) {
    case FamilyKind::MeixnerPollaczek: {
      const double a = family.param;
      const double E = point;
      v[0] = mp_eval(0, a, E, true);
      if (nmax >= 1) v[1] = mp_eval(1, a, E, true);
      for (int n = 1; n < nmax; ++n)
        v[n + 1] = (2.0 * E * v[n] - std::sqrt(n * (n + a - 1.0)) * v[n - 1]) /
                   std::sqrt((n + 1.0) * (n + a));
      break;
    }
    case FamilyKind::Laguerre: {
      const double al = family.param;
      const double x = point;
      v[0] = laguerre_eval(0, al, x, true);
      if (nmax >= 1) v[1] = laguerre_eval(1, al, x, true);
      for (int n = 1; n < nmax; ++n)
        v[n + 1] = ((2.0 * n - x + al + 1.0) * v[n] -
                    std::sqrt(n * (n + al)) * v[n - 1]) /
                   std::sqrt((n + 1.0) * (n + al + 1.0));
      break;
    }
    case FamilyKind::GenHermite: {
      const double a = family.param;
      const double x = point;
      v[0] = genhermite_eval(0, a, x, true);
      if (nmax >= 1) v[1] = genhermite_eval(1, a, x, true);
      for (int k = 2; k <= nmax; ++k) {
        if (k % 2 == 1) {
          const int n = (k - 1) / 2;  // x Qt_2n = sqrt(n) Qt_2n-1 + sqrt(n+a) Qt_2n+1
          v[k] = (x * v[k - 1] - std::sqrt(static_cast<double>(n)) * v[k - 2]) /
                 std::sqrt(n + a);
        } else {
          const int n = (k - 2) / 2;  // x Qt_2n+1 = sqrt(n+a) Qt_2n + sqrt(n+1) Qt_2n+2
          v[k] = (x * v[k - 1] - std::sqrt(n + a) * v[k - 2]) /
                 std::sqrt(n + 1.0);
        }
      }
      break;
    }
  }
  return v;
}

double recurrence_eval(const PolyFamily& family, int n, double point) {
  return recurrence_all(family, n, point).back();
}

namespace {

// Truncation point where exp-decay beats the polynomial envelope:
// weight(x) * x^p < 1e-21.
double exp_cut(double p) {
  double x = 50.0;
  for (int i = 0; i < 20; ++i) x = 21.0 * std::log(10.0) + p * std::log(x);
  return x;
}

double mp_cut(double p) {
  double e = 20.0;
  for (int i = 0; i < 20; ++i)
    e = (21.0 * std::log(10.0) + p * std::log(e)) / kPi;
  return e;
}

double gauss_cut(double p) {
  double l = 7.0;
  for (int i = 0; i < 20; ++i)
    l = std::sqrt(21.0 * std::log(10.0) + p * std::log(l));
  return l;
}

}  // namespace

Eigen::MatrixXd gram_matrix(const PolyFamily& family, int max_degree,
                            const numerics::QuadratureSpec& spec) {
  make_family(family.kind, family.param);  // re-validate
  if (max_degree < 0 || max_degree > 20)
    throw DomainError("gram_matrix: max_degree must be in [0, 20]");

  // Cut the improper domain where the weighted integrand envelope is
  // negligible, and neutralize the |x|^sigma endpoint singularity at the
  // origin with x = u^power so the panels see a bounded integrand.
  double hi = 0.0;
  double sigma = 0.0;  // integrand exponent at 0
  bool two_sided = false;
  const double p = 2.0 * max_degree + std::abs(family.param) + 1.0;
  switch (family.kind) {
    case FamilyKind::MeixnerPollaczek:
      hi = mp_cut(p);
      two_sided = true;
      break;
    case FamilyKind::Laguerre:
      hi = exp_cut(p);
      sigma = family.param;
      break;
    case FamilyKind::GenHermite:
      hi = gauss_cut(p);
      sigma = 2.0 * family.param - 1.0;
      two_sided = true;
      break;
  }
  const double power =
      (sigma < 0.0) ? std::min(12.0, std::ceil(1.0 / (sigma + 1.0))) : 1.0;

  numerics::QuadratureSpec q = spec;
  q.lo = 0.0;
  q.hi = std::pow(hi, 1.0 / power);

  const int dim = max_degree + 1;
  Eigen::MatrixXd g(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = m; n < dim; ++n) {
      auto half = [&](double side) {
        return numerics::integrate_real(
            [&](double u) {
              const double x = side * std::pow(u, power);
              if (x == 0.0) return 0.0;  // u^power underflow, measure ~0
              const auto v = recurrence_all(family, n, x);
              return v[m] * v[n] * power * std::pow(u, power - 1.0);
            },
            q);
      };
      double entry = half(1.0);
      if (two_sided) entry += half(-1.0);
      g(m, n) = entry;
      g(n, m) = entry;
    }
  }
  return g;
}

}  // namespace wigner::orthopoly
