#include "wigner/wavefunc.hpp"

#include <cmath>

#include "wigner/numerics.hpp"
#include "wigner/orthopoly.hpp"
#include "wigner/spectral.hpp"

namespace wigner::wavefunc {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr Complex kI{0.0, 1.0};

double check_a(double a) {
  if (!(a > 0.0)) throw DomainError("wavefunc: require a > 0");
  return a;
}

}  // namespace

WaveParams make_wave_params(double a, Complex A, Complex B) {
  check_a(a);
  const double norm = std::norm(A) + std::norm(B);
  if (std::abs(norm - 1.0) > 1e-12)
    throw DomainError("WaveParams: |A|^2 + |B|^2 must equal 1");
  return {a, A, B};
}

SampleTable make_sample_table(std::vector<SampleRow> rows) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i - 1].point < rows[i].point))
      throw DomainError("SampleTable: grid must be strictly increasing");
  return {std::move(rows)};
}

Complex phase_c0(double a, double E) {
  check_a(a);
  const Complex g = numerics::gamma_complex(Complex(a / 2.0, E / 2.0));
  // The 2^(-iE/2) rides along from the sqrt(pi 2^(iE+2)) denominator of
  // the explicit inner product; it is unit modulus like the gamma ratio.
  return std::abs(g) / g * std::exp(Complex(0.0, -E / 2.0 * std::log(2.0)));
}

Complex phase_c1(double a, double E) { return phase_c0(a + 1.0, E); }

Complex inner_x_u(double a, double x, double E, WaveParity parity) {
  check_a(a);
  if (x == 0.0) throw DomainError("inner_x_u: x = 0 is excluded");
  // |x|^(iE-1/2) through the real logarithm of |x|.
  const Complex power = std::exp(Complex(-0.5, E) * std::log(std::abs(x)));
  const double scale = 1.0 / (2.0 * std::sqrt(kPi));
  if (parity == WaveParity::Even) return phase_c0(a, E) * power * scale;
  // x |x|^(iE-3/2) = sign(x) |x|^(iE-1/2).
  const double sign = (x > 0.0) ? 1.0 : -1.0;
  return phase_c1(a, E) * sign * power * scale;
}

Complex inner_p_u(double a, double p, double E, WaveParity parity) {
  const Complex v = inner_x_u(a, p, -E, parity);
  return (parity == WaveParity::Even) ? v : -kI * v;
}

Complex inner_x_p(double a, double x, double p) {
  check_a(a);
  const double w = x * p;
  const double z = -w * w / 4.0;
  const double pref = std::pow(std::abs(w), a - 0.5) /
                      (std::pow(2.0, a) * std::tgamma(a));
  const Complex bracket = numerics::hyp0f1(a, z) +
                          kI * w / (2.0 * a) * numerics::hyp0f1(a + 1.0, z);
  return pref * bracket;
}

Complex psi_bk(const WaveParams& params, double x, double E) {
  return params.A * inner_x_u(params.a, x, E, WaveParity::Even) +
         params.B * inner_x_u(params.a, x, E, WaveParity::Odd);
}

double inner_x_z(double a, double x, double E, WaveParity parity) {
  check_a(a);
  if (!(E > 0.0)) throw DomainError("inner_x_z: require E > 0");
  const double z = -2.0 * E * x * x / 4.0;
  if (parity == WaveParity::Even) {
    return std::pow(std::abs(x), a - 0.5) * std::pow(E, (a - 1.0) / 2.0) *
           numerics::hyp0f1(a, z) / (std::sqrt(std::pow(2.0, a)) * std::tgamma(a));
  }
  const double sign = (x >= 0.0) ? 1.0 : -1.0;
  return sign * std::pow(std::abs(x), a + 0.5) * std::pow(E, a / 2.0) *
         numerics::hyp0f1(a + 1.0, z) /
         (std::sqrt(std::pow(2.0, a + 1.0)) * std::tgamma(a + 1.0));
}

Complex psi_free(const WaveParams& params, double x, double E) {
  return params.A * inner_x_z(params.a, x, E, WaveParity::Even) +
         params.B * inner_x_z(params.a, x, E, WaveParity::Odd);
}

Complex kernel_p_z(double a, double p, double E, int N, WaveParity parity) {
  check_a(a);
  if (!(E > 0.0)) throw DomainError("kernel_p_z: require E > 0");
  if (N < 1) throw DomainError("kernel_p_z: require N >= 1");
  const auto gh = orthopoly::make_family(orthopoly::FamilyKind::GenHermite, a);
  const int odd = (parity == WaveParity::Odd) ? 1 : 0;
  const auto lag = orthopoly::make_family(orthopoly::FamilyKind::Laguerre,
                                          odd ? a : a - 1.0);
  const auto beta = orthopoly::recurrence_all(gh, 2 * (N - 1) + odd, p);
  const auto eps = orthopoly::recurrence_all(lag, N - 1, 2.0 * E);
  // gamma_n(p)* = conj(i^n) beta_n(p): even class terms are (-1)^n real,
  // odd class terms carry a global -i.
  Complex acc = 0.0;
  for (int n = 0; n < N; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    acc += sign * beta[2 * n + odd] * eps[n];
  }
  return odd ? -kI * acc : acc;
}

}  // namespace wigner::wavefunc
