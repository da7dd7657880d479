#include "wigner/spectral.hpp"

#include <cmath>

#include "wigner/orthopoly.hpp"

namespace wigner::spectral {

namespace {

constexpr Complex kI{0.0, 1.0};

const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // i^n

int check_dim(int N) {
  if (N < 2) throw DomainError("coefficient vector length must be >= 2");
  return N;
}

// Number of entries of one parity class within 0..N-1.
int class_count(int N, int odd) { return (N - odd + 1) / 2; }

}  // namespace

CoefficientVector alpha_coeffs(double a, double E, int N, Subspace subspace) {
  if (!(a > 0.0)) throw DomainError("alpha_coeffs: require a > 0");
  if (subspace == Subspace::Full)
    throw DomainError("alpha_coeffs: subspace must be V0 or V1");
  check_dim(N);
  const int odd = (subspace == Subspace::V1) ? 1 : 0;
  const int count = class_count(N, odd);
  const auto mp = orthopoly::make_family(orthopoly::FamilyKind::MeixnerPollaczek,
                                         odd ? a + 1.0 : a);
  const auto pt = orthopoly::recurrence_all(mp, count - 1, E / 2.0);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(N);
  for (int n = 0; n < count; ++n) v(2 * n + odd) = kPhase[n % 4] * pt[n];
  return {std::move(v), subspace, Label::Alpha, E, a};
}

CoefficientVector beta_coeffs(double a, double x, int N) {
  if (!(a > 0.0)) throw DomainError("beta_coeffs: require a > 0");
  if (x == 0.0 && a < 0.5)
    throw DomainError("beta_coeffs: x = 0 is singular for a < 1/2");
  check_dim(N);
  const auto gh = orthopoly::make_family(orthopoly::FamilyKind::GenHermite, a);
  const auto qt = orthopoly::recurrence_all(gh, N - 1, x);
  Eigen::VectorXcd v(N);
  for (int n = 0; n < N; ++n) v(n) = qt[n];
  return {std::move(v), Subspace::Full, Label::Beta, x, a};
}

CoefficientVector gamma_coeffs(double a, double p, int N) {
  CoefficientVector cv = beta_coeffs(a, p, N);
  for (int n = 0; n < N; ++n) cv.values(n) *= kPhase[n % 4];
  cv.label = Label::Gamma;
  return cv;
}

CoefficientVector epsilon_coeffs(double a, double E, int N, Subspace subspace) {
  if (!(a > 0.0)) throw DomainError("epsilon_coeffs: require a > 0");
  if (subspace == Subspace::Full)
    throw DomainError("epsilon_coeffs: subspace must be V0 or V1");
  if (E < 0.0) throw DomainError("epsilon_coeffs: require E >= 0");
  const int odd = (subspace == Subspace::V1) ? 1 : 0;
  if (E == 0.0 && odd == 0 && a <= 1.0)
    throw DomainError("epsilon_coeffs: E = 0 diverges on V0 for a <= 1");
  check_dim(N);
  const int count = class_count(N, odd);
  const auto lag = orthopoly::make_family(orthopoly::FamilyKind::Laguerre,
                                          odd ? a : a - 1.0);
  const auto lt = orthopoly::recurrence_all(lag, count - 1, 2.0 * E);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(N);
  for (int n = 0; n < count; ++n) v(2 * n + odd) = lt[n];
  return {std::move(v), subspace, Label::Epsilon, E, a};
}

double eigen_residual(const osprep::Operator& H, const CoefficientVector& v,
                      double eigenvalue, int margin) {
  if (H.dim() != v.size()) throw DimensionError("eigen_residual: dimension mismatch");
  if (margin < 0) throw DomainError("eigen_residual: margin must be nonnegative");
  const Eigen::VectorXcd r = H.mat * v.values - eigenvalue * v.values;

  const double vmax = v.values.cwiseAbs().maxCoeff();
  if (vmax == 0.0) return 0.0;
  int highest = 0;
  for (int i = 0; i < v.size(); ++i)
    if (std::abs(v.values(i)) > 1e-12 * vmax) highest = i;

  const int lim = highest + 1 - margin;
  if (lim <= 0) throw DomainError("eigen_residual: margin swallows every component");
  return r.head(lim).cwiseAbs().maxCoeff();
}

double delta_kernel(KernelGenerator generator, double a, double s, double s_prime,
                    int N) {
  if (N < 1) throw DomainError("delta_kernel: require N >= 1");
  using orthopoly::FamilyKind;
  auto sum_family = [&](FamilyKind kind, double param, double u,
                        double u_prime) {
    const auto fam = orthopoly::make_family(kind, param);
    const auto cs = orthopoly::recurrence_all(fam, N - 1, u);
    const auto cp = orthopoly::recurrence_all(fam, N - 1, u_prime);
    double acc = 0.0;
    for (int n = 0; n < N; ++n) acc += cs[n] * cp[n];
    return acc;
  };
  switch (generator) {
    // conj(i^n) i^n = 1, so the alpha/gamma phases drop out of the kernel.
    case KernelGenerator::AlphaV0:
      return sum_family(FamilyKind::MeixnerPollaczek, a, s / 2.0, s_prime / 2.0);
    case KernelGenerator::AlphaV1:
      return sum_family(FamilyKind::MeixnerPollaczek, a + 1.0, s / 2.0, s_prime / 2.0);
    case KernelGenerator::Beta:
    case KernelGenerator::Gamma:
      return sum_family(FamilyKind::GenHermite, a, s, s_prime);
    case KernelGenerator::EpsilonV0:
      return sum_family(FamilyKind::Laguerre, a - 1.0, 2.0 * s, 2.0 * s_prime);
    case KernelGenerator::EpsilonV1:
      return sum_family(FamilyKind::Laguerre, a, 2.0 * s, 2.0 * s_prime);
  }
  throw DomainError("delta_kernel: unknown generator");
}

double lambda_check(double a, int n, std::span<const double> E_grid, int N) {
  if (!(a > 0.0)) throw DomainError("lambda_check: require a > 0");
  if (n < 0) throw DomainError("lambda_check: require n >= 0");
  if (n > N - 8) throw IndexError("lambda_check: n too close to the truncation");

  auto lambda_weight = [&](int m) {
    return std::exp(0.5 * (a * std::log(2.0) + std::lgamma(m + 1.0) -
                           std::log(M_PI) - std::lgamma(m + a)));
  };

  double worst = 0.0;
  for (const double E : E_grid) {
    // Hb e_2n = i sqrt((n+1)(n+a)) e_2n+2 - i sqrt(n(n+a-1)) e_2n-2.
    Complex lhs = kI * std::sqrt((n + 1.0) * (n + a)) * kPhase[(4 - (n + 1) % 4) % 4] *
                  lambda_weight(n + 1) * orthopoly::mp_eval(n + 1, a, E / 2.0, false);
    if (n >= 1)
      lhs -= kI * std::sqrt(n * (n + a - 1.0)) * kPhase[(4 - (n - 1) % 4) % 4] *
             lambda_weight(n - 1) * orthopoly::mp_eval(n - 1, a, E / 2.0, false);
    const Complex rhs = E * kPhase[(4 - n % 4) % 4] * lambda_weight(n) *
                        orthopoly::mp_eval(n, a, E / 2.0, false);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace wigner::spectral
