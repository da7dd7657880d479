#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "wigner/numerics.hpp"

using namespace wigner;
using numerics::Complex;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// From-scratch term-by-term oracle for the terminating series: every
// term is rebuilt from explicit Pochhammer products, independently of
// the iterative ratio updates in the implementation.
std::complex<long double> oracle_2f1(int n, Complex b, double c, double z) {
  auto poch = [](std::complex<long double> v, int k) {
    std::complex<long double> p = 1.0L;
    for (int j = 0; j < k; ++j) p *= v + static_cast<long double>(j);
    return p;
  };
  std::complex<long double> sum = 0.0L;
  for (int k = 0; k <= n; ++k) {
    std::complex<long double> term =
        poch(-n, k) * poch({b.real(), b.imag()}, k) /
        (poch(c, k) * poch(1.0L, k));
    for (int j = 0; j < k; ++j) term *= z;
    sum += term;
  }
  return sum;
}

long double oracle_1f1(int n, double c, double z) {
  auto poch = [](long double v, int k) {
    long double p = 1.0L;
    for (int j = 0; j < k; ++j) p *= v + j;
    return p;
  };
  long double sum = 0.0L;
  for (int k = 0; k <= n; ++k)
    sum += poch(-n, k) * std::pow(static_cast<long double>(z), k) /
           (poch(c, k) * poch(1.0L, k));
  return sum;
}

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_CASE("pochhammer_rising basics") {
  CHECK(numerics::pochhammer_rising(0.7, 0) == 1.0);
  CHECK(numerics::pochhammer_rising(1.0, 4) == 24.0);
  CHECK(numerics::pochhammer_rising(0.5, 3) == doctest::Approx(1.875).epsilon(1e-15));
}

TEST_CASE("pochhammer recurrence property") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> da(-3.0, 3.0);
  std::uniform_int_distribution<int> dn(0, 25);
  for (int i = 0; i < 200; ++i) {
    const double a = da(rng);
    const int n = dn(rng);
    const double lhs = numerics::pochhammer_rising(a, n + 1);
    const double rhs = numerics::pochhammer_rising(a, n) * (a + n);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("terminating_2f1 trivial and frozen values") {
  CHECK(numerics::terminating_2f1(0, Complex(3.2, -1.0), 0.7, 5.0) == Complex(1.0));
  CHECK(std::abs(numerics::terminating_2f1(1, 2.0, 4.0, 2.0)) < 1e-15);
  // 2F1(-5, 0.25+1.3i; 0.5; 2); reference summed at 50 digits.
  const Complex frozen(0.0, 6.2115975449735449735);
  const Complex got = numerics::terminating_2f1(5, Complex(0.25, 1.3), 0.5, 2.0);
  CHECK(rel_err(got, frozen) < 1e-13);
}

TEST_CASE("terminating series match the from-scratch oracle") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dz(-2.5, 2.5);
  std::uniform_real_distribution<double> dc(0.3, 4.0);
  std::uniform_int_distribution<int> dn(0, 12);
  for (int i = 0; i < 100; ++i) {
    const int n = dn(rng);
    const double c = dc(rng);
    const double z = dz(rng);
    const Complex b(dz(rng), dz(rng));
    const auto want = oracle_2f1(n, b, c, z);
    const Complex got = numerics::terminating_2f1(n, b, c, z);
    CHECK(std::abs(got - Complex(static_cast<double>(want.real()),
                                 static_cast<double>(want.imag()))) <=
          1e-12 * std::max(1.0, std::abs(got)));

    const double w1 = static_cast<double>(oracle_1f1(n, c, z));
    CHECK(numerics::terminating_1f1(n, c, z) ==
          doctest::Approx(w1).epsilon(1e-12));
  }
}

TEST_CASE("terminating_1f1 values") {
  CHECK(numerics::terminating_1f1(0, 2.0, 3.0) == 1.0);
  CHECK(numerics::terminating_1f1(1, 2.0, 3.0) == doctest::Approx(-0.5).epsilon(1e-15));
  // 1F1(-8; 1.3; 4.2), 50-digit reference.
  CHECK(numerics::terminating_1f1(8, 1.3, 4.2) ==
        doctest::Approx(-0.44033831558679076318).epsilon(1e-13));
}

TEST_CASE("terminating_1f1 agrees with the Laguerre recurrence route") {
  // Raw Laguerre recurrence (n+1) L_{n+1} = (2n+alpha+1-x) L_n - (n+alpha) L_{n-1},
  // then 1F1(-n; alpha+1; x) = n!/(alpha+1)_n L_n.
  const double alpha = 0.3, x = 4.2;
  double lm = 1.0, l = alpha + 1.0 - x;
  for (int n = 1; n <= 11; ++n) {
    const double lp = ((2.0 * n + alpha + 1.0 - x) * l - (n + alpha) * lm) / (n + 1.0);
    lm = l;
    l = lp;
  }
  const int n = 12;
  double ratio = 1.0;
  for (int k = 0; k < n; ++k) ratio *= (alpha + 1.0 + k) / (k + 1.0);
  CHECK(numerics::terminating_1f1(n, alpha + 1.0, x) ==
        doctest::Approx(l / ratio).epsilon(1e-11));
}

TEST_CASE("terminating series reject vanishing denominators") {
  CHECK_THROWS_AS(numerics::terminating_2f1(3, Complex(1.0), -1.0, 0.5), DomainError);
  CHECK_THROWS_AS(numerics::terminating_1f1(4, -2.0, 1.0), DomainError);
  CHECK_NOTHROW(numerics::terminating_1f1(4, -5.0, 1.0));  // below the window
}

TEST_CASE("hyp0f1 trigonometric identities") {
  CHECK(numerics::hyp0f1(0.7, 0.0) == 1.0);
  CHECK(numerics::hyp0f1(0.5, -kPi * kPi / 4.0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(numerics::hyp0f1(1.5, -kPi * kPi / 4.0)) < 1e-12);
  for (int i = 0; i < 100; ++i) {
    const double x = -10.0 + 20.0 * i / 99.0;
    CHECK(std::abs(numerics::hyp0f1(0.5, -x * x / 4.0) - std::cos(x)) < 1e-11);
  }
  CHECK_THROWS_AS(numerics::hyp0f1(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(numerics::hyp0f1(0.5, -1e10), ConvergenceError);
}

TEST_CASE("gamma_complex known values and identities") {
  CHECK(rel_err(numerics::gamma_complex(Complex(1.0)), Complex(1.0)) < 1e-14);
  CHECK(rel_err(numerics::gamma_complex(Complex(0.5)),
                Complex(1.7724538509055160273)) < 1e-13);
  // |Gamma(1+iy)|^2 = pi y / sinh(pi y) at y = 0.8.
  const double m2 = std::norm(numerics::gamma_complex(Complex(1.0, 0.8)));
  CHECK(m2 == doctest::Approx(0.40985265287975206481).epsilon(1e-12));
  // Recurrence at a complex point.
  const Complex z(0.3, 2.1);
  CHECK(rel_err(numerics::gamma_complex(z + 1.0), z * numerics::gamma_complex(z)) <
        1e-12);
  CHECK_THROWS_AS(numerics::gamma_complex(Complex(0.0)), PoleError);
  CHECK_THROWS_AS(numerics::gamma_complex(Complex(-3.0)), PoleError);
}

TEST_CASE("gamma_complex recurrence and conjugation on random samples") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> dre(-3.0, 3.0);
  std::uniform_real_distribution<double> dim(0.05, 4.0);
  for (int i = 0; i < 100; ++i) {
    Complex z(dre(rng), dim(rng));
    const Complex g = numerics::gamma_complex(z);
    CHECK(rel_err(numerics::gamma_complex(z + 1.0), z * g) < 1e-12);
    CHECK(rel_err(numerics::gamma_complex(std::conj(z)), std::conj(g)) < 1e-12);
  }
}

TEST_CASE("abs_gamma") {
  CHECK(numerics::abs_gamma(Complex(0.5)) ==
        doctest::Approx(1.7724538509055160273).epsilon(1e-13));
  CHECK(numerics::abs_gamma(Complex(0.7, 1.9)) ==
        doctest::Approx(numerics::abs_gamma(Complex(0.7, -1.9))).epsilon(1e-14));
  // Self-consistency: |Gamma(z)|^2 = Gamma(z) Gamma(conj z).
  const Complex z(0.25, 3.0);
  const double prod =
      (numerics::gamma_complex(z) * numerics::gamma_complex(std::conj(z))).real();
  CHECK(numerics::abs_gamma(z) == doctest::Approx(std::sqrt(prod)).epsilon(1e-12));
  CHECK(numerics::abs_gamma(z) ==
        doctest::Approx(0.017124939817657217433).epsilon(1e-12));
}

TEST_CASE("integrate: odd symmetry, Gaussian, gamma tail") {
  numerics::QuadratureSpec spec{-1.0, 1.0, 1e-12, 30};
  CHECK(std::abs(numerics::integrate_real([](double x) { return x * x * x; }, spec)) <
        1e-14);

  spec = {-8.0, 8.0, 1e-13, 30};
  CHECK(numerics::integrate_real([](double x) { return std::exp(-x * x); }, spec) ==
        doctest::Approx(1.7724538509055160273).epsilon(1e-12));

  spec = {0.0, 40.0, 1e-11, 48};
  CHECK(numerics::integrate_real(
            [](double x) { return std::exp(-x) * std::pow(x, 0.3); }, spec) ==
        doctest::Approx(0.89747069630627718849).epsilon(1e-10));
}

TEST_CASE("integrate is exact on polynomials up to degree 31") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dc(-1.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    double coeff[32];
    for (double& c : coeff) c = dc(rng);
    auto poly = [&coeff](double x) {
      double acc = 0.0;
      for (int k = 31; k >= 0; --k) acc = acc * x + coeff[k];
      return acc;
    };
    auto antideriv = [&coeff](double x) {
      double acc = 0.0;
      for (int k = 31; k >= 0; --k) acc = acc * x + coeff[k] / (k + 1.0);
      return acc * x;
    };
    const numerics::QuadratureSpec spec{0.25, 1.75, 1e-6, 8};
    const double got = numerics::integrate_real(poly, spec);
    const double want = antideriv(1.75) - antideriv(0.25);
    CHECK(got == doctest::Approx(want).epsilon(1e-14));
  }
}

TEST_CASE("integrate exhausts refinements on a hard singular budget") {
  const numerics::QuadratureSpec spec{0.0, 1.0, 1e-13, 1};
  CHECK_THROWS_AS(numerics::integrate_real(
                      [](double x) { return std::pow(x, -0.9); }, spec),
                  ConvergenceError);
}

TEST_CASE("jagannathan_pair trivial, frozen, and error cases") {
  const auto [l0, r0] = numerics::jagannathan_pair(1.0, Complex(1.0), 0.3, 0.4, 0.0, 1);
  CHECK(l0 == Complex(1.0));
  CHECK(rel_err(r0, Complex(1.0)) < 1e-15);

  const auto [l1, r1] = numerics::jagannathan_pair(1.0, Complex(1.0), 0.0, 0.0, 0.5, 60);
  CHECK(rel_err(l1, Complex(2.0)) < 1e-12);
  CHECK(rel_err(r1, Complex(2.0)) < 1e-14);

  const auto [l2, r2] =
      numerics::jagannathan_pair(0.8, Complex(0.4, 0.9), 1.1, 0.6, 0.7, 200);
  CHECK(rel_err(l2, r2) < 1e-9);

  CHECK_THROWS_AS(numerics::jagannathan_pair(0.8, Complex(1.0), 1.0, 1.0, 1.0, 10),
                  DomainError);
}

TEST_CASE("jagannathan agreement improves with n_terms") {
  double prev = 1e300;
  for (int terms : {50, 100, 200}) {
    const auto [l, r] =
        numerics::jagannathan_pair(0.9, Complex(0.3, 0.5), 0.8, 0.5, 0.75, terms);
    const double err = std::abs(l - r) / std::abs(r);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("intseries_pair examples") {
  const auto [l0, r0] = numerics::intseries_pair(0.7, 0.5, 0.4, 0.0, 1);
  CHECK(l0 == 1.0);
  CHECK(r0 == doctest::Approx(1.0).epsilon(1e-15));

  // x = 0 collapses the 0F1 factor.
  const auto [l1, r1] = numerics::intseries_pair(1.2, 0.0, 0.9, 0.4, 200);
  CHECK(l1 == doctest::Approx(r1).epsilon(1e-11));

  const auto [l2, r2] = numerics::intseries_pair(0.6, 1.3, 0.5, -0.6, 200);
  CHECK(l2 == doctest::Approx(r2).epsilon(1e-9));

  CHECK_THROWS_AS(numerics::intseries_pair(0.6, 1.0, 1.0, -1.2, 10), DomainError);
}

TEST_CASE("identity pairs agree over a randomized sweep") {
  std::mt19937 rng(101);
  auto uni = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  for (int i = 0; i < 30; ++i) {
    const double a = uni(0.2, 2.0);
    const double t = uni(-0.8, 0.8);
    const double x = uni(0.0, 1.5);
    const double ymax = std::min(1.5, 1.25 / std::max(0.05, std::abs(t)) - 1.0);
    const double y = uni(0.0, std::max(0.0, ymax));
    const Complex b(uni(-1.5, 1.5), uni(-1.5, 1.5));

    const auto [jl, jr] = numerics::jagannathan_pair(a, b, x, y, t, 200);
    CHECK(std::abs(jl - jr) / std::abs(jr) < 1e-8);

    const auto [il, ir] = numerics::intseries_pair(a, x, uni(0.0, 1.5), t, 200);
    CHECK(std::abs(il - ir) / std::abs(ir) < 1e-8);
  }
}

TEST_CASE("2F1(-n, b; c; z/b) approaches 1F1(-n; c; z) as b grows") {
  const int n = 8;
  const double c = 1.3, z = 4.2;
  const double target = numerics::terminating_1f1(n, c, z);
  double prev = 1e300;
  for (double b : {1e2, 1e4, 1e6}) {
    const double gap = std::abs(numerics::terminating_2f1(n, b, c, z / b) - target);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-4);
}
