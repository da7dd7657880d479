#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wigner/orthopoly.hpp"

using namespace wigner;
using orthopoly::FamilyKind;
using orthopoly::PolyFamily;

namespace {

// Scale-aware relative error for oscillating families: near an
// accidental zero the pointwise quotient is meaningless, so the local
// running scale backs the denominator.
double rel_to_scale(double got, double want, double scale) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-2 * scale);
}

double closed_eval(const PolyFamily& fam, int n, double point) {
  switch (fam.kind) {
    case FamilyKind::MeixnerPollaczek:
      return orthopoly::mp_eval(n, fam.param, point, true);
    case FamilyKind::Laguerre:
      return orthopoly::laguerre_eval(n, fam.param, point, true);
    case FamilyKind::GenHermite:
      return orthopoly::genhermite_eval(n, fam.param, point, true);
  }
  return 0.0;
}

}  // namespace

TEST_CASE("make_family validates parameters") {
  CHECK_THROWS_AS(orthopoly::make_family(FamilyKind::MeixnerPollaczek, 0.0),
                  DomainError);
  CHECK_THROWS_AS(orthopoly::make_family(FamilyKind::GenHermite, -0.2), DomainError);
  CHECK_THROWS_AS(orthopoly::make_family(FamilyKind::Laguerre, -1.0), DomainError);
  CHECK_NOTHROW(orthopoly::make_family(FamilyKind::Laguerre, -0.9));
}

TEST_CASE("mp_eval low degrees") {
  for (double a : {0.3, 1.0, 2.4})
    for (double E : {-2.0, 0.0, 0.5, 3.7})
      CHECK(orthopoly::mp_eval(0, a, E, false) == doctest::Approx(1.0).epsilon(1e-14));
  // P_1(E) = 2E, independently of a; the spec's point (a=1, E=0.5) gives 1.
  CHECK(orthopoly::mp_eval(1, 1.0, 0.5, false) == doctest::Approx(1.0).epsilon(1e-13));
  for (double a : {0.4, 1.3})
    for (double E : {-1.1, 0.8})
      CHECK(orthopoly::mp_eval(1, a, E, false) ==
            doctest::Approx(2.0 * E).epsilon(1e-13));
}

TEST_CASE("mp_eval matches the raw recurrence oracle") {
  // 2E P_n = (n+a-1) P_{n-1} + (n+1) P_{n+1}, seeds P_0 = 1, P_1 = 2E.
  for (double a : {0.45, 1.0, 2.2}) {
    for (double E : {-1.7, 0.5, 2.3}) {
      double pm = 1.0, p = 2.0 * E;
      for (int n = 1; n <= 20; ++n) {
        CHECK(orthopoly::mp_eval(n, a, E, false) ==
              doctest::Approx(p).epsilon(1e-11));
        const double pp = (2.0 * E * p - (n + a - 1.0) * pm) / (n + 1.0);
        pm = p;
        p = pp;
      }
    }
  }
}

TEST_CASE("mp imaginary residue stays below threshold up to degree 40") {
  for (int n : {5, 17, 40})
    for (double E : {-20.0, -3.1, 0.4, 20.0})
      CHECK_NOTHROW(orthopoly::mp_eval(n, 0.7, E, false));
}

TEST_CASE("laguerre_eval low degrees") {
  CHECK(orthopoly::laguerre_eval(0, 0.7, 5.0, false) == 1.0);
  CHECK(orthopoly::laguerre_eval(1, 0.5, 2.0, false) ==
        doctest::Approx(-0.5).epsilon(1e-14));
  CHECK_THROWS_AS(orthopoly::laguerre_eval(2, 0.5, -1.0, true), DomainError);
}

TEST_CASE("genhermite low degrees and canonical Hermite proportionality") {
  for (double a : {0.3, 0.5, 1.7}) {
    CHECK(orthopoly::genhermite_eval(0, a, 0.8, false) == 1.0);
    CHECK(orthopoly::genhermite_eval(1, a, 0.8, false) ==
          doctest::Approx(0.8).epsilon(1e-14));
  }
  // Q_2^(1/2)(x) = x^2 - 1/2, proportional to H_2 = 4x^2 - 2.
  CHECK(orthopoly::genhermite_eval(2, 0.5, 1.3, false) ==
        doctest::Approx(1.3 * 1.3 - 0.5).epsilon(1e-13));

  // Ratio against classical Hermite (recurrence oracle) is constant in x.
  for (int n : {2, 3, 4, 5, 6, 7}) {
    double ratio0 = 0.0;
    for (double x : {0.4, 0.9, 1.6, 2.2}) {
      double hm = 1.0, h = 2.0 * x;
      for (int k = 1; k < n; ++k) {
        const double hp = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = hp;
      }
      const double ratio = orthopoly::genhermite_eval(n, 0.5, x, false) / h;
      if (ratio0 == 0.0)
        ratio0 = ratio;
      else
        CHECK(ratio == doctest::Approx(ratio0).epsilon(1e-11));
    }
  }
}

TEST_CASE("genhermite parity is exact") {
  for (double a : {0.3, 1.1})
    for (int n = 0; n <= 13; ++n)
      for (double x : {0.35, 1.2, 2.8}) {
        const double plus = orthopoly::genhermite_eval(n, a, x, true);
        const double minus = orthopoly::genhermite_eval(n, a, -x, true);
        if (n % 2 == 0)
          CHECK(plus == minus);
        else
          CHECK(plus == -minus);
      }
}

TEST_CASE("genhermite singular point behavior at x = 0") {
  CHECK(std::isinf(orthopoly::genhermite_eval(0, 0.3, 0.0, true)));
  CHECK(orthopoly::genhermite_eval(1, 0.3, 0.0, true) == 0.0);
  CHECK(orthopoly::genhermite_eval(0, 1.2, 0.0, true) == 0.0);  // a > 1/2 vanishes
}

TEST_CASE("closed form vs recurrence, all families, n <= 40") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dparam(0.2, 3.0);
  struct Probe {
    FamilyKind kind;
    double point;
  };
  const Probe probes[] = {
      {FamilyKind::MeixnerPollaczek, 0.37},
      {FamilyKind::MeixnerPollaczek, -1.9},
      {FamilyKind::Laguerre, 3.1},
      {FamilyKind::Laguerre, 0.6},
      {FamilyKind::GenHermite, -1.4},
      {FamilyKind::GenHermite, 0.85},
  };
  for (const auto& probe : probes) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto fam = orthopoly::make_family(probe.kind, dparam(rng));
      const auto rec = orthopoly::recurrence_all(fam, 40, probe.point);
      double scale = 0.0;
      for (int n = 0; n <= 40; ++n) {
        const double closed = closed_eval(fam, n, probe.point);
        scale = std::max(scale, std::abs(closed));
        CHECK(rel_to_scale(rec[n], closed, scale) < 1e-9);
      }
    }
  }
}

TEST_CASE("normalized Hermite recurrence pair reproduces x Qt_n") {
  for (double a : {0.4, 1.3}) {
    for (double x : {-2.1, -0.6, 0.35, 1.7}) {
      for (int m = 0; m <= 8; ++m) {
        auto qt = [&](int k) {
          return k < 0 ? 0.0 : orthopoly::genhermite_eval(k, a, x, true);
        };
        const double even_res = x * qt(2 * m) - std::sqrt(static_cast<double>(m)) *
                                qt(2 * m - 1) - std::sqrt(m + a) * qt(2 * m + 1);
        const double odd_res = x * qt(2 * m + 1) - std::sqrt(m + a) * qt(2 * m) -
                               std::sqrt(m + 1.0) * qt(2 * m + 2);
        CHECK(std::abs(even_res) < 1e-10);
        CHECK(std::abs(odd_res) < 1e-10);
      }
    }
  }
}

TEST_CASE("gram matrices hit the family constants") {
  const numerics::QuadratureSpec spec{0.0, 1.0, 1e-9, 48};

  SUBCASE("Meixner-Pollaczek, a = 0.8: I/2 within 1e-8") {
    const auto fam = orthopoly::make_family(FamilyKind::MeixnerPollaczek, 0.8);
    const Eigen::MatrixXd g = orthopoly::gram_matrix(fam, 5, spec);
    CHECK((g - g.transpose()).cwiseAbs().maxCoeff() == 0.0);
    const Eigen::MatrixXd dev =
        g - 0.5 * Eigen::MatrixXd::Identity(g.rows(), g.cols());
    CHECK(dev.cwiseAbs().maxCoeff() < 1e-8);
  }

  SUBCASE("Laguerre, alpha = -0.2: 2I within 1e-8") {
    const auto fam = orthopoly::make_family(FamilyKind::Laguerre, -0.2);
    const Eigen::MatrixXd g = orthopoly::gram_matrix(fam, 5, spec);
    const Eigen::MatrixXd dev =
        g - 2.0 * Eigen::MatrixXd::Identity(g.rows(), g.cols());
    CHECK(dev.cwiseAbs().maxCoeff() < 1e-8);
  }

  SUBCASE("generalized Hermite, singular weight a = 0.3: I within 1e-7") {
    const auto fam = orthopoly::make_family(FamilyKind::GenHermite, 0.3);
    const Eigen::MatrixXd g = orthopoly::gram_matrix(fam, 5, spec);
    const Eigen::MatrixXd dev = g - Eigen::MatrixXd::Identity(g.rows(), g.cols());
    CHECK(dev.cwiseAbs().maxCoeff() < 1e-7);
  }

  CHECK_THROWS_AS(orthopoly::gram_matrix(
                      orthopoly::make_family(FamilyKind::Laguerre, 0.5), 21, spec),
                  DomainError);
}
