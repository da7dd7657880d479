#include "wigner/osprep.hpp"

#include <cmath>
#include <complex>

namespace wigner::osprep {

namespace {

using Cx = std::complex<double>;
constexpr Cx kI{0.0, 1.0};

Eigen::MatrixXcd zeros(int n) { return Eigen::MatrixXcd::Zero(n, n); }

Parity compose(Parity a, Parity b) {
  if (a == Parity::None || b == Parity::None) return Parity::None;
  return (a == b) ? Parity::Even : Parity::Odd;
}

Parity same_or_none(Parity a, Parity b) { return (a == b) ? a : Parity::None; }

}  // namespace

bool parity_consistent(const Operator& op) {
  if (op.parity == Parity::None) return true;
  const int want = (op.parity == Parity::Even) ? 0 : 1;
  for (int j = 0; j < op.dim(); ++j)
    for (int i = 0; i < op.dim(); ++i)
      if ((i + j) % 2 != want && op.mat(i, j) != 0.0) return false;
  return true;
}

std::pair<Operator, Operator> ladder_ops(const RepParams& params) {
  params.validate();
  const int N = params.trunc;
  const double a = params.a;
  Eigen::MatrixXcd bp = zeros(N);
  for (int k = 0; k + 1 < N; ++k) {
    if (k % 2 == 0) {
      const int n = k / 2;
      bp(k + 1, k) = std::sqrt(2.0 * (n + a));
    } else {
      const int n = (k - 1) / 2;
      bp(k + 1, k) = std::sqrt(2.0 * (n + 1.0));
    }
  }
  Operator bplus{bp, Parity::Odd};
  Operator bminus{bp.adjoint(), Parity::Odd};
  return {std::move(bplus), std::move(bminus)};
}

std::tuple<Operator, Operator, Operator> even_triple(const RepParams& params) {
  params.validate();
  const int N = params.trunc;
  const double a = params.a;

  Eigen::MatrixXcd h = zeros(N);
  for (int k = 0; k < N; ++k) h(k, k) = k + a;

  Eigen::MatrixXcd e = zeros(N);
  Eigen::MatrixXcd f = zeros(N);
  for (int k = 0; k + 2 < N; ++k) {
    const int n = k / 2;
    const double s = (k % 2 == 0) ? std::sqrt((n + 1.0) * (n + a))
                                  : std::sqrt((n + 1.0) * (n + a + 1.0));
    e(k + 2, k) = s;
    f(k, k + 2) = -s;
  }
  return {Operator{std::move(h), Parity::Even}, Operator{std::move(e), Parity::Even},
          Operator{std::move(f), Parity::Even}};
}

Operator observable(const RepParams& params, Observable which) {
  params.validate();
  const int N = params.trunc;
  const double a = params.a;
  Eigen::MatrixXcd m = zeros(N);

  switch (which) {
    case Observable::X:
    case Observable::P: {
      // x and p share the magnitude pattern of (b+ +- b-)/sqrt2.
      for (int k = 0; k + 1 < N; ++k) {
        const double s = (k % 2 == 0) ? std::sqrt(k / 2 + a) : std::sqrt((k + 1) / 2.0);
        if (which == Observable::X) {
          m(k + 1, k) = s;
          m(k, k + 1) = s;
        } else {
          m(k + 1, k) = kI * s;
          m(k, k + 1) = -kI * s;
        }
      }
      return {std::move(m), Parity::Odd};
    }
    case Observable::Hb: {
      for (int k = 0; k + 2 < N; ++k) {
        const int n = k / 2;
        const double s = (k % 2 == 0) ? std::sqrt((n + 1.0) * (n + a))
                                      : std::sqrt((n + 1.0) * (n + a + 1.0));
        m(k + 2, k) = kI * s;
        m(k, k + 2) = -kI * s;
      }
      return {std::move(m), Parity::Even};
    }
    case Observable::Hf: {
      for (int k = 0; k < N; ++k) m(k, k) = (k + a) / 2.0;
      for (int k = 0; k + 2 < N; ++k) {
        const int n = k / 2;
        const double s = (k % 2 == 0) ? std::sqrt((n + 1.0) * (n + a))
                                      : std::sqrt((n + 1.0) * (n + a + 1.0));
        m(k + 2, k) = -0.5 * s;
        m(k, k + 2) = -0.5 * s;
      }
      return {std::move(m), Parity::Even};
    }
  }
  throw DomainError("observable: unknown selector");
}

Operator commutator(const Operator& A, const Operator& B) {
  if (A.dim() != B.dim()) throw DimensionError("commutator: dimension mismatch");
  return {A.mat * B.mat - B.mat * A.mat, compose(A.parity, B.parity)};
}

Operator anticommutator(const Operator& A, const Operator& B) {
  if (A.dim() != B.dim()) throw DimensionError("anticommutator: dimension mismatch");
  return {A.mat * B.mat + B.mat * A.mat, compose(A.parity, B.parity)};
}

double interior_norm(const Operator& M, int margin) {
  const int N = M.dim();
  if (margin < 0 || 2 * margin >= N)
    throw DomainError("interior_norm: require 0 <= margin < N/2");
  const int lim = N - margin;
  return M.mat.topLeftCorner(lim, lim).cwiseAbs().maxCoeff();
}

namespace {

Operator subtract(const Operator& A, const Operator& B) {
  return {A.mat - B.mat, same_or_none(A.parity, B.parity)};
}

Operator scaled(const Operator& A, Cx s) { return {s * A.mat, A.parity}; }

Operator add(const Operator& A, const Operator& B) {
  return {A.mat + B.mat, same_or_none(A.parity, B.parity)};
}

}  // namespace

std::vector<RelationResidual> relation_report(const RepParams& params, int margin) {
  params.validate();
  const auto [bp, bm] = ladder_ops(params);
  const auto [h, e, f] = even_triple(params);
  const Operator x = observable(params, Observable::X);
  const Operator p = observable(params, Observable::P);
  const Operator hb = observable(params, Observable::Hb);

  const Operator xp = anticommutator(x, p);
  const Operator bpm = anticommutator(bp, bm);
  const Operator p2 = {p.mat * p.mat, Parity::Even};

  std::vector<RelationResidual> report;
  auto push = [&](const std::string& name, const Operator& residual) {
    report.push_back({name, interior_norm(residual, margin)});
  };

  // [{x,p}, x] = -2i x  and  [{x,p}, p] = 2i p
  push("cc_anticomm_x", subtract(commutator(xp, x), scaled(x, -2.0 * kI)));
  push("cc_anticomm_p", subtract(commutator(xp, p), scaled(p, 2.0 * kI)));
  // [Hb, b+-] = -i b-+
  push("hb_ladder_plus", subtract(commutator(hb, bp), scaled(bm, -kI)));
  push("hb_ladder_minus", subtract(commutator(hb, bm), scaled(bp, -kI)));
  // [{b-,b+}, b+-] = +-2 b+-
  push("osp_defining_plus", subtract(commutator(bpm, bp), scaled(bp, 2.0)));
  push("osp_defining_minus", subtract(commutator(bpm, bm), scaled(bm, -2.0)));
  // [p^2, x] = -2i p
  push("free_particle_cc", subtract(commutator(p2, x), scaled(p, -2.0 * kI)));
  // [{b+,b-}, b+ + b-] = 2(b+ - b-)
  push("ladder_sum", subtract(commutator(bpm, add(bp, bm)),
                              scaled(subtract(bp, bm), 2.0)));
  // A = 2, B = 0 resolution: [{b+,b-}, b+] = 2 b+ = -[(b+)^2, b-]
  push("ladder_A2B0",
       subtract(scaled(commutator({bp.mat * bp.mat, Parity::Even}, bm), -1.0),
                scaled(bp, 2.0)));
  // su(1,1): [h,e] = 2e, [h,f] = -2f, [e,f] = h
  push("su11_he", subtract(commutator(h, e), scaled(e, 2.0)));
  push("su11_hf", subtract(commutator(h, f), scaled(f, -2.0)));
  push("su11_ef", subtract(commutator(e, f), h));
  return report;
}

double max_residual(const std::vector<RelationResidual>& report) {
  double m = 0.0;
  for (const auto& r : report) m = std::max(m, r.residual);
  return m;
}

}  // namespace wigner::osprep
