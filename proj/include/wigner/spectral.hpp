#pragma once

#include <Eigen/Dense>
#include <span>

#include "wigner/osprep.hpp"

namespace wigner::spectral {

using Complex = std::complex<double>;

enum class Subspace { V0, V1, Full };
enum class Label { Alpha, Beta, Gamma, Epsilon };

// Finite prefix of a formal-eigenvector coefficient sequence, embedded
// in the full space: subspace vectors carry zeros on the opposite-parity
// indices.
struct CoefficientVector {
  Eigen::VectorXcd values;
  Subspace subspace;
  Label label;
  double eigenvalue;
  double a;
  int size() const { return static_cast<int>(values.size()); }
};

// Hb eigenvector coefficients: alpha_2n(E) = i^n Ptilde_n(E/2) on V0,
// alpha_2n+1(E) = i^n Ptilde_n^(a->a+1)(E/2) on V1, generated by the
// normalized Meixner-Pollaczek recurrence (stable for every real E).
CoefficientVector alpha_coeffs(double a, double E, int N, Subspace subspace);

// x eigenvector: beta_n(x) = Qtilde_n^(a)(x), full space.
CoefficientVector beta_coeffs(double a, double x, int N);

// p eigenvector: gamma_n(p) = i^n beta_n(p).
CoefficientVector gamma_coeffs(double a, double p, int N);

// Free-particle eigenvector: epsilon_2n(E) = Ltilde_n^(a-1)(2E) on V0,
// epsilon_2n+1(E) = Ltilde_n^(a)(2E) on V1; requires E > 0 (E = 0 only
// for a > 1 on V0).
CoefficientVector epsilon_coeffs(double a, double E, int N, Subspace subspace);

// Max-abs of (H v - eigenvalue v) over interior components. The margin
// is counted down from the highest populated index, which is where
// truncation leakage lives.
double eigen_residual(const osprep::Operator& H, const CoefficientVector& v,
                      double eigenvalue, int margin);

enum class KernelGenerator { AlphaV0, AlphaV1, Beta, Gamma, EpsilonV0, EpsilonV1 };

// Partial delta-normalization kernel K_N(s, s') = sum_{n<N} c_n(s)* c_n(s'),
// real for all six families. N counts terms of the generator's own
// sequence (polynomial degrees), not ambient indices.
double delta_kernel(KernelGenerator generator, double a, double s, double s_prime, int N);

// Residual of the intertwining identity: Lambda maps e_2n to the weighted
// Meixner-Pollaczek function (-i)^n sqrt(2^a n!/(pi Gamma(n+a))) P_n(E/2),
// under which Hb acts as multiplication by E. Returns the max over the
// grid of |Lambda(Hb e_2n)(E) - E (Lambda e_2n)(E)|.
double lambda_check(double a, int n, std::span<const double> E_grid, int N);

}  // namespace wigner::spectral
