#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wigner/numerics.hpp"

namespace wigner::orthopoly {

enum class FamilyKind { MeixnerPollaczek, Laguerre, GenHermite };

// One of the three families together with its parameter:
// a for Meixner-Pollaczek (lambda = a/2, phi = pi/2 fixed) and for the
// generalized Hermite functions, alpha for Laguerre.
struct PolyFamily {
  FamilyKind kind;
  double param;
};

PolyFamily make_family(FamilyKind kind, double param);  // validates the parameter

struct PolyValue {
  int degree;
  double point;
  double value;
  bool normalized;
};

// Meixner-Pollaczek P_n(E) = i^n (a)_n/n! 2F1(-n, a/2+iE; a; 2) via the
// terminating series; the i^n phase makes the value real and the
// imaginary residue is checked. The normalized variant is
//   Ptilde_n(E) = (|Gamma(a/2+iE)|/2) sqrt(2^a n! / (pi Gamma(n+a))) P_n(E),
// with int Ptilde_m Ptilde_n dE = delta_mn / 2.
double mp_eval(int n, double a, double E, bool normalized);

// Laguerre L_n^(alpha)(x) = (alpha+1)_n/n! 1F1(-n; alpha+1; x); the
// normalized variant sqrt(2) e^(-x/2) x^(alpha/2) sqrt(n!/Gamma(n+alpha+1)) L_n
// integrates to 2 delta_mn over [0, inf).
double laguerre_eval(int n, double alpha, double x, bool normalized);

// Generalized Hermite Q_2n = (-1)^n L_n^(a-1)(x^2), Q_2n+1 = (-1)^n x L_n^(a)(x^2);
// normalized variants carry |x|^(a-1/2) e^(-x^2/2) and integrate to delta_mn.
// At x = 0 with a < 1/2 the even normalized value diverges (+/-inf is returned).
double genhermite_eval(int n, double a, double x, bool normalized);

// Normalized-variant evaluation purely by upward three-term recurrence
// from closed-form degree-0/1 seeds. Stable on the oscillatory grids the
// tests use; for |point| far beyond the classically allowed region the
// upward direction loses digits.
double recurrence_eval(const PolyFamily& family, int n, double point);

// All normalized degrees 0..nmax at one point, one recurrence pass.
std::vector<double> recurrence_all(const PolyFamily& family, int nmax, double point);

// Gram matrix G[m][n] = int ftilde_m ftilde_n over the family's natural
// domain (tail-truncated). Expected c*I with c = 1/2, 2, 1 respectively.
Eigen::MatrixXd gram_matrix(const PolyFamily& family, int max_degree,
                            const numerics::QuadratureSpec& spec);

double orthonormality_constant(FamilyKind kind);

}  // namespace wigner::orthopoly
