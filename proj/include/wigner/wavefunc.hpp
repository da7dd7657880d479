#pragma once

#include <complex>
#include <vector>

#include "wigner/errors.hpp"

namespace wigner::wavefunc {

using Complex = std::complex<double>;

enum class WaveParity { Even, Odd };

// Superposition weights for the two independent wave functions at one
// energy; |A|^2 + |B|^2 = 1 is enforced on construction.
struct WaveParams {
  double a;
  Complex A;
  Complex B;
};

WaveParams make_wave_params(double a, Complex A, Complex B);

struct SampleRow {
  double point;
  Complex value;
};

// Evaluation grid with values; the grid must be strictly increasing.
struct SampleTable {
  std::vector<SampleRow> rows;
};

SampleTable make_sample_table(std::vector<SampleRow> rows);

// Unit-modulus phases C0(E) = |Gamma((a+iE)/2)| / Gamma((a+iE)/2) and
// C1 with a+1 in the argument.
Complex phase_c0(double a, double E);
Complex phase_c1(double a, double E);

// <v(x), u(E)>: even C0(E) |x|^(iE-1/2) / (2 sqrt(pi)),
//               odd  C1(E) x |x|^(iE-3/2) / (2 sqrt(pi)).
Complex inner_x_u(double a, double x, double E, WaveParity parity);

// <w(p), u(E)> delegates: even = <v(p), u(-E)>, odd = -i <v(p), u(-E)>.
Complex inner_p_u(double a, double p, double E, WaveParity parity);

// <v(x), w(p)> = |xp|^(a-1/2)/(2^a Gamma(a)) *
//                [0F1(-;a;-x^2p^2/4) + (ixp/2a) 0F1(-;a+1;-x^2p^2/4)];
// reduces to e^(ixp)/sqrt(2 pi) at a = 1/2.
Complex inner_x_p(double a, double x, double p);

// Wave function of the anticommutator Hamiltonian at energy E:
// A psi0_E(x) + B psi1_E(x).
Complex psi_bk(const WaveParams& params, double x, double E);

// <v(x), z(E)> for the free particle (real):
// even |x|^(a-1/2) E^((a-1)/2) 0F1(-;a;-2Ex^2/4) / (sqrt(2^a) Gamma(a)),
// odd with a+1, x |x|^(a-1/2), E^(a/2); requires E > 0.
double inner_x_z(double a, double x, double E, WaveParity parity);

// Free-particle wave function A (even part) + B (odd part).
Complex psi_free(const WaveParams& params, double x, double E);

// Partial sum sum_{n<N} gamma_n(p)* epsilon_n(E) over one parity class.
// The distributional limit sqrt2 sqrt|p| delta(p^2 - 2E) is only ever
// probed through smeared integrals of this partial sum.
Complex kernel_p_z(double a, double p, double E, int N, WaveParity parity);

}  // namespace wigner::wavefunc
