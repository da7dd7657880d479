#pragma once

#include <Eigen/Dense>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wigner/errors.hpp"

namespace wigner::osprep {

// Positive discrete series representation rho_a truncated to the first
// `trunc` basis vectors of l^2(Z+). Even basis indices span V0, odd
// indices span V1.
struct RepParams {
  double a;
  int trunc;
  void validate() const {
    if (!(a > 0.0)) throw DomainError("RepParams: a must be positive");
    if (trunc < 8) throw DomainError("RepParams: truncation must be >= 8");
  }
};

// Even operators preserve the V0/V1 split (entries vanish for i+j odd),
// odd operators swap the subspaces (entries vanish for i+j even).
enum class Parity { Even, Odd, None };

struct Operator {
  Eigen::MatrixXcd mat;
  Parity parity = Parity::None;
  int dim() const { return static_cast<int>(mat.rows()); }
};

// Declared parity matches the sparsity pattern exactly.
bool parity_consistent(const Operator& op);

// (B+, B-) with B+ e_2n = sqrt(2(n+a)) e_2n+1, B+ e_2n+1 = sqrt(2(n+1)) e_2n+2
// and B- the exact conjugate transpose.
std::pair<Operator, Operator> ladder_ops(const RepParams& params);

// (h, e, f): h = {b+,b-}/2 diagonal with h e_k = (k+a) e_k, e = (b+)^2/2
// raising by two, f = -(b-)^2/2 lowering by two. Entries are hard-coded
// closed forms, not products of truncated factors.
std::tuple<Operator, Operator, Operator> even_triple(const RepParams& params);

enum class Observable { X, P, Hb, Hf };

// x = (b+ + b-)/sqrt2, p = i(b+ - b-)/sqrt2 (odd),
// Hb = i(e+f), Hf = -(e - f - h)/2 (even), all from exact entry formulas.
Operator observable(const RepParams& params, Observable which);

Operator commutator(const Operator& A, const Operator& B);
Operator anticommutator(const Operator& A, const Operator& B);

// Max-abs over entries [i][j] with i, j < N - margin. Relation checks
// multiply truncated matrices, which corrupts only the last few rows
// and columns; the mask hides exactly those.
double interior_norm(const Operator& M, int margin);

struct RelationResidual {
  std::string name;
  double residual;
};

// Interior residuals of the algebraic identities the representation
// satisfies: the two compatibility conditions of the anticommutator
// Hamiltonian, [Hb, b+-] = -i b-+, the osp(1|2) defining relations, the
// free-particle condition [p^2, x] = -2ip, the ladder-sum relation
// [{b+,b-}, b+ + b-] = 2(b+ - b-) with its A=2, B=0 resolution, and the
// su(1,1) relations of (h, e, f).
std::vector<RelationResidual> relation_report(const RepParams& params, int margin);

double max_residual(const std::vector<RelationResidual>& report);

}  // namespace wigner::osprep
