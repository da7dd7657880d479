// Python bindings for the core operations: special functions, operator
// matrices, eigenvector coefficients, and wave functions.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wigner/acceptance.hpp"
#include "wigner/numerics.hpp"
#include "wigner/orthopoly.hpp"
#include "wigner/osprep.hpp"
#include "wigner/spectral.hpp"
#include "wigner/wavefunc.hpp"

namespace py = pybind11;

namespace {

using wigner::numerics::Complex;

wigner::orthopoly::PolyFamily family_of(const std::string& name, double param) {
  using wigner::orthopoly::FamilyKind;
  if (name == "mp") return wigner::orthopoly::make_family(FamilyKind::MeixnerPollaczek, param);
  if (name == "laguerre") return wigner::orthopoly::make_family(FamilyKind::Laguerre, param);
  if (name == "genhermite") return wigner::orthopoly::make_family(FamilyKind::GenHermite, param);
  throw wigner::DomainError("unknown family: " + name);
}

wigner::osprep::Observable observable_of(const std::string& name) {
  using wigner::osprep::Observable;
  if (name == "x") return Observable::X;
  if (name == "p") return Observable::P;
  if (name == "hb") return Observable::Hb;
  if (name == "hf") return Observable::Hf;
  throw wigner::DomainError("unknown observable: " + name);
}

wigner::spectral::Subspace subspace_of(const std::string& name) {
  using wigner::spectral::Subspace;
  if (name == "V0") return Subspace::V0;
  if (name == "V1") return Subspace::V1;
  throw wigner::DomainError("subspace must be V0 or V1");
}

wigner::wavefunc::WaveParity parity_of(const std::string& name) {
  using wigner::wavefunc::WaveParity;
  if (name == "even") return WaveParity::Even;
  if (name == "odd") return WaveParity::Odd;
  throw wigner::DomainError("parity must be even or odd");
}

wigner::spectral::KernelGenerator kernel_of(const std::string& name) {
  using wigner::spectral::KernelGenerator;
  if (name == "alpha0") return KernelGenerator::AlphaV0;
  if (name == "alpha1") return KernelGenerator::AlphaV1;
  if (name == "beta") return KernelGenerator::Beta;
  if (name == "gamma") return KernelGenerator::Gamma;
  if (name == "epsilon0") return KernelGenerator::EpsilonV0;
  if (name == "epsilon1") return KernelGenerator::EpsilonV1;
  throw wigner::DomainError("unknown kernel generator: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wigner quantization of xp and the free particle on the osp(1|2) "
            "positive discrete series";

  // numerics
  m.def("pochhammer_rising",
        py::overload_cast<double, int>(&wigner::numerics::pochhammer_rising),
        py::arg("a"), py::arg("n"));
  m.def("terminating_2f1", &wigner::numerics::terminating_2f1, py::arg("n"),
        py::arg("b"), py::arg("c"), py::arg("z"));
  m.def("terminating_1f1", &wigner::numerics::terminating_1f1, py::arg("n"),
        py::arg("c"), py::arg("z"));
  m.def("hyp0f1", &wigner::numerics::hyp0f1, py::arg("c"), py::arg("z"));
  m.def("gamma_complex", &wigner::numerics::gamma_complex, py::arg("z"));
  m.def("abs_gamma", &wigner::numerics::abs_gamma, py::arg("z"));
  m.def("jagannathan_pair", &wigner::numerics::jagannathan_pair, py::arg("a"),
        py::arg("b"), py::arg("x"), py::arg("y"), py::arg("t"), py::arg("n_terms"));
  m.def("intseries_pair", &wigner::numerics::intseries_pair, py::arg("a"),
        py::arg("x"), py::arg("y"), py::arg("t"), py::arg("n_terms"));

  // orthopoly
  m.def("mp_eval", &wigner::orthopoly::mp_eval, py::arg("n"), py::arg("a"),
        py::arg("E"), py::arg("normalized") = false);
  m.def("laguerre_eval", &wigner::orthopoly::laguerre_eval, py::arg("n"),
        py::arg("alpha"), py::arg("x"), py::arg("normalized") = false);
  m.def("genhermite_eval", &wigner::orthopoly::genhermite_eval, py::arg("n"),
        py::arg("a"), py::arg("x"), py::arg("normalized") = false);
  m.def(
      "recurrence_eval",
      [](const std::string& family, double param, int n, double point) {
        return wigner::orthopoly::recurrence_eval(family_of(family, param), n, point);
      },
      py::arg("family"), py::arg("param"), py::arg("n"), py::arg("point"));
  m.def(
      "gram_matrix",
      [](const std::string& family, double param, int max_degree, double rel_tol) {
        const wigner::numerics::QuadratureSpec spec{0.0, 1.0, rel_tol, 48};
        return wigner::orthopoly::gram_matrix(family_of(family, param), max_degree,
                                              spec);
      },
      py::arg("family"), py::arg("param"), py::arg("max_degree") = 6,
      py::arg("rel_tol") = 1e-9);

  // osprep
  m.def(
      "observable",
      [](double a, int trunc, const std::string& which) {
        return wigner::osprep::observable({a, trunc}, observable_of(which)).mat;
      },
      py::arg("a"), py::arg("trunc"), py::arg("which"),
      "Truncated matrix of x, p, hb, or hf");
  m.def(
      "ladder_ops",
      [](double a, int trunc) {
        auto [bp, bm] = wigner::osprep::ladder_ops({a, trunc});
        return std::make_pair(bp.mat, bm.mat);
      },
      py::arg("a"), py::arg("trunc"));
  m.def(
      "even_triple",
      [](double a, int trunc) {
        auto [h, e, f] = wigner::osprep::even_triple({a, trunc});
        return std::make_tuple(h.mat, e.mat, f.mat);
      },
      py::arg("a"), py::arg("trunc"));
  m.def(
      "relation_report",
      [](double a, int trunc, int margin) {
        std::map<std::string, double> out;
        for (const auto& r : wigner::osprep::relation_report({a, trunc}, margin))
          out[r.name] = r.residual;
        return out;
      },
      py::arg("a"), py::arg("trunc") = 128, py::arg("margin") = 4);

  // spectral
  auto coeffs = [](const wigner::spectral::CoefficientVector& cv) {
    return cv.values;
  };
  m.def(
      "alpha_coeffs",
      [coeffs](double a, double E, int N, const std::string& subspace) {
        return coeffs(wigner::spectral::alpha_coeffs(a, E, N, subspace_of(subspace)));
      },
      py::arg("a"), py::arg("E"), py::arg("N"), py::arg("subspace"));
  m.def(
      "beta_coeffs",
      [coeffs](double a, double x, int N) {
        return coeffs(wigner::spectral::beta_coeffs(a, x, N));
      },
      py::arg("a"), py::arg("x"), py::arg("N"));
  m.def(
      "gamma_coeffs",
      [coeffs](double a, double p, int N) {
        return coeffs(wigner::spectral::gamma_coeffs(a, p, N));
      },
      py::arg("a"), py::arg("p"), py::arg("N"));
  m.def(
      "epsilon_coeffs",
      [coeffs](double a, double E, int N, const std::string& subspace) {
        return coeffs(
            wigner::spectral::epsilon_coeffs(a, E, N, subspace_of(subspace)));
      },
      py::arg("a"), py::arg("E"), py::arg("N"), py::arg("subspace"));
  m.def(
      "eigen_residual",
      [](double a, int trunc, const std::string& which, const std::string& generator,
         double eigenvalue, int margin) {
        const auto H = wigner::osprep::observable({a, trunc}, observable_of(which));
        using wigner::spectral::Subspace;
        wigner::spectral::CoefficientVector v =
            generator == "alpha0"
                ? wigner::spectral::alpha_coeffs(a, eigenvalue, trunc, Subspace::V0)
            : generator == "alpha1"
                ? wigner::spectral::alpha_coeffs(a, eigenvalue, trunc, Subspace::V1)
            : generator == "beta" ? wigner::spectral::beta_coeffs(a, eigenvalue, trunc)
            : generator == "gamma"
                ? wigner::spectral::gamma_coeffs(a, eigenvalue, trunc)
            : generator == "epsilon0"
                ? wigner::spectral::epsilon_coeffs(a, eigenvalue, trunc, Subspace::V0)
                : wigner::spectral::epsilon_coeffs(a, eigenvalue, trunc,
                                                   Subspace::V1);
        return wigner::spectral::eigen_residual(H, v, eigenvalue, margin);
      },
      py::arg("a"), py::arg("trunc"), py::arg("which"), py::arg("generator"),
      py::arg("eigenvalue"), py::arg("margin") = 4);
  m.def(
      "delta_kernel",
      [](const std::string& generator, double a, double s, double s_prime, int N) {
        return wigner::spectral::delta_kernel(kernel_of(generator), a, s, s_prime, N);
      },
      py::arg("generator"), py::arg("a"), py::arg("s"), py::arg("s_prime"),
      py::arg("N"));
  m.def(
      "lambda_check",
      [](double a, int n, const std::vector<double>& grid, int N) {
        return wigner::spectral::lambda_check(a, n, grid, N);
      },
      py::arg("a"), py::arg("n"), py::arg("E_grid"), py::arg("N") = 128);

  // wavefunc
  m.def("phase_c0", &wigner::wavefunc::phase_c0, py::arg("a"), py::arg("E"));
  m.def("phase_c1", &wigner::wavefunc::phase_c1, py::arg("a"), py::arg("E"));
  m.def(
      "inner_x_u",
      [](double a, double x, double E, const std::string& parity) {
        return wigner::wavefunc::inner_x_u(a, x, E, parity_of(parity));
      },
      py::arg("a"), py::arg("x"), py::arg("E"), py::arg("parity"));
  m.def(
      "inner_p_u",
      [](double a, double p, double E, const std::string& parity) {
        return wigner::wavefunc::inner_p_u(a, p, E, parity_of(parity));
      },
      py::arg("a"), py::arg("p"), py::arg("E"), py::arg("parity"));
  m.def("inner_x_p", &wigner::wavefunc::inner_x_p, py::arg("a"), py::arg("x"),
        py::arg("p"));
  m.def(
      "inner_x_z",
      [](double a, double x, double E, const std::string& parity) {
        return wigner::wavefunc::inner_x_z(a, x, E, parity_of(parity));
      },
      py::arg("a"), py::arg("x"), py::arg("E"), py::arg("parity"));
  m.def(
      "psi_bk",
      [](double a, Complex A, Complex B, double x, double E) {
        return wigner::wavefunc::psi_bk(wigner::wavefunc::make_wave_params(a, A, B), x,
                                        E);
      },
      py::arg("a"), py::arg("A"), py::arg("B"), py::arg("x"), py::arg("E"));
  m.def(
      "psi_free",
      [](double a, Complex A, Complex B, double x, double E) {
        return wigner::wavefunc::psi_free(wigner::wavefunc::make_wave_params(a, A, B),
                                          x, E);
      },
      py::arg("a"), py::arg("A"), py::arg("B"), py::arg("x"), py::arg("E"));
  m.def(
      "kernel_p_z",
      [](double a, double p, double E, int N, const std::string& parity) {
        return wigner::wavefunc::kernel_p_z(a, p, E, N, parity_of(parity));
      },
      py::arg("a"), py::arg("p"), py::arg("E"), py::arg("N"), py::arg("parity"));

  // acceptance
  m.def(
      "run_acceptance",
      [](unsigned seed) {
        py::list out;
        for (const auto& r : wigner::acceptance::run_all(seed)) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["observed"] = r.observed;
          d["tolerance"] = r.tolerance;
          d["detail"] = r.detail;
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("seed") = 42, "Run the acceptance criteria; returns one dict each");

  py::register_exception<wigner::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<wigner::ConvergenceError>(m, "ConvergenceError",
                                                   PyExc_RuntimeError);
}
