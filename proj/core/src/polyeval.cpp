#include "mandelmat/polyeval.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "mandelmat/matgen.hpp"

namespace mandelmat {

double perron_seed(int n) {
  if (n < 1) throw std::invalid_argument("perron_seed: n must be >= 1");
  const double pi = std::numbers::pi;
  return 2.0 - (3.0 / 8.0) * pi * pi * std::pow(4.0, -n);
}

namespace {

PerronResult newton_on_C(int n, double start, double tol, int max_iter) {
  if (n < 1) throw std::invalid_argument("perron_root: n must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("perron_root: tol must be positive");

  std::vector<double> history{start};
  double z = start;
  double best = start;
  double best_residual = std::abs(eval_C(n, start).value);
  for (int it = 1; it <= max_iter; ++it) {
    const auto [c, cp] = eval_C(n, z);
    if (cp == 0.0)
      throw ConvergenceError("perron_root: zero derivative at iterate", history);
    const double dz = c / cp;
    const double z_next = z - dz;
    history.push_back(z_next);
    const double res_next = std::abs(eval_C(n, z_next).value);
    if (res_next <= best_residual) {
      best = z_next;
      best_residual = res_next;
    } else if (best_residual < 1e-10) {
      // Residual went back up after reaching roundoff level: stagnation.
      return {n, best, it, best_residual, start};
    }
    if (std::abs(dz) <= tol * std::abs(z_next))
      return {n, best, it, best_residual, start};
    z = z_next;
  }
  throw ConvergenceError(
      "perron_root: no convergence for n = " + std::to_string(n) + " within " +
          std::to_string(max_iter) + " iterations",
      history);
}

}  // namespace

PerronResult perron_root(int n, double tol, int max_iter) {
  return newton_on_C(n, perron_seed(n), tol, max_iter);
}

PerronResult perron_root_from(int n, double start, double tol, int max_iter) {
  return newton_on_C(n, start, tol, max_iter);
}

std::vector<std::complex<double>> spectrum_small(int n, bool allow_large) {
  const int ceiling = allow_large ? kDenseSpectrumHardCeiling : kDenseSpectrumCeiling;
  if (n > ceiling)
    throw std::length_error("spectrum_small: order " + std::to_string(n) +
                            " above dense ceiling " + std::to_string(ceiling));
  const Eigen::MatrixXd m = mandelbrot_matrix(n).to_dense();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectrum_small: dense eigensolver failed");
  std::vector<std::complex<double>> eigs(solver.eigenvalues().data(),
                                         solver.eigenvalues().data() + m.rows());
  std::sort(eigs.begin(), eigs.end(), [](const auto& a, const auto& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  return eigs;
}

bool periodic_orbit_check(int n, std::complex<double> lambda, double steps_tol) {
  const std::complex<double> c = -lambda;
  std::complex<double> z = 0.0;
  for (int k = 0; k <= n; ++k) z = z * z + c;
  return std::abs(z) <= steps_tol;
}

}  // namespace mandelmat
