#include "mandelmat/singular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "mandelmat/eigvec.hpp"
#include "mandelmat/matgen.hpp"
#include "mandelmat/polyeval.hpp"

namespace mandelmat {

SingularTriple dominant_singular_triple(int n, double tol, std::int64_t max_iter) {
  const SparseIntMatrix s = s_matrix(n);
  const CsrView csr(s);
  const auto d = static_cast<std::size_t>(s.dim());

  std::vector<double> x(d, 1.0 / std::sqrt(static_cast<double>(d)));
  std::vector<double> y(d);
  std::vector<double> rayleigh_history;
  double rq_prev = 0.0;
  int stable = 0;
  std::int64_t it = 0;
  for (it = 1; it <= max_iter; ++it) {
    csr.apply(x, y);
    double rq = 0.0, norm_sq = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      rq += x[i] * y[i];
      norm_sq += y[i] * y[i];
    }
    const double norm = std::sqrt(norm_sq);
    for (std::size_t i = 0; i < d; ++i) x[i] = y[i] / norm;
    rayleigh_history.push_back(rq);
    if (std::abs(rq - rq_prev) <= 1e-14 * std::abs(rq)) {
      if (++stable >= 2) {
        rq_prev = rq;
        break;
      }
    } else {
      stable = 0;
    }
    rq_prev = rq;
  }
  if (it > max_iter)
    throw ConvergenceError("dominant_singular_triple: iteration cap at n = " +
                               std::to_string(n),
                           rayleigh_history);

  const double sigma = rq_prev;
  if (x.front() < 0.0)
    for (double& xi : x) xi = -xi;

  SingularTriple triple;
  triple.n = n;
  triple.sigma = sigma;
  triple.u = x;
  triple.v.assign(x.rbegin(), x.rend());  // v = J u
  triple.iterations = it;

  // Certify the pair on M_n itself: M v should reproduce sigma u.
  const SparseIntMatrix m = mandelbrot_matrix(n);
  const std::vector<double> mv = m.apply(triple.v);
  double resid = 0.0, umax = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    resid = std::max(resid, std::abs(mv[i] - sigma * triple.u[i]));
    umax = std::max(umax, std::abs(triple.u[i]));
  }
  if (resid > tol * sigma * umax)
    throw ConvergenceError(
        "dominant_singular_triple: residual " + std::to_string(resid) +
            " above tolerance at n = " + std::to_string(n),
        rayleigh_history);
  return triple;
}

SingularSpectrum all_singular_values(int n, bool allow_large) {
  const int ceiling = allow_large ? kDenseSpectraHardCeiling : kDenseSpectraCeiling;
  if (n > ceiling)
    throw std::length_error("all_singular_values: order " + std::to_string(n) +
                            " above dense ceiling " + std::to_string(ceiling));
  const Eigen::MatrixXd s = s_matrix(n).to_dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("all_singular_values: eigensolver failed");

  SingularSpectrum out;
  out.n = n;
  out.s_eigs.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + s.rows());
  std::sort(out.s_eigs.begin(), out.s_eigs.end(),
            [](double a, double b) { return std::abs(a) > std::abs(b); });
  out.sigmas.reserve(out.s_eigs.size());
  for (double e : out.s_eigs) out.sigmas.push_back(std::abs(e));
  return out;
}

double min_magnitude_gap(const SingularSpectrum& s) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < s.sigmas.size(); ++i)
    gap = std::min(gap, s.sigmas[i] - s.sigmas[i + 1]);
  return gap;
}

bool alternates_in_sign(std::span<const double> eigs, double distinct_tol) {
  if (eigs.empty()) return false;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    const double expected_sign = i % 2 == 0 ? 1.0 : -1.0;
    if (eigs[i] * expected_sign <= 0.0) return false;
    if (i + 1 < eigs.size() &&
        std::abs(eigs[i]) - std::abs(eigs[i + 1]) <= distinct_tol)
      return false;
  }
  // Odd count makes the smallest positive automatically when alternation held.
  return eigs.back() > 0.0;
}

bool sign_alternation_check(int n, bool allow_large, double sort_tol) {
  if (n < 2)
    throw std::invalid_argument("sign_alternation_check: theorem needs n > 1");
  const SingularSpectrum s = all_singular_values(n, allow_large);
  return alternates_in_sign(s.s_eigs, sort_tol);
}

SFactsReport s_facts_check(int n) {
  const SparseIntMatrix s = s_matrix(n);
  const SparseIntMatrix m = mandelbrot_matrix(n);
  const Index d = s.dim();

  SFactsReport report;
  report.n = n;
  report.trace = s.trace();
  // trace(S^2) = sum_{i,j} S_ij S_ji, exact over the stored entries.
  std::int64_t tr2 = 0;
  for (const Entry& e : s.entries()) tr2 += e.value * s.value_at(e.col, e.row);
  report.trace_square = tr2;

  report.product_form_matches = multiply_exact(m, anti_identity(d)) == s;

  // det S = det M * det J; the reversal on d = 2^n - 1 points has parity
  // (-1)^{floor(d/2)}.
  const BigInt det_m = det_exact(m);
  const Index swaps = d / 2;
  report.det = swaps % 2 == 0 ? det_m : BigInt(-det_m);

  report.square_matches =
      multiply_exact(s, s) == multiply_exact(m, m.transposed());

  const BigInt expected_det = n == 1 ? BigInt(1) : BigInt(-1);
  report.pass = report.product_form_matches && report.square_matches &&
                report.det == expected_det && report.trace == 1 &&
                report.trace_square == (Index{1} << (n + 1)) - 3;
  if (!report.pass)
    throw StructureViolation("s_facts_check: exact fact mismatch at n = " +
                             std::to_string(n));
  return report;
}

bool jw_pairing_check(int n, bool allow_large, double tol) {
  const int ceiling = allow_large ? kDenseSpectraHardCeiling : kDenseSpectraCeiling;
  if (n > ceiling)
    throw std::length_error("jw_pairing_check: order above dense ceiling");
  const Eigen::MatrixXd jw = jordan_wielandt(n).to_dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jw, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("jw_pairing_check: eigensolver failed");
  std::vector<double> eigs(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + jw.rows());
  std::sort(eigs.begin(), eigs.end());
  const std::size_t d = eigs.size() / 2;
  for (std::size_t i = 0; i < eigs.size(); ++i)
    if (std::abs(eigs[i] + eigs[eigs.size() - 1 - i]) > tol) return false;

  std::vector<double> positive(eigs.begin() + static_cast<std::ptrdiff_t>(d),
                               eigs.end());
  std::vector<double> sigmas = all_singular_values(n, allow_large).sigmas;
  std::sort(sigmas.begin(), sigmas.end());
  for (std::size_t i = 0; i < d; ++i)
    if (std::abs(positive[i] - sigmas[i]) > tol) return false;
  return true;
}

}  // namespace mandelmat
