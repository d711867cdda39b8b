#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mandelmat {

/// Value and derivative of a polynomial obtained purely through its
/// recurrence: no expanded coefficient vector is ever formed (the monomial
/// coefficients grow doubly exponentially and evaluating them would cost
/// O(2^n) instead of O(n)).
template <typename Scalar>
struct PolyEval {
  Scalar value{};
  Scalar derivative{};
};

/// C_n: C_0 = 1, C_{k+1}(z) = z C_k(z)^2 - 1, with the derivative advanced
/// alongside as C_{k+1}'(z) = C_k(z)^2 + 2 z C_k(z) C_k'(z). O(n) work.
template <typename Scalar>
PolyEval<Scalar> eval_C(int n, Scalar z) {
  if (n < 0) throw std::invalid_argument("eval_C: n must be >= 0");
  Scalar c{1};
  Scalar cp{0};
  for (int k = 0; k < n; ++k) {
    cp = c * c + Scalar{2} * z * c * cp;
    c = z * c * c - Scalar{1};
  }
  return {c, cp};
}

/// p_n: p_0 = 0, p_{k+1}(z) = z p_k(z)^2 + 1. Related to C by
/// C_n(z) = -p_{n+1}(-z).
template <typename Scalar>
PolyEval<Scalar> eval_p(int n, Scalar z) {
  if (n < 0) throw std::invalid_argument("eval_p: n must be >= 0");
  Scalar p{0};
  Scalar pp{0};
  for (int k = 0; k < n; ++k) {
    pp = p * p + Scalar{2} * z * p * pp;
    p = z * p * p + Scalar{1};
  }
  return {p, pp};
}

/// Asymptotic seed 2 - (3/8) pi^2 4^{-n} for the dominant root. Starting
/// Newton from plain 2.0 instead is not good enough for convergence.
double perron_seed(int n);

inline constexpr double kNewtonDefaultTol =
    4.0 * std::numeric_limits<double>::epsilon();

struct PerronResult {
  int n = 0;
  double rho = 0.0;
  int iterations = 0;
  double residual = 0.0;  // |C_n(rho)|
  double seed = 0.0;
};

/// Thrown when an iteration fails to settle; carries the iterate history
/// for diagnosis (expected when a caller overrides the seed with 2.0).
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> history)
      : std::runtime_error(what), history_(std::move(history)) {}
  const std::vector<double>& history() const { return history_; }

 private:
  std::vector<double> history_;
};

/// Newton iteration on the C_n recurrence from the asymptotic seed.
/// Stops when the relative step drops below tol, or when the residual
/// increases after having reached 1e-10 (stagnation at roundoff level).
PerronResult perron_root(int n, double tol = kNewtonDefaultTol, int max_iter = 50);

/// Same iteration from a caller-chosen starting point.
PerronResult perron_root_from(int n, double start, double tol = kNewtonDefaultTol,
                              int max_iter = 50);

inline constexpr int kDenseSpectrumCeiling = 8;       // d = 255
inline constexpr int kDenseSpectrumHardCeiling = 12;  // d = 4095, minutes-scale

/// All d_n eigenvalues of M_n through a dense nonsymmetric eigensolver,
/// sorted by real part then imaginary part. Orders 9..12 only behind
/// allow_large; beyond that a std::length_error is raised.
std::vector<std::complex<double>> spectrum_small(int n, bool allow_large = false);

/// Iterate z <- z^2 + c with c = -lambda from z_0 = 0 for n+1 steps and
/// report whether the orbit returned to zero, i.e. whether -lambda is a
/// periodic point of the Mandelbrot iteration with period dividing n+1.
bool periodic_orbit_check(int n, std::complex<double> lambda, double steps_tol);

}  // namespace mandelmat
