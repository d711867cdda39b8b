#pragma once

#include <stdexcept>
#include <vector>

#include "mandelmat/bipoly.hpp"

namespace mandelmat {

/// One eigenvalue trajectory of T(eps) on eps in [0, 1].
struct EigenPath {
  int n = 0;
  double start_value = 0.0;
  std::vector<std::pair<double, double>> samples;  // (eps, lambda), eps increasing
  double converged_end = 0.0;
};

/// Raised when a corrector lands on another path's eigenvalue: under the
/// simplicity conjecture the paths never meet, so a collision marks either
/// a violated conjecture or an overlong step.
class PathCollisionError : public std::runtime_error {
 public:
  PathCollisionError(const std::string& what, double eps)
      : std::runtime_error(what), eps_(eps) {}
  double eps() const { return eps_; }

 private:
  double eps_;
};

inline constexpr int kTrackingDefaultCeiling = 6;
inline constexpr int kTrackingHardCeiling = 10;

/// Track every eigenvalue of T(eps) from eps = 0 to eps = 1.
///
/// Start set: {0} union {+-lambda_i(S_n)}, i.e. 2^{n+1} - 1 distinct values
/// with eigenvectors known in closed form from those of S_n. Each grid step
/// advances all paths by a Hellmann-Feynman predictor (lambda' = x^T T' x)
/// followed by fixed-shift inverse iteration on T(eps + h); a step whose
/// correction moves a path by more than half its local gap is bisected.
std::vector<EigenPath> track_paths(int n, int steps = 256, double tol = 1e-10,
                                   bool allow_large = false);

/// Fig.-12-style chained data: stages n = 1 .. n_max - 1 with t = n + eps,
/// each stage re-seeded by the previous endpoints, their negatives, and 0.
struct ChainedPoint {
  int path_id = 0;
  double t = 0.0;
  double abs_lambda = 0.0;
  double lambda_squared = 0.0;
};

struct ChainedData {
  int n_max = 0;
  std::vector<ChainedPoint> points;
  std::vector<int> stage_path_counts;          // paths per stage
  std::vector<std::vector<double>> stage_ends; // signed endpoints per stage
};

ChainedData chained_figure_data(int n_max, int steps_per_stage = 64);

/// (bound - sigma_1) / sigma_1 for the conjectured bound
/// sigma_{1,n} <= sqrt(2.0193 n - 0.7914). Nonnegative while the conjecture
/// holds; a negative value is a reportable violation, not an exception.
double sigma_bound_check(int n);
double sigma_bound_value(int n);

inline constexpr int kCharPolyDefaultCeiling = 2;  // dim 7
inline constexpr int kCharPolyHardCeiling = 3;     // dim 15, minutes-scale

/// Exact characteristic polynomial F_n(lambda, eps) = det(lambda I - T(eps))
/// over the integer bivariate ring, by fraction-free elimination.
BiPoly char_poly_T(int n, bool allow_large = false);

/// True iff every nonzero coefficient of disc_lambda(F_n) as a polynomial
/// in eps is strictly positive (the odd eps powers vanish identically:
/// T(-eps) is sign-similar to T(eps), so the discriminant is even in eps).
bool discriminant_positivity(int n, bool allow_large = false);

/// True iff the polynomial has no negative coefficient and is nonzero.
bool nonzero_coefficients_positive(const IntPoly& p);

}  // namespace mandelmat
