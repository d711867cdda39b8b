#include "mandelmat/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "mandelmat/matgen.hpp"
#include "mandelmat/polyeval.hpp"
#include "mandelmat/singular.hpp"

namespace mandelmat {

namespace {

struct PathState {
  double lambda = 0.0;
  Eigen::VectorXd x;  // unit eigenvector
};

// d lambda / d eps = x^T (dT/deps) x; only three positions carry eps.
double hellmann_feynman_slope(const PathState& p, Index d_inner) {
  const auto i0 = static_cast<Eigen::Index>(0);
  const auto im = static_cast<Eigen::Index>(d_inner);      // middle row (0-based)
  const auto in = static_cast<Eigen::Index>(d_inner + 1);  // first row of copy two
  return p.x(i0) * p.x(i0) + 2.0 * p.x(im) * p.x(in);
}

// Fixed-shift inverse iteration with a final Rayleigh quotient.
void correct(const Eigen::MatrixXd& t, double shift, PathState& p) {
  Eigen::MatrixXd shifted = t;
  shifted.diagonal().array() -= shift;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(shifted);
  Eigen::VectorXd y = p.x;
  double lambda_prev = shift;
  for (int it = 0; it < 8; ++it) {
    Eigen::VectorXd z = lu.solve(y);
    const double nrm = z.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm)) break;  // exactly singular shift
    y = z / nrm;
    const double lambda = y.dot(t * y);
    if (std::abs(lambda - lambda_prev) <=
        1e-13 * std::max(1.0, std::abs(lambda)) && it >= 1) {
      lambda_prev = lambda;
      break;
    }
    lambda_prev = lambda;
  }
  if (y.dot(p.x) < 0.0) y = -y;
  p.x = y;
  p.lambda = lambda_prev;
}

double local_gap(const std::vector<PathState>& states, std::size_t i) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < states.size(); ++j)
    if (j != i) gap = std::min(gap, std::abs(states[j].lambda - states[i].lambda));
  return gap;
}

// Advance every path from eps to eps + h; recursively bisect when a
// corrected value moves further than half its local gap.
void advance_front(const HomotopyMatrix& hm, std::vector<PathState>& states,
                   double eps, double h, Index d_inner, int depth) {
  const Eigen::MatrixXd t_next = hm.assemble(std::min(eps + h, 1.0));
  std::vector<PathState> trial = states;
  bool too_far = false;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double predicted =
        states[i].lambda + h * hellmann_feynman_slope(states[i], d_inner);
    correct(t_next, predicted, trial[i]);
    if (std::abs(trial[i].lambda - states[i].lambda) >
        0.5 * local_gap(states, i)) {
      too_far = true;
      break;
    }
  }
  if (too_far) {
    if (depth >= 16)
      throw PathCollisionError(
          "track_paths: step refinement exhausted near eps = " +
              std::to_string(eps),
          eps);
    advance_front(hm, states, eps, h / 2, d_inner, depth + 1);
    advance_front(hm, states, eps + h / 2, h / 2, d_inner, depth + 1);
    return;
  }
  states = std::move(trial);
}

}  // namespace

std::vector<EigenPath> track_paths(int n, int steps, double tol, bool allow_large) {
  const int ceiling = allow_large ? kTrackingHardCeiling : kTrackingDefaultCeiling;
  if (n > ceiling)
    throw std::length_error("track_paths: order " + std::to_string(n) +
                            " above tracking ceiling " + std::to_string(ceiling));
  if (steps < 1) throw std::invalid_argument("track_paths: steps must be >= 1");

  const HomotopyMatrix hm = homotopy_matrix(n);
  const Index d_inner = s_matrix(n).dim();

  // Eigen-decompose S_n once: the eps = 0 eigenpairs of T are closed forms.
  const Eigen::MatrixXd s_dense = s_matrix(n).to_dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s_dense);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("track_paths: eigensolver failed on S_n");

  const auto dim = static_cast<Eigen::Index>(hm.dim);
  std::vector<PathState> states;
  states.reserve(static_cast<std::size_t>(dim));
  {
    PathState zero;
    zero.lambda = 0.0;
    zero.x = Eigen::VectorXd::Zero(dim);
    zero.x(static_cast<Eigen::Index>(d_inner)) = 1.0;  // middle basis vector
    states.push_back(std::move(zero));
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index k = 0; k < s_dense.rows(); ++k) {
    for (const double sign : {+1.0, -1.0}) {
      PathState p;
      p.lambda = sign * es.eigenvalues()(k);
      p.x = Eigen::VectorXd::Zero(dim);
      p.x.head(s_dense.rows()) = inv_sqrt2 * es.eigenvectors().col(k);
      p.x.tail(s_dense.rows()) = sign * inv_sqrt2 * es.eigenvectors().col(k);
      states.push_back(std::move(p));
    }
  }

  std::vector<EigenPath> paths(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    paths[i].n = n;
    paths[i].start_value = states[i].lambda;
    paths[i].samples.emplace_back(0.0, states[i].lambda);
  }

  const double h = 1.0 / steps;
  for (int step = 0; step < steps; ++step) {
    const double eps = step * h;
    advance_front(hm, states, eps, h, d_inner, 0);
    const double eps_next = (step + 1) * h;
    for (std::size_t i = 0; i < states.size(); ++i)
      paths[i].samples.emplace_back(eps_next, states[i].lambda);
    // Collision guard at the new grid point.
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = i + 1; j < states.size(); ++j)
        if (std::abs(states[i].lambda - states[j].lambda) <=
            tol * std::max(1.0, std::abs(states[i].lambda)))
          throw PathCollisionError(
              "track_paths: paths " + std::to_string(i) + " and " +
                  std::to_string(j) + " collided at eps = " +
                  std::to_string(eps_next),
              eps_next);
  }
  for (std::size_t i = 0; i < states.size(); ++i)
    paths[i].converged_end = states[i].lambda;
  return paths;
}

ChainedData chained_figure_data(int n_max, int steps_per_stage) {
  if (n_max < 2) throw std::invalid_argument("chained_figure_data: n_max must be >= 2");
  ChainedData data;
  data.n_max = n_max;
  int next_id = 0;
  for (int stage = 1; stage < n_max; ++stage) {
    const std::vector<EigenPath> paths = track_paths(stage, steps_per_stage);
    data.stage_path_counts.push_back(static_cast<int>(paths.size()));
    std::vector<double> ends;
    ends.reserve(paths.size());
    for (const EigenPath& p : paths) {
      const int id = next_id++;
      for (const auto& [eps, lambda] : p.samples)
        data.points.push_back(
            {id, stage + eps, std::abs(lambda), lambda * lambda});
      ends.push_back(p.converged_end);
    }
    data.stage_ends.push_back(std::move(ends));
  }
  return data;
}

double sigma_bound_value(int n) { return std::sqrt(2.0193 * n - 0.7914); }

double sigma_bound_check(int n) {
  if (n < 2) throw std::invalid_argument("sigma_bound_check: n must be >= 2");
  const double sigma1 = dominant_singular_triple(n).sigma;
  return (sigma_bound_value(n) - sigma1) / sigma1;
}

BiPoly char_poly_T(int n, bool allow_large) {
  const int ceiling = allow_large ? kCharPolyHardCeiling : kCharPolyDefaultCeiling;
  if (n > ceiling)
    throw std::length_error("char_poly_T: order " + std::to_string(n) +
                            " above exact ceiling " + std::to_string(ceiling));
  const HomotopyMatrix hm = homotopy_matrix(n);
  const auto dim = static_cast<std::size_t>(hm.dim);
  std::vector<std::vector<BiPoly>> a(dim, std::vector<BiPoly>(dim));
  for (std::size_t i = 0; i < dim; ++i) a[i][i] = BiPoly::lambda();
  for (const Entry& e : hm.base.entries()) {
    const auto r = static_cast<std::size_t>(e.row - 1);
    const auto c = static_cast<std::size_t>(e.col - 1);
    a[r][c] = a[r][c] - BiPoly(e.value);
  }
  const BiPoly eps = BiPoly::eps_monomial(1, 1);
  for (const auto& [row, col] : hm.eps_positions) {
    const auto r = static_cast<std::size_t>(row - 1);
    const auto c = static_cast<std::size_t>(col - 1);
    a[r][c] = a[r][c] - eps;
  }
  return bareiss_determinant(std::move(a));
}

bool nonzero_coefficients_positive(const IntPoly& p) {
  if (p.zero()) return false;
  for (const BigInt& c : p.coeffs())
    if (c < 0) return false;
  return true;
}

bool discriminant_positivity(int n, bool allow_large) {
  const IntPoly disc = discriminant_lambda(char_poly_T(n, allow_large));
  return nonzero_coefficients_positive(disc);
}

}  // namespace mandelmat
