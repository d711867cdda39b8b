#include "mandelmat/eigvec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "mandelmat/matgen.hpp"
#include "mandelmat/polyeval.hpp"

namespace mandelmat {

const char* to_string(Normalization n) {
  return n == Normalization::last_entry_one ? "last_entry_one" : "first_entry_one";
}

const char* to_string(EigvecMethod m) {
  return m == EigvecMethod::solve ? "solve" : "recursive";
}

EigvecResult eigenvector_solve(int n, double rho) {
  const SparseIntMatrix m = mandelbrot_matrix(n);
  const Index d = m.dim();

  // Columns >= row of each row (the subdiagonal one at (i, i-1) is implicit).
  std::vector<std::vector<Index>> upper(static_cast<std::size_t>(d) + 1);
  for (const Entry& e : m.entries())
    if (e.col >= e.row) upper[static_cast<std::size_t>(e.row)].push_back(e.col);

  std::vector<double> x(static_cast<std::size_t>(d) + 1, 0.0);
  x[static_cast<std::size_t>(d)] = 1.0;
  for (Index i = d; i >= 2; --i) {
    double s = 0.0;
    for (Index c : upper[static_cast<std::size_t>(i)])
      s += x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(i - 1)] = rho * x[static_cast<std::size_t>(i)] - s;
  }
  x.erase(x.begin());
  return {n, rho, std::move(x), Normalization::last_entry_one, EigvecMethod::solve};
}

EigvecResult eigenvector_recursive(int n) {
  const double rho = perron_root(n).rho;
  std::vector<double> x{1.0};
  double c = 1.0;  // C_0(rho)
  for (int k = 1; k < n; ++k) {
    c = rho * c * c - 1.0;  // C_k(rho)
    const double scale = rho * c;
    std::vector<double> next;
    next.reserve(2 * x.size() + 1);
    for (double xi : x) next.push_back(scale * xi);
    next.push_back(c);
    next.insert(next.end(), x.begin(), x.end());
    x = std::move(next);
  }
  return {n, rho, std::move(x), Normalization::last_entry_one,
          EigvecMethod::recursive};
}

EigvecResult renormalize(const EigvecResult& v, Normalization target) {
  if (v.components.empty())
    throw std::invalid_argument("renormalize: empty vector");
  if (v.normalization == target) return v;
  EigvecResult out = v;
  const double pivot = target == Normalization::first_entry_one
                           ? v.components.front()
                           : v.components.back();
  for (double& c : out.components) c /= pivot;
  out.normalization = target;
  return out;
}

double eigen_residual_inf(const SparseIntMatrix& m, const EigvecResult& v) {
  const std::vector<double> y = m.apply(v.components);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    num = std::max(num, std::abs(y[i] - v.rho * v.components[i]));
    den = std::max(den, std::abs(v.components[i]));
  }
  return num / den;
}

namespace {

void require_order_at_least(const EigvecResult& v, int min_n, const char* who) {
  if (v.n < min_n)
    throw std::invalid_argument(std::string(who) + ": requires order >= " +
                                std::to_string(min_n));
}

}  // namespace

HalfScalingStats half_scaling_stats(const EigvecResult& v) {
  require_order_at_least(v, 2, "half_scaling");
  const std::size_t half = std::size_t{1} << (v.n - 1);
  // Least-squares K over x_j ~ K x_{j + half}, j = 1 .. half-1.
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j + 1 < half; ++j) {
    num += v.components[j] * v.components[j + half];
    den += v.components[j + half] * v.components[j + half];
  }
  const double k = num / den;
  double max_dev = 0.0;
  for (std::size_t j = 0; j + 1 < half; ++j) {
    const double dev =
        std::abs(v.components[j] - k * v.components[j + half]) /
        (k * std::abs(v.components[j + half]));
    max_dev = std::max(max_dev, dev);
  }
  return {k, max_dev};
}

double half_scaling_factor(const EigvecResult& v, double tol) {
  const HalfScalingStats s = half_scaling_stats(v);
  if (s.max_relative_deviation > tol)
    throw StructureViolation(
        "half_scaling_factor: ratios deviate from common K by " +
        std::to_string(s.max_relative_deviation));
  return s.ratio;
}

double middle_entry(const EigvecResult& v) {
  require_order_at_least(v, 2, "middle_entry");
  return v.components[(std::size_t{1} << (v.n - 1)) - 1];
}

Index argmin_component(const EigvecResult& v) {
  const auto it = std::min_element(v.components.begin(), v.components.end());
  return static_cast<Index>(it - v.components.begin()) + 1;
}

std::vector<std::int64_t> tail_limit_sequence(int m) {
  if (m < 1) throw std::invalid_argument("tail_limit_sequence: m must be >= 1");
  std::vector<std::int64_t> w{1};
  while (static_cast<int>(w.size()) < m) {
    std::vector<std::int64_t> next;
    next.reserve(2 * w.size() + 1);
    for (std::int64_t v : w) next.push_back(2 * v);
    next.push_back(1);
    next.insert(next.end(), w.begin(), w.end());
    w = std::move(next);
  }
  std::vector<std::int64_t> tail(w.rbegin(), w.rbegin() + m);
  return tail;
}

std::vector<std::int64_t> gould_sequence(int m) {
  std::vector<std::int64_t> g;
  g.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j)
    g.push_back(std::int64_t{1} << std::popcount(static_cast<unsigned>(j - 1)));
  return g;
}

double tail_convergence_check(int n, int m) {
  if (m > (1 << (n - 1)))
    throw std::invalid_argument("tail_convergence_check: m exceeds 2^{n-1}");
  const EigvecResult v = eigenvector_recursive(n);
  const std::vector<std::int64_t> limit = tail_limit_sequence(m);
  double max_dev = 0.0;
  const std::size_t d = v.components.size();
  for (int j = 0; j < m; ++j) {
    const double entry = v.components[d - 1 - static_cast<std::size_t>(j)];
    max_dev = std::max(max_dev,
                       std::abs(entry - static_cast<double>(limit[static_cast<std::size_t>(j)])));
  }
  return max_dev;
}

double leading_entry_pi_check(int n) {
  if (n < 2) throw std::invalid_argument("leading_entry_pi_check: n must be >= 2");
  const double x1 = eigenvector_recursive(n).components.front();
  return std::abs(x1 * std::numbers::pi / std::pow(2.0, n) - 1.0);
}

GouldHeadStats gould_head_stats(int n, int m) {
  if (m < 1 || (m & (m - 1)) != 0)
    throw std::invalid_argument("gould_head_check: m must be a power of two");
  if (m > (1 << (n - 1)))
    throw std::invalid_argument("gould_head_check: m exceeds 2^{n-1}");
  const EigvecResult v = eigenvector_recursive(n);
  const std::vector<std::int64_t> g = gould_sequence(m);
  const double denom = v.components[static_cast<std::size_t>(m - 1)];  // x_m
  GouldHeadStats stats;
  stats.match = true;
  for (int j = 1; j <= m; ++j) {
    const double scaled = v.components[static_cast<std::size_t>(m - j)] / denom;
    const auto expected = static_cast<double>(g[static_cast<std::size_t>(j - 1)]);
    stats.max_deviation = std::max(stats.max_deviation, std::abs(scaled - expected));
    if (std::llround(scaled) != g[static_cast<std::size_t>(j - 1)]) stats.match = false;
  }
  if (stats.max_deviation >= 0.01) stats.match = false;
  return stats;
}

bool gould_head_check(int n, int m) { return gould_head_stats(n, m).match; }

}  // namespace mandelmat
