#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mandelmat/sparse.hpp"

namespace mandelmat {

enum class Normalization { last_entry_one, first_entry_one };
enum class EigvecMethod { solve, recursive };

const char* to_string(Normalization n);
const char* to_string(EigvecMethod m);

/// Dominant eigenvector of M_n with its provenance. Components are stored
/// 0-based but indexed 1..d_n in every public contract.
struct EigvecResult {
  int n = 0;
  double rho = 0.0;
  std::vector<double> components;
  Normalization normalization = Normalization::last_entry_one;
  EigvecMethod method = EigvecMethod::solve;
};

/// Raised when a structural identity of the family fails beyond tolerance.
class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// O(d_n) eigenvector: set x_d = 1 and back-substitute rows 2..d of
/// (M_n - rho I), whose first d-1 columns form a unit upper triangular
/// system thanks to the unit subdiagonal.
EigvecResult eigenvector_solve(int n, double rho);

/// Eigenvector by the block recurrence x_{k+1} = [rho C_k(rho) x_k; C_k(rho); x_k]
/// with rho the order-n dominant root held fixed and C_k evaluated by its
/// recurrence. Completely independent of the triangular solve.
EigvecResult eigenvector_recursive(int n);

/// Scalar rescale to the requested normalization; idempotent.
EigvecResult renormalize(const EigvecResult& v, Normalization target);

/// Max-norm relative eigenresidual ||M x - rho x||_inf / ||x||_inf.
double eigen_residual_inf(const SparseIntMatrix& m, const EigvecResult& v);

struct HalfScalingStats {
  double ratio = 0.0;                    // least-squares common ratio K
  double max_relative_deviation = 0.0;   // worst per-index departure from K
};

/// The common ratio between x_j and x_{j + 2^{n-1}} over the upper half.
/// The two halves of the vector are scalar multiples; K equals sqrt(rho_n).
HalfScalingStats half_scaling_stats(const EigvecResult& v);

/// As above but enforcing the structure: throws StructureViolation when the
/// per-index ratios deviate from the common K by more than tol.
double half_scaling_factor(const EigvecResult& v, double tol = 1e-8);

/// components[2^{n-1}], the middle entry; equals C_{n-1}(rho_n) = 1/sqrt(rho_n)
/// under last-entry normalization and is the smallest component.
double middle_entry(const EigvecResult& v);

/// Index (1-based) of the minimum component.
Index argmin_component(const EigvecResult& v);

/// Limit of the lower entries as the order grows: w_1 = [1],
/// w_{k+1} = [2 w_k; 1; w_k]; the last m entries read bottom-up
/// (OEIS A048896: 1, 1, 2, 1, 2, 2, 4, ...).
std::vector<std::int64_t> tail_limit_sequence(int m);

/// Gould's sequence prefix g(j) = 2^popcount(j-1) (OEIS A001316:
/// 1, 2, 2, 4, 2, 4, 4, 8, ...).
std::vector<std::int64_t> gould_sequence(int m);

/// Round the bottom m entries (bottom-up, last-entry normalization) and
/// compare with tail_limit_sequence(m); returns the max pre-rounding
/// deviation from those integers.
double tail_convergence_check(int n, int m);

/// Relative error |x_1 pi / 2^n - 1| of the closed-form leading entry
/// x_1 = rho^{n-1} prod C_k(rho); tends to zero like ~4^{-n}.
double leading_entry_pi_check(int n);

/// Reverse the topmost m entries, scale so the new first entry is 1, round,
/// and compare with Gould's sequence prefix. True iff the rounded pattern
/// matches exactly and no entry was further than 0.01 from its integer.
bool gould_head_check(int n, int m);

/// Same check exposing the measured statistics.
struct GouldHeadStats {
  bool match = false;
  double max_deviation = 0.0;
};
GouldHeadStats gould_head_stats(int n, int m);

}  // namespace mandelmat
