#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mandelmat/exact.hpp"
#include "mandelmat/sparse.hpp"

namespace mandelmat {

/// Dominant singular triple of M_n. u is the converged eigenvector of the
/// symmetric matrix S_n = M_n J_n; the right singular vector is its
/// reversal v = J_n u. Both are unit vectors.
struct SingularTriple {
  int n = 0;
  double sigma = 0.0;
  std::vector<double> u;
  std::vector<double> v;
  std::int64_t iterations = 0;
};

/// Power iteration on S_n from the all-ones direction (positive, never
/// orthogonal to the dominant direction). Converges to the largest
/// eigenvalue sigma_1 because the runner-up of S_n is -sigma_2 with
/// sigma_2 < sigma_1; stops when the Rayleigh quotient is stable to 1e-14
/// over two consecutive steps, then verifies ||M v - sigma u||_inf against
/// tol * sigma * ||u||_inf. Throws ConvergenceError with the Rayleigh
/// history when the iteration cap is hit.
SingularTriple dominant_singular_triple(int n, double tol = 1e-5,
                                        std::int64_t max_iter = 100000);

inline constexpr int kDenseSpectraCeiling = 10;       // d = 1023
inline constexpr int kDenseSpectraHardCeiling = 13;   // d = 8191

/// Full singular spectrum via the dense symmetric eigendecomposition of S_n.
struct SingularSpectrum {
  int n = 0;
  std::vector<double> sigmas;  // descending positive singular values
  std::vector<double> s_eigs;  // signed eigenvalues, descending magnitude
};

SingularSpectrum all_singular_values(int n, bool allow_large = false);

/// Smallest gap between consecutive magnitudes (distinctness report).
double min_magnitude_gap(const SingularSpectrum& s);

/// True iff the list, sorted by descending magnitude, alternates
/// +, -, +, -, ... starting positive and ends positive, with consecutive
/// magnitudes separated by more than distinct_tol.
bool alternates_in_sign(std::span<const double> eigs_desc_magnitude,
                        double distinct_tol);

/// Sign alternation of eig(S_n) per the self-interlacing theorem (n > 1).
bool sign_alternation_check(int n, bool allow_large = false,
                            double sort_tol = 1e-9);

/// Exact integer facts about S_n: det = -1 for n > 1 (det = +1 at n = 1),
/// trace = 1, trace S^2 = 2^{n+1} - 3, and S^2 = M M^T entrywise.
/// The determinant uses det(M_n) and the reversal parity after verifying
/// S_n = M_n J_n exactly, so every quantity is integer-exact. Any mismatch
/// raises StructureViolation; a returned report always has pass = true.
struct SFactsReport {
  int n = 0;
  BigInt det;
  std::int64_t trace = 0;
  std::int64_t trace_square = 0;
  bool product_form_matches = false;  // S == M J
  bool square_matches = false;        // S^2 == M M^T
  bool pass = false;
};

SFactsReport s_facts_check(int n);

/// Jordan-Wielandt cross-check: spectrum symmetric about zero and its
/// positive half equal to the singular values, both to tol.
bool jw_pairing_check(int n, bool allow_large = false, double tol = 1e-10);

}  // namespace mandelmat
