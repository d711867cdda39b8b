#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "mandelmat/sparse.hpp"

namespace mandelmat {

/// Orders above this are accepted with a warning to stderr: the dominant
/// eigenproblem's condition grows like d_n^2, so double precision is no
/// longer enough once d_n > 10^8.
inline constexpr int kOrderSoftCeiling = 26;

/// Dimension of the order-n family member, 2^n - 1.
Index family_dim(int n);

/// The recursive unit-upper-Hessenberg binary matrix M_n: dim 2^n - 1,
/// nnz 2 dim - 1, built by placing two copies of M_{n-1} around a new
/// middle row/column with three connecting ones.
SparseIntMatrix mandelbrot_matrix(int n);

/// The reversal permutation J of dimension d: ones on the anti-diagonal.
SparseIntMatrix anti_identity(Index d);

/// The symmetric matrix S_n = M_n J_n, built by its own block recursion
/// (S_1 = [1]); equality with the product form is left to the callers'
/// verification, both constructions exist independently.
SparseIntMatrix s_matrix(int n);

/// The symmetric block matrix [[0, M_n], [M_n^T, 0]] of dimension 2(2^n - 1);
/// its eigenvalues are plus/minus the singular values of M_n.
SparseIntMatrix jordan_wielandt(int n);

/// Exact integer inverse of M_n via the unit subdiagonal: each column is
/// obtained by integer back-substitution on rows 2..d plus the first-row
/// equation pinning the free parameter. Entries always land in {-1, 0, 1}.
SparseIntMatrix mandelbrot_inverse(int n);

/// Directed graph as a 1-based edge list.
struct Digraph {
  Index vertex_count = 0;
  std::vector<std::pair<Index, Index>> edges;  // (from, to), sorted

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

/// The recursive digraph G_n: two copies of G_{n-1} (second renumbered by
/// +2^{n-1}), a new middle vertex, and three new edges.
Digraph digraph(int n);

/// Digraph of an arbitrary sparse matrix: edge (i, j) iff entry (i, j) != 0.
Digraph digraph_of(const SparseIntMatrix& m);

/// True iff a single strongly connected component covers every vertex.
bool is_strongly_connected(const Digraph& g);

/// Period: gcd of all cycle lengths, computed as the gcd of
/// level(u) + 1 - level(v) over all edges of a breadth-first labeling.
/// Throws std::domain_error when the graph is not strongly connected.
Index period(const Digraph& g);

/// One-parameter symmetric family T(eps) linking, at eps = 0, the spectrum
/// {0} union {+-lambda(S_n)} to, at eps = 1, the signed singular spectrum
/// of M_{n+1} (T(1) = S_{n+1}). The base part is integer and
/// eps-independent; three positions carry the coefficient eps.
struct HomotopyMatrix {
  Index dim = 0;
  SparseIntMatrix base;                             // the two S_n blocks
  std::vector<std::pair<Index, Index>> eps_positions;

  /// Dense symmetric assembly; throws std::domain_error for eps outside [0,1].
  Eigen::MatrixXd assemble(double eps) const;
};

HomotopyMatrix homotopy_matrix(int n);

/// Convenience form mirroring the one-shot contract: assemble T(eps) directly.
Eigen::MatrixXd homotopy_matrix(int n, double eps);

}  // namespace mandelmat
