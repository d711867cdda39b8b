#include "mandelmat/matgen.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace mandelmat {

namespace {

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("order must be >= 1, got " + std::to_string(n));
  if (n > kOrderSoftCeiling)
    std::cerr << "mandelmat: warning: order " << n << " exceeds the double-precision "
              << "comfort ceiling (" << kOrderSoftCeiling << ")\n";
}

}  // namespace

Index family_dim(int n) {
  check_order(n);
  return (Index{1} << n) - 1;
}

SparseIntMatrix mandelbrot_matrix(int n) {
  check_order(n);
  std::vector<Entry> cur{{1, 1, 1}};
  Index d = 1;
  for (int k = 1; k < n; ++k) {
    const Index nd = 2 * d + 1;
    std::vector<Entry> next;
    next.reserve(2 * cur.size() + 3);
    // First copy, with the new (1, nd) edge merged into row 1 (nd is the
    // largest column, so appending after row 1's entries keeps the order).
    std::size_t i = 0;
    while (i < cur.size() && cur[i].row == 1) next.push_back(cur[i++]);
    next.push_back({1, nd, 1});
    while (i < cur.size()) next.push_back(cur[i++]);
    // Middle row: e_d^T.
    next.push_back({d + 1, d, 1});
    // Second copy shifted by d+1, with the e_1 column entry in its first row.
    next.push_back({d + 2, d + 1, 1});
    for (const Entry& e : cur) next.push_back({e.row + d + 1, e.col + d + 1, 1});
    cur = std::move(next);
    d = nd;
  }
  return SparseIntMatrix(d, std::move(cur));
}

SparseIntMatrix anti_identity(Index d) {
  if (d < 1) throw std::invalid_argument("anti_identity: dimension must be positive");
  std::vector<Entry> e;
  e.reserve(static_cast<std::size_t>(d));
  for (Index i = 1; i <= d; ++i) e.push_back({i, d + 1 - i, 1});
  return SparseIntMatrix(d, std::move(e));
}

SparseIntMatrix s_matrix(int n) {
  check_order(n);
  std::vector<Entry> cur{{1, 1, 1}};
  Index d = 1;
  for (int k = 1; k < n; ++k) {
    const Index nd = 2 * d + 1;
    std::vector<Entry> next;
    next.reserve(2 * cur.size() + 3);
    // Top block row: e_1 e_1^T then S_{k} shifted right by d+1.
    next.push_back({1, 1, 1});
    std::size_t i = 0;
    while (i < cur.size() && cur[i].row == 1) {
      next.push_back({1, cur[i].col + d + 1, 1});
      ++i;
    }
    for (std::size_t j = i; j < cur.size(); ++j)
      next.push_back({cur[j].row, cur[j].col + d + 1, 1});
    // Middle row: e_1^T against the third block column.
    next.push_back({d + 1, d + 2, 1});
    // Bottom block row: S_k at columns 1..d, plus e_1 at column d+1 in its
    // first row (column d+1 sorts after every S_k column).
    std::size_t j = 0;
    while (j < cur.size() && cur[j].row == 1)
      next.push_back({d + 2, cur[j++].col, 1});
    next.push_back({d + 2, d + 1, 1});
    for (; j < cur.size(); ++j)
      next.push_back({cur[j].row + d + 1, cur[j].col, 1});
    cur = std::move(next);
    d = nd;
  }
  return SparseIntMatrix(d, std::move(cur));
}

SparseIntMatrix jordan_wielandt(int n) {
  check_order(n);
  const SparseIntMatrix m = mandelbrot_matrix(n);
  const SparseIntMatrix mt = m.transposed();
  const Index d = m.dim();
  std::vector<Entry> e;
  e.reserve(2 * m.entries().size());
  for (const Entry& it : m.entries()) e.push_back({it.row, it.col + d, 1});
  for (const Entry& it : mt.entries()) e.push_back({it.row + d, it.col, 1});
  return SparseIntMatrix(2 * d, std::move(e));
}

SparseIntMatrix mandelbrot_inverse(int n) {
  check_order(n);
  const SparseIntMatrix m = mandelbrot_matrix(n);
  const Index d = m.dim();

  // Row lists of M_n restricted to columns >= row (the triangular part);
  // the subdiagonal 1 at (i, i-1) is implicit.
  std::vector<std::vector<Index>> upper(static_cast<std::size_t>(d) + 1);
  for (const Entry& e : m.entries())
    if (e.col >= e.row) upper[static_cast<std::size_t>(e.row)].push_back(e.col);

  // Homogeneous solution of rows 2..d with x_d = 1: x = a + b*t where only
  // b depends on the matrix. Computed once.
  std::vector<std::int64_t> b(static_cast<std::size_t>(d) + 1, 0);
  b[static_cast<std::size_t>(d)] = 1;
  for (Index i = d; i >= 2; --i) {
    std::int64_t s = 0;
    for (Index c : upper[static_cast<std::size_t>(i)])
      s += b[static_cast<std::size_t>(c)];
    b[static_cast<std::size_t>(i - 1)] = -s;
  }
  std::int64_t slope = 0;  // first-row functional applied to b
  for (Index c : upper[1]) slope += b[static_cast<std::size_t>(c)];

  std::vector<Entry> out;
  std::vector<std::int64_t> a(static_cast<std::size_t>(d) + 1, 0);
  for (Index k = 1; k <= d; ++k) {
    // Particular solution of rows 2..d of M x = e_k with x_d = 0.
    std::fill(a.begin(), a.end(), 0);
    for (Index i = d; i >= 2; --i) {
      std::int64_t s = 0;
      for (Index c : upper[static_cast<std::size_t>(i)])
        s += a[static_cast<std::size_t>(c)];
      a[static_cast<std::size_t>(i - 1)] = (i == k ? 1 : 0) - s;
    }
    std::int64_t head = 0;
    for (Index c : upper[1]) head += a[static_cast<std::size_t>(c)];
    const std::int64_t rhs = (k == 1 ? 1 : 0) - head;
    if (slope == 0 || rhs % slope != 0)
      throw std::logic_error("mandelbrot_inverse: integer solve failed");
    const std::int64_t t = rhs / slope;
    for (Index i = 1; i <= d; ++i) {
      const std::int64_t v =
          a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)] * t;
      if (v != 0) out.push_back({i, k, v});
    }
  }
  std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) {
    return x.row < y.row || (x.row == y.row && x.col < y.col);
  });
  return SparseIntMatrix(d, std::move(out));
}

Digraph digraph(int n) {
  check_order(n);
  std::vector<std::pair<Index, Index>> edges{{1, 1}};
  Index d = 1;
  for (int k = 1; k < n; ++k) {
    const Index nd = 2 * d + 1;
    std::vector<std::pair<Index, Index>> next;
    next.reserve(2 * edges.size() + 3);
    next.insert(next.end(), edges.begin(), edges.end());
    for (const auto& [u, v] : edges) next.emplace_back(u + d + 1, v + d + 1);
    next.emplace_back(1, nd);          // first vertex to the renumbered last
    next.emplace_back(d + 2, d + 1);   // first vertex of copy two to the new vertex
    next.emplace_back(d + 1, d);       // new vertex into copy one
    edges = std::move(next);
    d = nd;
  }
  std::sort(edges.begin(), edges.end());
  return Digraph{d, std::move(edges)};
}

Digraph digraph_of(const SparseIntMatrix& m) {
  std::vector<std::pair<Index, Index>> edges;
  edges.reserve(m.entries().size());
  for (const Entry& e : m.entries()) edges.emplace_back(e.row, e.col);
  return Digraph{m.dim(), std::move(edges)};
}

namespace {

std::vector<std::vector<Index>> adjacency(const Digraph& g, bool reversed) {
  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(g.vertex_count) + 1);
  for (const auto& [u, v] : g.edges) {
    if (u < 1 || u > g.vertex_count || v < 1 || v > g.vertex_count)
      throw std::invalid_argument("digraph edge out of range");
    if (reversed)
      adj[static_cast<std::size_t>(v)].push_back(u);
    else
      adj[static_cast<std::size_t>(u)].push_back(v);
  }
  return adj;
}

// Iterative reachability sweep from vertex 1.
std::size_t reach_count(const std::vector<std::vector<Index>>& adj, Index n) {
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Index> stack{1};
  seen[1] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    const Index u = stack.back();
    stack.pop_back();
    ++count;
    for (Index v : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  if (g.vertex_count < 1) return false;
  const auto fwd = adjacency(g, false);
  const auto bwd = adjacency(g, true);
  const auto n = static_cast<std::size_t>(g.vertex_count);
  return reach_count(fwd, g.vertex_count) == n &&
         reach_count(bwd, g.vertex_count) == n;
}

Index period(const Digraph& g) {
  if (!is_strongly_connected(g))
    throw std::domain_error("period: digraph is not strongly connected");
  const auto adj = adjacency(g, false);
  std::vector<Index> level(static_cast<std::size_t>(g.vertex_count) + 1, -1);
  std::queue<Index> q;
  level[1] = 0;
  q.push(1);
  while (!q.empty()) {
    const Index u = q.front();
    q.pop();
    for (Index v : adj[static_cast<std::size_t>(u)])
      if (level[static_cast<std::size_t>(v)] < 0) {
        level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      }
  }
  Index g_acc = 0;
  for (const auto& [u, v] : g.edges) {
    const Index diff = level[static_cast<std::size_t>(u)] + 1 -
                       level[static_cast<std::size_t>(v)];
    g_acc = std::gcd(g_acc, diff < 0 ? -diff : diff);
  }
  return g_acc == 0 ? 1 : g_acc;
}

Eigen::MatrixXd HomotopyMatrix::assemble(double eps) const {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw std::domain_error("homotopy parameter must lie in [0, 1]");
  Eigen::MatrixXd t = base.to_dense();
  for (const auto& [r, c] : eps_positions) t(r - 1, c - 1) = eps;
  return t;
}

HomotopyMatrix homotopy_matrix(int n) {
  check_order(n);
  const SparseIntMatrix s = s_matrix(n);
  const Index d = s.dim();
  const Index dim = 2 * d + 1;
  std::vector<Entry> base;
  base.reserve(2 * s.entries().size());
  for (const Entry& e : s.entries()) base.push_back({e.row, e.col + d + 1, 1});
  for (const Entry& e : s.entries()) base.push_back({e.row + d + 1, e.col, 1});
  HomotopyMatrix t;
  t.dim = dim;
  t.base = SparseIntMatrix(dim, std::move(base));
  t.eps_positions = {{1, 1}, {d + 1, d + 2}, {d + 2, d + 1}};
  return t;
}

Eigen::MatrixXd homotopy_matrix(int n, double eps) {
  return homotopy_matrix(n).assemble(eps);
}

}  // namespace mandelmat
