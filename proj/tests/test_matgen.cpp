#include <doctest.h>

#include <set>

#include "mandelmat/exact.hpp"
#include "mandelmat/matgen.hpp"
#include "mandelmat/sparse.hpp"

using namespace mandelmat;

namespace {

// Dense integer multiply, independent of SparseIntMatrix internals; used as
// the oracle for the product identities.
std::vector<std::vector<std::int64_t>> dense_of(const SparseIntMatrix& m) {
  std::vector<std::vector<std::int64_t>> a(
      static_cast<std::size_t>(m.dim()),
      std::vector<std::int64_t>(static_cast<std::size_t>(m.dim()), 0));
  for (const Entry& e : m.entries())
    a[static_cast<std::size_t>(e.row - 1)][static_cast<std::size_t>(e.col - 1)] =
        e.value;
  return a;
}

std::vector<std::vector<std::int64_t>> dense_mul(
    const std::vector<std::vector<std::int64_t>>& a,
    const std::vector<std::vector<std::int64_t>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

TEST_CASE("M_1, M_2, M_3 match the printed matrices") {
  CHECK(mandelbrot_matrix(1) == SparseIntMatrix(1, {{1, 1, 1}}));

  const SparseIntMatrix m2 = mandelbrot_matrix(2);
  CHECK(m2 == SparseIntMatrix(3, {{1, 1, 1},
                                  {1, 3, 1},
                                  {2, 1, 1},
                                  {3, 2, 1},
                                  {3, 3, 1}}));

  // Rows of the 7x7: {1,3,7}, {1}, {2,3}, {3}, {4,5,7}, {5}, {6,7}.
  const SparseIntMatrix m3 = mandelbrot_matrix(3);
  const std::vector<Entry> expected = {
      {1, 1, 1}, {1, 3, 1}, {1, 7, 1}, {2, 1, 1}, {3, 2, 1}, {3, 3, 1},
      {4, 3, 1}, {5, 4, 1}, {5, 5, 1}, {5, 7, 1}, {6, 5, 1}, {7, 6, 1},
      {7, 7, 1}};
  CHECK(m3 == SparseIntMatrix(7, expected));
}

TEST_CASE("family structure across orders") {
  for (int n = 1; n <= 12; ++n) {
    const SparseIntMatrix m = mandelbrot_matrix(n);
    const Index d = (Index{1} << n) - 1;
    CHECK(m.dim() == d);
    CHECK(m.nnz() == 2 * d - 1);
    for (const Entry& e : m.entries()) CHECK(e.value == 1);
    // Unit upper Hessenberg: the full subdiagonal is present and nothing
    // lies below it.
    for (Index i = 1; i < d; ++i) CHECK(m.value_at(i + 1, i) == 1);
    for (const Entry& e : m.entries()) CHECK(e.row <= e.col + 1);
    CHECK(m.max_abs_col_sum() == n);
    CHECK(m.max_abs_row_sum() == n);
  }
}

TEST_CASE("determinant is one for n <= 12") {
  for (int n = 1; n <= 12; ++n) CHECK(det_exact(mandelbrot_matrix(n)) == 1);
}

TEST_CASE("invalid orders are rejected") {
  CHECK_THROWS_AS(mandelbrot_matrix(0), std::invalid_argument);
  CHECK_THROWS_AS(mandelbrot_matrix(-3), std::invalid_argument);
  CHECK_THROWS_AS(s_matrix(0), std::invalid_argument);
  CHECK_THROWS_AS(digraph(0), std::invalid_argument);
}

TEST_CASE("anti-identity") {
  CHECK(anti_identity(1) == SparseIntMatrix(1, {{1, 1, 1}}));
  const SparseIntMatrix j3 = anti_identity(3);
  CHECK(j3 == SparseIntMatrix(3, {{1, 3, 1}, {2, 2, 1}, {3, 1, 1}}));
  for (Index d : {1, 2, 5, 8}) {
    const SparseIntMatrix j = anti_identity(d);
    CHECK(multiply_exact(j, j) == SparseIntMatrix::identity(d));
  }
}

TEST_CASE("S_n: base case, product identity, symmetry, trace") {
  CHECK(s_matrix(1) == SparseIntMatrix(1, {{1, 1, 1}}));

  // Independent dense multiply oracle at n = 3.
  const auto prod = dense_mul(dense_of(mandelbrot_matrix(3)), dense_of(anti_identity(7)));
  const auto s3 = dense_of(s_matrix(3));
  CHECK(prod == s3);

  for (int n = 1; n <= 10; ++n) {
    const SparseIntMatrix s = s_matrix(n);
    CHECK(s.is_symmetric());
    CHECK(s.trace() == 1);
    CHECK(multiply_exact(mandelbrot_matrix(n), anti_identity(s.dim())) == s);
  }
}

TEST_CASE("Jordan-Wielandt block structure") {
  CHECK(jordan_wielandt(1) == SparseIntMatrix(2, {{1, 2, 1}, {2, 1, 1}}));

  const SparseIntMatrix jw2 = jordan_wielandt(2);
  CHECK(jw2.dim() == 6);
  CHECK(jw2.nnz() == 10);
  CHECK(jw2.is_symmetric());

  const SparseIntMatrix m = mandelbrot_matrix(3);
  const SparseIntMatrix jw = jordan_wielandt(3);
  CHECK(jw.dim() == 14);
  for (const Entry& e : m.entries()) {
    CHECK(jw.value_at(e.row, e.col + 7) == 1);
    CHECK(jw.value_at(e.col + 7, e.row) == 1);
  }
  for (const Entry& e : jw.entries())
    CHECK(((e.row <= 7 && e.col > 7) || (e.row > 7 && e.col <= 7)));
}

TEST_CASE("exact inverse: population, product, norms") {
  CHECK(mandelbrot_inverse(1) == SparseIntMatrix(1, {{1, 1, 1}}));

  // 3x3 adjugate oracle: M_2 = [[1,0,1],[1,0,0],[0,1,1]], det 1, so the
  // inverse is the adjugate, computed here by cofactors.
  const SparseIntMatrix inv2 = mandelbrot_inverse(2);
  const auto m2 = dense_of(mandelbrot_matrix(2));
  std::vector<std::vector<std::int64_t>> adj(3, std::vector<std::int64_t>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t minor[2][2];
      int rr = 0;
      for (int r = 0; r < 3; ++r) {
        if (r == j) continue;  // adjugate transposes the cofactor grid
        int cc = 0;
        for (int c = 0; c < 3; ++c) {
          if (c == i) continue;
          minor[rr][cc++] = m2[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
        ++rr;
      }
      const std::int64_t det = minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0];
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ((i + j) % 2 == 0 ? det : -det);
    }
  CHECK(dense_of(inv2) == adj);

  for (int n = 1; n <= 10; ++n) {
    const SparseIntMatrix m = mandelbrot_matrix(n);
    const SparseIntMatrix inv = mandelbrot_inverse(n);
    const SparseIntMatrix id = SparseIntMatrix::identity(m.dim());
    CHECK(multiply_exact(m, inv) == id);
    CHECK(multiply_exact(inv, m) == id);
    for (const Entry& e : inv.entries())
      CHECK((e.value == 1 || e.value == -1));
    CHECK(inv.max_abs_col_sum() == 2 * n - 1);
    CHECK(inv.max_abs_row_sum() == 2 * n - 1);
  }
}

TEST_CASE("digraph construction and pattern equality") {
  const Digraph g1 = digraph(1);
  CHECK(g1.vertex_count == 1);
  CHECK(g1.edges == std::vector<std::pair<Index, Index>>{{1, 1}});

  const Digraph g2 = digraph(2);
  const std::set<std::pair<Index, Index>> got(g2.edges.begin(), g2.edges.end());
  CHECK(got == std::set<std::pair<Index, Index>>{
                   {1, 1}, {3, 3}, {1, 3}, {2, 1}, {3, 2}});

  // 2 * 31 - 1 edges on 31 vertices.
  const Digraph g5 = digraph(5);
  CHECK(g5.vertex_count == 31);
  CHECK(g5.edges.size() == 61);

  for (int n = 1; n <= 12; ++n)
    CHECK(digraph(n).edges == digraph_of(mandelbrot_matrix(n)).edges);
}

TEST_CASE("strong connectivity") {
  for (int n = 1; n <= 12; ++n) CHECK(is_strongly_connected(digraph(n)));
  CHECK_FALSE(is_strongly_connected(Digraph{2, {{1, 2}}}));
  CHECK(is_strongly_connected(Digraph{2, {{1, 2}, {2, 1}}}));
}

TEST_CASE("period") {
  for (int n = 1; n <= 10; ++n) CHECK(period(digraph(n)) == 1);
  CHECK(period(Digraph{2, {{1, 2}, {2, 1}}}) == 2);
  CHECK(period(digraph_of(jordan_wielandt(3))) == 2);
  CHECK_THROWS_AS(period(Digraph{2, {{1, 2}}}), std::domain_error);
}

TEST_CASE("homotopy matrix assembly") {
  const auto t1 = homotopy_matrix(1, 1.0);
  const auto s2 = s_matrix(2).to_dense();
  CHECK((t1 - s2).cwiseAbs().maxCoeff() == 0.0);

  // eps = 0: middle row/column vanish entirely.
  const auto t0 = homotopy_matrix(1, 0.0);
  CHECK(t0.row(1).cwiseAbs().maxCoeff() == 0.0);
  CHECK(t0.col(1).cwiseAbs().maxCoeff() == 0.0);
  CHECK(t0(0, 2) == 1.0);
  CHECK(t0(2, 0) == 1.0);

  const auto th = homotopy_matrix(2, 0.5);
  CHECK((th - th.transpose()).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(homotopy_matrix(2, -0.1), std::domain_error);
  CHECK_THROWS_AS(homotopy_matrix(2, 1.5), std::domain_error);
}

TEST_CASE("sparse matrix validation") {
  CHECK_THROWS_AS(SparseIntMatrix(2, {{1, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SparseIntMatrix(2, {{1, 1, 1}, {1, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SparseIntMatrix(2, {{2, 1, 1}, {1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SparseIntMatrix(2, {{1, 3, 1}}), std::invalid_argument);
}
