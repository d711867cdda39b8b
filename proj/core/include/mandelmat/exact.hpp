#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "mandelmat/sparse.hpp"

namespace mandelmat {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt exact_div(const BigInt& a, const BigInt& b) { return a / b; }
inline bool is_zero(const BigInt& a) { return a.is_zero(); }

/// Exact determinant by fraction-free (Bareiss) elimination on sparse rows,
/// with row swaps when a pivot vanishes. Intended for the unit-subdiagonal
/// Hessenberg family, where at each step only the next row carries the pivot
/// column and the cost stays O(d^2).
BigInt det_exact(const SparseIntMatrix& m);

/// Generic fraction-free determinant over an exact ring. The ring must
/// provide +, -, *, exact_div(a, b) and is_zero(a) via ADL. Consumes `a`.
template <typename Ring>
Ring bareiss_determinant(std::vector<std::vector<Ring>> a) {
  const std::size_t n = a.size();
  if (n == 0) return Ring{};
  Ring prev_pivot{1};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(a[swap_row][k])) ++swap_row;
      if (swap_row == n) return Ring{};  // singular
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev_pivot);
      a[i][k] = Ring{};
    }
    prev_pivot = a[k][k];
  }
  Ring det = a[n - 1][n - 1];
  if (sign < 0) det = Ring{} - det;
  return det;
}

}  // namespace mandelmat
