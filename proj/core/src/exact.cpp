#include "mandelmat/exact.hpp"

#include <utility>

namespace mandelmat {

namespace {

using SparseRow = std::vector<std::pair<Index, BigInt>>;  // sorted by column

// (p * a - q * b) / prev over sorted sparse rows, dropping column `drop`.
SparseRow combine(const SparseRow& a, const SparseRow& b, const BigInt& p,
                  const BigInt& q, const BigInt& prev, Index drop) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    Index ca = i < a.size() ? a[i].first : -1;
    Index cb = j < b.size() ? b[j].first : -1;
    Index c;
    BigInt v;
    if (j >= b.size() || (i < a.size() && ca < cb)) {
      c = ca;
      v = p * a[i].second;
      ++i;
    } else if (i >= a.size() || cb < ca) {
      c = cb;
      v = -q * b[j].second;
      ++j;
    } else {
      c = ca;
      v = p * a[i].second - q * b[j].second;
      ++i;
      ++j;
    }
    if (c == drop || v.is_zero()) continue;
    out.emplace_back(c, v / prev);
  }
  return out;
}

}  // namespace

BigInt det_exact(const SparseIntMatrix& m) {
  const Index n = m.dim();
  std::vector<SparseRow> rows(static_cast<std::size_t>(n));
  for (const Entry& e : m.entries())
    rows[static_cast<std::size_t>(e.row - 1)].emplace_back(e.col - 1,
                                                           BigInt(e.value));

  BigInt prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    auto leads_with = [&](Index r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      return !row.empty() && row.front().first == k;
    };
    if (!leads_with(k)) {
      Index swap_row = k + 1;
      while (swap_row < n && !leads_with(swap_row)) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(rows[static_cast<std::size_t>(k)],
                rows[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    const BigInt pivot = rows[static_cast<std::size_t>(k)].front().second;
    for (Index j = k + 1; j < n; ++j) {
      auto& rj = rows[static_cast<std::size_t>(j)];
      const BigInt q = leads_with(j) ? rj.front().second : BigInt(0);
      rj = combine(rj, rows[static_cast<std::size_t>(k)], pivot, q, prev, k);
    }
    prev = pivot;
  }
  const auto& last = rows[static_cast<std::size_t>(n - 1)];
  if (last.empty() || last.front().first != n - 1) return 0;
  BigInt det = last.front().second;
  return sign < 0 ? BigInt(-det) : det;
}

}  // namespace mandelmat
