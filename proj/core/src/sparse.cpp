#include "mandelmat/sparse.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace mandelmat {

SparseIntMatrix::SparseIntMatrix(Index dim, std::vector<Entry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ < 1) throw std::invalid_argument("SparseIntMatrix: dim must be positive");
  const Entry* prev = nullptr;
  for (const Entry& e : entries_) {
    if (e.row < 1 || e.row > dim_ || e.col < 1 || e.col > dim_)
      throw std::invalid_argument("SparseIntMatrix: entry out of range");
    if (e.value == 0)
      throw std::invalid_argument("SparseIntMatrix: explicit zero entry");
    if (prev != nullptr &&
        (prev->row > e.row || (prev->row == e.row && prev->col >= e.col)))
      throw std::invalid_argument("SparseIntMatrix: entries not strictly sorted");
    prev = &e;
  }
}

std::int64_t SparseIntMatrix::value_at(Index row, Index col) const {
  const Entry probe{row, col, 1};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe,
                             [](const Entry& a, const Entry& b) {
                               return a.row < b.row ||
                                      (a.row == b.row && a.col < b.col);
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

std::int64_t SparseIntMatrix::trace() const {
  std::int64_t t = 0;
  for (const Entry& e : entries_)
    if (e.row == e.col) t += e.value;
  return t;
}

bool SparseIntMatrix::is_symmetric() const {
  for (const Entry& e : entries_)
    if (value_at(e.col, e.row) != e.value) return false;
  return true;
}

std::int64_t SparseIntMatrix::max_abs_col_sum() const {
  std::vector<std::int64_t> sums(static_cast<std::size_t>(dim_), 0);
  for (const Entry& e : entries_)
    sums[static_cast<std::size_t>(e.col - 1)] += std::llabs(e.value);
  return *std::max_element(sums.begin(), sums.end());
}

std::int64_t SparseIntMatrix::max_abs_row_sum() const {
  std::vector<std::int64_t> sums(static_cast<std::size_t>(dim_), 0);
  for (const Entry& e : entries_)
    sums[static_cast<std::size_t>(e.row - 1)] += std::llabs(e.value);
  return *std::max_element(sums.begin(), sums.end());
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  std::vector<Entry> t;
  t.reserve(entries_.size());
  for (const Entry& e : entries_) t.push_back({e.col, e.row, e.value});
  std::sort(t.begin(), t.end(), [](const Entry& a, const Entry& b) {
    return a.row < b.row || (a.row == b.row && a.col < b.col);
  });
  return SparseIntMatrix(dim_, std::move(t));
}

Eigen::MatrixXd SparseIntMatrix::to_dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (const Entry& e : entries_)
    m(e.row - 1, e.col - 1) = static_cast<double>(e.value);
  return m;
}

void SparseIntMatrix::apply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<Index>(x.size()) != dim_ || static_cast<Index>(y.size()) != dim_)
    throw std::invalid_argument("SparseIntMatrix::apply: size mismatch");
  std::fill(y.begin(), y.end(), 0.0);
  for (const Entry& e : entries_)
    y[static_cast<std::size_t>(e.row - 1)] +=
        static_cast<double>(e.value) * x[static_cast<std::size_t>(e.col - 1)];
}

std::vector<double> SparseIntMatrix::apply(std::span<const double> x) const {
  std::vector<double> y(static_cast<std::size_t>(dim_));
  apply(x, y);
  return y;
}

SparseIntMatrix SparseIntMatrix::identity(Index dim) {
  std::vector<Entry> e;
  e.reserve(static_cast<std::size_t>(dim));
  for (Index i = 1; i <= dim; ++i) e.push_back({i, i, 1});
  return SparseIntMatrix(dim, std::move(e));
}

SparseIntMatrix multiply_exact(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("multiply_exact: dimension mismatch");
  // Row-by-row accumulation; b's rows are contiguous in its sorted entry list.
  std::vector<std::size_t> b_row_begin(static_cast<std::size_t>(b.dim()) + 2, 0);
  {
    const auto& be = b.entries();
    std::size_t k = 0;
    for (Index r = 1; r <= b.dim() + 1; ++r) {
      while (k < be.size() && be[k].row < r) ++k;
      b_row_begin[static_cast<std::size_t>(r)] = k;
    }
  }
  std::vector<Entry> out;
  std::map<Index, std::int64_t> acc;
  const auto& ae = a.entries();
  const auto& be = b.entries();
  std::size_t i = 0;
  while (i < ae.size()) {
    const Index row = ae[i].row;
    acc.clear();
    for (; i < ae.size() && ae[i].row == row; ++i) {
      const Index k = ae[i].col;
      const std::int64_t av = ae[i].value;
      for (std::size_t j = b_row_begin[static_cast<std::size_t>(k)];
           j < b_row_begin[static_cast<std::size_t>(k) + 1]; ++j)
        acc[be[j].col] += av * be[j].value;
    }
    for (const auto& [col, v] : acc)
      if (v != 0) out.push_back({row, col, v});
  }
  return SparseIntMatrix(a.dim(), std::move(out));
}

CsrView::CsrView(const SparseIntMatrix& m) : dim_(m.dim()) {
  row_ptr_.assign(static_cast<std::size_t>(dim_) + 1, 0);
  cols_.reserve(static_cast<std::size_t>(m.nnz()));
  values_.reserve(static_cast<std::size_t>(m.nnz()));
  for (const Entry& e : m.entries()) {
    ++row_ptr_[static_cast<std::size_t>(e.row)];
    cols_.push_back(e.col - 1);
    values_.push_back(static_cast<double>(e.value));
  }
  for (std::size_t r = 1; r < row_ptr_.size(); ++r) row_ptr_[r] += row_ptr_[r - 1];
}

void CsrView::apply(std::span<const double> x, std::span<double> y) const {
  for (Index r = 0; r < dim_; ++r) {
    double s = 0.0;
    for (Index k = row_ptr_[static_cast<std::size_t>(r)];
         k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k)
      s += values_[static_cast<std::size_t>(k)] *
           x[static_cast<std::size_t>(cols_[static_cast<std::size_t>(k)])];
    y[static_cast<std::size_t>(r)] = s;
  }
}

}  // namespace mandelmat
