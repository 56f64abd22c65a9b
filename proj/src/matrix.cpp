#include "cubhom/matrix.hpp"

#include <algorithm>
#include <map>

namespace cubhom {

SparseColumn normalize_column(SparseColumn entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
  SparseColumn out;
  out.reserve(entries.size());
  for (const SparseEntry& e : entries) {
    if (!out.empty() && out.back().row == e.row) {
      out.back().value = add(out.back().value, e.value);
      if (out.back().value == 0) out.pop_back();
    } else if (e.value != 0) {
      out.push_back(e);
    }
  }
  return out;
}

void SparseMatrix::set_column(std::size_t j, SparseColumn entries) {
  SparseColumn col = normalize_column(std::move(entries));
  if (!col.empty() && col.back().row >= rows_) fail(ErrorCode::ShapeMismatch, "row index out of range");
  columns_.at(j) = std::move(col);
}

void SparseMatrix::push_column(SparseColumn entries) {
  columns_.emplace_back();
  set_column(columns_.size() - 1, std::move(entries));
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
  const SparseColumn& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const SparseEntry& e, std::size_t row) { return e.row < row; });
  return (it != col.end() && it->row == r) ? it->value : 0;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseColumn& c) { return c.empty(); });
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix<std::int64_t>& m) {
  SparseMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseColumn col;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) col.push_back({static_cast<std::uint32_t>(i), m(i, j)});
    out.columns_[j] = std::move(col);
  }
  return out;
}

DenseMatrix<std::int64_t> SparseMatrix::to_dense() const {
  DenseMatrix<std::int64_t> out(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j)
    for (const SparseEntry& e : columns_[j]) out(e.row, j) = e.value;
  return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.columns_[i] = {{static_cast<std::uint32_t>(i), 1}};
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "sparse product");
  SparseMatrix out(a.rows(), b.cols());
  std::map<std::uint32_t, std::int64_t> acc;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    acc.clear();
    for (const SparseEntry& bk : b.column(j))
      for (const SparseEntry& ai : a.column(bk.row)) {
        auto& slot = acc[ai.row];
        slot = add(slot, mul(ai.value, bk.value));
      }
    SparseColumn col;
    for (const auto& [r, v] : acc)
      if (v != 0) col.push_back({r, v});
    out.columns_[j] = std::move(col);
  }
  return out;
}

}  // namespace cubhom
