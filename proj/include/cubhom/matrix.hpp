#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cubhom/checked.hpp"
#include "cubhom/error.hpp"

namespace cubhom {

// Row-major dense integer matrix. Arithmetic goes through the checked
// helpers, so std::int64_t products throw instead of wrapping.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) fail(ErrorCode::ShapeMismatch, "dense data size");
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::ShapeMismatch, "dense product");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) out(i, j) = add(out(i, j), mul(aik, b(k, j)));
      }
    return out;
  }

  template <class U>
  DenseMatrix<U> cast() const {
    std::vector<U> d;
    d.reserve(data_.size());
    for (const T& v : data_) d.push_back(U(v));
    return DenseMatrix<U>(rows_, cols_, std::move(d));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

struct SparseEntry {
  std::uint32_t row;
  std::int64_t value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Column-major sparse matrix; each column is sorted by row with no zeros.
using SparseColumn = std::vector<SparseEntry>;

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  const SparseColumn& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<SparseColumn>& columns() const noexcept { return columns_; }

  // Accepts entries in any order; merges repeated rows and drops zeros.
  void set_column(std::size_t j, SparseColumn entries);
  void push_column(SparseColumn entries);

  std::int64_t at(std::size_t r, std::size_t c) const;
  std::size_t nonzeros() const;
  bool is_zero() const;

  static SparseMatrix from_dense(const DenseMatrix<std::int64_t>& m);
  DenseMatrix<std::int64_t> to_dense() const;
  static SparseMatrix identity(std::size_t n);

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<SparseColumn> columns_;
};

SparseColumn normalize_column(SparseColumn entries);

}  // namespace cubhom
