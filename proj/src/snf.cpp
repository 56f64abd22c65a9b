#include "cubhom/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace cubhom {

namespace {

template <class T>
struct Elimination {
  DenseMatrix<T> A;
  DenseMatrix<T> U;
  DenseMatrix<T> V;
  bool track;

  Elimination(DenseMatrix<T> m, bool track_transforms)
      : A(std::move(m)), track(track_transforms) {
    if (track) {
      U = DenseMatrix<T>::identity(A.rows());
      V = DenseMatrix<T>::identity(A.cols());
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(a, j), A(b, j));
    if (track)
      for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < A.rows(); ++i) std::swap(A(i, a), A(i, b));
    if (track)
      for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
  }

  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (A(src, j) != 0) A(dst, j) = add(A(dst, j), mul(factor, A(src, j)));
    if (track)
      for (std::size_t j = 0; j < U.cols(); ++j)
        if (U(src, j) != 0) U(dst, j) = add(U(dst, j), mul(factor, U(src, j)));
  }

  // col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (A(i, src) != 0) A(i, dst) = add(A(i, dst), mul(factor, A(i, src)));
    if (track)
      for (std::size_t i = 0; i < V.rows(); ++i)
        if (V(i, src) != 0) V(i, dst) = add(V(i, dst), mul(factor, V(i, src)));
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < A.cols(); ++j) A(r, j) = neg(A(r, j));
    if (track)
      for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = neg(U(r, j));
  }

  // Smallest nonzero |entry| in the trailing block starting at (t, t).
  std::optional<std::pair<std::size_t, std::size_t>> min_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    T best_abs = 0;
    for (std::size_t i = t; i < A.rows(); ++i)
      for (std::size_t j = t; j < A.cols(); ++j) {
        if (A(i, j) == 0) continue;
        T a = abs_value(A(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
          if (best_abs == 1) return best;
        }
      }
    return best;
  }

  // Smallest nonzero |entry| among the pivot, the column below and the row
  // to the right of it.
  std::pair<std::size_t, std::size_t> min_in_cross(std::size_t t) const {
    std::pair<std::size_t, std::size_t> best{t, t};
    T best_abs = abs_value(A(t, t));
    auto consider = [&](std::size_t i, std::size_t j) {
      if (A(i, j) == 0) return;
      T a = abs_value(A(i, j));
      if (best_abs == 0 || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    };
    for (std::size_t i = t + 1; i < A.rows(); ++i) consider(i, t);
    for (std::size_t j = t + 1; j < A.cols(); ++j) consider(t, j);
    return best;
  }

  std::size_t run() {
    const std::size_t limit = std::min(A.rows(), A.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      auto pos = min_entry(t);
      if (!pos) break;
      swap_rows(t, pos->first);
      swap_cols(t, pos->second);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < A.rows(); ++i) {
          if (A(i, t) == 0) continue;
          add_row(i, t, neg(quot(A(i, t), A(t, t))));
          if (A(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < A.cols(); ++j) {
          if (A(t, j) == 0) continue;
          add_col(j, t, neg(quot(A(t, j), A(t, t))));
          if (A(t, j) != 0) clean = false;
        }
        if (!clean) {
          auto [r, c] = min_in_cross(t);
          swap_rows(t, r);
          swap_cols(t, c);
          continue;
        }
        // Pivot must divide the whole trailing block.
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < A.rows() && !bad_row; ++i)
          for (std::size_t j = t + 1; j < A.cols(); ++j)
            if (A(i, j) != 0 && sub(A(i, j), mul(quot(A(i, j), A(t, t)), A(t, t))) != 0) {
              bad_row = i;
              break;
            }
        if (!bad_row) break;
        add_row(t, *bad_row, T(1));
      }
      if (A(t, t) < 0) negate_row(t);
    }
    return t;
  }
};

template <class T>
void certify(const DenseMatrix<T>& M, const SNFResult<T>& r) {
  if (r.U * M * r.V != r.S) fail(ErrorCode::InternalInvariant, "SNF certificate U*M*V != S");
  for (std::size_t i = 0; i < r.S.rows(); ++i)
    for (std::size_t j = 0; j < r.S.cols(); ++j)
      if (i != j && r.S(i, j) != 0) fail(ErrorCode::InternalInvariant, "SNF not diagonal");
  for (std::size_t k = 0; k + 1 < r.invariant_factors.size(); ++k) {
    const T& a = r.invariant_factors[k];
    const T& b = r.invariant_factors[k + 1];
    if (a <= 0 || sub(b, mul(quot(b, a), a)) != 0)
      fail(ErrorCode::InternalInvariant, "SNF divisibility chain broken");
  }
}

template <class T>
SNFResult<T> snf_impl(const DenseMatrix<T>& M) {
  Elimination<T> e(M, true);
  const std::size_t rank = e.run();
  SNFResult<T> out;
  out.rank = rank;
  for (std::size_t i = 0; i < rank; ++i) out.invariant_factors.push_back(e.A(i, i));
  out.S = std::move(e.A);
  out.U = std::move(e.U);
  out.V = std::move(e.V);
  certify(M, out);
  return out;
}

template <class T>
std::vector<T> factors_impl(const DenseMatrix<T>& M) {
  Elimination<T> e(M, false);
  const std::size_t rank = e.run();
  std::vector<T> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(e.A(i, i));
  return out;
}

}  // namespace

SNFResult<std::int64_t> smith_normal_form(const DenseMatrix<std::int64_t>& M) { return snf_impl(M); }

SNFResult<BigInt> smith_normal_form(const DenseMatrix<BigInt>& M) { return snf_impl(M); }

SNFResult<BigInt> smith_normal_form_exact(const DenseMatrix<std::int64_t>& M) {
  try {
    SNFResult<std::int64_t> r = snf_impl(M);
    SNFResult<BigInt> out;
    out.S = r.S.cast<BigInt>();
    out.U = r.U.cast<BigInt>();
    out.V = r.V.cast<BigInt>();
    out.rank = r.rank;
    for (auto f : r.invariant_factors) out.invariant_factors.emplace_back(f);
    return out;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::CoefficientOverflow) throw;
  }
  return snf_impl(M.cast<BigInt>());
}

std::vector<BigInt> invariant_factors(const DenseMatrix<std::int64_t>& M) {
  try {
    std::vector<BigInt> out;
    for (auto f : factors_impl(M)) out.emplace_back(f);
    return out;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::CoefficientOverflow) throw;
  }
  return factors_impl(M.cast<BigInt>());
}

}  // namespace cubhom
