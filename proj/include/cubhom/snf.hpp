#pragma once

// Smith normal form over the integers.
//
// smith_normal_form returns S = U·M·V with U, V unimodular and S diagonal,
// positive diagonal entries d1 | d2 | ... | dr. The identity is recomputed
// before returning; a failed certificate raises InternalInvariant.

#include <cstdint>
#include <vector>

#include "cubhom/checked.hpp"
#include "cubhom/matrix.hpp"

namespace cubhom {

template <class T>
struct SNFResult {
  DenseMatrix<T> S;
  DenseMatrix<T> U;
  DenseMatrix<T> V;
  std::size_t rank = 0;
  std::vector<T> invariant_factors;  // the nonzero diagonal of S, in order
};

// Fixed-width version; throws CoefficientOverflow when an intermediate value
// leaves the int64 range.
SNFResult<std::int64_t> smith_normal_form(const DenseMatrix<std::int64_t>& M);
SNFResult<BigInt> smith_normal_form(const DenseMatrix<BigInt>& M);

// Tries 64-bit arithmetic first, falls back to big integers.
SNFResult<BigInt> smith_normal_form_exact(const DenseMatrix<std::int64_t>& M);

// Nonzero invariant factors only (no transforms); escalates on overflow.
std::vector<BigInt> invariant_factors(const DenseMatrix<std::int64_t>& M);

}  // namespace cubhom
