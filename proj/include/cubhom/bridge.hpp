#pragma once

// The chain map β: dC_q(X) -> C^{c1}_q(X) and the comparison of the two
// homologies.

#include <optional>
#include <string>
#include <vector>

#include "cubhom/elementary.hpp"
#include "cubhom/singular.hpp"

namespace cubhom {

struct SignedCube {
  int sign;
  ElementaryCube cube;
  friend bool operator==(const SignedCube&, const SignedCube&) = default;
};

// 0 (nullopt) for noninjective σ, otherwise o^σ · σ(I^q).
std::optional<SignedCube> beta(const SingularCube& s);

// β_q over the canonical bases, one matrix per degree of the singular
// complex. Each column is zero or ±(one generator).
std::vector<SparseMatrix> beta_matrices(const SingularComplex& S, const C1Complex& E);

struct BetaData {
  SingularComplex singular;
  C1Complex elementary;
  std::vector<SparseMatrix> beta;
};

// Builds both complexes through degree max_q+1 and β between them. Throws
// BudgetExceeded.
BetaData beta_matrices(const DigitalImage& X, int max_q, std::size_t budget = kDefaultBudget);

// The canonical embedding ι_Q: I^q -> Q, θ^i ↦ min(Q) + e_{k_i} with k
// increasing, as a singular cube.
SingularCube canonical_embedding(const ElementaryCube& Q);

enum class Verdict { Isomorphic, Mismatch, Skipped };

const char* verdict_name(Verdict v);

struct DegreeComparison {
  int q;
  std::optional<FGAbelianGroup> singular;  // absent when skipped
  FGAbelianGroup c1;
  Verdict verdict;
};

struct IsoReport {
  std::vector<DegreeComparison> degrees;
  std::optional<BudgetExceeded> budget_failure;

  bool any_mismatch() const;
  bool all_isomorphic() const;  // every degree compared and equal
};

// Computes dH_q and H^{c1}_q for 0 <= q <= max_q independently and compares
// canonical forms. Degrees the singular side could not reach are Skipped.
IsoReport verify_isomorphism(const DigitalImage& X, int max_q, std::size_t budget = kDefaultBudget);

}  // namespace cubhom
