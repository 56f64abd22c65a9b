#pragma once

// Named property suites. Each one checks a family of identities exhaustively
// over fixture images (or over seeded random samples) and counts failures
// instead of stopping at the first one.

#include <cstdint>
#include <string>
#include <vector>

#include "cubhom/singular.hpp"

namespace cubhom {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c0be'2024ULL;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = kDefaultBudget;
};

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  // A suite that checked nothing has not shown anything.
  bool passed() const noexcept { return failures == 0 && checks > 0; }

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

// Size bounds on common neighbourhoods, adjacency symmetry, component
// partitions and monotonicity of Int, sampled in boxes of Z^1..Z^3.
SuiteResult neighborhood_suite(const SuiteOptions& opt = {});

// 1000 random small matrices: S = U·M·V, divisibility, |det U| = |det V| = 1,
// and agreement with the sparse homology reduction.
SuiteResult snf_suite(const SuiteOptions& opt = {});

// Corner-permutation identities among F, C, S, R, plus append/face laws on
// enumerated cubes.
SuiteResult operator_algebra_suite(const SuiteOptions& opt = {});

// β under flips, swaps, rotations and shifts, and the face relation of the
// orientation, for every injective cube with q <= 3 on the fixtures.
SuiteResult sign_law_suite(const SuiteOptions& opt = {});

// Every nondegenerate degree-(q-1) cube, q in {2,3}, gets exactly one type.
SuiteResult classification_suite(const SuiteOptions& opt = {});

// Injective on popcount <= 2 corners => injective; injective => embedding;
// injective cubes agreeing on popcount <= 1 corners are equal.
SuiteResult injectivity_suite(const SuiteOptions& opt = {});

// Injective self-maps of I^q, q <= 3, are exactly the group generated by
// swaps and flips.
SuiteResult swap_flip_suite(const SuiteOptions& opt = {});

// Compatible injective cubes with the same image differ by id, F_j or
// F_j∘C_{i,j}.
SuiteResult trichotomy_suite(const SuiteOptions& opt = {});

// β∂ = ∂β on the fixtures in every built degree; columns of β are 0 or ±1
// unit vectors; β is onto.
SuiteResult chain_map_suite(const SuiteOptions& opt = {});

// Random continuous maps: induced maps are chain maps, compose correctly,
// agree with β(f∘ι_Q), and the identity induces the identity.
SuiteResult functoriality_suite(const SuiteOptions& opt = {});

// dH_{n+1} = 0 for images of dimension n in {1,2}.
SuiteResult vanishing_suite(const SuiteOptions& opt = {});

// H(X × [0,1]) = H(X) degreewise.
SuiteResult cylinder_suite(const SuiteOptions& opt = {});

// H(X,A) = H(B, A∩B) on the excision fixture.
SuiteResult excision_suite(const SuiteOptions& opt = {});

// Singular and c1 homology agree on isolated points, ring and shell.
SuiteResult isomorphism_suite(const SuiteOptions& opt = {});

std::vector<std::string> suite_names();

// Throws PreconditionViolated for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace cubhom
