#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cubhom/chain_complex.hpp"
#include "cubhom/error.hpp"
#include "cubhom/snf.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace cubhom;

namespace {

DenseMatrix<std::int64_t> dense(std::size_t r, std::size_t c, std::vector<std::int64_t> v) {
  return DenseMatrix<std::int64_t>(r, c, std::move(v));
}

SparseMatrix sparse(std::size_t r, std::size_t c, std::vector<std::int64_t> v) {
  return SparseMatrix::from_dense(dense(r, c, std::move(v)));
}

std::vector<std::int64_t> factors64(const std::vector<BigInt>& f) {
  std::vector<std::int64_t> out;
  for (const auto& d : f) out.push_back(static_cast<std::int64_t>(d));
  return out;
}

// Homology of C computed by the oracle from the dense boundaries.
std::vector<oracle::Group> oracle_homology(const ChainComplex& C) {
  std::vector<std::size_t> sizes;
  std::vector<oracle::Mat> bds;
  for (int q = 0; q <= C.max_degree(); ++q) sizes.push_back(C.basis_size(q));
  for (int q = 1; q <= C.max_degree(); ++q) bds.push_back(oracle::from_sparse(C.boundary(q)));
  return oracle::homology(sizes, bds);
}

// The square with vertices 0..3 and edges 0-1, 1-2, 2-3, 3-0.
ChainComplex four_cycle() {
  return ChainComplex({4, 4}, {sparse(4, 4, {-1, 0, 0, 1,  //
                                             1, -1, 0, 0,  //
                                             0, 1, -1, 0,  //
                                             0, 0, 1, -1})});
}

// Z --2--> Z --0--> Z with an extra free generator in degree 0.
ChainComplex torsion_complex(std::int64_t k) {
  return ChainComplex({2, 1, 1}, {sparse(2, 1, {k, 0}), sparse(1, 1, {0})});
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST_CASE("snf of small examples") {
  const auto r = smith_normal_form(dense(2, 2, {2, 0, 0, 3}));
  CHECK(r.invariant_factors == std::vector<std::int64_t>{1, 6});
  CHECK(r.U * dense(2, 2, {2, 0, 0, 3}) * r.V == r.S);

  const auto z = smith_normal_form(DenseMatrix<std::int64_t>(3, 2));
  CHECK(z.rank == 0);
  CHECK(z.invariant_factors.empty());

  const auto m = dense(2, 2, {2, 4, 6, 8});
  oracle::Mat om = {{2, 4}, {6, 8}};
  const auto by_minors = factors64(oracle::invariant_factors_by_minors(om));
  REQUIRE(by_minors == std::vector<std::int64_t>{2, 4});
  CHECK(smith_normal_form(m).invariant_factors == by_minors);
  CHECK(factors64(invariant_factors(m)) == by_minors);
}

TEST_CASE("snf transforms are unimodular") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> entry(-6, 6);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    std::vector<std::int64_t> v(r * c);
    for (auto& x : v) x = entry(rng);
    const auto M = dense(r, c, v);
    const auto res = smith_normal_form_exact(M);
    oracle::Mat U(r, std::vector<oracle::Big>(r)), V(c, std::vector<oracle::Big>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) U[i][j] = res.U(i, j);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) V[i][j] = res.V(i, j);
    const auto du = oracle::det(U), dv = oracle::det(V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    oracle::Mat om(r, std::vector<oracle::Big>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) om[i][j] = M(i, j);
    CHECK(factors64(res.invariant_factors) == factors64(oracle::invariant_factors_by_minors(om)));
  }
}

TEST_CASE("int64 overflow escalates to big integers") {
  const std::int64_t big = std::int64_t{1} << 40;
  const auto M = dense(2, 2, {big, 1, 0, big});
  const auto f = invariant_factors(M);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == 1);
  CHECK(f[1] == BigInt(big) * BigInt(big));
}

TEST_CASE("homology of small complexes") {
  const auto H = homology(four_cycle());
  CHECK(support::as_oracle(H) == oracle_homology(four_cycle()));
  CHECK(H == std::vector<FGAbelianGroup>{FGAbelianGroup(1, {}), FGAbelianGroup(1, {})});

  const auto T = homology(torsion_complex(2));
  CHECK(T[0] == FGAbelianGroup(1, {2}));
  CHECK(T[1] == FGAbelianGroup());
  CHECK(T[2] == FGAbelianGroup(1, {}));
  CHECK(support::as_oracle(T) == oracle_homology(torsion_complex(2)));

  CHECK(homology(ChainComplex()) == std::vector<FGAbelianGroup>{FGAbelianGroup()});
}

TEST_CASE("synthetic torsion complexes") {
  // ∂_1 = diag(2, 6, 0) mixed by a unimodular change of basis.
  const auto D = dense(3, 3, {2, 0, 0, 0, 6, 0, 0, 0, 0});
  const auto P = dense(3, 3, {1, 2, 0, 0, 1, 3, 0, 0, 1});
  const auto Q = dense(3, 3, {1, 0, 0, 5, 1, 0, -2, 4, 1});
  const ChainComplex C({3, 3}, {SparseMatrix::from_dense(P * D * Q)});
  const auto H = homology(C);
  CHECK(H[0] == FGAbelianGroup(1, {2, 6}));
  CHECK(H[1] == FGAbelianGroup(1, {}));
  CHECK(support::as_oracle(H) == oracle_homology(C));
}

TEST_CASE("homology is invariant under basis permutation") {
  std::mt19937_64 rng(5);
  const ChainComplex C = four_cycle();
  const auto H = homology(C);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::size_t> rows(4), cols(4);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    const auto d = C.boundary(1).to_dense();
    DenseMatrix<std::int64_t> p(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) p(rows[i], cols[j]) = d(i, j);
    CHECK(homology(ChainComplex({4, 4}, {SparseMatrix::from_dense(p)})) == H);
  }
}

TEST_CASE("matrix invariants agree with the oracle on random sparse matrices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  std::bernoulli_distribution nonzero(0.3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    std::vector<std::int64_t> v(r * c, 0);
    for (auto& x : v)
      if (nonzero(rng)) x = entry(rng);
    const SparseMatrix M = sparse(r, c, v);
    const auto inv = matrix_invariants(M);
    const oracle::Mat om = oracle::from_sparse(M);
    CHECK(inv.rank == oracle::rank(om));
    std::vector<std::int64_t> expected;
    for (const auto& d : oracle::invariant_factors(om))
      if (d > 1) expected.push_back(static_cast<std::int64_t>(d));
    CHECK(inv.torsion == expected);
  }
}

TEST_CASE("quotient complexes") {
  // Relative to the arc 0-1 the cycle has H = (0, Z).
  const ChainComplex C = four_cycle();
  const SubBasis sub{{true, true, false, false}, {true, false, false, false}};
  const ChainComplex Q = quotient_complex(C, sub);
  CHECK(Q.basis_size(0) == 2);
  CHECK(Q.basis_size(1) == 3);
  CHECK(homology(Q) == std::vector<FGAbelianGroup>{FGAbelianGroup(), FGAbelianGroup(1, {})});

  const SubBasis bad{{true, false, false, false}, {true, false, false, false}};
  CHECK(code_of([&] { quotient_complex(C, bad); }) == ErrorCode::NotSubcomplex);
}

TEST_CASE("chain map verification") {
  const ChainComplex C = four_cycle();
  CHECK(verify_chain_map({SparseMatrix::identity(4), SparseMatrix::identity(4)}, C, C));
  CHECK(verify_chain_map({SparseMatrix(4, 4), SparseMatrix(4, 4)}, C, C));

  SparseMatrix perturbed = SparseMatrix::identity(4);
  perturbed.set_column(0, {{0, 1}, {1, 1}});
  CHECK_FALSE(verify_chain_map({SparseMatrix::identity(4), perturbed}, C, C));

  CHECK(code_of([&] { verify_chain_map({SparseMatrix(3, 4)}, C, C); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("complex validation") {
  // ∂_1∂_2 != 0
  const ChainComplex bad({1, 1, 1}, {sparse(1, 1, {1}), sparse(1, 1, {1})});
  CHECK_FALSE(bad.is_complex());
  CHECK(code_of([&] { homology(bad); }) == ErrorCode::NotAComplex);
  CHECK(code_of([] { ChainComplex({1, 2}, {SparseMatrix(2, 2)}); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("abelian groups") {
  CHECK(FGAbelianGroup().to_string() == "0");
  CHECK(FGAbelianGroup(1, {}).to_string() == "Z");
  CHECK(FGAbelianGroup(3, {}).to_string() == "Z^3");
  CHECK(FGAbelianGroup(1, {2}).to_string() == "Z + Z/2");
  CHECK(FGAbelianGroup(0, {2, 6}).to_string() == "Z/2 + Z/6");
  CHECK(FGAbelianGroup::from_invariant_factors(2, {1, 1, 4}) == FGAbelianGroup(2, {4}));
  CHECK(groups_isomorphic(FGAbelianGroup(2, {}), FGAbelianGroup(2, {})));
  CHECK_FALSE(groups_isomorphic(FGAbelianGroup(1, {2}), FGAbelianGroup(1, {})));
  CHECK(code_of([] { FGAbelianGroup(0, {2, 3}); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { FGAbelianGroup(0, {1}); }) == ErrorCode::PreconditionViolated);
}
