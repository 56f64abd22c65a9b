#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubhom/bridge.hpp"
#include "cubhom/fixtures.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace cubhom;

namespace {

SingularCube line(std::vector<Coord> xs) {
  std::vector<Point> pts;
  for (Coord x : xs) pts.push_back(Point{x});
  return SingularCube::make(pts);
}

// ∂^E_q β_q = β_{q-1} ∂^S_q, multiplied out by the oracle.
bool squares_commute(const BetaData& d) {
  for (int q = 1; q < static_cast<int>(d.beta.size()); ++q) {
    const auto lhs = oracle::sparse_mul(oracle::to_map(d.elementary.complex().boundary(q)), oracle::to_map(d.beta[q]));
    const auto rhs = oracle::sparse_mul(oracle::to_map(d.beta[q - 1]), oracle::to_map(d.singular.complex().boundary(q)));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("beta of single cubes") {
  const auto sq = beta(SingularCube::make({Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}}));
  REQUIRE(sq.has_value());
  CHECK(sq->sign == 1);
  CHECK(sq->cube == ElementaryCube{Point{0, 0}, 0b11});

  const auto swapped = beta(SingularCube::make({Point{0, 0}, Point{0, 1}, Point{1, 0}, Point{1, 1}}));
  REQUIRE(swapped.has_value());
  CHECK(swapped->sign == -1);

  const auto back = beta(line({1, 0}));
  REQUIRE(back.has_value());
  CHECK(back->sign == -1);
  CHECK(back->cube == ElementaryCube{Point{0}, 1});

  CHECK_FALSE(beta(line({0, 1, 1, 0})).has_value());
  CHECK_FALSE(beta(line({0, 0, 0, 1})).has_value());

  const auto point = beta(SingularCube::make({Point{4, 2}}));
  REQUIRE(point.has_value());
  CHECK(point->sign == 1);
  CHECK(point->cube == ElementaryCube{Point{4, 2}, 0});
}

TEST_CASE("canonical embeddings") {
  const ElementaryCube Q{Point{1, 0, 3}, 0b101};
  const SingularCube iota = canonical_embedding(Q);
  CHECK(iota.corners() == std::vector<Point>{Point{1, 0, 3}, Point{2, 0, 3}, Point{1, 0, 4}, Point{2, 0, 4}});
  const auto b = beta(iota);
  REQUIRE(b.has_value());
  CHECK(*b == SignedCube{1, Q});
}

TEST_CASE("beta_0 is a bijection on isolated points") {
  for (std::size_t d : {1, 3, 5}) {
    const BetaData data = beta_matrices(fixtures::isolated_points(d), 1);
    const auto b0 = data.beta[0].to_dense();
    REQUIRE(b0.rows() == d);
    REQUIRE(b0.cols() == d);
    oracle::Mat m = oracle::zeros(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m[i][j] = b0(i, j);
    const auto det = oracle::det(m);
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("beta is a chain map") {
  CHECK(squares_commute(beta_matrices(fixtures::ring(), 1)));
  CHECK(squares_commute(beta_matrices(fixtures::edge(), 2)));
  CHECK(squares_commute(beta_matrices(fixtures::unit_square(), 1)));
  CHECK(squares_commute(beta_matrices(fixtures::l_shape(), 1)));
}

TEST_CASE("beta columns and surjectivity") {
  const BetaData data = beta_matrices(fixtures::unit_square(), 1);
  for (int q = 0; q < static_cast<int>(data.beta.size()); ++q) {
    const SparseMatrix& b = data.beta[q];
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const auto& col = b.column(j);
      CHECK(col.size() <= 1);
      if (!col.empty()) CHECK((col[0].value == 1 || col[0].value == -1));
    }
    for (const ElementaryCube& Q : data.elementary.cubes(q)) {
      const SingularCube iota = canonical_embedding(Q);
      CHECK(beta(iota) == std::optional{SignedCube{1, Q}});
    }
  }
}

TEST_CASE("induced maps agree with beta of composites") {
  std::mt19937_64 rng(41);
  const DigitalImage X = fixtures::unit_square();
  const DigitalImage Y = fixtures::box({2, 1, 1});
  const C1Complex CX = build_c1_complex(X);
  const C1Complex CY = build_c1_complex(Y, CX.max_degree());
  for (int trial = 0; trial < 15; ++trial) {
    const auto f = fixtures::random_continuous_map(X, Y, rng);
    REQUIRE(f.has_value());
    for (int q = 0; q <= CX.max_degree(); ++q) {
      const SparseMatrix m = induced_map(*f, CX, CY, q);
      const auto& cubes = CX.cubes(q);
      for (std::size_t j = 0; j < cubes.size(); ++j) {
        const SingularCube iota = canonical_embedding(cubes[j]);
        std::vector<Point> image;
        for (const Point& p : iota.corners()) image.push_back((*f)(p));
        const auto b = beta(SingularCube::make(image));
        const auto& col = m.column(j);
        if (!b) {
          CHECK(col.empty());
        } else {
          REQUIRE(col.size() == 1);
          CHECK(col[0].row == *CY.index_of(b->cube));
          CHECK(col[0].value == b->sign);
        }
      }
    }
  }
}

TEST_CASE("isomorphism verification") {
  for (std::size_t d : {1, 3, 5}) {
    const IsoReport r = verify_isomorphism(fixtures::isolated_points(d), 2);
    CHECK(r.all_isomorphic());
    CHECK(r.degrees.size() == 3);
  }
  const IsoReport ring = verify_isomorphism(fixtures::ring(), 1);
  CHECK(ring.all_isomorphic());
  REQUIRE(ring.degrees.size() == 2);
  CHECK(support::as_oracle(ring.degrees[1].c1) == oracle::cubical_homology(fixtures::ring(), 1)[1]);

  const IsoReport shell = verify_isomorphism(fixtures::shell(), 2);
  CHECK(shell.all_isomorphic());
  const auto expected = oracle::cubical_homology(fixtures::shell(), 2);
  for (const auto& d : shell.degrees) CHECK(support::as_oracle(d.c1) == expected[d.q]);
}

TEST_CASE("comparison under a tight budget") {
  const IsoReport r = verify_isomorphism(fixtures::unit_square(), 2, 100);
  REQUIRE(r.budget_failure.has_value());
  CHECK_FALSE(r.any_mismatch());
  CHECK_FALSE(r.all_isomorphic());
  REQUIRE(r.degrees.size() == 3);
  CHECK(r.degrees[2].verdict == Verdict::Skipped);
  CHECK_FALSE(r.degrees[2].singular.has_value());
  CHECK(r.degrees[0].verdict == Verdict::Isomorphic);
}
