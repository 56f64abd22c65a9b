#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubhom/elementary.hpp"
#include "cubhom/error.hpp"
#include "cubhom/fixtures.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace cubhom;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInvariant;
}

ElementaryCube cube(Point min, std::uint64_t extent) { return ElementaryCube{std::move(min), extent}; }

}  // namespace

TEST_CASE("elementary cubes") {
  const ElementaryCube Q = cube(Point{0, 0, 0}, 0b101);
  CHECK(Q.dimension() == 2);
  CHECK(Q.axes() == std::vector<std::size_t>{0, 2});
  CHECK(Q.vertices().size() == 4);
  CHECK(Q.contains(Point{1, 0, 1}));
  CHECK_FALSE(Q.contains(Point{0, 1, 0}));

  CHECK(bounding_elementary_cube({Point{1, 1}, Point{1, 2}}) == std::optional{cube(Point{1, 1}, 0b10)});
  CHECK_FALSE(bounding_elementary_cube({Point{0, 0}, Point{2, 0}}).has_value());
}

TEST_CASE("enumeration") {
  const DigitalImage S = fixtures::unit_square();
  CHECK(enumerate_elementary_cubes(S, 0).size() == 4);
  CHECK(enumerate_elementary_cubes(S, 1).size() == 4);
  CHECK(enumerate_elementary_cubes(S, 2) == std::vector<ElementaryCube>{cube(Point{0, 0}, 0b11)});
  CHECK(enumerate_elementary_cubes(S, 3).empty());

  const auto pts = oracle::point_set(fixtures::shell());
  for (int q = 0; q <= 3; ++q)
    CHECK(enumerate_elementary_cubes(fixtures::shell(), q).size() ==
          oracle::cubes_of(pts, 3, static_cast<std::size_t>(q)).size());
}

TEST_CASE("faces and boundary") {
  const ElementaryCube Q = cube(Point{0, 0}, 0b11);
  const auto [a1, b1] = c1_faces(Q, 1);
  CHECK(a1 == cube(Point{0, 0}, 0b10));
  CHECK(b1 == cube(Point{1, 0}, 0b10));
  const auto [a2, b2] = c1_faces(Q, 2);
  CHECK(a2 == cube(Point{0, 0}, 0b01));
  CHECK(b2 == cube(Point{0, 1}, 0b01));
  CHECK(code_of([&] { c1_faces(Q, 3); }) == ErrorCode::NoSuchFace);
  CHECK(code_of([&] { c1_faces(Q, 0); }) == ErrorCode::NoSuchFace);

  const auto edge = c1_boundary(cube(Point{0}, 1));
  CHECK(edge.coefficient(cube(Point{1}, 0)) == 1);
  CHECK(edge.coefficient(cube(Point{0}, 0)) == -1);

  // ∂∂ = 0 on the unit cube
  const auto d = c1_boundary(cube(Point{0, 0, 0}, 0b111));
  Chain<ElementaryCube> dd(1);
  for (const auto& [face, c] : d.terms()) dd += c1_boundary(face).scaled(c);
  CHECK(dd.is_zero());
}

TEST_CASE("dimension") {
  CHECK(dimension(DigitalImage(2, {Point{4, 4}})) == 0);
  CHECK(dimension(fixtures::ring()) == 1);
  CHECK(dimension(fixtures::l_shape()) == 2);
  CHECK(dimension(fixtures::shell()) == 2);
  CHECK(dimension(fixtures::unit_cube()) == 3);
  CHECK(code_of([] { dimension(DigitalImage(2, {})); }) == ErrorCode::EmptyImage);
}

TEST_CASE("homology of points and rings") {
  CHECK(c1_homology(DigitalImage(1, {Point{0}})) == std::vector<FGAbelianGroup>{FGAbelianGroup(1, {})});
  for (std::size_t d : {1, 3, 5}) {
    const auto H = c1_homology(fixtures::isolated_points(d), 2);
    CHECK(H == std::vector<FGAbelianGroup>{FGAbelianGroup(d, {}), FGAbelianGroup(), FGAbelianGroup()});
  }
  const auto ring = c1_homology(fixtures::ring());
  CHECK(support::as_oracle(ring) == oracle::cubical_homology(fixtures::ring(), 1));
  CHECK(ring == std::vector<FGAbelianGroup>{FGAbelianGroup(1, {}), FGAbelianGroup(1, {})});
  CHECK(c1_homology(DigitalImage(2, {})) == std::vector<FGAbelianGroup>{FGAbelianGroup()});
}

TEST_CASE("homology of random images agrees with the oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const DigitalImage X = support::random_image(rng, {3, 3, 1}, 0.7);
    if (X.empty()) continue;
    const auto H = c1_homology(X, 3);
    CHECK(support::as_oracle(H) == oracle::cubical_homology(X, 3));
    CHECK(H[0].rank() == support::component_count(X));
  }
}

TEST_CASE("relative homology") {
  const DigitalImage ring = fixtures::ring();
  const DigitalImage left(2, {Point{0, 0}, Point{0, 1}, Point{0, 2}, Point{1, 0}, Point{2, 0}});
  const auto H = relative_c1_homology(ring, left);
  CHECK(support::as_oracle(H) == oracle::relative_cubical_homology(ring, left, 1));
  CHECK(H == std::vector<FGAbelianGroup>{FGAbelianGroup(), FGAbelianGroup(1, {})});

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const DigitalImage X = support::random_image(rng, {3, 3}, 0.8);
    std::vector<Point> a;
    std::bernoulli_distribution keep(0.5);
    for (const Point& p : X.points())
      if (keep(rng)) a.push_back(p);
    const DigitalImage A(2, a);
    CHECK(support::as_oracle(relative_c1_homology(X, A, 2)) == oracle::relative_cubical_homology(X, A, 2));
  }
  CHECK(code_of([&] { relative_c1_homology(left, ring); }) == ErrorCode::NotSubset);
}

TEST_CASE("induced maps") {
  const DigitalImage S = fixtures::unit_square();
  const C1Complex CS = build_c1_complex(S);
  for (int q = 0; q <= 2; ++q) {
    const auto n = CS.complex().basis_size(q);
    CHECK(induced_map(PointMap::identity(S), CS, CS, q) == SparseMatrix::identity(n));
  }

  std::vector<std::pair<Point, Point>> constant;
  for (const Point& p : S.points()) constant.emplace_back(p, Point{0, 0});
  const PointMap c(S, S, constant);
  CHECK(induced_map(c, CS, CS, 1).is_zero());
  CHECK(induced_map(c, CS, CS, 2).is_zero());
  CHECK(induced_map(c, CS, CS, 0).nonzeros() == 4);

  const DigitalImage E = fixtures::edge();
  const DigitalImage R(1, {Point{-1}, Point{0}});
  const PointMap flip(E, R, {{Point{0}, Point{0}}, {Point{1}, Point{-1}}});
  const C1Complex CE = build_c1_complex(E);
  const C1Complex CR = build_c1_complex(R);
  CHECK(induced_map(flip, CE, CR, 1).at(0, 0) == -1);
  const auto phi = induced_chain_map(flip, CE, CR);
  CHECK(verify_chain_map(phi, CE.complex(), CR.complex()));

  const DigitalImage gap(1, {Point{0}, Point{2}});
  const PointMap jump(E, gap, {{Point{0}, Point{0}}, {Point{1}, Point{2}}});
  const C1Complex CG = build_c1_complex(gap, 1);
  CHECK(code_of([&] { induced_map(jump, CE, CG, 0); }) == ErrorCode::NotContinuous);
}

TEST_CASE("induced maps are chain maps for random continuous maps") {
  std::mt19937_64 rng(31);
  const DigitalImage X = fixtures::l_shape();
  const DigitalImage Y = fixtures::box({2, 1, 1});
  const C1Complex CX = build_c1_complex(X);
  const C1Complex CY = build_c1_complex(Y, CX.max_degree());
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = fixtures::random_continuous_map(X, Y, rng);
    REQUIRE(f.has_value());
    REQUIRE(is_continuous(*f));
    const auto phi = induced_chain_map(*f, CX, CY);
    for (int q = 1; q <= CX.max_degree(); ++q) {
      const auto lhs = oracle::sparse_mul(oracle::to_map(CY.complex().boundary(q)), oracle::to_map(phi[q]));
      const auto rhs = oracle::sparse_mul(oracle::to_map(phi[q - 1]), oracle::to_map(CX.complex().boundary(q)));
      CHECK(lhs == rhs);
    }
  }
}
