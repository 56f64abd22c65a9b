#pragma once

// Small named images used by the property suites, the CLI and the tests.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cubhom/image.hpp"

namespace cubhom::fixtures {

// All integer points of [0,hi_1] × ... × [0,hi_n].
DigitalImage box(const std::vector<Coord>& hi);

// box minus the given points.
DigitalImage box_minus(const std::vector<Coord>& hi, const std::vector<Point>& holes);

DigitalImage edge();         // {0, 1} in Z
DigitalImage segment(Coord length);
DigitalImage unit_square();  // [0,1]^2
DigitalImage unit_cube();    // [0,1]^3
DigitalImage ring();         // [0,2]^2 minus (1,1)
DigitalImage shell();        // [0,2]^3 minus (1,1,1), 26 points
DigitalImage l_shape();      // (0,0)..(2,0) and (0,1)..(0,2) plus the square at the corner

// d points of Z^2 pairwise at distance 2, so no two are adjacent.
DigitalImage isolated_points(std::size_t d);

// X × [0,1]_Z via cylinder().
DigitalImage cylinder_of(const DigitalImage& X);

// X = [0,7]^2 minus the open 4×4 hole, A = X ∩ {x <= 5}, B = X ∩ {x >= 2}.
// With two interior steps, Int²(A) ∪ Int²(B) = X.
struct ExcisionTriple {
  DigitalImage X;
  DigitalImage A;
  DigitalImage B;
  std::size_t steps;
};
ExcisionTriple excision_triple();

DigitalImage intersection(const DigitalImage& A, const DigitalImage& B);
DigitalImage image_union(const DigitalImage& A, const DigitalImage& B);

// Names accepted by by_name(): edge, segment3, unit_square, unit_cube, ring,
// shell, l_shape, isolated1, isolated3, isolated5.
std::vector<std::string> names();
std::optional<DigitalImage> by_name(const std::string& name);

// A uniformly shuffled backtracking search for a continuous map X -> Y.
// Unused target points are tried first, which makes maps that are injective
// on many cubes common. Falls back to a constant map if the search runs
// long; nullopt only for nonempty X and empty Y.
std::optional<PointMap> random_continuous_map(const DigitalImage& X, const DigitalImage& Y, std::mt19937_64& rng);

}  // namespace cubhom::fixtures
