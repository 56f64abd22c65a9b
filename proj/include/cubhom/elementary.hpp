#pragma once

// Elementary cubes of a digital image and the c1-cubical chain complex.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubhom/chain_complex.hpp"
#include "cubhom/image.hpp"

namespace cubhom {

// J_1 × ... × J_n with J_i = [a_i, a_i+1] for i in the extent and [a_i]
// otherwise. Axes are 0-based; ambient dimension is limited to 64.
struct ElementaryCube {
  Point min_corner;
  std::uint64_t extent = 0;

  int dimension() const noexcept;
  std::vector<std::size_t> axes() const;  // sorted
  std::vector<Point> vertices() const;    // 2^dim points
  bool contains(const Point& p) const;

  // Lexicographic on (min_corner, sorted axis list).
  friend bool operator<(const ElementaryCube& a, const ElementaryCube& b);
  friend bool operator==(const ElementaryCube&, const ElementaryCube&) = default;
};

struct ElementaryCubeHash {
  std::size_t operator()(const ElementaryCube& Q) const noexcept;
};

// The smallest elementary cube containing `points`, if their bounding box
// is one (every coordinate spans at most 1).
std::optional<ElementaryCube> bounding_elementary_cube(const std::vector<Point>& points);

std::vector<ElementaryCube> enumerate_elementary_cubes(const DigitalImage& X, int q);

// Front face keeps the lower end of the i-th nondegenerate interval
// (1-based position in the sorted extent), back face the upper end.
std::pair<ElementaryCube, ElementaryCube> c1_faces(const ElementaryCube& Q, int i);

// Σ_i (-1)^i (A_{j_i} Q - B_{j_i} Q), i = 1..dim over the sorted extent.
Chain<ElementaryCube> c1_boundary(const ElementaryCube& Q);

// Largest dimension of an elementary cube inside X. Throws EmptyImage.
int dimension(const DigitalImage& X);

class C1Complex {
 public:
  const DigitalImage& image() const noexcept { return image_; }
  const ChainComplex& complex() const noexcept { return complex_; }
  int max_degree() const noexcept { return complex_.max_degree(); }

  const std::vector<ElementaryCube>& cubes(int q) const;
  std::optional<std::size_t> index_of(const ElementaryCube& Q) const;

 private:
  friend C1Complex build_c1_complex(const DigitalImage& X, std::optional<int> max_dim);

  explicit C1Complex(DigitalImage X) : image_(std::move(X)) {}

  DigitalImage image_;
  std::vector<std::vector<ElementaryCube>> cubes_;
  std::vector<std::unordered_map<ElementaryCube, std::size_t, ElementaryCubeHash>> index_;
  ChainComplex complex_;
};

// Degrees 0..max_dim (default dimension(X); 0 for an empty image).
C1Complex build_c1_complex(const DigitalImage& X, std::optional<int> max_dim = std::nullopt);

std::vector<FGAbelianGroup> c1_homology(const DigitalImage& X, std::optional<int> max_dim = std::nullopt);

// Quotient of C^{c1}(X) by the cubes lying entirely in A. Throws NotSubset.
ChainComplex relative_c1_complex(const C1Complex& X, const DigitalImage& A);

std::vector<FGAbelianGroup> relative_c1_homology(const DigitalImage& X, const DigitalImage& A,
                                                 std::optional<int> max_dim = std::nullopt);

// Matrix of f^{c1}_q : C_q(X) -> C_q(Y) over the two canonical bases. Column
// Q is 0 when f is not injective on Q, otherwise o^{f,Q}·f(Q) with o^{f,Q}
// the determinant of the linear part of f on Q. Throws NotContinuous.
SparseMatrix induced_map(const PointMap& f, const C1Complex& X, const C1Complex& Y, int q);

// All degrees of the domain complex.
std::vector<SparseMatrix> induced_chain_map(const PointMap& f, const C1Complex& X, const C1Complex& Y);

}  // namespace cubhom
