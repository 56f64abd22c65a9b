#pragma once

// Digital singular q-cubes σ: I^q -> X, I = {0,1}.
//
// A cube is stored as its 2^q corner images. Corner index c encodes the
// argument (t_1, ..., t_q) with t_i = bit (i-1) of c, so θ^{i_1...i_m} is the
// index with bits i_1-1, ..., i_m-1 set. Coordinate indices i, j of faces and
// operators are 1-based throughout, matching the usual notation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubhom/chain_complex.hpp"
#include "cubhom/elementary.hpp"
#include "cubhom/image.hpp"

namespace cubhom {

class SingularCube {
 public:
  // Validates the corner table: power-of-two length, uniform point length,
  // and equal-or-adjacent images across every one-bit corner pair.
  static SingularCube make(std::vector<Point> corners);

  int q() const noexcept { return q_; }
  std::size_t ambient_dim() const noexcept { return corners_.front().dim(); }
  std::size_t corner_count() const noexcept { return corners_.size(); }
  const Point& corner(std::uint32_t c) const { return corners_[c]; }
  const std::vector<Point>& corners() const noexcept { return corners_; }

  std::string to_string() const;

  friend auto operator<=>(const SingularCube&, const SingularCube&) = default;
  friend bool operator==(const SingularCube&, const SingularCube&) = default;

 private:
  SingularCube(int q, std::vector<Point> corners) : q_(q), corners_(std::move(corners)) {}
  friend SingularCube unchecked_cube(int q, std::vector<Point> corners);

  int q_ = 0;
  std::vector<Point> corners_;
};

struct SingularCubeHash {
  std::size_t operator()(const SingularCube& s) const noexcept;
};

using SingularChain = Chain<SingularCube>;

enum class Side { Front, Back };

bool is_degenerate(const SingularCube& s);
bool is_injective(const SingularCube& s);
bool is_embedding(const SingularCube& s);

// σ(I^q) as an elementary cube when σ is an embedding.
std::optional<ElementaryCube> image_cube(const SingularCube& s);

// A_i σ (Front) or B_i σ (Back), i in 1..q.
SingularCube face(const SingularCube& s, Side side, int i);

// Σ_i (-1)^i (A_i σ - B_i σ) with degenerate faces dropped.
SingularChain boundary(const SingularCube& s);

// Self-maps of I^q: flip F_j, swap C_{i,j}, shift S_{i,j}, rotation
// R_{i,j} = F_j ∘ C_{i,j}. For Flip only j is used.
struct CubeOperator {
  enum class Kind { Flip, Swap, Shift, Rotate };
  Kind kind;
  int i = 0;
  int j = 0;

  static CubeOperator flip(int j) { return {Kind::Flip, 0, j}; }
  static CubeOperator swap(int i, int j) { return {Kind::Swap, i, j}; }
  static CubeOperator shift(int i, int j) { return {Kind::Shift, i, j}; }
  static CubeOperator rotate(int i, int j) { return {Kind::Rotate, i, j}; }

  std::string to_string() const;
};

// Image of corner index c under the operator acting on I^q.
std::uint32_t apply_to_corner(const CubeOperator& op, std::uint32_t c, int q);

// σ ∘ op. Throws IndexOutOfRange.
SingularCube apply_operator(const SingularCube& s, const CubeOperator& op);

// σ ∘ g for an arbitrary map g of corner indices (perm[c] = g(c)).
SingularCube precompose(const SingularCube& s, std::span<const std::uint32_t> perm);

bool compatible(const SingularCube& s, const SingularCube& g);

// (σ ⊟ γ): t_{q+1} = 0 gives σ, t_{q+1} = 1 gives γ. Throws NotCompatible.
SingularCube append(const SingularCube& s, const SingularCube& g);

// q for an injective cube, otherwise the maximum over all 2q faces;
// 0 for a 0-cube.
int degree_of_injectivity(const SingularCube& s);

enum class CubeType { Type1, Type2, Type3 };

const char* cube_type_name(CubeType t);

struct CubeClass {
  CubeType type;
  int i = 0;  // coordinate of an injective face (1-based)
  int j = 0;  // second coordinate for Type1/Type2, 0 for Type3
  friend bool operator==(const CubeClass&, const CubeClass&) = default;
};

// Face-injectivity pattern of a nondegenerate cube with q >= 2 and degree
// q-1. Throws PreconditionViolated, or UnclassifiableCube if the pattern
// matches none of the three types.
CubeClass classify(const SingularCube& s);

// Linear data of an injective cube: σ(θ^i) = σ(0) + edge_signs[i]·e_{axes[i]}.
struct OrientationData {
  std::vector<std::size_t> axes;  // k_1..k_q as 0-based ambient axes
  std::vector<int> edge_signs;    // o_1..o_q
  int o = 1;                      // det of the signed permutation matrix
};

// Throws NotInjective.
OrientationData orientation(const SingularCube& s);

// All nondegenerate continuous σ: I^q -> X in lexicographic order of corner
// tables. Throws BudgetExceeded once more than `budget` complete continuous
// tables (degenerate ones included) have been visited.
inline constexpr std::size_t kDefaultBudget = 2'000'000;
std::vector<SingularCube> enumerate_singular_cubes(const DigitalImage& X, int q,
                                                   std::size_t budget = kDefaultBudget);

// Flat corner tables of one degree; each row holds 2^q point indices into
// the image.
class CubeTable {
 public:
  CubeTable() = default;
  explicit CubeTable(int q) : q_(q), stride_(std::size_t{1} << q) {}

  int q() const noexcept { return q_; }
  std::size_t size() const noexcept { return stride_ ? flat_.size() / stride_ : 0; }
  std::span<const std::uint32_t> row(std::size_t k) const { return {flat_.data() + k * stride_, stride_}; }
  void push(std::span<const std::uint32_t> r) { flat_.insert(flat_.end(), r.begin(), r.end()); }

  // Position of a row (rows are kept sorted).
  std::optional<std::size_t> find(std::span<const std::uint32_t> r) const;

 private:
  int q_ = 0;
  std::size_t stride_ = 1;
  std::vector<std::uint32_t> flat_;
};

// dC_*(X) through degree top_degree(). When the budget ran out in some
// degree, only the degrees below it were built and the homology is only
// meaningful through reliable_degree().
class SingularComplex {
 public:
  const DigitalImage& image() const noexcept { return image_; }
  const ChainComplex& complex() const noexcept { return complex_; }
  int top_degree() const noexcept { return complex_.max_degree(); }
  int requested_degree() const noexcept { return requested_; }

  // Largest q with H_q computable from this complex, or -1.
  int reliable_degree() const noexcept;
  std::optional<BudgetExceeded> budget_failure() const { return failure_; }

  const CubeTable& table(int q) const { return tables_.at(static_cast<std::size_t>(q)); }
  std::size_t basis_size(int q) const { return complex_.basis_size(q); }
  SingularCube cube(int q, std::size_t k) const;

  // H_q for 0 <= q <= reliable_degree().
  std::vector<FGAbelianGroup> homology() const;

 private:
  friend SingularComplex build_singular_complex_partial(const DigitalImage&, int, std::size_t);

  explicit SingularComplex(DigitalImage X) : image_(std::move(X)) {}

  DigitalImage image_;
  int requested_ = 0;
  std::vector<CubeTable> tables_;
  ChainComplex complex_;
  std::optional<BudgetExceeded> failure_;
};

// Builds degrees 0..max_q+1 so that H_q is exact through max_q. Throws
// BudgetExceeded.
SingularComplex build_singular_complex(const DigitalImage& X, int max_q, std::size_t budget = kDefaultBudget);

// As above but stops at the first degree that exceeds the budget.
SingularComplex build_singular_complex_partial(const DigitalImage& X, int max_q,
                                               std::size_t budget = kDefaultBudget);

}  // namespace cubhom
