#include "cubhom/elementary.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "cubhom/checked.hpp"
#include "cubhom/error.hpp"

namespace cubhom {

namespace {

constexpr std::size_t kMaxAxes = 64;

std::uint64_t axis_bit(std::size_t axis) { return std::uint64_t{1} << axis; }

// Determinant by fraction-free elimination; exact for integer input.
std::int64_t bareiss_determinant(DenseMatrix<std::int64_t> m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = quot(sub(mul(m(i, j), m(k, k)), mul(m(i, k), m(k, j))), prev);
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void for_each_axis_subset(std::size_t n, int q, const std::function<void(std::uint64_t)>& fn) {
  std::function<void(std::size_t, int, std::uint64_t)> rec = [&](std::size_t from, int left, std::uint64_t mask) {
    if (left == 0) {
      fn(mask);
      return;
    }
    for (std::size_t a = from; a + static_cast<std::size_t>(left) <= n; ++a) rec(a + 1, left - 1, mask | axis_bit(a));
  };
  rec(0, q, 0);
}

}  // namespace

int ElementaryCube::dimension() const noexcept { return std::popcount(extent); }

std::vector<std::size_t> ElementaryCube::axes() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < kMaxAxes; ++a)
    if (extent & axis_bit(a)) out.push_back(a);
  return out;
}

std::vector<Point> ElementaryCube::vertices() const {
  const auto ax = axes();
  std::vector<Point> out;
  out.reserve(std::size_t{1} << ax.size());
  for (std::size_t c = 0; c < (std::size_t{1} << ax.size()); ++c) {
    Point p = min_corner;
    for (std::size_t b = 0; b < ax.size(); ++b)
      if (c >> b & 1) p = p.shifted(ax[b], 1);
    out.push_back(std::move(p));
  }
  return out;
}

bool ElementaryCube::contains(const Point& p) const {
  if (p.dim() != min_corner.dim()) return false;
  for (std::size_t a = 0; a < p.dim(); ++a) {
    if (p[a] == min_corner[a]) continue;
    if ((extent & axis_bit(a)) && p[a] == min_corner[a] + 1) continue;
    return false;
  }
  return true;
}

bool operator<(const ElementaryCube& a, const ElementaryCube& b) {
  if (a.min_corner != b.min_corner) return a.min_corner < b.min_corner;
  return a.axes() < b.axes();
}

std::size_t ElementaryCubeHash::operator()(const ElementaryCube& Q) const noexcept {
  return PointHash{}(Q.min_corner) * 31 + std::hash<std::uint64_t>{}(Q.extent);
}

std::optional<ElementaryCube> bounding_elementary_cube(const std::vector<Point>& points) {
  if (points.empty()) return std::nullopt;
  const std::size_t n = points.front().dim();
  if (n > kMaxAxes) fail(ErrorCode::DimensionMismatch, "ambient dimension above 64");
  ElementaryCube Q;
  std::vector<Coord> lo = points.front().coords();
  std::vector<Coord> hi = lo;
  for (const Point& p : points) {
    if (p.dim() != n) fail(ErrorCode::DimensionMismatch, "mixed point lengths");
    for (std::size_t a = 0; a < n; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    Coord span = sub(hi[a], lo[a]);
    if (span > 1) return std::nullopt;
    if (span == 1) Q.extent |= axis_bit(a);
  }
  Q.min_corner = Point(std::move(lo));
  return Q;
}

std::vector<ElementaryCube> enumerate_elementary_cubes(const DigitalImage& X, int q) {
  const std::size_t n = X.ambient_dim();
  if (n > kMaxAxes) fail(ErrorCode::DimensionMismatch, "ambient dimension above 64");
  std::vector<ElementaryCube> out;
  if (q < 0 || static_cast<std::size_t>(q) > n) return out;
  for (const Point& p : X.points()) {
    for_each_axis_subset(n, q, [&](std::uint64_t mask) {
      ElementaryCube Q{p, mask};
      for (const Point& v : Q.vertices())
        if (!X.contains(v)) return;
      out.push_back(std::move(Q));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<ElementaryCube, ElementaryCube> c1_faces(const ElementaryCube& Q, int i) {
  const auto ax = Q.axes();
  if (i < 1 || static_cast<std::size_t>(i) > ax.size())
    fail(ErrorCode::NoSuchFace, "face " + std::to_string(i) + " of a " + std::to_string(ax.size()) + "-cube");
  const std::size_t axis = ax[static_cast<std::size_t>(i - 1)];
  ElementaryCube front{Q.min_corner, Q.extent & ~axis_bit(axis)};
  ElementaryCube back{Q.min_corner.shifted(axis, 1), front.extent};
  return {std::move(front), std::move(back)};
}

Chain<ElementaryCube> c1_boundary(const ElementaryCube& Q) {
  const int q = Q.dimension();
  Chain<ElementaryCube> out(q - 1);
  for (int i = 1; i <= q; ++i) {
    auto [front, back] = c1_faces(Q, i);
    const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
    out.add(front, sign);
    out.add(back, -sign);
  }
  return out;
}

int dimension(const DigitalImage& X) {
  if (X.empty()) fail(ErrorCode::EmptyImage, "dimension of an empty image");
  int d = 0;
  while (static_cast<std::size_t>(d) < X.ambient_dim() && !enumerate_elementary_cubes(X, d + 1).empty()) ++d;
  return d;
}

const std::vector<ElementaryCube>& C1Complex::cubes(int q) const {
  static const std::vector<ElementaryCube> none;
  if (q < 0 || q > max_degree()) return none;
  return cubes_[static_cast<std::size_t>(q)];
}

std::optional<std::size_t> C1Complex::index_of(const ElementaryCube& Q) const {
  const int q = Q.dimension();
  if (q > max_degree()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(q)];
  auto it = idx.find(Q);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

C1Complex build_c1_complex(const DigitalImage& X, std::optional<int> max_dim) {
  int top = max_dim ? *max_dim : (X.empty() ? 0 : dimension(X));
  if (top < 0) fail(ErrorCode::PreconditionViolated, "max_dim must be nonnegative");
  C1Complex out(X);
  std::vector<std::size_t> sizes;
  for (int q = 0; q <= top; ++q) {
    out.cubes_.push_back(enumerate_elementary_cubes(X, q));
    auto& idx = out.index_.emplace_back();
    const auto& cubes = out.cubes_.back();
    for (std::size_t i = 0; i < cubes.size(); ++i) idx.emplace(cubes[i], i);
    sizes.push_back(cubes.size());
  }
  std::vector<SparseMatrix> boundaries;
  for (int q = 1; q <= top; ++q) {
    const auto& rows = out.index_[static_cast<std::size_t>(q - 1)];
    SparseMatrix d(sizes[static_cast<std::size_t>(q - 1)], 0);
    for (const ElementaryCube& Q : out.cubes_[static_cast<std::size_t>(q)]) {
      SparseColumn col;
      const auto chain = c1_boundary(Q);
      for (const auto& [face, c] : chain.terms())
        col.push_back({static_cast<std::uint32_t>(rows.at(face)), c});
      d.push_column(std::move(col));
    }
    boundaries.push_back(std::move(d));
  }
  out.complex_ = ChainComplex(std::move(sizes), std::move(boundaries));
  return out;
}

std::vector<FGAbelianGroup> c1_homology(const DigitalImage& X, std::optional<int> max_dim) {
  // One extra degree so that the top requested group sees im ∂_{top+1}.
  const int top = max_dim ? *max_dim : (X.empty() ? 0 : dimension(X));
  auto groups = homology(build_c1_complex(X, top + 1).complex());
  groups.resize(static_cast<std::size_t>(top) + 1);
  return groups;
}

ChainComplex relative_c1_complex(const C1Complex& X, const DigitalImage& A) {
  if (!A.is_subset_of(X.image())) fail(ErrorCode::NotSubset, "relative subset is not contained in the image");
  SubBasis sub;
  for (int q = 0; q <= X.max_degree(); ++q) {
    std::vector<bool> mask;
    for (const ElementaryCube& Q : X.cubes(q)) {
      const auto verts = Q.vertices();
      mask.push_back(std::all_of(verts.begin(), verts.end(), [&](const Point& v) { return A.contains(v); }));
    }
    sub.push_back(std::move(mask));
  }
  return quotient_complex(X.complex(), sub);
}

std::vector<FGAbelianGroup> relative_c1_homology(const DigitalImage& X, const DigitalImage& A,
                                                 std::optional<int> max_dim) {
  const int top = max_dim ? *max_dim : (X.empty() ? 0 : dimension(X));
  auto groups = homology(relative_c1_complex(build_c1_complex(X, top + 1), A));
  groups.resize(static_cast<std::size_t>(top) + 1);
  return groups;
}

SparseMatrix induced_map(const PointMap& f, const C1Complex& X, const C1Complex& Y, int q) {
  if (!(f.domain() == X.image()) || !(f.codomain() == Y.image()))
    fail(ErrorCode::ShapeMismatch, "map does not match the complexes");
  if (!is_continuous(f)) fail(ErrorCode::NotContinuous, "induced map of a discontinuous function");
  const auto& src = X.cubes(q);
  SparseMatrix out(Y.cubes(q).size(), 0);
  for (const ElementaryCube& Q : src) {
    std::vector<Point> images;
    for (const Point& v : Q.vertices()) images.push_back(f(v));
    std::vector<Point> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.push_column({});
      continue;
    }
    auto target = bounding_elementary_cube(images);
    if (!target || target->dimension() != q)
      fail(ErrorCode::InternalInvariant, "injective image of an elementary cube is not elementary");
    auto row = Y.index_of(*target);
    if (!row) fail(ErrorCode::ShapeMismatch, "image cube missing from the target complex");

    // Linear part of f on Q: column i is f(m + e_{k_i}) - f(m), restricted to
    // the nondegenerate axes of f(Q).
    const auto rows = target->axes();
    DenseMatrix<std::int64_t> M(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Point& tip = images[std::size_t{1} << i];
      for (std::size_t r = 0; r < rows.size(); ++r) M(r, i) = sub(tip[rows[r]], images[0][rows[r]]);
    }
    out.push_column({{static_cast<std::uint32_t>(*row), bareiss_determinant(std::move(M))}});
  }
  return out;
}

std::vector<SparseMatrix> induced_chain_map(const PointMap& f, const C1Complex& X, const C1Complex& Y) {
  std::vector<SparseMatrix> out;
  for (int q = 0; q <= X.max_degree(); ++q) out.push_back(induced_map(f, X, Y, q));
  return out;
}

}  // namespace cubhom
