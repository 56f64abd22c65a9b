#include "cubhom/image.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>

#include "cubhom/checked.hpp"
#include "cubhom/error.hpp"

namespace cubhom {

namespace {

void require_same_dim(const Point& x, const Point& y) {
  if (x.dim() != y.dim())
    fail(ErrorCode::DimensionMismatch,
         "points of length " + std::to_string(x.dim()) + " and " + std::to_string(y.dim()));
}

// Sum of |x_i - y_i|, saturating at 2 since callers only distinguish 0, 1, >1.
int l1_distance_capped(const Point& x, const Point& y) {
  require_same_dim(x, y);
  int total = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] == y[i]) continue;
    Coord d = abs_value(sub(x[i], y[i]));
    if (d > 1) return 2;
    if (++total > 1) return 2;
  }
  return total;
}

std::string describe(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace

Point Point::shifted(std::size_t axis, Coord delta) const {
  Point out = *this;
  out.coords_.at(axis) = add(out.coords_[axis], delta);
  return out;
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (Coord c : p.coords()) {
    h ^= std::hash<Coord>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool adjacent(const Point& x, const Point& y) { return l1_distance_capped(x, y) == 1; }

bool adjacent_or_equal(const Point& x, const Point& y) { return l1_distance_capped(x, y) <= 1; }

DigitalImage::DigitalImage(std::size_t ambient_dim, std::vector<Point> points)
    : dim_(ambient_dim), points_(std::move(points)) {
  if (dim_ == 0) fail(ErrorCode::DimensionMismatch, "ambient dimension must be positive");
  for (const Point& p : points_) {
    if (p.dim() != dim_)
      fail(ErrorCode::DimensionMismatch,
           "point " + describe(p) + " in a " + std::to_string(dim_) + "-dimensional image");
  }
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) fail(ErrorCode::DuplicatePoint, describe(*dup));
  index_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], i);
}

bool DigitalImage::contains(const Point& p) const { return index_.count(p) != 0; }

std::optional<std::size_t> DigitalImage::index_of(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Point> DigitalImage::neighbors(const Point& p) const {
  if (p.dim() != dim_) fail(ErrorCode::DimensionMismatch, describe(p));
  std::vector<Point> out;
  for (std::size_t axis = 0; axis < dim_; ++axis) {
    for (Coord delta : {Coord{-1}, Coord{1}}) {
      Point q = p.shifted(axis, delta);
      if (contains(q)) out.push_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DigitalImage::is_subset_of(const DigitalImage& other) const {
  if (dim_ != other.dim_) return false;
  return std::all_of(points_.begin(), points_.end(),
                     [&](const Point& p) { return other.contains(p); });
}

namespace {

std::vector<Point> common_neighborhood(const DigitalImage& X, std::span<const Point> xs,
                                       bool closed) {
  if (xs.empty()) fail(ErrorCode::PreconditionViolated, "neighbourhood of an empty point set");
  for (const Point& x : xs) {
    if (x.dim() != X.ambient_dim()) fail(ErrorCode::DimensionMismatch, describe(x));
    if (!X.contains(x)) fail(ErrorCode::PointNotInImage, describe(x));
  }
  std::vector<Point> candidates = X.neighbors(xs[0]);
  if (closed) candidates.push_back(xs[0]);
  std::vector<Point> out;
  for (const Point& c : candidates) {
    bool ok = std::all_of(xs.begin(), xs.end(), [&](const Point& x) {
      return closed ? adjacent_or_equal(c, x) : adjacent(c, x);
    });
    if (ok) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Point> closed_neighborhood(const DigitalImage& X, std::span<const Point> xs) {
  return common_neighborhood(X, xs, true);
}

std::vector<Point> open_neighborhood(const DigitalImage& X, std::span<const Point> xs) {
  return common_neighborhood(X, xs, false);
}

std::vector<std::vector<Point>> components(const DigitalImage& X) {
  std::vector<std::vector<Point>> blocks;
  std::vector<bool> seen(X.size(), false);
  for (std::size_t start = 0; start < X.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> block;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      block.push_back(X.point(i));
      for (const Point& n : X.neighbors(X.point(i))) {
        std::size_t j = *X.index_of(n);
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

PointMap::PointMap(DigitalImage domain, DigitalImage codomain, std::vector<Point> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {}

PointMap::PointMap(DigitalImage domain, DigitalImage codomain,
                   const std::vector<std::pair<Point, Point>>& pairs)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  std::vector<std::optional<Point>> table(domain_.size());
  for (const auto& [x, y] : pairs) {
    auto i = domain_.index_of(x);
    if (!i) fail(ErrorCode::PointNotInImage, "map source " + describe(x) + " not in domain");
    if (!codomain_.contains(y))
      fail(ErrorCode::PointNotInImage, "map target " + describe(y) + " not in codomain");
    if (table[*i] && *table[*i] != y)
      fail(ErrorCode::PreconditionViolated, "conflicting images for " + describe(x));
    table[*i] = y;
  }
  images_.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) fail(ErrorCode::MapNotTotal, "no image for " + describe(domain_.point(i)));
    images_.push_back(std::move(*table[i]));
  }
}

PointMap PointMap::identity(const DigitalImage& X) { return PointMap(X, X, X.points()); }

const Point& PointMap::operator()(const Point& x) const {
  auto i = domain_.index_of(x);
  if (!i) fail(ErrorCode::PointNotInImage, describe(x));
  return images_[*i];
}

std::vector<std::pair<Point, Point>> PointMap::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t i = 0; i < images_.size(); ++i) out.emplace_back(domain_.point(i), images_[i]);
  return out;
}

PointMap compose(const PointMap& g, const PointMap& f) {
  if (!(f.codomain() == g.domain()))
    fail(ErrorCode::PreconditionViolated, "composition of maps with mismatched images");
  std::vector<Point> images;
  images.reserve(f.domain().size());
  for (std::size_t i = 0; i < f.domain().size(); ++i) images.push_back(g(f.at_index(i)));
  return PointMap(f.domain(), g.codomain(), std::move(images));
}

bool is_continuous(const PointMap& f) {
  const DigitalImage& X = f.domain();
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (const Point& n : X.neighbors(X.point(i))) {
      std::size_t j = *X.index_of(n);
      if (j < i) continue;
      if (!adjacent_or_equal(f.at_index(i), f.at_index(j))) return false;
    }
  }
  return true;
}

HomotopyTable::HomotopyTable(DigitalImage domain, DigitalImage codomain, std::size_t steps,
                             std::vector<std::vector<Point>> table)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      steps_(steps),
      table_(std::move(table)) {
  if (table_.size() != steps_ + 1)
    fail(ErrorCode::MapNotTotal, "homotopy table needs steps+1 time slices");
  for (const auto& slice : table_) {
    if (slice.size() != domain_.size())
      fail(ErrorCode::MapNotTotal, "homotopy slice is not total on the domain");
    for (const Point& y : slice)
      if (!codomain_.contains(y)) fail(ErrorCode::PointNotInImage, describe(y));
  }
}

bool is_homotopy(const HomotopyTable& H, const PointMap& f, const PointMap& g) {
  const DigitalImage& X = H.domain();
  if (!(f.domain() == X) || !(g.domain() == X)) return false;
  const std::size_t k = H.steps();
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (H.at(i, 0) != f.at_index(i) || H.at(i, k) != g.at_index(i)) return false;
    for (std::size_t t = 0; t < k; ++t)
      if (!adjacent_or_equal(H.at(i, t), H.at(i, t + 1))) return false;
  }
  for (std::size_t t = 0; t <= k; ++t) {
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (const Point& n : X.neighbors(X.point(i))) {
        std::size_t j = *X.index_of(n);
        if (j > i && !adjacent_or_equal(H.at(i, t), H.at(j, t))) return false;
      }
    }
  }
  return true;
}

DigitalImage interior(const DigitalImage& X, const DigitalImage& A, std::size_t iterations) {
  if (!A.is_subset_of(X)) fail(ErrorCode::NotSubset, "A is not contained in X");
  DigitalImage current = A;
  for (std::size_t it = 0; it < iterations; ++it) {
    std::vector<Point> kept;
    for (const Point& x : current.points()) {
      auto nbrs = X.neighbors(x);
      if (std::all_of(nbrs.begin(), nbrs.end(), [&](const Point& y) { return current.contains(y); }))
        kept.push_back(x);
    }
    if (kept.size() == current.size()) break;
    current = DigitalImage(X.ambient_dim(), std::move(kept));
  }
  return current;
}

DigitalImage cylinder(const DigitalImage& X) {
  std::vector<Point> pts;
  pts.reserve(2 * X.size());
  for (Coord level : {Coord{0}, Coord{1}}) {
    for (const Point& p : X.points()) {
      std::vector<Coord> c = p.coords();
      c.push_back(level);
      pts.emplace_back(std::move(c));
    }
  }
  return DigitalImage(X.ambient_dim() + 1, std::move(pts));
}

}  // namespace cubhom
