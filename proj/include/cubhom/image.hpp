#pragma once

// Digital images in Z^n under c1-adjacency: two points are adjacent iff they
// differ by exactly 1 in exactly one coordinate.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace cubhom {

using Coord = std::int64_t;

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Coord> coords) : coords_(coords) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Coord>& coords() const noexcept { return coords_; }

  // Copy with coordinate `axis` moved by `delta`; overflow is an error.
  Point shifted(std::size_t axis, Coord delta) const;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Coord> coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

bool adjacent(const Point& x, const Point& y);
bool adjacent_or_equal(const Point& x, const Point& y);

class DigitalImage {
 public:
  explicit DigitalImage(std::size_t ambient_dim, std::vector<Point> points = {});

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  // Lexicographically sorted; indices into this vector are stable.
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& point(std::size_t index) const { return points_[index]; }

  bool contains(const Point& p) const;
  std::optional<std::size_t> index_of(const Point& p) const;

  // Points of the image adjacent to p (p itself need not be in the image).
  std::vector<Point> neighbors(const Point& p) const;

  bool is_subset_of(const DigitalImage& other) const;

  friend bool operator==(const DigitalImage& a, const DigitalImage& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  std::size_t dim_;
  std::vector<Point> points_;
  std::unordered_map<Point, std::size_t, PointHash> index_;
};

// Common closed (open) c1-neighbourhood of the points xs within X, returned
// sorted.
std::vector<Point> closed_neighborhood(const DigitalImage& X, std::span<const Point> xs);
std::vector<Point> open_neighborhood(const DigitalImage& X, std::span<const Point> xs);

// Maximal c1-connected subsets; blocks sorted internally and by first point.
std::vector<std::vector<Point>> components(const DigitalImage& X);

// Explicit finite map between two images.
class PointMap {
 public:
  PointMap(DigitalImage domain, DigitalImage codomain,
           const std::vector<std::pair<Point, Point>>& pairs);

  static PointMap identity(const DigitalImage& X);

  const DigitalImage& domain() const noexcept { return domain_; }
  const DigitalImage& codomain() const noexcept { return codomain_; }

  const Point& operator()(const Point& x) const;
  const Point& at_index(std::size_t domain_index) const { return images_[domain_index]; }

  std::vector<std::pair<Point, Point>> pairs() const;

 private:
  PointMap(DigitalImage domain, DigitalImage codomain, std::vector<Point> images);
  friend PointMap compose(const PointMap& g, const PointMap& f);

  DigitalImage domain_;
  DigitalImage codomain_;
  std::vector<Point> images_;
};

// g ∘ f; requires f.codomain() == g.domain().
PointMap compose(const PointMap& g, const PointMap& f);

bool is_continuous(const PointMap& f);

// H(x, t) for t in [0, steps], stored per time step in domain point order.
class HomotopyTable {
 public:
  HomotopyTable(DigitalImage domain, DigitalImage codomain, std::size_t steps,
                std::vector<std::vector<Point>> table);

  const DigitalImage& domain() const noexcept { return domain_; }
  const DigitalImage& codomain() const noexcept { return codomain_; }
  std::size_t steps() const noexcept { return steps_; }
  const Point& at(std::size_t domain_index, std::size_t t) const { return table_[t][domain_index]; }

 private:
  DigitalImage domain_;
  DigitalImage codomain_;
  std::size_t steps_;
  std::vector<std::vector<Point>> table_;
};

bool is_homotopy(const HomotopyTable& H, const PointMap& f, const PointMap& g);

// Int^i(A) = points of A whose closed neighbourhood in X stays inside A,
// iterated i times.
DigitalImage interior(const DigitalImage& X, const DigitalImage& A, std::size_t iterations = 1);

// X × [0,1]_Z embedded in Z^{n+1}.
DigitalImage cylinder(const DigitalImage& X);

}  // namespace cubhom
