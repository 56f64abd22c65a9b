#include "cubhom/fixtures.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "cubhom/error.hpp"

namespace cubhom::fixtures {

DigitalImage box(const std::vector<Coord>& hi) { return box_minus(hi, {}); }

DigitalImage box_minus(const std::vector<Coord>& hi, const std::vector<Point>& holes) {
  const std::size_t n = hi.size();
  if (n == 0) fail(ErrorCode::DimensionMismatch, "box needs at least one axis");
  std::vector<Point> pts;
  std::vector<Coord> c(n, 0);
  while (true) {
    Point p(c);
    if (std::find(holes.begin(), holes.end(), p) == holes.end()) pts.push_back(std::move(p));
    std::size_t k = 0;
    while (k < n && ++c[k] > hi[k]) c[k++] = 0;
    if (k == n) break;
  }
  return DigitalImage(n, std::move(pts));
}

DigitalImage edge() { return box({1}); }
DigitalImage segment(Coord length) { return box({length}); }
DigitalImage unit_square() { return box({1, 1}); }
DigitalImage unit_cube() { return box({1, 1, 1}); }
DigitalImage ring() { return box_minus({2, 2}, {Point{1, 1}}); }
DigitalImage shell() { return box_minus({2, 2, 2}, {Point{1, 1, 1}}); }

DigitalImage l_shape() {
  return DigitalImage(2, {Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{0, 1}, Point{1, 1}, Point{0, 2}});
}

DigitalImage isolated_points(std::size_t d) {
  std::vector<Point> pts;
  for (std::size_t k = 0; k < d; ++k) pts.push_back(Point{2 * static_cast<Coord>(k), 0});
  return DigitalImage(2, std::move(pts));
}

DigitalImage cylinder_of(const DigitalImage& X) { return cylinder(X); }

DigitalImage intersection(const DigitalImage& A, const DigitalImage& B) {
  std::vector<Point> pts;
  for (const Point& p : A.points())
    if (B.contains(p)) pts.push_back(p);
  return DigitalImage(A.ambient_dim(), std::move(pts));
}

DigitalImage image_union(const DigitalImage& A, const DigitalImage& B) {
  std::vector<Point> pts = A.points();
  for (const Point& p : B.points())
    if (!A.contains(p)) pts.push_back(p);
  return DigitalImage(A.ambient_dim(), std::move(pts));
}

ExcisionTriple excision_triple() {
  std::vector<Point> hole;
  for (Coord x = 2; x <= 5; ++x)
    for (Coord y = 2; y <= 5; ++y) hole.push_back(Point{x, y});
  DigitalImage X = box_minus({7, 7}, hole);
  std::vector<Point> a, b;
  for (const Point& p : X.points()) {
    if (p[0] <= 5) a.push_back(p);
    if (p[0] >= 2) b.push_back(p);
  }
  return {X, DigitalImage(2, std::move(a)), DigitalImage(2, std::move(b)), 2};
}

std::vector<std::string> names() {
  return {"edge", "segment3", "unit_square", "unit_cube", "ring", "shell",
          "l_shape", "isolated1", "isolated3", "isolated5"};
}

std::optional<DigitalImage> by_name(const std::string& name) {
  if (name == "edge") return edge();
  if (name == "segment3") return segment(3);
  if (name == "unit_square") return unit_square();
  if (name == "unit_cube") return unit_cube();
  if (name == "ring") return ring();
  if (name == "shell") return shell();
  if (name == "l_shape") return l_shape();
  if (name == "isolated1") return isolated_points(1);
  if (name == "isolated3") return isolated_points(3);
  if (name == "isolated5") return isolated_points(5);
  return std::nullopt;
}

std::optional<PointMap> random_continuous_map(const DigitalImage& X, const DigitalImage& Y, std::mt19937_64& rng) {
  if (X.empty()) return PointMap(X, Y, std::vector<std::pair<Point, Point>>{});
  if (Y.empty()) return std::nullopt;

  // Breadth-first order keeps most assigned points next to earlier ones,
  // which prunes the search early.
  std::vector<std::size_t> order;
  std::vector<bool> seen(X.size(), false);
  for (std::size_t s = 0; s < X.size(); ++s) {
    if (seen[s]) continue;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      order.push_back(i);
      for (const Point& nb : X.neighbors(X.point(i))) {
        const std::size_t j = *X.index_of(nb);
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
  }

  std::vector<std::optional<std::size_t>> image(X.size());
  std::vector<std::size_t> use_count(Y.size(), 0);
  std::size_t nodes = 0;
  constexpr std::size_t kNodeCap = 200'000;

  std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    if (++nodes > kNodeCap) return false;
    const std::size_t i = order[pos];
    std::vector<std::size_t> candidates;
    std::optional<std::size_t> anchor;
    for (const Point& nb : X.neighbors(X.point(i))) {
      const auto& fi = image[*X.index_of(nb)];
      if (fi) {
        anchor = fi;
        break;
      }
    }
    if (anchor) {
      const Point& a = Y.point(*anchor);
      candidates.push_back(*anchor);
      for (const Point& p : Y.neighbors(a)) candidates.push_back(*Y.index_of(p));
    } else {
      for (std::size_t k = 0; k < Y.size(); ++k) candidates.push_back(k);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::stable_partition(candidates.begin(), candidates.end(), [&](std::size_t k) { return use_count[k] == 0; });
    for (std::size_t k : candidates) {
      bool ok = true;
      for (const Point& nb : X.neighbors(X.point(i))) {
        const auto& fj = image[*X.index_of(nb)];
        if (fj && !adjacent_or_equal(Y.point(k), Y.point(*fj))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[i] = k;
      ++use_count[k];
      if (assign(pos + 1)) return true;
      --use_count[k];
      image[i].reset();
    }
    return false;
  };

  std::vector<std::pair<Point, Point>> pairs;
  if (assign(0)) {
    for (std::size_t i = 0; i < X.size(); ++i) pairs.emplace_back(X.point(i), Y.point(*image[i]));
  } else {
    // Search cap hit: fall back to a constant map, which is always continuous.
    std::uniform_int_distribution<std::size_t> pick(0, Y.size() - 1);
    const Point& c = Y.point(pick(rng));
    for (const Point& x : X.points()) pairs.emplace_back(x, c);
  }
  return PointMap(X, Y, pairs);
}

}  // namespace cubhom::fixtures
