#include "cubhom/singular.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

#include "cubhom/error.hpp"

namespace cubhom {

SingularCube unchecked_cube(int q, std::vector<Point> corners) { return SingularCube(q, std::move(corners)); }

namespace {

std::uint32_t bit(int i) { return std::uint32_t{1} << (i - 1); }  // 1-based coordinate

int tuple_bit(std::uint32_t c, int i) { return static_cast<int>(c >> (i - 1) & 1u); }

std::uint32_t with_bit(std::uint32_t c, int i, int value) {
  return value ? (c | bit(i)) : (c & ~bit(i));
}

// Corner index of the face cube's corner c' inside I^q: insert t_i = side.
std::uint32_t lift_corner(std::uint32_t c, int i, Side side) {
  const std::uint32_t low = c & (bit(i) - 1);
  const std::uint32_t high = c >> (i - 1);
  return low | (side == Side::Back ? bit(i) : 0u) | (high << i);
}

void require_index(int idx, int q, const char* what) {
  if (idx < 1 || idx > q)
    fail(ErrorCode::IndexOutOfRange, std::string(what) + " index " + std::to_string(idx) +
                                         " outside 1.." + std::to_string(q));
}

}  // namespace

SingularCube SingularCube::make(std::vector<Point> corners) {
  const std::size_t n = corners.size();
  if (n == 0 || !std::has_single_bit(n)) fail(ErrorCode::PreconditionViolated, "corner count must be a power of two");
  const int q = std::countr_zero(n);
  const std::size_t dim = corners.front().dim();
  for (const Point& p : corners)
    if (p.dim() != dim) fail(ErrorCode::DimensionMismatch, "corner points of different lengths");
  for (std::uint32_t c = 0; c < n; ++c)
    for (int i = 1; i <= q; ++i) {
      const std::uint32_t d = c | bit(i);
      if (d == c) continue;
      if (!adjacent_or_equal(corners[c], corners[d]))
        fail(ErrorCode::NotContinuous,
             "corners " + std::to_string(c) + " and " + std::to_string(d) + " are neither equal nor adjacent");
    }
  return SingularCube(q, std::move(corners));
}

std::string SingularCube::to_string() const {
  std::string s = "[";
  for (std::size_t c = 0; c < corners_.size(); ++c) {
    if (c) s += " ";
    s += "(";
    for (std::size_t a = 0; a < corners_[c].dim(); ++a) {
      if (a) s += ",";
      s += std::to_string(corners_[c][a]);
    }
    s += ")";
  }
  return s + "]";
}

std::size_t SingularCubeHash::operator()(const SingularCube& s) const noexcept {
  std::size_t h = static_cast<std::size_t>(s.q());
  for (const Point& p : s.corners()) h = h * 1000003u ^ PointHash{}(p);
  return h;
}

bool is_degenerate(const SingularCube& s) {
  for (int i = 1; i <= s.q(); ++i) {
    bool independent = true;
    for (std::uint32_t c = 0; c < s.corner_count() && independent; ++c)
      if (!(c & bit(i)) && s.corner(c) != s.corner(c | bit(i))) independent = false;
    if (independent) return true;
  }
  return false;
}

bool is_injective(const SingularCube& s) {
  std::vector<Point> sorted = s.corners();
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::optional<ElementaryCube> image_cube(const SingularCube& s) {
  if (!is_injective(s)) return std::nullopt;
  auto Q = bounding_elementary_cube(s.corners());
  // 2^q distinct points inside a box of 2^dim points fill it exactly.
  if (!Q || Q->dimension() != s.q()) return std::nullopt;
  return Q;
}

bool is_embedding(const SingularCube& s) { return image_cube(s).has_value(); }

SingularCube face(const SingularCube& s, Side side, int i) {
  if (s.q() < 1 || i < 1 || i > s.q())
    fail(ErrorCode::NoSuchFace, "face " + std::to_string(i) + " of a " + std::to_string(s.q()) + "-cube");
  std::vector<Point> corners;
  corners.reserve(s.corner_count() / 2);
  for (std::uint32_t c = 0; c < s.corner_count() / 2; ++c) corners.push_back(s.corner(lift_corner(c, i, side)));
  return unchecked_cube(s.q() - 1, std::move(corners));
}

SingularChain boundary(const SingularCube& s) {
  if (s.q() < 1) fail(ErrorCode::NoSuchFace, "boundary of a 0-cube");
  SingularChain out(s.q() - 1);
  for (int i = 1; i <= s.q(); ++i) {
    const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
    SingularCube a = face(s, Side::Front, i);
    SingularCube b = face(s, Side::Back, i);
    if (!is_degenerate(a)) out.add(a, sign);
    if (!is_degenerate(b)) out.add(b, -sign);
  }
  return out;
}

std::string CubeOperator::to_string() const {
  switch (kind) {
    case Kind::Flip: return "F_" + std::to_string(j);
    case Kind::Swap: return "C_" + std::to_string(i) + "," + std::to_string(j);
    case Kind::Shift: return "S_" + std::to_string(i) + "," + std::to_string(j);
    case Kind::Rotate: return "R_" + std::to_string(i) + "," + std::to_string(j);
  }
  return "?";
}

std::uint32_t apply_to_corner(const CubeOperator& op, std::uint32_t c, int q) {
  require_index(op.j, q, "operator");
  if (op.kind != CubeOperator::Kind::Flip) require_index(op.i, q, "operator");
  const int i = op.i;
  const int j = op.j;
  switch (op.kind) {
    case CubeOperator::Kind::Flip:
      return c ^ bit(j);
    case CubeOperator::Kind::Swap: {
      std::uint32_t out = with_bit(c, i, tuple_bit(c, j));
      return with_bit(out, j, tuple_bit(c, i));
    }
    case CubeOperator::Kind::Shift: {
      std::uint32_t out = c;
      if (i < j) {
        // (.., t_{i-1}, t_j, t_i, ..., t_{j-1}, t_{j+1}, ..)
        out = with_bit(out, i, tuple_bit(c, j));
        for (int k = i + 1; k <= j; ++k) out = with_bit(out, k, tuple_bit(c, k - 1));
      } else if (i > j) {
        // (.., t_{j-1}, t_{j+1}, ..., t_i, t_j, t_{i+1}, ..)
        for (int k = j; k < i; ++k) out = with_bit(out, k, tuple_bit(c, k + 1));
        out = with_bit(out, i, tuple_bit(c, j));
      }
      return out;
    }
    case CubeOperator::Kind::Rotate:
      return apply_to_corner(CubeOperator::flip(j), apply_to_corner(CubeOperator::swap(i, j), c, q), q);
  }
  return c;
}

SingularCube apply_operator(const SingularCube& s, const CubeOperator& op) {
  std::vector<std::uint32_t> perm(s.corner_count());
  for (std::uint32_t c = 0; c < perm.size(); ++c) perm[c] = apply_to_corner(op, c, s.q());
  return precompose(s, perm);
}

SingularCube precompose(const SingularCube& s, std::span<const std::uint32_t> perm) {
  if (perm.size() != s.corner_count()) fail(ErrorCode::ShapeMismatch, "corner map of the wrong size");
  std::vector<Point> corners;
  corners.reserve(perm.size());
  for (std::uint32_t c : perm) {
    if (c >= s.corner_count()) fail(ErrorCode::IndexOutOfRange, "corner index");
    corners.push_back(s.corner(c));
  }
  return unchecked_cube(s.q(), std::move(corners));
}

bool compatible(const SingularCube& s, const SingularCube& g) {
  if (s.q() != g.q() || s.ambient_dim() != g.ambient_dim()) return false;
  for (std::uint32_t c = 0; c < s.corner_count(); ++c)
    if (!adjacent_or_equal(s.corner(c), g.corner(c))) return false;
  return true;
}

SingularCube append(const SingularCube& s, const SingularCube& g) {
  if (s.q() != g.q() || s.ambient_dim() != g.ambient_dim())
    fail(ErrorCode::NotCompatible, "cubes of different shape");
  if (!compatible(s, g)) fail(ErrorCode::NotCompatible, s.to_string() + " and " + g.to_string());
  std::vector<Point> corners = s.corners();
  corners.insert(corners.end(), g.corners().begin(), g.corners().end());
  return unchecked_cube(s.q() + 1, std::move(corners));
}

namespace {

int degree_memo(const SingularCube& s, std::unordered_map<SingularCube, int, SingularCubeHash>& memo) {
  if (s.q() == 0 || is_injective(s)) return s.q();
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  int best = 0;
  for (int i = 1; i <= s.q() && best < s.q() - 1; ++i)
    for (Side side : {Side::Front, Side::Back}) best = std::max(best, degree_memo(face(s, side, i), memo));
  memo.emplace(s, best);
  return best;
}

}  // namespace

int degree_of_injectivity(const SingularCube& s) {
  std::unordered_map<SingularCube, int, SingularCubeHash> memo;
  return degree_memo(s, memo);
}

const char* cube_type_name(CubeType t) {
  switch (t) {
    case CubeType::Type1: return "Type1";
    case CubeType::Type2: return "Type2";
    case CubeType::Type3: return "Type3";
  }
  return "?";
}

CubeClass classify(const SingularCube& s) {
  if (s.q() < 2) fail(ErrorCode::PreconditionViolated, "classification needs q >= 2");
  if (is_degenerate(s)) fail(ErrorCode::PreconditionViolated, "cube is degenerate");
  if (degree_of_injectivity(s) != s.q() - 1)
    fail(ErrorCode::PreconditionViolated, "cube does not have degree q-1");

  std::vector<int> coords;  // coordinate of each injective face
  for (int i = 1; i <= s.q(); ++i)
    for (Side side : {Side::Front, Side::Back})
      if (is_injective(face(s, side, i))) coords.push_back(i);

  if (coords.size() == 4 && coords[0] == coords[1] && coords[2] == coords[3] && coords[0] != coords[2])
    return {CubeType::Type1, coords[0], coords[2]};
  if (coords.size() == 2 && coords[0] != coords[1]) return {CubeType::Type2, coords[0], coords[1]};
  if (coords.size() == 2) return {CubeType::Type3, coords[0], 0};
  fail(ErrorCode::UnclassifiableCube, s.to_string() + " has " + std::to_string(coords.size()) + " injective faces");
}

OrientationData orientation(const SingularCube& s) {
  if (!is_injective(s)) fail(ErrorCode::NotInjective, s.to_string());
  OrientationData out;
  const Point& base = s.corner(0);
  for (int i = 1; i <= s.q(); ++i) {
    const Point& tip = s.corner(bit(i));
    for (std::size_t a = 0; a < base.dim(); ++a) {
      if (tip[a] == base[a]) continue;
      out.axes.push_back(a);
      out.edge_signs.push_back(tip[a] > base[a] ? 1 : -1);
      break;
    }
  }
  // det of a signed permutation matrix: parity of the axis order times the
  // product of the column signs.
  int sign = 1;
  for (std::size_t x = 0; x < out.axes.size(); ++x)
    for (std::size_t y = x + 1; y < out.axes.size(); ++y)
      if (out.axes[x] > out.axes[y]) sign = -sign;
  for (int e : out.edge_signs) sign *= e;
  out.o = sign;
  return out;
}

// --- enumeration --------------------------------------------------------

namespace {

class TableEnumerator {
 public:
  TableEnumerator(const DigitalImage& X, int q, std::size_t budget)
      : X_(X), q_(q), budget_(budget), corners_(std::size_t{1} << q), table_(corners_) {
    closed_.resize(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) {
      auto& nb = closed_[i];
      nb.push_back(static_cast<std::uint32_t>(i));
      for (const Point& p : X.neighbors(X.point(i))) nb.push_back(static_cast<std::uint32_t>(*X.index_of(p)));
      std::sort(nb.begin(), nb.end());
    }
  }

  void run(const std::function<void(std::span<const std::uint32_t>)>& emit) {
    emit_ = &emit;
    if (!X_.empty()) place(0);
  }

 private:
  bool near(std::uint32_t a, std::uint32_t b) const {
    const auto& nb = closed_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  bool degenerate() const {
    for (std::size_t b = 0; b < static_cast<std::size_t>(q_); ++b) {
      const std::size_t m = std::size_t{1} << b;
      bool independent = true;
      for (std::size_t c = 0; c < corners_ && independent; ++c)
        if (!(c & m) && table_[c] != table_[c | m]) independent = false;
      if (independent) return true;
    }
    return false;
  }

  void place(std::size_t c) {
    if (c == corners_) {
      if (++visited_ > budget_) throw BudgetExceeded(q_, visited_);
      if (!degenerate()) (*emit_)(table_);
      return;
    }
    if (c == 0) {
      for (std::uint32_t p = 0; p < X_.size(); ++p) {
        table_[0] = p;
        place(1);
      }
      return;
    }
    const std::size_t low = c & (~c + 1);
    const std::uint32_t anchor = table_[c ^ low];
    for (std::uint32_t cand : closed_[anchor]) {
      bool ok = true;
      for (std::size_t m = low << 1; m <= c && ok; m <<= 1)
        if ((c & m) && !near(cand, table_[c ^ m])) ok = false;
      if (!ok) continue;
      table_[c] = cand;
      place(c + 1);
    }
  }

  const DigitalImage& X_;
  int q_;
  std::size_t budget_;
  std::size_t corners_;
  std::vector<std::uint32_t> table_;
  std::vector<std::vector<std::uint32_t>> closed_;
  std::size_t visited_ = 0;
  const std::function<void(std::span<const std::uint32_t>)>* emit_ = nullptr;
};

CubeTable enumerate_table(const DigitalImage& X, int q, std::size_t budget) {
  if (budget == 0) fail(ErrorCode::PreconditionViolated, "budget must be positive");
  if (q < 0) fail(ErrorCode::PreconditionViolated, "negative cube degree");
  if (q > 20) fail(ErrorCode::PreconditionViolated, "cube degree too large to tabulate");
  CubeTable out(q);
  TableEnumerator(X, q, budget).run([&](std::span<const std::uint32_t> row) { out.push(row); });
  return out;
}

bool row_degenerate(std::span<const std::uint32_t> row, int q) {
  for (int i = 1; i <= q; ++i) {
    bool independent = true;
    for (std::uint32_t c = 0; c < row.size() && independent; ++c)
      if (!(c & bit(i)) && row[c] != row[c | bit(i)]) independent = false;
    if (independent) return true;
  }
  return false;
}

}  // namespace

std::optional<std::size_t> CubeTable::find(std::span<const std::uint32_t> r) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto m = row(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), r.begin(), r.end())) lo = mid + 1;
    else hi = mid;
  }
  if (lo < size()) {
    auto m = row(lo);
    if (std::equal(m.begin(), m.end(), r.begin(), r.end())) return lo;
  }
  return std::nullopt;
}

std::vector<SingularCube> enumerate_singular_cubes(const DigitalImage& X, int q, std::size_t budget) {
  CubeTable t = enumerate_table(X, q, budget);
  std::vector<SingularCube> out;
  out.reserve(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::vector<Point> corners;
    for (std::uint32_t idx : t.row(k)) corners.push_back(X.point(idx));
    out.push_back(unchecked_cube(q, std::move(corners)));
  }
  return out;
}

int SingularComplex::reliable_degree() const noexcept {
  if (!failure_) return requested_;
  const int built = static_cast<int>(tables_.size());
  return std::min(requested_, built - 2);
}

SingularCube SingularComplex::cube(int q, std::size_t k) const {
  std::vector<Point> corners;
  for (std::uint32_t idx : table(q).row(k)) corners.push_back(image_.point(idx));
  return unchecked_cube(q, std::move(corners));
}

std::vector<FGAbelianGroup> SingularComplex::homology() const {
  const int reliable = reliable_degree();
  if (reliable < 0) return {};
  auto groups = cubhom::homology(complex_);
  groups.resize(static_cast<std::size_t>(reliable) + 1);
  return groups;
}

SingularComplex build_singular_complex_partial(const DigitalImage& X, int max_q, std::size_t budget) {
  if (max_q < 0) fail(ErrorCode::PreconditionViolated, "max_q must be nonnegative");
  SingularComplex out(X);
  out.requested_ = max_q;
  for (int q = 0; q <= max_q + 1; ++q) {
    try {
      out.tables_.push_back(enumerate_table(X, q, budget));
    } catch (const BudgetExceeded& e) {
      out.failure_ = e;
      break;
    }
  }
  if (out.tables_.empty()) return out;

  std::vector<std::size_t> sizes;
  for (const CubeTable& t : out.tables_) sizes.push_back(t.size());
  std::vector<SparseMatrix> boundaries;
  std::vector<std::uint32_t> face_row;
  for (std::size_t q = 1; q < out.tables_.size(); ++q) {
    const CubeTable& cubes = out.tables_[q];
    const CubeTable& faces = out.tables_[q - 1];
    const int qi = static_cast<int>(q);
    SparseMatrix d(faces.size(), 0);
    face_row.resize(std::size_t{1} << (q - 1));
    for (std::size_t k = 0; k < cubes.size(); ++k) {
      auto row = cubes.row(k);
      SparseColumn col;
      for (int i = 1; i <= qi; ++i) {
        const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
        for (Side side : {Side::Front, Side::Back}) {
          for (std::uint32_t c = 0; c < face_row.size(); ++c) face_row[c] = row[lift_corner(c, i, side)];
          if (row_degenerate(face_row, qi - 1)) continue;
          auto pos = faces.find(face_row);
          if (!pos) fail(ErrorCode::InternalInvariant, "face of an enumerated cube is missing");
          col.push_back({static_cast<std::uint32_t>(*pos), side == Side::Front ? sign : -sign});
        }
      }
      d.push_column(std::move(col));
    }
    boundaries.push_back(std::move(d));
  }
  out.complex_ = ChainComplex(std::move(sizes), std::move(boundaries));
  return out;
}

SingularComplex build_singular_complex(const DigitalImage& X, int max_q, std::size_t budget) {
  SingularComplex out = build_singular_complex_partial(X, max_q, budget);
  if (auto f = out.budget_failure()) throw *f;
  return out;
}

}  // namespace cubhom
