#include "cubhom/suites.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "cubhom/bridge.hpp"
#include "cubhom/elementary.hpp"
#include "cubhom/error.hpp"
#include "cubhom/fixtures.hpp"
#include "cubhom/snf.hpp"

namespace cubhom {

namespace {

using Perm = std::vector<std::uint32_t>;

struct Named {
  std::string name;
  DigitalImage X;
  int max_q;
};

std::vector<Named> low_degree_fixtures() {
  return {{"edge", fixtures::edge(), 3},          {"segment3", fixtures::segment(3), 3},
          {"unit_square", fixtures::unit_square(), 3}, {"ring", fixtures::ring(), 3},
          {"l_shape", fixtures::l_shape(), 3},     {"unit_cube", fixtures::unit_cube(), 3},
          {"shell", fixtures::shell(), 3}};
}

// Enumerates or records the budget failure in the result.
std::optional<std::vector<SingularCube>> enumerate_or_record(SuiteResult& r, const Named& f, int q,
                                                             std::size_t budget) {
  try {
    return enumerate_singular_cubes(f.X, q, budget);
  } catch (const BudgetExceeded& e) {
    r.check(false, [&] { return f.name + ": " + e.what(); });
    return std::nullopt;
  }
}

std::string where(const std::string& fixture, const SingularCube& s) { return fixture + " " + s.to_string(); }

Perm operator_perm(const CubeOperator& op, int q) {
  Perm p(std::size_t{1} << q);
  for (std::uint32_t c = 0; c < p.size(); ++c) p[c] = apply_to_corner(op, c, q);
  return p;
}

// (a ∘ b)(c) = a(b(c))
Perm compose_perm(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t c = 0; c < b.size(); ++c) out[c] = a[b[c]];
  return out;
}

Perm identity_perm(int q) {
  Perm p(std::size_t{1} << q);
  for (std::uint32_t c = 0; c < p.size(); ++c) p[c] = c;
  return p;
}

BigInt bareiss_det(DenseMatrix<BigInt> m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<SignedCube> negated(std::optional<SignedCube> b, int sign) {
  if (b) b->sign *= sign;
  return b;
}

// Corner index of a vertex of I^q = {0,1}^q.
std::uint32_t unit_corner(const Point& p) {
  std::uint32_t c = 0;
  for (std::size_t a = 0; a < p.dim(); ++a) c |= static_cast<std::uint32_t>(p[a]) << a;
  return c;
}

std::vector<SingularCube> injective_self_maps(int q) {
  auto all = enumerate_singular_cubes(fixtures::box(std::vector<Coord>(static_cast<std::size_t>(q), 1)), q);
  std::vector<SingularCube> out;
  for (auto& s : all)
    if (is_injective(s)) out.push_back(std::move(s));
  return out;
}

}  // namespace

SuiteResult neighborhood_suite(const SuiteOptions& opt) {
  SuiteResult r{"neighborhoods"};
  std::mt19937_64 rng(opt.seed);
  for (std::size_t n = 1; n <= 3; ++n) {
    const DigitalImage X = fixtures::box_minus(std::vector<Coord>(n, 4), {});
    std::uniform_int_distribution<Coord> inner(1, 3);
    auto sample = [&] {
      std::vector<Coord> c(n);
      for (auto& v : c) v = inner(rng);
      return Point(c);
    };
    for (int trial = 0; trial < 400; ++trial) {
      Point x = sample(), y = sample();
      r.check(adjacent(x, y) == adjacent(y, x), [&] { return std::string("adjacency is not symmetric"); });
      r.check(!adjacent(x, x), [&] { return std::string("a point is adjacent to itself"); });
      if (x == y) continue;
      const Point pair[] = {x, y};
      r.check(closed_neighborhood(X, pair).size() <= 2,
              [&] { return "closed neighbourhood of two points has more than 2 elements in Z^" + std::to_string(n); });

      const std::size_t k = 3 + static_cast<std::size_t>(trial % static_cast<int>(2 * n));
      std::vector<Point> xs;
      for (int attempt = 0; xs.size() < k && attempt < 100; ++attempt) {
        Point p = sample();
        if (std::find(xs.begin(), xs.end(), p) == xs.end()) xs.push_back(p);
      }
      if (xs.size() < k) continue;
      const auto common = open_neighborhood(X, xs);
      r.check(common.size() <= 1, [&] { return std::to_string(k) + " points share more than one neighbour"; });
      if (k > 2 * n) r.check(common.empty(), [&] { return std::string("more than 2n points share a neighbour"); });
    }

    // components form a partition whose blocks are exactly the path classes
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Point> pts;
      std::bernoulli_distribution keep(0.55);
      for (const Point& p : X.points())
        if (keep(rng)) pts.push_back(p);
      const DigitalImage Y(n, pts);
      const auto blocks = components(Y);
      std::map<Point, std::size_t> block_of;
      std::size_t total = 0;
      for (std::size_t b = 0; b < blocks.size(); ++b)
        for (const Point& p : blocks[b]) {
          block_of[p] = b;
          ++total;
        }
      r.check(total == Y.size() && block_of.size() == Y.size(), [&] { return std::string("components is not a partition"); });
      for (const Point& p : Y.points())
        for (const Point& q : Y.neighbors(p))
          r.check(block_of[p] == block_of[q], [&] { return std::string("adjacent points in different blocks"); });

      // Int^{i+1}(A) ⊆ Int^i(A)
      DigitalImage prev = Y;
      for (std::size_t i = 1; i <= 3; ++i) {
        DigitalImage next = interior(X, Y, i);
        r.check(next.is_subset_of(prev), [&] { return "Int is not monotone at step " + std::to_string(i); });
        prev = next;
      }
    }
  }
  return r;
}

SuiteResult snf_suite(const SuiteOptions& opt) {
  SuiteResult r{"snf"};
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  std::bernoulli_distribution zero(0.3);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    DenseMatrix<std::int64_t> M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) M(i, j) = zero(rng) ? 0 : entry(rng);
    auto tag = [&] { return "matrix #" + std::to_string(trial); };

    const auto res = smith_normal_form_exact(M);
    const auto Mb = M.cast<BigInt>();
    r.check(res.U * Mb * res.V == res.S, [&] { return tag() + ": U·M·V != S"; });
    bool diagonal = true;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && res.S(i, j) != 0) diagonal = false;
    r.check(diagonal, [&] { return tag() + ": S is not diagonal"; });
    for (std::size_t i = 0; i < res.invariant_factors.size(); ++i) {
      r.check(res.invariant_factors[i] > 0 && res.S(i, i) == res.invariant_factors[i],
              [&] { return tag() + ": bad diagonal entry"; });
      if (i + 1 < res.invariant_factors.size())
        r.check(res.invariant_factors[i + 1] % res.invariant_factors[i] == 0,
                [&] { return tag() + ": divisibility chain broken"; });
    }
    r.check(abs(bareiss_det(res.U)) == 1, [&] { return tag() + ": U is not unimodular"; });
    r.check(abs(bareiss_det(res.V)) == 1, [&] { return tag() + ": V is not unimodular"; });

    // The homology reduction must see the same rank and torsion.
    const auto inv = matrix_invariants(SparseMatrix::from_dense(M));
    std::vector<std::int64_t> torsion;
    for (const BigInt& d : res.invariant_factors)
      if (d > 1) torsion.push_back(narrow(d));
    r.check(inv.rank == res.rank && inv.torsion == torsion, [&] { return tag() + ": sparse reduction disagrees"; });
  }
  return r;
}

SuiteResult operator_algebra_suite(const SuiteOptions& opt) {
  SuiteResult r{"operator-algebra"};
  using Op = CubeOperator;
  for (int q = 1; q <= 4; ++q) {
    const Perm id = identity_perm(q);
    auto P = [q](const Op& op) { return operator_perm(op, q); };
    auto tag = [q](const std::string& s) { return "q=" + std::to_string(q) + ": " + s; };
    for (int j = 1; j <= q; ++j) {
      r.check(compose_perm(P(Op::flip(j)), P(Op::flip(j))) == id, [&] { return tag("F_j∘F_j != id"); });
      r.check(P(Op::swap(j, j)) == id && P(Op::shift(j, j)) == id, [&] { return tag("C_jj or S_jj != id"); });
    }
    for (int i = 1; i <= q; ++i)
      for (int j = 1; j <= q; ++j) {
        const std::string ij = std::to_string(i) + "," + std::to_string(j);
        r.check(compose_perm(P(Op::flip(i)), P(Op::flip(j))) == compose_perm(P(Op::flip(j)), P(Op::flip(i))),
                [&] { return tag("flips do not commute " + ij); });
        r.check(P(Op::swap(i, j)) == P(Op::swap(j, i)), [&] { return tag("C_ij != C_ji " + ij); });
        r.check(compose_perm(P(Op::rotate(i, j)), P(Op::rotate(j, i))) == id,
                [&] { return tag("R_ij∘R_ji != id " + ij); });
        r.check(P(Op::rotate(i, j)) == compose_perm(P(Op::flip(j)), P(Op::swap(i, j))),
                [&] { return tag("R_ij != F_j∘C_ij " + ij); });
        r.check(compose_perm(P(Op::shift(i, j)), P(Op::shift(j, i))) == id,
                [&] { return tag("S_ij∘S_ji != id " + ij); });
        if (i < j) {
          Perm chain = id;
          for (int k = j - 1; k >= i; --k) chain = compose_perm(P(Op::swap(k, k + 1)), chain);
          r.check(chain == P(Op::shift(i, j)), [&] { return tag("S_ij is not C_{i,i+1}∘…∘C_{j-1,j} " + ij); });
        }
        for (int k = 1; k <= q; ++k) {
          if (k == i || k == j) continue;
          r.check(compose_perm(P(Op::flip(k)), P(Op::swap(i, j))) == compose_perm(P(Op::swap(i, j)), P(Op::flip(k))),
                  [&] { return tag("F_k does not commute with C_ij"); });
        }
      }
    // Every operator is a bijection preserving one-bit adjacency of corners.
    std::vector<Op> ops;
    for (int i = 1; i <= q; ++i) {
      ops.push_back(Op::flip(i));
      for (int j = 1; j <= q; ++j) {
        ops.push_back(Op::swap(i, j));
        ops.push_back(Op::shift(i, j));
        ops.push_back(Op::rotate(i, j));
      }
    }
    for (const Op& op : ops) {
      const Perm p = P(op);
      Perm sorted = p;
      std::sort(sorted.begin(), sorted.end());
      r.check(sorted == id, [&] { return tag(op.to_string() + " is not a bijection"); });
      bool continuous = true;
      for (std::uint32_t c = 0; c < p.size(); ++c)
        for (int b = 0; b < q; ++b)
          if (std::popcount(p[c] ^ p[c ^ (1u << b)]) != 1) continuous = false;
      r.check(continuous, [&] { return tag(op.to_string() + " is not continuous"); });
    }
  }

  // Append laws on enumerated cubes of small fixtures.
  std::mt19937_64 rng(opt.seed);
  for (const Named& f : {Named{"ring", fixtures::ring(), 0}, Named{"unit_cube", fixtures::unit_cube(), 0}}) {
    for (int q = 1; q <= 2; ++q) {
      auto cubes = enumerate_or_record(r, f, q, opt.budget);
      if (!cubes || cubes->empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, cubes->size() - 1);
      for (int trial = 0; trial < 300; ++trial) {
        const SingularCube& s = (*cubes)[pick(rng)];
        const SingularCube& g = (*cubes)[pick(rng)];
        r.check(apply_operator(apply_operator(s, Op::flip(1)), Op::flip(1)) == s,
                [&] { return "σ∘F∘F != σ for " + where(f.name, s); });
        if (!compatible(s, g)) continue;
        const SingularCube a = append(s, g);
        r.check(face(a, Side::Front, q + 1) == s && face(a, Side::Back, q + 1) == g,
                [&] { return "faces of the append " + where(f.name, a); });
        r.check(is_degenerate(append(s, s)), [&] { return "σ⊟σ is not degenerate " + where(f.name, s); });

        // ∂(σ⊟γ) = Σ_i (-1)^i (A_iσ⊟A_iγ - B_iσ⊟B_iγ) + (-1)^{q+1}(σ - γ)
        SingularChain expected(q);
        auto add_nondegenerate = [&](const SingularCube& c, std::int64_t k) {
          if (!is_degenerate(c)) expected.add(c, k);
        };
        for (int i = 1; i <= q; ++i) {
          const std::int64_t sign = i % 2 == 0 ? 1 : -1;
          add_nondegenerate(append(face(s, Side::Front, i), face(g, Side::Front, i)), sign);
          add_nondegenerate(append(face(s, Side::Back, i), face(g, Side::Back, i)), -sign);
        }
        const std::int64_t top = (q + 1) % 2 == 0 ? 1 : -1;
        add_nondegenerate(s, top);
        add_nondegenerate(g, -top);
        r.check(boundary(a) == expected, [&] { return "boundary of the append " + where(f.name, a); });
      }
    }
  }
  return r;
}

SuiteResult sign_law_suite(const SuiteOptions& opt) {
  SuiteResult r{"sign-laws"};
  using Op = CubeOperator;
  for (const Named& f : low_degree_fixtures()) {
    for (int q = 1; q <= 3; ++q) {
      auto cubes = enumerate_or_record(r, f, q, opt.budget);
      if (!cubes) continue;
      for (const SingularCube& s : *cubes) {
        if (!is_injective(s)) continue;
        const auto b = beta(s);
        r.check(b.has_value(), [&] { return "β vanishes on injective " + where(f.name, s); });
        for (int j = 1; j <= q; ++j)
          r.check(beta(apply_operator(s, Op::flip(j))) == negated(b, -1),
                  [&] { return "β(σ∘F_" + std::to_string(j) + ") != -β(σ) for " + where(f.name, s); });
        for (int i = 1; i <= q; ++i)
          for (int j = 1; j <= q; ++j) {
            const std::string ij = std::to_string(i) + "," + std::to_string(j);
            const int shift_sign = (j - i) % 2 == 0 ? 1 : -1;
            r.check(beta(apply_operator(s, Op::shift(i, j))) == negated(b, shift_sign),
                    [&] { return "β(σ∘S_" + ij + ") for " + where(f.name, s); });
            if (i == j) continue;
            r.check(beta(apply_operator(s, Op::swap(i, j))) == negated(b, -1),
                    [&] { return "β(σ∘C_" + ij + ") != -β(σ) for " + where(f.name, s); });
            r.check(beta(apply_operator(s, Op::rotate(i, j))) == b,
                    [&] { return "β(σ∘R_" + ij + ") != β(σ) for " + where(f.name, s); });
          }

        // o^{A_iσ} = o^{B_iσ} = (-1)^{i + r_i} o_i o^σ, r_i the rank of k_i among the k's
        const OrientationData d = orientation(s);
        for (int i = 1; i <= q; ++i) {
          const std::size_t ki = d.axes[static_cast<std::size_t>(i - 1)];
          const int rank = 1 + static_cast<int>(std::count_if(d.axes.begin(), d.axes.end(),
                                                              [ki](std::size_t a) { return a < ki; }));
          const int expected = ((i + rank) % 2 == 0 ? 1 : -1) * d.edge_signs[static_cast<std::size_t>(i - 1)] * d.o;
          for (Side side : {Side::Front, Side::Back})
            r.check(orientation(face(s, side, i)).o == expected,
                    [&] { return "face orientation " + std::to_string(i) + " of " + where(f.name, s); });
        }
      }
    }
  }
  return r;
}

SuiteResult classification_suite(const SuiteOptions& opt) {
  SuiteResult r{"classification"};
  for (const Named& f : low_degree_fixtures()) {
    for (int q = 2; q <= 3; ++q) {
      auto cubes = enumerate_or_record(r, f, q, opt.budget);
      if (!cubes) continue;
      for (const SingularCube& s : *cubes) {
        if (degree_of_injectivity(s) != q - 1) continue;
        std::map<int, int> faces_per_coord;
        for (int i = 1; i <= q; ++i)
          for (Side side : {Side::Front, Side::Back})
            if (is_injective(face(s, side, i))) ++faces_per_coord[i];
        try {
          const CubeClass c = classify(s);
          bool consistent = false;
          switch (c.type) {
            case CubeType::Type1:
              consistent = faces_per_coord.size() == 2 && faces_per_coord[c.i] == 2 && faces_per_coord[c.j] == 2;
              break;
            case CubeType::Type2:
              consistent = faces_per_coord.size() == 2 && c.i != c.j && faces_per_coord[c.i] == 1 &&
                           faces_per_coord[c.j] == 1;
              break;
            case CubeType::Type3:
              consistent = faces_per_coord.size() == 1 && faces_per_coord[c.i] == 2;
              break;
          }
          r.check(consistent, [&] { return std::string(cube_type_name(c.type)) + " mislabels " + where(f.name, s); });
        } catch (const Error& e) {
          r.check(false, [&] { return where(f.name, s) + ": " + e.what(); });
        }
      }
    }
  }
  return r;
}

SuiteResult injectivity_suite(const SuiteOptions& opt) {
  SuiteResult r{"injectivity"};
  for (const Named& f : low_degree_fixtures()) {
    for (int q = 2; q <= 3; ++q) {
      auto cubes = enumerate_or_record(r, f, q, opt.budget);
      if (!cubes) continue;
      std::map<std::vector<Point>, std::size_t> by_low_corners;
      for (const SingularCube& s : *cubes) {
        std::vector<Point> low, low1;
        for (std::uint32_t c = 0; c < s.corner_count(); ++c) {
          if (std::popcount(c) <= 2) low.push_back(s.corner(c));
          if (std::popcount(c) <= 1) low1.push_back(s.corner(c));
        }
        std::sort(low.begin(), low.end());
        const bool low_injective = std::adjacent_find(low.begin(), low.end()) == low.end();
        if (low_injective) r.check(is_injective(s), [&] { return "S0∪S1∪S2-injective but not injective: " + where(f.name, s); });
        if (is_injective(s)) {
          r.check(is_embedding(s), [&] { return "injective but not an embedding: " + where(f.name, s); });
          r.check(++by_low_corners[low1] == 1,
                  [&] { return "two injective cubes agree on popcount <= 1 corners: " + where(f.name, s); });
        }
      }
    }
  }
  return r;
}

SuiteResult swap_flip_suite(const SuiteOptions&) {
  SuiteResult r{"swap-flip-group"};
  for (int q = 1; q <= 3; ++q) {
    std::vector<Perm> gens;
    for (int j = 1; j <= q; ++j) gens.push_back(operator_perm(CubeOperator::flip(j), q));
    for (int i = 1; i <= q; ++i)
      for (int j = i + 1; j <= q; ++j) gens.push_back(operator_perm(CubeOperator::swap(i, j), q));
    std::set<Perm> group{identity_perm(q)};
    std::vector<Perm> frontier{identity_perm(q)};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm& p : frontier)
        for (const Perm& g : gens) {
          Perm h = compose_perm(p, g);
          if (group.insert(h).second) next.push_back(std::move(h));
        }
      frontier = std::move(next);
    }
    std::size_t expected = std::size_t{1} << q;
    for (int k = 2; k <= q; ++k) expected *= static_cast<std::size_t>(k);
    r.check(group.size() == expected, [&] { return "swap/flip group of order " + std::to_string(group.size()); });

    const auto maps = injective_self_maps(q);
    r.check(maps.size() == expected,
            [&] { return std::to_string(maps.size()) + " injective self-maps of I^" + std::to_string(q); });
    for (const SingularCube& s : maps) {
      Perm p(s.corner_count());
      for (std::uint32_t c = 0; c < p.size(); ++c) p[c] = unit_corner(s.corner(c));
      r.check(group.count(p) == 1, [&] { return "not a product of swaps and flips: " + s.to_string(); });
    }
  }
  return r;
}

SuiteResult trichotomy_suite(const SuiteOptions& opt) {
  SuiteResult r{"trichotomy"};
  const Named f{"unit_cube", fixtures::unit_cube(), 3};
  for (int q = 1; q <= 3; ++q) {
    auto cubes = enumerate_or_record(r, f, q, opt.budget);
    if (!cubes) continue;
    std::map<ElementaryCube, std::vector<SingularCube>> by_image;
    for (const SingularCube& s : *cubes)
      if (is_injective(s)) by_image[*image_cube(s)].push_back(s);
    for (const auto& [Q, group] : by_image) {
      for (const SingularCube& s : group) {
        std::vector<SingularCube> allowed{s};
        for (int j = 1; j <= q; ++j) {
          allowed.push_back(apply_operator(s, CubeOperator::flip(j)));
          for (int i = 1; i <= q; ++i)
            if (i != j) allowed.push_back(apply_operator(s, CubeOperator::rotate(i, j)));
        }
        for (const SingularCube& phi : group) {
          if (!compatible(s, phi)) continue;
          r.check(std::find(allowed.begin(), allowed.end(), phi) != allowed.end(),
                  [&] { return "compatible pair outside the trichotomy: " + s.to_string() + " / " + phi.to_string(); });
        }
      }
    }
  }
  return r;
}

SuiteResult chain_map_suite(const SuiteOptions& opt) {
  SuiteResult r{"chain-map"};
  const std::vector<Named> cases = {
      {"isolated3", fixtures::isolated_points(3), 3}, {"edge", fixtures::edge(), 3},
      {"segment3", fixtures::segment(3), 2},          {"ring", fixtures::ring(), 2},
      {"unit_square", fixtures::unit_square(), 2},    {"l_shape", fixtures::l_shape(), 2},
      {"unit_cube", fixtures::unit_cube(), 2},        {"shell", fixtures::shell(), 2}};
  for (const Named& f : cases) {
    const SingularComplex S = build_singular_complex_partial(f.X, f.max_q, opt.budget);
    if (auto e = S.budget_failure()) r.check(false, [&] { return f.name + ": " + e->what(); });
    const C1Complex E = build_c1_complex(f.X, S.top_degree());
    const auto B = beta_matrices(S, E);
    r.check(verify_chain_map(B, S.complex(), E.complex()), [&] { return f.name + ": β∂ != ∂β"; });

    for (int q = 0; q <= S.top_degree(); ++q) {
      const SparseMatrix& b = B[static_cast<std::size_t>(q)];
      for (const SparseColumn& col : b.columns())
        r.check(col.empty() || (col.size() == 1 && (col[0].value == 1 || col[0].value == -1)),
                [&] { return f.name + ": β column is not 0 or ±e in degree " + std::to_string(q); });
      // Each elementary cube is hit by its canonical embedding with sign +1.
      for (std::size_t k = 0; k < E.cubes(q).size(); ++k) {
        const ElementaryCube& Q = E.cubes(q)[k];
        std::vector<std::uint32_t> row;
        const SingularCube iota = canonical_embedding(Q);
        for (const Point& v : iota.corners())
          row.push_back(static_cast<std::uint32_t>(*f.X.index_of(v)));
        const auto col = S.table(q).find(row);
        r.check(col && b.at(k, *col) == 1,
                [&] { return f.name + ": canonical embedding does not map onto a cube in degree " + std::to_string(q); });
      }
    }
  }
  return r;
}

SuiteResult functoriality_suite(const SuiteOptions& opt) {
  SuiteResult r{"functoriality"};
  std::mt19937_64 rng(opt.seed);
  const std::vector<Named> images = {
      {"segment3", fixtures::segment(3), 0},   {"unit_square", fixtures::unit_square(), 0},
      {"box22", fixtures::box({2, 2}), 0},     {"ring", fixtures::ring(), 0},
      {"l_shape", fixtures::l_shape(), 0},     {"unit_cube", fixtures::unit_cube(), 0},
      {"box112", fixtures::box({1, 1, 2}), 0}};
  std::vector<C1Complex> complexes;
  for (const Named& f : images) complexes.push_back(build_c1_complex(f.X));

  for (std::size_t k = 0; k < images.size(); ++k) {
    const auto id = induced_chain_map(PointMap::identity(images[k].X), complexes[k], complexes[k]);
    for (std::size_t q = 0; q < id.size(); ++q)
      r.check(id[q] == SparseMatrix::identity(complexes[k].cubes(static_cast<int>(q)).size()),
              [&] { return images[k].name + ": identity does not induce the identity"; });
  }

  std::uniform_int_distribution<std::size_t> pick(0, images.size() - 1);
  for (int trial = 0; trial < 24; ++trial) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    const auto f = fixtures::random_continuous_map(images[a].X, images[b].X, rng);
    const auto g = fixtures::random_continuous_map(images[b].X, images[c].X, rng);
    const std::string tag = "map #" + std::to_string(trial) + " " + images[a].name + " -> " + images[b].name +
                            " -> " + images[c].name;
    r.check(f && g && is_continuous(*f) && is_continuous(*g), [&] { return tag + ": no continuous map"; });
    if (!f || !g) continue;

    const auto F = induced_chain_map(*f, complexes[a], complexes[b]);
    const auto G = induced_chain_map(*g, complexes[b], complexes[c]);
    const auto GF = induced_chain_map(compose(*g, *f), complexes[a], complexes[c]);
    r.check(verify_chain_map(F, complexes[a].complex(), complexes[b].complex()), [&] { return tag + ": f is not a chain map"; });
    r.check(verify_chain_map(GF, complexes[a].complex(), complexes[c].complex()),
            [&] { return tag + ": g∘f is not a chain map"; });
    for (std::size_t q = 0; q < F.size(); ++q) {
      // G may stop below the top degree of the domain; higher components are 0.
      const SparseMatrix Gq = q < G.size() ? G[q] : SparseMatrix(complexes[c].cubes(static_cast<int>(q)).size(),
                                                                 complexes[b].cubes(static_cast<int>(q)).size());
      r.check(GF[q] == Gq * F[q], [&] { return tag + ": (g∘f)_q != g_q f_q at q=" + std::to_string(q); });

      const auto& cubes = complexes[a].cubes(static_cast<int>(q));
      for (std::size_t k = 0; k < cubes.size(); ++k) {
        std::vector<Point> corners;
        const SingularCube iota = canonical_embedding(cubes[k]);
        for (const Point& v : iota.corners()) corners.push_back((*f)(v));
        const auto bq = beta(SingularCube::make(corners));
        SparseColumn expected;
        if (bq) expected.push_back({static_cast<std::uint32_t>(*complexes[b].index_of(bq->cube)), bq->sign});
        r.check(F[q].column(k) == expected, [&] { return tag + ": column != β(f∘ι_Q) at q=" + std::to_string(q); });
      }
    }
  }
  return r;
}

SuiteResult vanishing_suite(const SuiteOptions& opt) {
  SuiteResult r{"vanishing"};
  const std::vector<Named> cases = {{"edge", fixtures::edge(), 1},
                                    {"segment3", fixtures::segment(3), 1},
                                    {"ring", fixtures::ring(), 1},
                                    {"unit_square", fixtures::unit_square(), 2}};
  for (const Named& f : cases) {
    r.check(dimension(f.X) == f.max_q, [&] { return f.name + ": unexpected dimension"; });
    const int q = f.max_q + 1;
    try {
      const auto H = build_singular_complex(f.X, q, opt.budget).homology();
      r.check(H.size() == static_cast<std::size_t>(q) + 1 && H.back().is_zero(),
              [&] { return f.name + ": dH_" + std::to_string(q) + " = " + H.back().to_string(); });
    } catch (const BudgetExceeded& e) {
      r.check(false, [&] { return f.name + ": " + e.what(); });
    }
  }
  return r;
}

SuiteResult cylinder_suite(const SuiteOptions&) {
  SuiteResult r{"cylinder"};
  const std::vector<Named> cases = {{"ring", fixtures::ring(), 0},
                                    {"unit_square", fixtures::unit_square(), 0},
                                    {"isolated3", fixtures::isolated_points(3), 0},
                                    {"l_shape", fixtures::l_shape(), 0},
                                    {"shell", fixtures::shell(), 0}};
  for (const Named& f : cases) {
    const DigitalImage C = cylinder(f.X);
    const int top = dimension(C);
    const auto HX = c1_homology(f.X, top);
    const auto HC = c1_homology(C, top);
    for (int q = 0; q <= top; ++q)
      r.check(groups_isomorphic(HX[static_cast<std::size_t>(q)], HC[static_cast<std::size_t>(q)]),
              [&] { return f.name + ": H_" + std::to_string(q) + " changes on the cylinder"; });
  }
  return r;
}

SuiteResult excision_suite(const SuiteOptions&) {
  SuiteResult r{"excision"};
  const auto t = fixtures::excision_triple();
  const DigitalImage covered = fixtures::image_union(interior(t.X, t.A, t.steps), interior(t.X, t.B, t.steps));
  r.check(covered == t.X, [] { return std::string("Int^i(A) ∪ Int^i(B) != X"); });
  const auto HXA = relative_c1_homology(t.X, t.A, 2);
  const DigitalImage AB = fixtures::intersection(t.A, t.B);
  const auto HBAB = relative_c1_homology(t.B, AB, 2);
  for (int q = 0; q <= 2; ++q)
    r.check(groups_isomorphic(HXA[static_cast<std::size_t>(q)], HBAB[static_cast<std::size_t>(q)]),
            [&] { return "H_" + std::to_string(q) + "(X,A) != H_" + std::to_string(q) + "(B,A∩B)"; });
  return r;
}

SuiteResult isomorphism_suite(const SuiteOptions& opt) {
  SuiteResult r{"isomorphism"};
  const std::vector<Named> cases = {{"isolated1", fixtures::isolated_points(1), 2},
                                    {"isolated3", fixtures::isolated_points(3), 2},
                                    {"isolated5", fixtures::isolated_points(5), 2},
                                    {"ring", fixtures::ring(), 1},
                                    {"shell", fixtures::shell(), 2}};
  for (const Named& f : cases) {
    const IsoReport rep = verify_isomorphism(f.X, f.max_q, opt.budget);
    for (const auto& d : rep.degrees)
      r.check(d.verdict == Verdict::Isomorphic,
              [&] { return f.name + ": degree " + std::to_string(d.q) + " " + verdict_name(d.verdict); });
  }
  return r;
}

namespace {

const std::vector<std::pair<std::string, std::function<SuiteResult(const SuiteOptions&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<SuiteResult(const SuiteOptions&)>>> suites = {
      {"neighborhoods", neighborhood_suite}, {"snf", snf_suite},
      {"operator-algebra", operator_algebra_suite}, {"sign-laws", sign_law_suite},
      {"classification", classification_suite}, {"injectivity", injectivity_suite},
      {"swap-flip-group", swap_flip_suite}, {"trichotomy", trichotomy_suite},
      {"chain-map", chain_map_suite}, {"functoriality", functoriality_suite},
      {"vanishing", vanishing_suite}, {"cylinder", cylinder_suite},
      {"excision", excision_suite}, {"isomorphism", isomorphism_suite}};
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(opt);
  fail(ErrorCode::PreconditionViolated, "unknown suite " + name);
}

}  // namespace cubhom
