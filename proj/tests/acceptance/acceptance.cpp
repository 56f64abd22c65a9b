// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any
// criterion fails. Each criterion runs the library's own property suite and
// then re-derives the expected values with the reference code in
// tests/oracle.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cubhom/bridge.hpp"
#include "cubhom/elementary.hpp"
#include "cubhom/error.hpp"
#include "cubhom/fixtures.hpp"
#include "cubhom/snf.hpp"
#include "cubhom/suites.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace cubhom;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond || !ok) {
      ok = ok && cond;
      return;
    }
    ok = false;
    detail = what;
  }

  void suite(const SuiteResult& r) {
    std::ostringstream s;
    s << r.name << " suite: " << r.checks << " checks, " << r.failures << " failures";
    if (!r.first_failure.empty()) s << " (" << r.first_failure << ")";
    require(r.passed(), s.str());
  }
};

std::string show(const std::vector<oracle::Group>& H) {
  std::string out = "(";
  for (std::size_t q = 0; q < H.size(); ++q) {
    if (q) out += ", ";
    out += FGAbelianGroup(H[q].rank, {H[q].torsion.begin(), H[q].torsion.end()}).to_string();
  }
  return out + ")";
}

bool chain_map_by_oracle(const std::vector<SparseMatrix>& phi, const ChainComplex& C, const ChainComplex& D) {
  for (int q = 1; q < static_cast<int>(phi.size()); ++q) {
    const auto lhs = oracle::sparse_mul(oracle::to_map(D.boundary(q)), oracle::to_map(phi[q]));
    const auto rhs = oracle::sparse_mul(oracle::to_map(phi[q - 1]), oracle::to_map(C.boundary(q)));
    if (lhs != rhs) return false;
  }
  return true;
}

// 1. Isolated points.
Outcome isolated_points() {
  Outcome o;
  for (std::size_t d : {1, 3, 5}) {
    const DigitalImage X = fixtures::isolated_points(d);
    const std::string tag = std::to_string(d) + " points";
    const std::vector<oracle::Group> expected{support::Zr(d), support::Zr(0), support::Zr(0)};
    o.require(support::component_count(X) == d, tag + ": component count");
    o.require(oracle::cubical_homology(X, 2) == expected, tag + ": oracle c1 homology " + show(oracle::cubical_homology(X, 2)));
    o.require(oracle::singular_homology(X, 2) == expected, tag + ": oracle singular homology");
    const IsoReport r = verify_isomorphism(X, 2);
    o.require(r.all_isomorphic(), tag + ": comparison verdict");
    for (const auto& deg : r.degrees) {
      o.require(support::as_oracle(deg.c1) == expected[deg.q], tag + ": c1 H_" + std::to_string(deg.q));
      o.require(deg.singular && support::as_oracle(*deg.singular) == expected[deg.q],
                tag + ": singular H_" + std::to_string(deg.q));
    }
  }
  return o;
}

// 2. Ring.
Outcome ring() {
  Outcome o;
  const DigitalImage X = fixtures::ring();
  const auto c1 = oracle::cubical_homology(X, 1);
  const auto sing = oracle::singular_homology(X, 1);
  const std::vector<oracle::Group> expected{support::Zr(1), support::Zr(1)};
  o.require(c1 == expected, "oracle c1 homology " + show(c1));
  o.require(sing == expected, "oracle singular homology " + show(sing));
  const IsoReport r = verify_isomorphism(X, 1);
  o.require(r.degrees.size() == 2, "two degrees compared");
  for (const auto& deg : r.degrees) {
    o.require(deg.verdict == Verdict::Isomorphic, "verdict at q=" + std::to_string(deg.q));
    o.require(support::as_oracle(deg.c1) == c1[deg.q], "c1 side at q=" + std::to_string(deg.q));
    o.require(deg.singular && support::as_oracle(*deg.singular) == sing[deg.q],
              "singular side at q=" + std::to_string(deg.q));
  }
  return o;
}

// 3. Shell.
Outcome shell() {
  Outcome o;
  const DigitalImage X = fixtures::shell();
  o.require(X.size() == 26, "26 points");
  const auto c1 = oracle::cubical_homology(X, 3);
  const std::vector<oracle::Group> expected{support::Zr(1), support::Zr(0), support::Zr(1), support::Zr(0)};
  o.require(c1 == expected, "oracle c1 homology " + show(c1));
  o.require(support::as_oracle(c1_homology(X, 3)) == c1, "library c1 homology");
  const IsoReport r = verify_isomorphism(X, 2);
  o.require(!r.budget_failure, "singular side within budget");
  o.require(r.degrees.size() == 3 && r.all_isomorphic(), "singular matches c1 through q=2");
  return o;
}

// 4. β is a chain map.
Outcome chain_map() {
  Outcome o;
  o.suite(chain_map_suite());
  struct Case {
    std::string name;
    DigitalImage X;
    int max_q;
  };
  const std::vector<Case> cases{{"isolated3", fixtures::isolated_points(3), 3}, {"edge", fixtures::edge(), 3},
                                {"segment3", fixtures::segment(3), 2},          {"ring", fixtures::ring(), 2},
                                {"unit_square", fixtures::unit_square(), 2},    {"l_shape", fixtures::l_shape(), 2},
                                {"unit_cube", fixtures::unit_cube(), 2},        {"shell", fixtures::shell(), 2}};
  std::size_t checked = 0;
  for (const Case& c : cases) {
    const BetaData d = beta_matrices(c.X, c.max_q);
    o.require(d.beta.size() == static_cast<std::size_t>(c.max_q) + 2, c.name + ": degrees built");
    o.require(chain_map_by_oracle(d.beta, d.singular.complex(), d.elementary.complex()), c.name + ": ∂β != β∂");
    ++checked;
  }
  o.require(checked >= 5, "at least five fixtures");
  return o;
}

// 5. Sign laws.
Outcome sign_laws() {
  Outcome o;
  o.suite(sign_law_suite());
  for (const DigitalImage& X : {fixtures::unit_cube(), fixtures::shell()})
    for (int q = 1; q <= 3; ++q)
      for (const SingularCube& s : enumerate_singular_cubes(X, q)) {
        if (!is_injective(s)) continue;
        const auto b = beta(s);
        o.require(b && b->sign == oracle::orientation_by_determinant(s.corners(), static_cast<std::size_t>(q)),
                  "orientation of " + s.to_string());
        for (int j = 1; j <= q; ++j) {
          const auto f = beta(apply_operator(s, CubeOperator::flip(j)));
          o.require(f && f->cube == b->cube && f->sign == -b->sign, "flip law on " + s.to_string());
        }
      }
  return o;
}

// 6. Classification.
Outcome classification() {
  Outcome o;
  o.suite(classification_suite());
  // Each pattern with exactly one type: recount injective faces directly.
  std::size_t seen = 0;
  for (int q = 2; q <= 3; ++q)
    for (const SingularCube& s : enumerate_singular_cubes(fixtures::unit_square(), q)) {
      if (degree_of_injectivity(s) != q - 1) continue;
      std::vector<int> per(static_cast<std::size_t>(q) + 1, 0);
      for (int i = 1; i <= q; ++i)
        for (Side side : {Side::Front, Side::Back}) per[i] += is_injective(face(s, side, i)) ? 1 : 0;
      const auto ones = std::count(per.begin(), per.end(), 1);
      const auto twos = std::count(per.begin(), per.end(), 2);
      const int matches = (twos == 2 && ones == 0) + (ones == 2 && twos == 0) + (twos == 1 && ones == 0);
      if (matches == 1) {
        const CubeType t = classify(s).type;
        const CubeType want = twos == 2 ? CubeType::Type1 : ones == 2 ? CubeType::Type2 : CubeType::Type3;
        o.require(t == want, "type of " + s.to_string());
      }
      o.require(matches == 1, "face pattern of " + s.to_string());
      ++seen;
    }
  o.require(seen > 0, "cubes of degree q-1 found");
  return o;
}

// 7. Injectivity properties.
Outcome injectivity() {
  Outcome o;
  o.suite(injectivity_suite());
  return o;
}

// 8. Functoriality.
Outcome functoriality() {
  Outcome o;
  o.suite(functoriality_suite());
  std::mt19937_64 rng(kDefaultSeed + 1);
  const std::vector<DigitalImage> images{fixtures::segment(3), fixtures::ring(), fixtures::l_shape(),
                                         fixtures::unit_square(), fixtures::box({1, 1, 2})};
  std::vector<C1Complex> cx;
  for (const DigitalImage& X : images) cx.push_back(build_c1_complex(X));
  std::uniform_int_distribution<std::size_t> pick(0, images.size() - 1);
  int maps = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    const auto f = fixtures::random_continuous_map(images[a], images[b], rng);
    const auto g = fixtures::random_continuous_map(images[b], images[c], rng);
    if (!f || !g) continue;
    const auto F = induced_chain_map(*f, cx[a], cx[b]);
    const auto G = induced_chain_map(*g, cx[b], cx[c]);
    const auto GF = induced_chain_map(compose(*g, *f), cx[a], cx[c]);
    o.require(chain_map_by_oracle(F, cx[a].complex(), cx[b].complex()), "f is a chain map");
    o.require(chain_map_by_oracle(GF, cx[a].complex(), cx[c].complex()), "g∘f is a chain map");
    for (std::size_t q = 0; q < F.size(); ++q) {
      const oracle::SparseMap gq = q < G.size() ? oracle::to_map(G[q]) : oracle::SparseMap{};
      o.require(oracle::to_map(GF[q]) == oracle::sparse_mul(gq, oracle::to_map(F[q])),
                "(g∘f)_q = g_q f_q at q=" + std::to_string(q));
    }
    maps += 2;
  }
  o.require(maps >= 20, "at least 20 maps");
  return o;
}

// 9. Vanishing above the dimension.
Outcome vanishing() {
  Outcome o;
  o.suite(vanishing_suite());
  const auto edge = oracle::singular_homology(fixtures::edge(), 2);
  o.require(edge[2] == support::Zr(0), "oracle dH_2(edge) = " + show(edge));
  o.require(dimension(fixtures::ring()) == 1 && dimension(fixtures::unit_square()) == 2, "dimensions");
  return o;
}

// 10. Cylinder.
Outcome cylinder_invariance() {
  Outcome o;
  o.suite(cylinder_suite());
  for (const DigitalImage& X : {fixtures::ring(), fixtures::unit_square(), fixtures::isolated_points(3),
                                fixtures::l_shape()}) {
    const DigitalImage C = cylinder(X);
    o.require(oracle::cubical_homology(X, 3) == oracle::cubical_homology(C, 3), "oracle H(X) = H(X × I)");
    o.require(support::as_oracle(c1_homology(C, 3)) == oracle::cubical_homology(C, 3), "library H(X × I)");
  }
  return o;
}

// 11. Excision.
Outcome excision() {
  Outcome o;
  o.suite(excision_suite());
  const auto t = fixtures::excision_triple();
  const auto AB = fixtures::intersection(t.A, t.B);
  const auto lhs = oracle::relative_cubical_homology(t.X, t.A, 2);
  const auto rhs = oracle::relative_cubical_homology(t.B, AB, 2);
  o.require(lhs == rhs, "oracle H(X,A) " + show(lhs) + " vs H(B,A∩B) " + show(rhs));
  o.require(support::as_oracle(relative_c1_homology(t.X, t.A, 2)) == lhs, "library H(X,A)");
  o.require(support::as_oracle(relative_c1_homology(t.B, AB, 2)) == rhs, "library H(B,A∩B)");
  return o;
}

// 12. SNF certificates.
Outcome snf() {
  Outcome o;
  o.suite(snf_suite());
  std::mt19937_64 rng(kDefaultSeed ^ 0x12);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    DenseMatrix<std::int64_t> M(r, c);
    oracle::Mat om = oracle::zeros(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) om[i][j] = M(i, j) = entry(rng);
    const auto res = smith_normal_form_exact(M);
    auto to_oracle = [](const DenseMatrix<BigInt>& m) {
      oracle::Mat out = oracle::zeros(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
      return out;
    };
    const oracle::Mat U = to_oracle(res.U), V = to_oracle(res.V), S = to_oracle(res.S);
    const std::string tag = "matrix #" + std::to_string(trial);
    o.require(oracle::mul(oracle::mul(U, om, r, c), V, c, c) == S, tag + ": U·M·V != S");
    o.require(abs(oracle::det(U)) == 1 && abs(oracle::det(V)) == 1, tag + ": not unimodular");
    std::vector<oracle::Big> diag;
    for (std::size_t i = 0; i < std::min(r, c); ++i)
      if (S[i][i] != 0) diag.push_back(S[i][i]);
    bool chain = true;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) chain = chain && diag[i] > 0 && diag[i + 1] % diag[i] == 0;
    o.require(chain, tag + ": divisibility chain");
    o.require(diag == oracle::invariant_factors(om), tag + ": invariant factors differ from elimination");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"isolated points: H_0 = Z^d, H_1 = H_2 = 0 on both sides, d in {1,3,5}", isolated_points},
      {"ring: H_0 = H_1 = Z on both sides, compare OK through q=1", ring},
      {"shell: c1 homology (Z,0,Z,0), singular matches through q=2", shell},
      {"chain map: beta d = d beta on 8 fixtures in every built degree", chain_map},
      {"sign laws for F, C, R, S on injective cubes with q <= 3", sign_laws},
      {"classification: every degree-(q-1) cube has exactly one type, q in {2,3}", classification},
      {"injectivity properties over fixtures, q in {2,3}", injectivity},
      {"functoriality: induced maps are chain maps and compose", functoriality},
      {"vanishing: dH_{n+1} = 0 for n in {1,2}", vanishing},
      {"cylinder: H(X x [0,1]) = H(X) on 4 fixtures", cylinder_invariance},
      {"excision: H(X,A) = H(B, A cap B) for q <= 2", excision},
      {"SNF self-certification on 1000 random matrices", snf},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first;
    std::cout.precision(2);
    std::cout << std::fixed << " (" << secs << " s)";
    if (!o.ok) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
