#include "cubhom/bridge.hpp"

#include <algorithm>
#include <future>

#include "cubhom/error.hpp"

namespace cubhom {

std::optional<SignedCube> beta(const SingularCube& s) {
  if (!is_injective(s)) return std::nullopt;
  auto Q = image_cube(s);
  if (!Q) fail(ErrorCode::InternalInvariant, "injective cube is not an embedding: " + s.to_string());
  return SignedCube{orientation(s).o, std::move(*Q)};
}

std::vector<SparseMatrix> beta_matrices(const SingularComplex& S, const C1Complex& E) {
  std::vector<SparseMatrix> out;
  for (int q = 0; q <= S.top_degree(); ++q) {
    const CubeTable& table = S.table(q);
    SparseMatrix m(E.cubes(q).size(), 0);
    std::vector<std::uint32_t> sorted;
    for (std::size_t k = 0; k < table.size(); ++k) {
      auto row = table.row(k);
      sorted.assign(row.begin(), row.end());
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        m.push_column({});
        continue;
      }
      auto image = beta(S.cube(q, k));
      auto r = E.index_of(image->cube);
      if (!r) fail(ErrorCode::ShapeMismatch, "elementary complex lacks a cube in degree " + std::to_string(q));
      m.push_column({{static_cast<std::uint32_t>(*r), image->sign}});
    }
    out.push_back(std::move(m));
  }
  return out;
}

BetaData beta_matrices(const DigitalImage& X, int max_q, std::size_t budget) {
  SingularComplex S = build_singular_complex(X, max_q, budget);
  C1Complex E = build_c1_complex(X, S.top_degree());
  auto beta = beta_matrices(S, E);
  return BetaData{std::move(S), std::move(E), std::move(beta)};
}

SingularCube canonical_embedding(const ElementaryCube& Q) { return SingularCube::make(Q.vertices()); }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Isomorphic: return "OK";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

bool IsoReport::any_mismatch() const {
  return std::any_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.verdict == Verdict::Mismatch; });
}

bool IsoReport::all_isomorphic() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.verdict == Verdict::Isomorphic; });
}

IsoReport verify_isomorphism(const DigitalImage& X, int max_q, std::size_t budget) {
  if (max_q < 0) fail(ErrorCode::PreconditionViolated, "max_q must be nonnegative");
  auto c1_job = std::async(std::launch::async, [&X, max_q] { return c1_homology(X, max_q); });
  SingularComplex S = build_singular_complex_partial(X, max_q, budget);
  const std::vector<FGAbelianGroup> singular = S.homology();
  const std::vector<FGAbelianGroup> c1 = c1_job.get();

  IsoReport report;
  report.budget_failure = S.budget_failure();
  for (int q = 0; q <= max_q; ++q) {
    DegreeComparison d{q, std::nullopt, c1[static_cast<std::size_t>(q)], Verdict::Skipped};
    if (static_cast<std::size_t>(q) < singular.size()) {
      d.singular = singular[static_cast<std::size_t>(q)];
      d.verdict = groups_isomorphic(*d.singular, d.c1) ? Verdict::Isomorphic : Verdict::Mismatch;
    }
    report.degrees.push_back(std::move(d));
  }
  return report;
}

}  // namespace cubhom
