// cubhom: command-line front end for the homology pipelines.
//
// Exit codes: 0 ok, 1 mismatch / failed suite / internal error, 2 unreadable
// input, 3 violated precondition (discontinuous map, A not in X, ...),
// 4 singular enumeration budget exceeded.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubhom/bridge.hpp"
#include "cubhom/elementary.hpp"
#include "cubhom/error.hpp"
#include "cubhom/image_io.hpp"
#include "cubhom/report.hpp"
#include "cubhom/singular.hpp"
#include "cubhom/suites.hpp"

using namespace cubhom;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kPrecondition = 3, kBudget = 4 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DuplicatePoint:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::PointNotInImage:
    case ErrorCode::MapNotTotal:
      return kParse;
    case ErrorCode::NotContinuous:
    case ErrorCode::NotSubset:
    case ErrorCode::EmptyImage:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::NotCompatible:
    case ErrorCode::IndexOutOfRange:
      return kPrecondition;
    case ErrorCode::BudgetExceeded:
      return kBudget;
    default:
      return kFailure;
  }
}

struct Config {
  std::string image;
  std::string target;
  std::string map;
  std::string relative;
  std::optional<int> max_dim;
  int max_q = 1;
  int q = 2;
  std::optional<int> induced_q;
  std::size_t budget = kDefaultBudget;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> suites;
};

bool as_json(const Config& c) { return c.format == "json"; }

int cmd_homology(const Config& c) {
  const DigitalImage X = read_image_file(c.image);
  std::vector<FGAbelianGroup> H;
  if (!c.relative.empty()) {
    const DigitalImage A = read_image_file(c.relative);
    H = relative_c1_homology(X, A, c.max_dim);
  } else {
    H = c1_homology(X, c.max_dim);
  }
  if (as_json(c))
    std::cout << homology_json(H).dump(2) << "\n";
  else
    std::cout << homology_text(H);
  return kOk;
}

int cmd_singular(const Config& c) {
  const DigitalImage X = read_image_file(c.image);
  const SingularComplex S = build_singular_complex_partial(X, c.max_q, c.budget);
  const auto H = S.homology();
  const auto failure = S.budget_failure();
  if (as_json(c)) {
    json out{{"homology", homology_json(H)}};
    if (failure) out["budget_exceeded"] = {{"degree", failure->degree()}, {"reached", failure->reached()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << homology_text(H);
    if (failure) std::cout << "incomplete: " << failure->what() << "\n";
  }
  if (failure) {
    std::cerr << "cubhom: " << failure->what() << "\n";
    return kBudget;
  }
  return kOk;
}

int cmd_compare(const Config& c) {
  const DigitalImage X = read_image_file(c.image);
  const IsoReport report = verify_isomorphism(X, c.max_q, c.budget);
  if (as_json(c))
    std::cout << iso_report_json(report).dump(2) << "\n";
  else
    std::cout << iso_report_text(report);
  return report.any_mismatch() ? kFailure : kOk;
}

int cmd_classify(const Config& c) {
  const DigitalImage X = read_image_file(c.image);
  if (c.q < 2) fail(ErrorCode::PreconditionViolated, "classification needs q >= 2");
  const auto cubes = enumerate_singular_cubes(X, c.q, c.budget);
  std::map<std::string, std::size_t> counts{{"Type1", 0}, {"Type2", 0}, {"Type3", 0}, {"Unclassifiable", 0}};
  std::size_t total = 0;
  for (const SingularCube& s : cubes) {
    if (degree_of_injectivity(s) != c.q - 1) continue;
    ++total;
    try {
      ++counts[cube_type_name(classify(s).type)];
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnclassifiableCube) throw;
      ++counts["Unclassifiable"];
      std::cerr << "cubhom: " << e.what() << "\n";
    }
  }
  if (as_json(c)) {
    json out{{"q", c.q}, {"total", total}};
    for (const auto& [name, n] : counts) out[name] = n;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const char* name : {"Type1", "Type2", "Type3", "Unclassifiable"})
      std::cout << name << ": " << counts[name] << "\n";
    std::cout << "total: " << total << "\n";
  }
  return counts["Unclassifiable"] == 0 ? kOk : kFailure;
}

json matrix_json(int q, const SparseMatrix& m) {
  json entries = json::array();
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const SparseEntry& e : m.column(j)) entries.push_back({e.row, j, e.value});
  return json{{"q", q}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

void print_matrix(int q, const SparseMatrix& m) {
  std::cout << "f_" << q << ": " << m.rows() << " x " << m.cols() << "\n";
  const auto d = m.to_dense();
  for (std::size_t i = 0; i < d.rows(); ++i) {
    std::cout << " ";
    for (std::size_t j = 0; j < d.cols(); ++j) std::cout << " " << d(i, j);
    std::cout << "\n";
  }
}

int cmd_induced(const Config& c) {
  const DigitalImage X = read_image_file(c.image);
  const DigitalImage Y = read_image_file(c.target);
  const PointMap f = read_map_file(c.map, X, Y);
  if (!is_continuous(f)) fail(ErrorCode::NotContinuous, "map " + c.map + " is not continuous");
  const C1Complex CX = build_c1_complex(X);
  const C1Complex CY = build_c1_complex(Y, CX.max_degree());
  const auto phi = induced_chain_map(f, CX, CY);
  const bool ok = verify_chain_map(phi, CX.complex(), CY.complex());

  std::vector<int> degrees;
  for (int q = 0; q < static_cast<int>(phi.size()); ++q)
    if (!c.induced_q || *c.induced_q == q) degrees.push_back(q);
  if (c.induced_q && degrees.empty())
    fail(ErrorCode::PreconditionViolated, "degree " + std::to_string(*c.induced_q) + " is outside 0.." +
                                              std::to_string(static_cast<int>(phi.size()) - 1));

  if (as_json(c)) {
    json mats = json::array();
    for (int q : degrees) mats.push_back(matrix_json(q, phi[static_cast<std::size_t>(q)]));
    std::cout << json{{"matrices", std::move(mats)}, {"chain_map", ok}}.dump(2) << "\n";
  } else {
    for (int q : degrees) print_matrix(q, phi[static_cast<std::size_t>(q)]);
    std::cout << "chain map: " << (ok ? "OK" : "FAILED") << "\n";
  }
  return ok ? kOk : kFailure;
}

int cmd_verify(const Config& c) {
  std::vector<std::string> names = c.suites.empty() ? suite_names() : c.suites;
  SuiteOptions opt;
  opt.seed = c.seed;
  opt.budget = c.budget;
  bool all = true;
  json out = json::array();
  for (const std::string& name : names) {
    const SuiteResult r = run_suite(name, opt);
    all = all && r.passed();
    if (as_json(c)) {
      out.push_back({{"suite", r.name}, {"passed", r.passed()}, {"checks", r.checks},
                     {"failures", r.failures}, {"first_failure", r.first_failure}});
    } else {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, " << r.failures
                << " failures)";
      if (!r.first_failure.empty()) std::cout << ": " << r.first_failure;
      std::cout << "\n";
    }
  }
  if (as_json(c)) std::cout << out.dump(2) << "\n";
  return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digital singular and c1-cubical homology of digital images"};
  app.require_subcommand(1);
  Config c;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "Maximum corner tables per degree")->check(CLI::PositiveNumber);
  };

  auto* homology = app.add_subcommand("homology", "c1-cubical homology of an image");
  homology->add_option("image", c.image, "Image file")->required();
  homology->add_option("--max-dim", c.max_dim, "Highest degree to report")->check(CLI::NonNegativeNumber);
  homology->add_option("--relative", c.relative, "Subimage A for H(X, A)");
  add_format(homology);

  auto* singular = app.add_subcommand("singular", "digital singular homology by enumeration");
  singular->add_option("image", c.image, "Image file")->required();
  singular->add_option("--max-q", c.max_q, "Highest degree to report")->check(CLI::NonNegativeNumber);
  add_budget(singular);
  add_format(singular);

  auto* compare = app.add_subcommand("compare", "compare singular and c1 homology degree by degree");
  compare->add_option("image", c.image, "Image file")->required();
  compare->add_option("--max-q", c.max_q, "Highest degree to compare")->check(CLI::NonNegativeNumber);
  add_budget(compare);
  add_format(compare);

  auto* classify = app.add_subcommand("classify", "type histogram of nondegenerate degree-(q-1) q-cubes");
  classify->add_option("image", c.image, "Image file")->required();
  classify->add_option("--q", c.q, "Cube degree (>= 2)");
  add_budget(classify);
  add_format(classify);

  auto* induced = app.add_subcommand("induced", "matrices of the map induced on c1 chains");
  induced->add_option("domain", c.image, "Domain image file")->required();
  induced->add_option("codomain", c.target, "Codomain image file")->required();
  induced->add_option("map", c.map, "Map file")->required();
  induced->add_option("--q", c.induced_q, "Only print this degree")->check(CLI::NonNegativeNumber);
  add_format(induced);

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("suites", c.suites, "Suite names (default: all)")->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", c.seed, "Seed for randomized suites");
  add_budget(verify);
  add_format(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*homology) return cmd_homology(c);
    if (*singular) return cmd_singular(c);
    if (*compare) return cmd_compare(c);
    if (*classify) return cmd_classify(c);
    if (*induced) return cmd_induced(c);
    if (*verify) return cmd_verify(c);
  } catch (const BudgetExceeded& e) {
    std::cerr << "cubhom: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "cubhom: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "cubhom: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
