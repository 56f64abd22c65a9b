#include "cubhom/report.hpp"

#include "cubhom/error.hpp"

namespace cubhom {

using nlohmann::json;

std::string homology_line(int q, const FGAbelianGroup& G) {
  return "H_" + std::to_string(q) + " = " + G.to_string();
}

std::string homology_text(const std::vector<FGAbelianGroup>& groups) {
  std::string out;
  for (std::size_t q = 0; q < groups.size(); ++q) out += homology_line(static_cast<int>(q), groups[q]) + "\n";
  return out;
}

json group_to_json(int q, const FGAbelianGroup& G) {
  return json{{"q", q}, {"rank", G.rank()}, {"torsion", G.torsion()}};
}

json homology_json(const std::vector<FGAbelianGroup>& groups) {
  json arr = json::array();
  for (std::size_t q = 0; q < groups.size(); ++q) arr.push_back(group_to_json(static_cast<int>(q), groups[q]));
  return arr;
}

std::pair<int, FGAbelianGroup> group_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.at("q").is_number_integer() || !j.at("rank").is_number_integer() ||
        !j.at("torsion").is_array())
      fail(ErrorCode::ParseError, "homology entry needs integer q, rank and a torsion array");
    const auto rank = j.at("rank").get<std::int64_t>();
    if (rank < 0) fail(ErrorCode::ParseError, "negative rank");
    std::vector<std::int64_t> torsion;
    for (const auto& d : j.at("torsion")) {
      if (!d.is_number_integer()) fail(ErrorCode::ParseError, "torsion coefficient is not an integer");
      torsion.push_back(d.get<std::int64_t>());
    }
    return {j.at("q").get<int>(), FGAbelianGroup(static_cast<std::size_t>(rank), std::move(torsion))};
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(ErrorCode::ParseError, e.what());
  }
}

std::vector<FGAbelianGroup> homology_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "homology report must be an array");
  std::vector<FGAbelianGroup> out;
  for (const auto& entry : j) {
    auto [q, G] = group_from_json(entry);
    if (q != static_cast<int>(out.size())) fail(ErrorCode::ParseError, "degrees must be consecutive from 0");
    out.push_back(std::move(G));
  }
  return out;
}

std::string iso_report_text(const IsoReport& report) {
  std::string out;
  for (const auto& d : report.degrees) {
    out += "H_" + std::to_string(d.q) + ": singular = " + (d.singular ? d.singular->to_string() : "?") +
           ", c1 = " + d.c1.to_string() + "  " + verdict_name(d.verdict) + "\n";
  }
  if (report.budget_failure) out += "note: " + std::string(report.budget_failure->what()) + "\n";
  return out;
}

json iso_report_json(const IsoReport& report) {
  json degrees = json::array();
  for (const auto& d : report.degrees) {
    json entry{{"q", d.q}, {"c1", group_to_json(d.q, d.c1)}, {"verdict", verdict_name(d.verdict)}};
    entry["singular"] = d.singular ? group_to_json(d.q, *d.singular) : json(nullptr);
    degrees.push_back(std::move(entry));
  }
  json out{{"degrees", std::move(degrees)}};
  if (report.budget_failure)
    out["budget_exceeded"] = {{"degree", report.budget_failure->degree()},
                              {"reached", report.budget_failure->reached()}};
  return out;
}

}  // namespace cubhom
