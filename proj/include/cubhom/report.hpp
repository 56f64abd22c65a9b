#pragma once

// Homology report format shared by the library and the CLI.
//
//   text:  one line per degree, "H_q = Z^r + Z/d1 + ..." ("0" for the zero
//          group, "Z" for rank one)
//   json:  {"q": q, "rank": r, "torsion": [d1, ...]} per degree

#include <string>
#include <vector>

#include <json.hpp>

#include "cubhom/bridge.hpp"
#include "cubhom/chain_complex.hpp"

namespace cubhom {

std::string homology_line(int q, const FGAbelianGroup& G);
std::string homology_text(const std::vector<FGAbelianGroup>& groups);

nlohmann::json group_to_json(int q, const FGAbelianGroup& G);
nlohmann::json homology_json(const std::vector<FGAbelianGroup>& groups);

// Inverse of group_to_json; throws ParseError on schema violations.
std::pair<int, FGAbelianGroup> group_from_json(const nlohmann::json& j);
std::vector<FGAbelianGroup> homology_from_json(const nlohmann::json& j);

std::string iso_report_text(const IsoReport& report);
nlohmann::json iso_report_json(const IsoReport& report);

}  // namespace cubhom
