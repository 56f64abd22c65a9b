#include "cubhom/image_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cubhom/error.hpp"

namespace cubhom {

using nlohmann::json;

namespace {

Coord parse_coord_json(const json& v) {
  if (!v.is_number_integer()) fail(ErrorCode::ParseError, "coordinate is not an integer: " + v.dump());
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    fail(ErrorCode::ParseError, "coordinate out of range: " + v.dump());
  return v.get<Coord>();
}

Point parse_point_json(const json& v) {
  if (!v.is_array() || v.empty()) fail(ErrorCode::ParseError, "point must be a nonempty array");
  std::vector<Coord> c;
  c.reserve(v.size());
  for (const auto& x : v) c.push_back(parse_coord_json(x));
  return Point(std::move(c));
}

json point_to_json(const Point& p) { return json(p.coords()); }

bool looks_like_json(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{';
  }
  return false;
}

DigitalImage parse_image_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("ambient_dim") || !doc.contains("points"))
    fail(ErrorCode::ParseError, "image object needs \"ambient_dim\" and \"points\"");
  const json& dim = doc["ambient_dim"];
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1)
    fail(ErrorCode::ParseError, "ambient_dim must be a positive integer");
  if (!doc["points"].is_array()) fail(ErrorCode::ParseError, "points must be an array");
  std::vector<Point> pts;
  for (const auto& p : doc["points"]) pts.push_back(parse_point_json(p));
  const auto n = static_cast<std::size_t>(dim.get<std::int64_t>());
  for (const Point& p : pts)
    if (p.dim() != n) fail(ErrorCode::ParseError, "point length differs from ambient_dim");
  return DigitalImage(n, std::move(pts));
}

DigitalImage parse_image_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Point> pts;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string tok;
    std::vector<Coord> c;
    while (fields >> tok) {
      Coord value{};
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || end != tok.data() + tok.size())
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad coordinate '" + tok + "'");
      c.push_back(value);
    }
    if (c.empty()) continue;
    if (!pts.empty() && c.size() != pts.front().dim())
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": point length differs");
    pts.emplace_back(std::move(c));
  }
  const std::size_t n = pts.empty() ? 1 : pts.front().dim();
  return DigitalImage(n, std::move(pts));
}

}  // namespace

DigitalImage parse_image(const std::string& text) {
  return looks_like_json(text) ? parse_image_json(text) : parse_image_text(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DigitalImage read_image_file(const std::string& path) { return parse_image(read_text_file(path)); }

std::string image_to_json(const DigitalImage& X) {
  json pts = json::array();
  for (const Point& p : X.points()) pts.push_back(point_to_json(p));
  json doc = {{"ambient_dim", X.ambient_dim()}, {"points", std::move(pts)}};
  return doc.dump();
}

PointMap parse_map(const std::string& text, const DigitalImage& domain, const DigitalImage& codomain) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array())
    fail(ErrorCode::ParseError, "map object needs a \"pairs\" array");
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& pr : doc["pairs"]) {
    if (!pr.is_array() || pr.size() != 2) fail(ErrorCode::ParseError, "pair must be [[x...],[y...]]");
    pairs.emplace_back(parse_point_json(pr[0]), parse_point_json(pr[1]));
  }
  return PointMap(domain, codomain, pairs);
}

PointMap read_map_file(const std::string& path, const DigitalImage& domain,
                       const DigitalImage& codomain) {
  return parse_map(read_text_file(path), domain, codomain);
}

std::string map_to_json(const PointMap& f) {
  json pairs = json::array();
  for (const auto& [x, y] : f.pairs()) pairs.push_back(json::array({point_to_json(x), point_to_json(y)}));
  return json{{"pairs", std::move(pairs)}}.dump();
}

}  // namespace cubhom
