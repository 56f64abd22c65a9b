#pragma once

// Image and map file formats.
//
//   image (JSON):  {"ambient_dim": n, "points": [[x1,...,xn], ...]}
//   image (text):  one whitespace-separated point per line; '#' starts a
//                  comment; the dimension is taken from the first point
//   map (JSON):    {"pairs": [[[x...], [y...]], ...]}
//
// Every failure is reported as Error{ParseError}, except duplicate points
// (DuplicatePoint) and maps that reference points outside their images.

#include <iosfwd>
#include <string>

#include "cubhom/image.hpp"

namespace cubhom {

DigitalImage parse_image(const std::string& text);
DigitalImage read_image_file(const std::string& path);

std::string image_to_json(const DigitalImage& X);

PointMap parse_map(const std::string& text, const DigitalImage& domain, const DigitalImage& codomain);
PointMap read_map_file(const std::string& path, const DigitalImage& domain,
                       const DigitalImage& codomain);

std::string map_to_json(const PointMap& f);

std::string read_text_file(const std::string& path);

}  // namespace cubhom
