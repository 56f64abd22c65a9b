#pragma once

#include <random>
#include <vector>

#include "cubhom/chain_complex.hpp"
#include "cubhom/image.hpp"
#include "oracle/oracle.hpp"

namespace support {

inline oracle::Group as_oracle(const cubhom::FGAbelianGroup& G) {
  oracle::Group g{G.rank(), {}};
  for (auto d : G.torsion()) g.torsion.push_back(d);
  return g;
}

inline std::vector<oracle::Group> as_oracle(const std::vector<cubhom::FGAbelianGroup>& H) {
  std::vector<oracle::Group> out;
  for (const auto& G : H) out.push_back(as_oracle(G));
  return out;
}

inline oracle::Group Zr(std::size_t r) { return {r, {}}; }

// Each point of [0,hi_1] × ... × [0,hi_n] kept with probability p.
inline cubhom::DigitalImage random_image(std::mt19937_64& rng, const std::vector<cubhom::Coord>& hi, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<cubhom::Point> pts;
  std::vector<cubhom::Coord> c(hi.size(), 0);
  while (true) {
    if (keep(rng)) pts.emplace_back(c);
    std::size_t k = 0;
    while (k < hi.size() && ++c[k] > hi[k]) c[k++] = 0;
    if (k == hi.size()) break;
  }
  return cubhom::DigitalImage(hi.size(), pts);
}

// Number of c1-connected components, by union-find over all point pairs.
inline std::size_t component_count(const cubhom::DigitalImage& X) {
  const auto pts = oracle::point_list(X);
  std::vector<std::size_t> parent(pts.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::size_t count = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      long long d = 0;
      for (std::size_t a = 0; a < pts[i].size(); ++a) d += std::llabs(pts[i][a] - pts[j][a]);
      if (d == 1 && find(i) != find(j)) {
        parent[find(i)] = find(j);
        --count;
      }
    }
  return count;
}

}  // namespace support
