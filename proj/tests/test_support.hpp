#pragma once

#include <initializer_list>
#include <vector>

#include "kstab/polytope.hpp"
#include "kstab/rational.hpp"

namespace kstab::test {

inline Rat R(long p, long q = 1) { return Rat(p, q); }

inline RatVec rv(std::initializer_list<long> xs) {
  RatVec out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

// Vertices of a polygon in boundary order, walking edge adjacency.
inline std::vector<RatVec> cyclic_order(const Polytope& p) {
  const auto& edges = p.facet_vertices();
  std::vector<RatVec> ring{p.vertices()[edges[0][0]]};
  std::size_t prev = edges[0][0], cur = edges[0][1];
  while (cur != edges[0][0]) {
    ring.push_back(p.vertices()[cur]);
    for (const auto& e : edges) {
      if (e[0] == cur && e[1] != prev) {
        prev = cur;
        cur = e[1];
        break;
      }
      if (e[1] == cur && e[0] != prev) {
        prev = cur;
        cur = e[0];
        break;
      }
    }
  }
  return ring;
}

}  // namespace kstab::test
