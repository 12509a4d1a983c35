// Points shared by the property tests: each barycenter plus one point on a
// proper face.
#pragma once

#include <vector>

#include "shallow/affine_roots.hpp"

namespace fixtures {

struct Site {
  char type;
  int rank;
  shallow::Point lambda;
};

inline std::vector<Site> property_sites() {
  using namespace shallow;
  std::vector<Site> out;
  struct T {
    char type;
    int rank;
    std::vector<int> face;
  };
  for (const T& t : {T{'A', 2, {0, 1}}, T{'C', 2, {1, 2}}, T{'G', 2, {0, 2}},
                     T{'A', 3, {0, 2, 3}}, T{'B', 3, {1, 3}}}) {
    RootSystem rs(t.type, t.rank);
    out.push_back({t.type, t.rank, barycenter(rs)});
    out.push_back({t.type, t.rank, facet_barycenter(rs, facet_from_indices(rs, t.face))});
  }
  return out;
}

}  // namespace fixtures
