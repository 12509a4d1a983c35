// Exact linear programming over the rationals.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shallow/affine_roots.hpp"

namespace shallow {

struct LpResult {
  enum class Status { Optimal, Unbounded };
  Status status = Status::Optimal;
  Rational value;
  QVector x;
};

// max c.x subject to G x <= b with x free. Requires b >= 0 so that x = 0 is
// feasible. Simplex with Bland's rule, so it always terminates.
LpResult maximize(const QMatrix& G, const QVector& b, const QVector& c);

// Coordinate bounds of {x : G x <= b}, or nothing if the set is unbounded.
std::optional<std::vector<std::pair<Rational, Rational>>> bounding_box(const QMatrix& G,
                                                                      const QVector& b);

}  // namespace shallow
