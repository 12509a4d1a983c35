// Dense linear algebra over the prime field F_p.
#pragma once

#include <vector>

#include <Eigen/Core>

namespace shallow {

using FpMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using FpVector = Eigen::Matrix<int, Eigen::Dynamic, 1>;

struct Rref {
  FpMatrix matrix;          // reduced rows only, rank x cols
  std::vector<int> pivots;  // pivot column of each row
};

Rref rref(FpMatrix m, int p);
int rank_mod(const FpMatrix& m, int p);
// Columns form a basis of {v : m v = 0}; free variables in ascending order.
FpMatrix nullspace(const FpMatrix& m, int p);

}  // namespace shallow
