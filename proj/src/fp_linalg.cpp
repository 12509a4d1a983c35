#include "shallow/fp_linalg.hpp"

#include <stdexcept>

namespace shallow {

namespace {

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::domain_error("no inverse mod p");
}

}  // namespace

Rref rref(FpMatrix m, int p) {
  m = m.unaryExpr([p](int v) { return ((v % p) + p) % p; });
  Rref out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    m.row(row).swap(m.row(piv));
    int s = inv_mod(m(row, col), p);
    m.row(row) = m.row(row).unaryExpr([&](int v) { return v * s % p; });
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      int f = m(r, col);
      for (int c = 0; c < m.cols(); ++c) m(r, c) = ((m(r, c) - f * m(row, c)) % p + p) % p;
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.matrix = m.topRows(row);
  return out;
}

int rank_mod(const FpMatrix& m, int p) { return int(rref(m, p).pivots.size()); }

FpMatrix nullspace(const FpMatrix& m, int p) {
  Rref r = rref(m, p);
  int n = int(m.cols());
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<int> free;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  FpMatrix basis = FpMatrix::Zero(n, int(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      basis(r.pivots[i], k) = (p - r.matrix(i, free[k])) % p;
  }
  return basis;
}

}  // namespace shallow
