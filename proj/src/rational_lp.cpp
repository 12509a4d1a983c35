#include "shallow/rational_lp.hpp"

#include <stdexcept>

namespace shallow {

LpResult maximize(const QMatrix& G, const QVector& b, const QVector& c) {
  const int m = int(G.rows()), n = int(G.cols());
  for (int i = 0; i < m; ++i)
    if (b(i) < Rational(0)) throw std::invalid_argument("origin must be feasible");
  // Columns: x+ (n), x- (n), slacks (m), rhs.
  const int cols = 2 * n + m;
  QMatrix T = QMatrix::Constant(m + 1, cols + 1, Rational(0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      T(i, j) = G(i, j);
      T(i, n + j) = -G(i, j);
    }
    T(i, 2 * n + i) = Rational(1);
    T(i, cols) = b(i);
  }
  // Objective row holds reduced costs c_j - z_j.
  for (int j = 0; j < n; ++j) {
    T(m, j) = c(j);
    T(m, n + j) = -c(j);
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = 2 * n + i;

  LpResult res;
  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols && enter < 0; ++j)
      if (T(m, j) > Rational(0)) enter = j;
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (!(T(i, enter) > Rational(0))) continue;
      Rational ratio = T(i, cols) / T(i, enter);
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) {
      res.status = LpResult::Status::Unbounded;
      return res;
    }
    Rational piv = T(leave, enter);
    for (int j = 0; j <= cols; ++j) T(leave, j) /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || T(i, enter) == Rational(0)) continue;
      Rational f = T(i, enter);
      for (int j = 0; j <= cols; ++j)
        if (T(leave, j) != Rational(0)) T(i, j) -= f * T(leave, j);
    }
    basis[leave] = enter;
  }
  res.x = QVector::Constant(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) res.x(basis[i]) += T(i, cols);
    else if (basis[i] < 2 * n) res.x(basis[i] - n) -= T(i, cols);
  }
  res.value = Rational(0);
  for (int j = 0; j < n; ++j) res.value += c(j) * res.x(j);
  return res;
}

std::optional<std::vector<std::pair<Rational, Rational>>> bounding_box(const QMatrix& G,
                                                                      const QVector& b) {
  const int n = int(G.cols());
  std::vector<std::pair<Rational, Rational>> box;
  for (int j = 0; j < n; ++j) {
    QVector c = QVector::Constant(n, Rational(0));
    c(j) = Rational(1);
    LpResult hi = maximize(G, b, c);
    c(j) = Rational(-1);
    LpResult lo = maximize(G, b, c);
    if (hi.status != LpResult::Status::Optimal || lo.status != LpResult::Status::Optimal)
      return std::nullopt;
    box.emplace_back(-lo.value, hi.value);
  }
  return box;
}

}  // namespace shallow
