#include "shallow/affine_roots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shallow {

AffineRoot simple_affine_root(const RootSystem& rs, int i) {
  if (i == 0) return {-rs.highest_root(), 1};
  return {rs.simple_root(i - 1), 0};
}

bool is_positive(const AffineRoot& a) {
  return a.level > 0 || (a.level == 0 && RootSystem::is_positive(a.gradient));
}

Eigen::VectorXi delta_coords(const RootSystem& rs, const AffineRoot& a) {
  if (!is_positive(a)) return -delta_coords(rs, -a);
  int l = rs.rank();
  Eigen::VectorXi c(l + 1);
  c(0) = a.level;
  c.tail(l) = a.gradient + a.level * rs.highest_root();
  return c;
}

AffineRoot from_delta_coords(const RootSystem& rs, const Eigen::VectorXi& c) {
  return {c.tail(rs.rank()) - c(0) * rs.highest_root(), c(0)};
}

std::string format_root(const RootSystem& rs, const AffineRoot& a) {
  Eigen::VectorXi c = delta_coords(rs, a);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < c.size(); ++i) {
    if (c(i) == 0) continue;
    if (c(i) < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (std::abs(c(i)) != 1) os << std::abs(c(i));
    os << 'a' << i;
    first = false;
  }
  return first ? "0" : os.str();
}

Rational pair(const Root& a, const Point& lambda) {
  Rational s(0);
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != 0) s += Rational(a(i)) * lambda(i);
  return s;
}

Rational depth(const AffineRoot& a, const Point& lambda) {
  return pair(a.gradient, lambda) + Rational(a.level);
}

bool is_shallow(const AffineRoot& a, const Point& lambda) {
  Rational d = depth(a, lambda);
  return Rational(0) < d && d < Rational(1);
}

std::vector<int> Facet::indices() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < J.size(); ++j)
    if (J[j]) out.push_back(int(j));
  return out;
}

bool in_closed_alcove(const RootSystem& rs, const Point& lambda) {
  if (lambda.size() != rs.rank()) return false;
  for (int i = 0; i <= rs.rank(); ++i)
    if (depth(simple_affine_root(rs, i), lambda) < Rational(0)) return false;
  return true;
}

Facet facet_of(const RootSystem& rs, const Point& lambda) {
  if (!in_closed_alcove(rs, lambda))
    throw std::invalid_argument("point is not in the closed fundamental alcove");
  Facet f;
  for (int i = 0; i <= rs.rank(); ++i)
    f.J.push_back(depth(simple_affine_root(rs, i), lambda) > Rational(0));
  return f;
}

Facet facet_from_indices(const RootSystem& rs, const std::vector<int>& J) {
  Facet f{std::vector<bool>(rs.rank() + 1, false)};
  for (int j : J) {
    if (j < 0 || j > rs.rank()) throw std::invalid_argument("facet index out of range");
    f.J[j] = true;
  }
  if (J.empty()) throw std::invalid_argument("facet needs a nonempty J");
  return f;
}

Point barycenter(const RootSystem& rs) {
  std::vector<int> all;
  for (int i = 0; i <= rs.rank(); ++i) all.push_back(i);
  return facet_barycenter(rs, facet_from_indices(rs, all));
}

Point facet_barycenter(const RootSystem& rs, const Facet& facet) {
  // On the face spanned by the vertices v_j (j in J), the point with equal
  // weights has alpha_j = 1 / sum_{k in J} m_k for each j in J.
  int total = 0;
  for (int j : facet.indices()) total += rs.marks()[j];
  if (total == 0) throw std::invalid_argument("facet needs a nonempty J");
  Point p(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    p(i) = facet.contains(i + 1) ? Rational(1, total) : Rational(0);
  return p;
}

std::vector<AffineRoot> shallow_roots(const RootSystem& rs, const Point& lambda) {
  if (!in_closed_alcove(rs, lambda))
    throw std::invalid_argument("point is not in the closed fundamental alcove");
  std::vector<AffineRoot> out;
  for (const auto& a : rs.roots()) {
    // Exactly one level puts the value in [0, 1).
    Rational v = pair(a, lambda);
    AffineRoot r{a, int(-v.floor())};
    if (is_shallow(r, lambda)) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [&](const AffineRoot& x, const AffineRoot& y) {
    Rational dx = depth(x, lambda), dy = depth(y, lambda);
    if (dx != dy) return dx < dy;
    return lex_less(delta_coords(rs, y), delta_coords(rs, x));
  });
  return out;
}

int n_J(const RootSystem& rs, const AffineRoot& a, const Facet& facet) {
  Eigen::VectorXi c = delta_coords(rs, a);
  int s = 0;
  for (int j = 0; j < c.size(); ++j)
    if (facet.contains(j)) s += c(j);
  return s;
}

bool is_indecomposable(const RootSystem& rs, const AffineRoot& a, const Point& lambda) {
  if (!is_shallow(a, lambda)) throw std::invalid_argument("affine root is not shallow");
  return n_J(rs, a, facet_of(rs, lambda)) == 1;
}

std::optional<std::pair<AffineRoot, AffineRoot>> decompose_shallow(
    const RootSystem& rs, const AffineRoot& a, const Point& lambda) {
  if (!is_shallow(a, lambda)) throw std::invalid_argument("affine root is not shallow");
  if (n_J(rs, a, facet_of(rs, lambda)) == 1) return std::nullopt;
  auto is_affine_root = [&](const AffineRoot& r) { return rs.is_root(r.gradient); };
  // Peel a simple root off the chain first.
  for (int j = 0; j <= rs.rank(); ++j) {
    AffineRoot b = simple_affine_root(rs, j);
    AffineRoot rest = a + (-b);
    if (is_shallow(b, lambda) && is_affine_root(rest) && is_shallow(rest, lambda))
      return std::make_pair(b, rest);
  }
  for (const auto& b : shallow_roots(rs, lambda)) {
    AffineRoot rest = a + (-b);
    if (is_affine_root(rest) && is_shallow(rest, lambda)) return std::make_pair(b, rest);
  }
  throw std::logic_error("shallow root with n_J >= 2 has no decomposition");
}

}  // namespace shallow
