// Affine roots a + n as functionals on the apartment.
//
// Points are stored in coweight coordinates: lambda(i) = a_i(lambda) for the
// simple roots a_1..a_l, so <a, lambda> is a plain dot product.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "shallow/rational.hpp"
#include "shallow/root_system.hpp"

namespace shallow {

using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Point = QVector;

struct AffineRoot {
  Root gradient;
  int level = 0;

  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.level == b.level && a.gradient == b.gradient;
  }
};

struct AffineRootLess {
  bool operator()(const AffineRoot& a, const AffineRoot& b) const {
    if (a.level != b.level) return a.level < b.level;
    return lex_less(a.gradient, b.gradient);
  }
};

inline AffineRoot operator+(const AffineRoot& a, const AffineRoot& b) {
  return {a.gradient + b.gradient, a.level + b.level};
}
inline AffineRoot operator-(const AffineRoot& a) { return {-a.gradient, -a.level}; }
inline AffineRoot operator*(int k, const AffineRoot& a) {
  return {k * a.gradient, k * a.level};
}

// alpha_0 = -theta + 1 for i = 0, else a_i + 0.
AffineRoot simple_affine_root(const RootSystem& rs, int i);

// Positive as a functional on the fundamental alcove.
bool is_positive(const AffineRoot& a);

// Coordinates over alpha_0..alpha_l. Nonnegative for positive affine roots,
// nonpositive for negative ones.
Eigen::VectorXi delta_coords(const RootSystem& rs, const AffineRoot& a);
AffineRoot from_delta_coords(const RootSystem& rs, const Eigen::VectorXi& c);

// Text such as "a0+2a1" (a_i read as alpha_i); falls back to "(g)+n" form.
std::string format_root(const RootSystem& rs, const AffineRoot& a);

Rational pair(const Root& a, const Point& lambda);
Rational depth(const AffineRoot& a, const Point& lambda);
bool is_shallow(const AffineRoot& a, const Point& lambda);

// Facet as the set J of simple affine roots that do not vanish at the point.
struct Facet {
  std::vector<bool> J;  // size l+1

  bool contains(int j) const { return J[j]; }
  std::vector<int> indices() const;
  friend bool operator==(const Facet&, const Facet&) = default;
};

// Throws if lambda lies outside the closed fundamental alcove.
Facet facet_of(const RootSystem& rs, const Point& lambda);
bool in_closed_alcove(const RootSystem& rs, const Point& lambda);
Point barycenter(const RootSystem& rs);
// Barycenter of the face where exactly the alpha_j, j in J, are nonzero.
Point facet_barycenter(const RootSystem& rs, const Facet& facet);
Facet facet_from_indices(const RootSystem& rs, const std::vector<int>& J);

// Shallow roots at lambda, ordered by depth, then delta coordinates
// lexicographically descending.
std::vector<AffineRoot> shallow_roots(const RootSystem& rs, const Point& lambda);

int n_J(const RootSystem& rs, const AffineRoot& a, const Facet& facet);

// Throws std::invalid_argument unless a is shallow at lambda.
bool is_indecomposable(const RootSystem& rs, const AffineRoot& a, const Point& lambda);

// A pair (beta, a - beta) of shallow roots, or nothing when n_J(a) = 1.
std::optional<std::pair<AffineRoot, AffineRoot>> decompose_shallow(
    const RootSystem& rs, const AffineRoot& a, const Point& lambda);

}  // namespace shallow
