// Elements of the affine Weyl group W_aff = W ⋉ Q^vee.
#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "shallow/affine_roots.hpp"
#include "shallow/root_system.hpp"

namespace shallow {

// Acts on affine roots by (a, n) -> (M a, n - (M a).t) and on points by
// mu -> A mu + t, where A = M^{-T}. Both actions are exact and compatible:
// (w a)(w mu) = a(mu).
//
// The stored word is the product of simple reflections that produced the
// element (letters 0..l, applied right to left). Composition concatenates
// words, so the lifted signs compose letter by letter.
class AffineWeylElement {
 public:
  static AffineWeylElement identity(const RootSystem& rs);
  static AffineWeylElement simple(const RootSystem& rs, int i);
  static AffineWeylElement from_word(const RootSystem& rs, const std::vector<int>& word);
  // Translation by the coroot-lattice vector sum_j k_j a_j^vee. The word is
  // a reduced expression found by descent.
  static AffineWeylElement translation(const RootSystem& rs, const Eigen::VectorXi& k);

  AffineRoot act(const AffineRoot& a) const;
  Point act(const Point& mu) const;

  AffineWeylElement operator*(const AffineWeylElement& o) const;
  AffineWeylElement inverse() const;

  const Eigen::MatrixXi& root_matrix() const { return M_; }
  const Eigen::MatrixXi& point_matrix() const { return A_; }
  const Eigen::VectorXi& translation_part() const { return t_; }
  const std::vector<int>& word() const { return word_; }

  // Same group element, word replaced by the lexicographically least
  // reduced expression.
  AffineWeylElement reduced(const RootSystem& rs) const;
  int length(const RootSystem& rs) const;
  bool is_identity() const;
  bool same_element(const AffineWeylElement& o) const { return M_ == o.M_ && t_ == o.t_; }

 private:
  Eigen::MatrixXi M_;
  Eigen::MatrixXi A_;
  Eigen::VectorXi t_;
  std::vector<int> word_;
};

std::string format_word(const std::vector<int>& word);

}  // namespace shallow
