// Chevalley basis structure constants and commutator expansions.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "shallow/affine_roots.hpp"
#include "shallow/root_system.hpp"
#include "shallow/weyl_element.hpp"

namespace shallow {

// Signs of N_{r,s} on the extraspecial pairs, one per non-simple positive
// root in positive_roots() order.
class Pinning {
 public:
  static Pinning standard(const RootSystem& rs);
  // "default", or a string of '+'/'-' with one sign per non-simple positive root.
  static Pinning parse(const RootSystem& rs, const std::string& text);

  const std::vector<int>& signs() const { return signs_; }
  std::string str() const;
  bool is_default() const;
  // FNV-1a over str().
  std::uint64_t hash() const;
  std::string id() const;

 private:
  std::vector<int> signs_;
};

// Constant C_{a,b,i,j} of the term u_{ia+jb}(C x^i y^j) in [u_a(x), u_b(y)],
// with [g, h] = g^{-1} h^{-1} g h.
struct CommutatorTerm {
  int i = 0;
  int j = 0;
  int constant = 0;
  friend bool operator==(const CommutatorTerm&, const CommutatorTerm&) = default;
};

class Chevalley {
 public:
  Chevalley(const RootSystem& rs, Pinning pinning);

  const RootSystem& root_system() const { return rs_; }
  const Pinning& pinning() const { return pinning_; }

  // [e_a, e_b] = N_{a,b} e_{a+b}; zero when a+b is not a root.
  int N(const Root& a, const Root& b) const;

  // Terms of [u_a(x), u_b(y)] ordered by (i+j, i). Computed in the adjoint
  // representation and checked against the identity element.
  std::vector<CommutatorTerm> finite_commutator(const Root& a, const Root& b) const;

  // n_r(1) e_b = sign * e_{s_r b}, with n_r(1) = u_r(1) u_{-r}(-1) u_r(1).
  int reflection_sign(const Root& r, const Root& b) const;

  // Adjoint action exp(t ad e_a) on a vector in the basis e_c (c in roots()
  // order) followed by the simple coroots h_1..h_l.
  using AdVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;
  AdVector ad(const Root& a, const AdVector& v) const;
  AdVector exp_ad(const Root& a, long long t, const AdVector& v) const;
  int adjoint_dim() const { return int(rs_.roots().size()) + rs_.rank(); }

 private:
  int N_index(int a, int b) const;
  int compute_mixed(int a, int b) const;

  RootSystem rs_;
  Pinning pinning_;
  std::vector<int> n_;  // |R| x |R|, valid where a+b is a root
  int nroots_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, int>, std::vector<CommutatorTerm>> cache_;
};

struct ExpansionTerm {
  AffineRoot root;
  CommutatorTerm term;
};

// Full expansion of [u_a(x), u_b(y)] = prod u_{ia+jb}(C x^i y^j). Since
// u_{a+m}(x) = u_a(w^m x) the constants equal the finite ones. Throws for
// parallel gradients, where the commutator is torus-valued.
std::vector<ExpansionTerm> commutator_expansion(const Chevalley& ch, const AffineRoot& a,
                                                const AffineRoot& b);
// The same, keeping only terms shallow at lambda.
std::vector<ExpansionTerm> shallow_commutator_expansion(const Chevalley& ch,
                                                        const AffineRoot& a,
                                                        const AffineRoot& b,
                                                        const Point& lambda);

// n u_a(x) n^{-1} = u_{w a}(sign * x) for the lift n of w along its word.
struct Conjugate {
  AffineRoot root;
  int sign = 1;
};
Conjugate weyl_conjugation(const Chevalley& ch, const AffineWeylElement& w,
                           const AffineRoot& a);
// Sign contributed by one letter (0..l) acting on a.
int letter_sign(const Chevalley& ch, int letter, const AffineRoot& a);

}  // namespace shallow
