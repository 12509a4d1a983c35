// Finite irreducible reduced root systems in the simple-root basis.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace shallow {

// A root as an integer vector over the simple roots.
using Root = Eigen::VectorXi;

// Lexicographic order on integer vectors of equal size.
bool lex_less(const Eigen::VectorXi& a, const Eigen::VectorXi& b);

struct VecLess {
  bool operator()(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
    return lex_less(a, b);
  }
};

class RootSystem {
 public:
  RootSystem(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  // Symmetric bilinear form on simple roots, integral.
  const Eigen::MatrixXi& gram() const { return gram_; }
  // cartan(i,j) = <a_j, a_i^vee> = 2(a_i,a_j)/(a_i,a_i).
  const Eigen::MatrixXi& cartan() const { return cartan_; }

  // Positive roots ordered by height, then coefficients lexicographically
  // descending (a_1 precedes a_2).
  const std::vector<Root>& positive_roots() const { return positive_; }
  // Positive roots followed by their negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  Root simple_root(int i) const { return Root::Unit(rank_, i); }
  const Root& highest_root() const { return positive_.back(); }
  // m_0 = 1 followed by the coefficients of the highest root.
  const std::vector<int>& marks() const { return marks_; }
  int coxeter_number() const { return coxeter_; }

  // Index into roots(), or -1.
  int index_of(const Root& r) const;
  bool is_root(const Root& r) const { return index_of(r) >= 0; }
  static bool is_positive(const Root& r);
  int height(const Root& r) const { return r.sum(); }

  int inner(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
    return a.dot(gram_ * b);
  }
  int norm2(const Eigen::VectorXi& a) const { return inner(a, a); }
  bool is_long(const Root& r) const { return norm2(r) == max_norm2_; }
  // <b, a^vee> = 2(b,a)/(a,a).
  int pairing(const Eigen::VectorXi& b, const Root& a) const;
  Root reflect(const Root& a, const Root& b) const { return b - pairing(b, a) * a; }
  // Coefficients of a^vee over the simple coroots.
  Eigen::VectorXi coroot(const Root& a) const;

 private:
  char type_;
  int rank_;
  Eigen::MatrixXi gram_;
  Eigen::MatrixXi cartan_;
  std::vector<Root> positive_;
  std::vector<Root> roots_;
  std::map<Root, int, VecLess> index_;
  std::vector<int> marks_;
  int coxeter_ = 0;
  int max_norm2_ = 0;
};

RootSystem build_root_system(char type, int rank);

enum class Rank2Type { A1xA1, A2, C2, G2, Collinear };
std::string to_string(Rank2Type t);

// Type of the rank-2 subsystem R ∩ span(a, b).
Rank2Type rank2_subsystem_type(const RootSystem& rs, const Root& a, const Root& b);

// All (i, j), i, j > 0, with i*a + j*b a root, ordered by (i+j, i).
std::vector<std::pair<int, int>> root_string(const RootSystem& rs, const Root& a,
                                             const Root& b);

bool parallel(const Eigen::VectorXi& a, const Eigen::VectorXi& b);

}  // namespace shallow
