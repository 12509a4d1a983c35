#include "shallow/weyl_element.hpp"

#include <sstream>
#include <stdexcept>

namespace shallow {

AffineWeylElement AffineWeylElement::identity(const RootSystem& rs) {
  AffineWeylElement w;
  int l = rs.rank();
  w.M_ = Eigen::MatrixXi::Identity(l, l);
  w.A_ = w.M_;
  w.t_ = Eigen::VectorXi::Zero(l);
  return w;
}

AffineWeylElement AffineWeylElement::simple(const RootSystem& rs, int i) {
  int l = rs.rank();
  if (i < 0 || i > l) throw std::invalid_argument("simple reflection index out of range");
  AffineWeylElement w = identity(rs);
  if (i > 0) {
    w.M_.row(i - 1) -= rs.cartan().row(i - 1);
  } else {
    // s_0 = translation by theta^vee after s_theta.
    const Root& th = rs.highest_root();
    Eigen::RowVectorXi rho = (rs.gram() * th).transpose() * 2 / rs.norm2(th);
    w.M_ -= th * rho;
    w.t_ = rho.transpose();
  }
  w.A_ = w.M_.transpose();
  w.word_ = {i};
  return w;
}

AffineWeylElement AffineWeylElement::from_word(const RootSystem& rs,
                                               const std::vector<int>& word) {
  AffineWeylElement w = identity(rs);
  for (int i : word) w = w * simple(rs, i);
  return w;
}

AffineWeylElement AffineWeylElement::translation(const RootSystem& rs,
                                                 const Eigen::VectorXi& k) {
  AffineWeylElement w = identity(rs);
  w.t_ = rs.cartan().transpose() * k;
  return w.reduced(rs);
}

AffineRoot AffineWeylElement::act(const AffineRoot& a) const {
  Root g = M_ * a.gradient;
  return {g, a.level - g.dot(t_)};
}

Point AffineWeylElement::act(const Point& mu) const {
  Point out(mu.size());
  for (int i = 0; i < mu.size(); ++i) {
    Rational s(t_(i));
    for (int j = 0; j < mu.size(); ++j)
      if (A_(i, j) != 0) s += Rational(A_(i, j)) * mu(j);
    out(i) = s;
  }
  return out;
}

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement& o) const {
  AffineWeylElement w;
  w.M_ = M_ * o.M_;
  w.A_ = A_ * o.A_;
  w.t_ = A_ * o.t_ + t_;
  w.word_ = word_;
  w.word_.insert(w.word_.end(), o.word_.begin(), o.word_.end());
  return w;
}

AffineWeylElement AffineWeylElement::inverse() const {
  AffineWeylElement w;
  w.M_ = A_.transpose();
  w.A_ = M_.transpose();
  w.t_ = -(M_.transpose() * t_);
  w.word_.assign(word_.rbegin(), word_.rend());
  return w;
}

bool AffineWeylElement::is_identity() const {
  return M_.isIdentity() && t_.isZero();
}

AffineWeylElement AffineWeylElement::reduced(const RootSystem& rs) const {
  AffineWeylElement cur = *this;
  cur.word_.clear();
  std::vector<int> word;
  std::vector<AffineWeylElement> gens;
  for (int i = 0; i <= rs.rank(); ++i) gens.push_back(simple(rs, i));
  while (!cur.is_identity()) {
    AffineWeylElement inv = cur.inverse();
    int found = -1;
    for (int i = 0; i <= rs.rank() && found < 0; ++i)
      if (!is_positive(inv.act(simple_affine_root(rs, i)))) found = i;
    if (found < 0) throw std::logic_error("non-identity element without a left descent");
    word.push_back(found);
    AffineWeylElement next = gens[found] * cur;
    next.word_.clear();
    cur = next;
  }
  AffineWeylElement out = *this;
  out.word_ = word;
  return out;
}

int AffineWeylElement::length(const RootSystem& rs) const {
  return int(reduced(rs).word_.size());
}

std::string format_word(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << "s" << word[k];
  return os.str();
}

}  // namespace shallow
