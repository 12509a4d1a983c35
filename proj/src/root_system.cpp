#include "shallow/root_system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace shallow {

bool lex_less(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

namespace {

// Gram matrices scaled so every entry is an integer.
Eigen::MatrixXi gram_matrix(char type, int n) {
  auto bad = [&] {
    return std::invalid_argument("invalid Cartan type " + std::string(1, type) +
                                 std::to_string(n));
  };
  Eigen::MatrixXi g = Eigen::MatrixXi::Zero(n, n);
  auto chain = [&](int len, int off) {
    for (int i = 0; i < n; ++i) g(i, i) = len;
    for (int i = 0; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = off;
  };
  switch (type) {
    case 'A':
      if (n < 1) throw bad();
      chain(2, -1);
      break;
    case 'B':
      if (n < 2) throw bad();
      chain(4, -2);
      g(n - 1, n - 1) = 2;
      break;
    case 'C':
      if (n < 2) throw bad();
      chain(2, -1);
      g(n - 1, n - 1) = 4;
      g(n - 2, n - 1) = g(n - 1, n - 2) = -2;
      break;
    case 'D':
      if (n < 4) throw bad();
      chain(2, -1);
      g(n - 2, n - 1) = g(n - 1, n - 2) = 0;
      g(n - 3, n - 1) = g(n - 1, n - 3) = -1;
      break;
    case 'E': {
      if (n < 6 || n > 8) throw bad();
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      auto link = [&](int a, int b) { g(a - 1, b - 1) = g(b - 1, a - 1) = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      if (n != 4) throw bad();
      g << 4, -2, 0, 0,  //
          -2, 4, -2, 0,  //
          0, -2, 2, -1,  //
          0, 0, -1, 2;
      break;
    case 'G':
      if (n != 2) throw bad();
      g << 2, -3,  //
          -3, 6;
      break;
    default:
      throw bad();
  }
  return g;
}

}  // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  gram_ = gram_matrix(type, rank);
  cartan_.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_(i, j) = 2 * gram_(i, j) / gram_(i, i);

  std::map<Root, int, VecLess> seen;
  std::deque<Root> queue;
  for (int i = 0; i < rank; ++i) {
    Root a = simple_root(i);
    seen.emplace(a, 0);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root b = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      Root c = b;
      c(i) -= b.dot(cartan_.row(i).transpose());
      if (seen.emplace(c, 0).second) queue.push_back(c);
    }
  }
  for (const auto& [r, _] : seen)
    if (is_positive(r)) positive_.push_back(r);
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return lex_less(b, a);
  });
  roots_ = positive_;
  for (const auto& r : positive_) roots_.push_back(-r);
  for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k], int(k));

  marks_.push_back(1);
  for (int i = 0; i < rank; ++i) marks_.push_back(highest_root()(i));
  coxeter_ = 0;
  for (int m : marks_) coxeter_ += m;
  for (int i = 0; i < rank; ++i) max_norm2_ = std::max(max_norm2_, gram_(i, i));
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_positive(const Root& r) {
  return (r.array() >= 0).all() && (r.array() > 0).any();
}

int RootSystem::pairing(const Eigen::VectorXi& b, const Root& a) const {
  return 2 * inner(b, a) / norm2(a);
}

Eigen::VectorXi RootSystem::coroot(const Root& a) const {
  Eigen::VectorXi c(rank_);
  int n = norm2(a);
  for (int i = 0; i < rank_; ++i) c(i) = a(i) * gram_(i, i) / n;
  return c;
}

RootSystem build_root_system(char type, int rank) { return RootSystem(type, rank); }

bool parallel(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a(i) * b(j) != a(j) * b(i)) return false;
  return true;
}

namespace {

// c in the rational span of independent a, b.
bool in_span(const Eigen::VectorXi& a, const Eigen::VectorXi& b,
             const Eigen::VectorXi& c) {
  int n = int(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long det = long(a(i)) * b(j) - long(a(j)) * b(i);
      if (det == 0) continue;
      // c = (x a + y b) / det
      long x = long(c(i)) * b(j) - long(c(j)) * b(i);
      long y = long(a(i)) * c(j) - long(a(j)) * c(i);
      for (int k = 0; k < n; ++k)
        if (x * a(k) + y * b(k) != det * c(k)) return false;
      return true;
    }
  return false;
}

}  // namespace

std::string to_string(Rank2Type t) {
  switch (t) {
    case Rank2Type::A1xA1: return "A1xA1";
    case Rank2Type::A2: return "A2";
    case Rank2Type::C2: return "C2";
    case Rank2Type::G2: return "G2";
    case Rank2Type::Collinear: return "collinear";
  }
  return "?";
}

Rank2Type rank2_subsystem_type(const RootSystem& rs, const Root& a, const Root& b) {
  if (parallel(a, b)) return Rank2Type::Collinear;
  int count = 0;
  for (const auto& r : rs.roots())
    if (in_span(a, b, r)) ++count;
  switch (count) {
    case 4: return Rank2Type::A1xA1;
    case 6: return Rank2Type::A2;
    case 8: return Rank2Type::C2;
    case 12: return Rank2Type::G2;
  }
  throw std::logic_error("rank-2 subsystem with " + std::to_string(count) + " roots");
}

std::vector<std::pair<int, int>> root_string(const RootSystem& rs, const Root& a,
                                             const Root& b) {
  std::vector<std::pair<int, int>> out;
  if (parallel(a, b)) return out;
  // Coefficients in a rank-2 reduced system never exceed 3.
  for (int s = 2; s <= 6; ++s)
    for (int i = 1; i < s; ++i) {
      int j = s - i;
      if (i > 3 || j > 3) continue;
      if (rs.is_root(i * a + j * b)) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace shallow
