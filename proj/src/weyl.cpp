#include "shallow/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "shallow/rational_lp.hpp"

namespace shallow {

namespace {

std::vector<int> element_key(const AffineWeylElement& w) {
  std::vector<int> k(w.root_matrix().data(), w.root_matrix().data() + w.root_matrix().size());
  k.insert(k.end(), w.translation_part().data(),
           w.translation_part().data() + w.translation_part().size());
  return k;
}

bool same_point(const Point& a, const Point& b) {
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool word_order(const AffineWeylElement& a, const AffineWeylElement& b) {
  if (a.word().size() != b.word().size()) return a.word().size() < b.word().size();
  return a.word() < b.word();
}

std::vector<AffineWeylElement> closure(const RootSystem& rs, const std::vector<int>& gens,
                                       int radius, std::size_t max_size) {
  std::set<std::vector<int>> seen;
  std::vector<AffineWeylElement> out;
  std::vector<AffineWeylElement> frontier{AffineWeylElement::identity(rs)};
  seen.insert(element_key(frontier[0]));
  for (int len = 0; !frontier.empty(); ++len) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    if (out.size() > max_size) throw std::length_error("Weyl group enumeration too large");
    if (radius >= 0 && len == radius) break;
    std::vector<AffineWeylElement> next;
    for (const auto& w : frontier)
      for (int i : gens) {
        AffineWeylElement v = w * AffineWeylElement::simple(rs, i);
        if (seen.insert(element_key(v)).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  for (auto& w : out) w = w.reduced(rs);
  std::sort(out.begin(), out.end(), word_order);
  return out;
}

}  // namespace

std::vector<AffineWeylElement> weyl_ball(const RootSystem& rs, int radius) {
  std::vector<int> gens;
  for (int i = 0; i <= rs.rank(); ++i) gens.push_back(i);
  return closure(rs, gens, radius, std::size_t(-1));
}

std::vector<AffineWeylElement> finite_weyl_group(const RootSystem& rs, std::size_t max_size) {
  std::vector<int> gens;
  for (int i = 1; i <= rs.rank(); ++i) gens.push_back(i);
  return closure(rs, gens, -1, max_size);
}

std::vector<AffineRoot> support(const RootSystem& rs, const Point& mu, const Rational& s,
                                const Point& lambda) {
  std::vector<AffineRoot> out;
  for (const auto& a : shallow_roots(rs, lambda))
    if (depth(a, mu) >= s) out.push_back(a);
  return out;
}

AffineWeylElement long_element(const RootSystem& rs, const std::vector<int>& I) {
  std::set<int> set(I.begin(), I.end());
  if (set.empty() || int(set.size()) > rs.rank() || *set.begin() < 0 ||
      *set.rbegin() > rs.rank())
    throw std::invalid_argument("I must be a nonempty proper subset of {0..l}");
  AffineWeylElement w = AffineWeylElement::identity(rs);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : set)
      if (is_positive(w.act(simple_affine_root(rs, i)))) {
        w = w * AffineWeylElement::simple(rs, i);
        grew = true;
        break;
      }
  }
  for (int i : set)
    if (is_positive(w.act(simple_affine_root(rs, i))))
      throw std::logic_error("long element does not negate its simple roots");
  return w;
}

std::string to_string(StarVerdict::Status s) {
  switch (s) {
    case StarVerdict::Status::Holds: return "holds";
    case StarVerdict::Status::Fails: return "fails";
    case StarVerdict::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(ScanResult::Verdict v) {
  switch (v) {
    case ScanResult::Verdict::CollapsesToPChi: return "collapses_to_P_chi";
    case ScanResult::Verdict::Counterexample: return "counterexample";
    case ScanResult::Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

bool vanishes_beyond_depth(const ShallowCharacter& chi, const Point& mu) {
  Rational r = char_depth(chi);
  const Context& ctx = *chi.ctx;
  for (std::size_t k = 0; k < ctx.size(); ++k)
    if (chi.params[k] != 0 && depth(ctx.shallow()[k], mu) > r) return false;
  return true;
}

}  // namespace

bool is_star_witness(const ShallowCharacter& chi, const AffineWeylElement& w) {
  Point mu = w.act(chi.ctx->lambda());
  return !same_point(mu, chi.ctx->lambda()) && vanishes_beyond_depth(chi, mu);
}

StarVerdict condition_star(const ShallowCharacter& chi, const StarOptions& opts) {
  if (chi.is_trivial())
    throw std::invalid_argument("condition (*) is degenerate for the trivial character");
  const Context& ctx = *chi.ctx;
  const RootSystem& rs = ctx.root_system();
  const Point& lambda = ctx.lambda();
  const int l = rs.rank();
  Rational r = char_depth(chi);

  // Polytope {mu : a(mu) <= r on the support}, shifted so lambda is the origin.
  std::vector<int> supp;
  for (std::size_t k = 0; k < ctx.size(); ++k)
    if (chi.params[k] != 0) supp.push_back(int(k));
  QMatrix G(int(supp.size()), l);
  QVector b(int(supp.size()));
  for (std::size_t s = 0; s < supp.size(); ++s) {
    const AffineRoot& a = ctx.shallow()[supp[s]];
    for (int i = 0; i < l; ++i) G(int(s), i) = Rational(a.gradient(i));
    b(int(s)) = r - depth(a, lambda);
  }
  auto box = bounding_box(G, b);

  // Translations t = C^T k in coweight coordinates; k = (C^T)^{-1} t.
  QMatrix Ct(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) Ct(i, j) = Rational(rs.cartan()(j, i));
  QMatrix Ctinv = QMatrix::Identity(l, l);
  {
    QMatrix M = Ct;
    for (int c = 0; c < l; ++c) {
      int piv = c;
      while (M(piv, c) == Rational(0)) ++piv;
      M.row(c).swap(M.row(piv));
      Ctinv.row(c).swap(Ctinv.row(piv));
      Rational d = M(c, c);
      for (int j = 0; j < l; ++j) {
        M(c, j) /= d;
        Ctinv(c, j) /= d;
      }
      for (int i = 0; i < l; ++i) {
        if (i == c || M(i, c) == Rational(0)) continue;
        Rational f = M(i, c);
        for (int j = 0; j < l; ++j) {
          M(i, j) -= f * M(c, j);
          Ctinv(i, j) -= f * Ctinv(c, j);
        }
      }
    }
  }

  StarVerdict v;
  v.bounded = box.has_value();
  v.radius = v.bounded ? 0 : opts.translation_radius;
  std::optional<AffineWeylElement> best;
  for (const auto& f : finite_weyl_group(rs)) {
    Point fl = f.act(lambda);
    std::vector<long long> kmin(l), kmax(l);
    if (v.bounded) {
      for (int j = 0; j < l; ++j) {
        Rational lo(0), hi(0);
        for (int i = 0; i < l; ++i) {
          Rational tlo = lambda(i) + (*box)[i].first - fl(i);
          Rational thi = lambda(i) + (*box)[i].second - fl(i);
          Rational c = Ctinv(j, i);
          if (c >= Rational(0)) {
            lo += c * tlo;
            hi += c * thi;
          } else {
            lo += c * thi;
            hi += c * tlo;
          }
        }
        kmin[j] = lo.ceil();
        kmax[j] = hi.floor();
      }
    } else {
      std::fill(kmin.begin(), kmin.end(), -opts.translation_radius);
      std::fill(kmax.begin(), kmax.end(), opts.translation_radius);
    }
    bool empty = false;
    for (int j = 0; j < l; ++j) empty = empty || kmin[j] > kmax[j];
    if (empty) continue;
    Eigen::VectorXi k(l);
    for (int j = 0; j < l; ++j) k(j) = int(kmin[j]);
    for (;;) {
      Eigen::VectorXi t = rs.cartan().transpose() * k;
      Point mu = fl;
      for (int i = 0; i < l; ++i) mu(i) += Rational(t(i));
      if (!same_point(mu, lambda) && vanishes_beyond_depth(chi, mu)) {
        ++v.candidates;
        AffineWeylElement w = (AffineWeylElement::translation(rs, k) * f).reduced(rs);
        if (!best || word_order(w, *best)) best = w;
      }
      int j = 0;
      while (j < l && k(j) == kmax[j]) {
        k(j) = int(kmin[j]);
        ++j;
      }
      if (j == l) break;
      ++k(j);
    }
  }
  if (best) {
    v.status = StarVerdict::Status::Fails;
    v.witness = best;
  } else {
    v.status = v.bounded ? StarVerdict::Status::Holds : StarVerdict::Status::Inconclusive;
  }
  return v;
}

BarycenterReport barycenter_criterion(const ShallowCharacter& chi) {
  const Context& ctx = *chi.ctx;
  const RootSystem& rs = ctx.root_system();
  if (!same_point(ctx.lambda(), barycenter(rs)))
    throw std::invalid_argument("barycenter criterion needs lambda at the barycenter");
  Rational h(1, rs.coxeter_number());
  if (char_depth(chi) > h)
    throw std::invalid_argument("barycenter criterion needs a character of depth 1/h");
  BarycenterReport rep;
  rep.criterion = true;
  for (int i = 0; i <= rs.rank(); ++i)
    if (chi.params[ctx.index_of(simple_affine_root(rs, i))] == 0) rep.criterion = false;
  if (chi.is_trivial()) {
    rep.degenerate = true;
    rep.star.status = StarVerdict::Status::Fails;
    rep.star.witness = AffineWeylElement::simple(rs, 0);
  } else {
    rep.star = condition_star(chi);
  }
  rep.agrees = rep.criterion == (rep.star.status == StarVerdict::Status::Holds);
  return rep;
}

Reduction intertwining_reduction(const ShallowCharacter& chi, const AffineWeylElement& w) {
  const Context& ctx = *chi.ctx;
  const FiniteField& F = ctx.field();
  const Point& lambda = ctx.lambda();
  auto param = [&](const AffineRoot& a) {
    int k = ctx.index_of(a);
    return k < 0 ? Elem(0) : chi.params[k];
  };
  Reduction red;
  auto check = [&](const AffineRoot& beta) {
    Conjugate c = weyl_conjugation(ctx.chevalley(), w, beta);
    Elem lhs = param(c.root);
    Elem rhs = c.sign > 0 ? param(beta) : F.neg(param(beta));
    if (lhs != rhs) {
      red.compatible = false;
      red.violated = beta;
      red.image = c.root;
      return false;
    }
    return true;
  };
  for (const auto& beta : ctx.shallow())
    if (depth(w.act(beta), lambda) > Rational(0) && !check(beta)) return red;
  AffineWeylElement winv = w.inverse();
  for (const auto& gamma : ctx.shallow()) {
    AffineRoot beta = winv.act(gamma);
    if (depth(beta, lambda) > Rational(0) && ctx.index_of(beta) < 0 && !check(beta))
      return red;
  }
  return red;
}

ScanResult intertwining_scan(const ShallowCharacter& chi, int radius) {
  const Context& ctx = *chi.ctx;
  ScanResult res;
  res.radius = radius;
  for (const auto& w : weyl_ball(ctx.root_system(), radius)) {
    ++res.scanned;
    bool moved = !same_point(w.act(ctx.lambda()), ctx.lambda());
    if (moved) ++res.moved;
    if (!intertwining_reduction(chi, w).compatible) continue;
    if (moved) {
      res.verdict = ScanResult::Verdict::Counterexample;
      res.counterexample = w;
      return res;
    }
    res.stabilizer.push_back(w);
  }
  res.verdict = res.moved > 0 ? ScanResult::Verdict::CollapsesToPChi
                              : ScanResult::Verdict::Inconclusive;
  return res;
}

}  // namespace shallow
