#include "shallow/chevalley.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace shallow {

Pinning Pinning::standard(const RootSystem& rs) {
  Pinning p;
  p.signs_.assign(rs.positive_roots().size() - rs.rank(), 1);
  return p;
}

Pinning Pinning::parse(const RootSystem& rs, const std::string& text) {
  if (text.empty() || text == "default") return standard(rs);
  Pinning p;
  for (char c : text) {
    if (c == '+')
      p.signs_.push_back(1);
    else if (c == '-')
      p.signs_.push_back(-1);
    else
      throw std::invalid_argument("pinning must be 'default' or a +/- string");
  }
  if (p.signs_.size() != rs.positive_roots().size() - rs.rank())
    throw std::invalid_argument("pinning needs " +
                                std::to_string(rs.positive_roots().size() - rs.rank()) +
                                " signs");
  return p;
}

std::string Pinning::str() const {
  std::string s;
  for (int v : signs_) s += v > 0 ? '+' : '-';
  return s;
}

bool Pinning::is_default() const {
  return std::all_of(signs_.begin(), signs_.end(), [](int v) { return v > 0; });
}

std::uint64_t Pinning::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : str()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::string Pinning::id() const {
  std::ostringstream os;
  os << (is_default() ? "default" : str()) << ":" << std::hex << std::setw(16)
     << std::setfill('0') << hash();
  return os.str();
}

// Structure constants follow the extraspecial-pair construction: N on the
// extraspecial pair of each positive root is the pinning sign times (p+1),
// and everything else is forced by the Jacobi identity.
Chevalley::Chevalley(const RootSystem& rs, Pinning pinning)
    : rs_(rs), pinning_(std::move(pinning)) {
  const auto& roots = rs_.roots();
  nroots_ = int(roots.size());
  int npos = nroots_ / 2;
  if (int(pinning_.signs().size()) != npos - rs_.rank())
    throw std::invalid_argument("pinning does not match the root system");
  n_.assign(std::size_t(nroots_) * nroots_, 0);

  auto p_string = [&](const Root& r, const Root& s) {
    int p = 0;
    while (rs_.is_root(s - (p + 1) * r)) ++p;
    return p;
  };
  auto idx = [&](const Root& r) { return rs_.index_of(r); };

  // Positive pairs, processed in order of the sum.
  int sign_k = 0;
  for (int xi = 0; xi < npos; ++xi) {
    const Root& x = roots[xi];
    if (rs_.height(x) == 1) continue;
    int r = -1, s = -1;
    for (int a = 0; a < npos && r < 0; ++a) {
      int b = idx(x - roots[a]);
      if (b >= 0 && b < npos && a < b) {
        r = a;
        s = b;
      }
    }
    int eps = pinning_.signs()[sign_k++];
    int nrs = eps * (p_string(roots[r], roots[s]) + 1);
    n_[N_index(r, s)] = nrs;
    n_[N_index(s, r)] = -nrs;
    for (int a = r + 1; a < npos; ++a) {
      int b = idx(x - roots[a]);
      if (b < 0 || b >= npos || b <= a || a == r) continue;
      // N_{a,b} = (x,x)/N_{r,s} [N_{s,-a} N_{r,-b} / (s-a,s-a)
      //                        + N_{-a,r} N_{s,-b} / (r-a,r-a)]
      auto term = [&](int u, int v, int w, int z, const Root& diff) -> Rational {
        if (!rs_.is_root(diff)) return Rational(0);
        return Rational(long(compute_mixed(u, v)) * compute_mixed(w, z), rs_.norm2(diff));
      };
      int ma = a + npos, mb = b + npos;
      Rational val = Rational(rs_.norm2(x), nrs) *
                     (term(s, ma, r, mb, roots[s] - roots[a]) +
                      term(ma, r, s, mb, roots[r] - roots[a]));
      if (!val.is_integer()) throw std::logic_error("structure constant not integral");
      int nab = int(val.num());
      n_[N_index(a, b)] = nab;
      n_[N_index(b, a)] = -nab;
    }
  }
  // Negative pairs and mixed pairs.
  for (int a = 0; a < nroots_; ++a)
    for (int b = 0; b < nroots_; ++b) {
      if (idx(roots[a] + roots[b]) < 0) continue;
      n_[N_index(a, b)] = compute_mixed(a, b);
    }
}

int Chevalley::N_index(int a, int b) const { return a * nroots_ + b; }

// N for any pair with a+b a root, from the positive table.
int Chevalley::compute_mixed(int a, int b) const {
  const auto& roots = rs_.roots();
  int npos = nroots_ / 2;
  auto neg = [&](int k) { return k < npos ? k + npos : k - npos; };
  int c = rs_.index_of(roots[a] + roots[b]);
  if (c < 0) return 0;
  bool pa = a < npos, pb = b < npos;
  if (pa && pb) return n_[N_index(a, b)];
  if (!pa && !pb) return -n_[N_index(neg(a), neg(b))];
  // a + b + w = 0 with w = -c; N_{a,b}/(w,w) = N_{b,w}/(a,a) = N_{w,a}/(b,b).
  int w = neg(c);
  long na = rs_.norm2(roots[a]), nb = rs_.norm2(roots[b]), nw = rs_.norm2(roots[w]);
  bool pw = w < npos;
  long v = pb == pw ? nw * compute_mixed(b, w) : nw * compute_mixed(w, a);
  long d = pb == pw ? na : nb;
  if (v % d != 0) throw std::logic_error("structure constant not integral");
  return int(v / d);
}

int Chevalley::N(const Root& a, const Root& b) const {
  int i = rs_.index_of(a), j = rs_.index_of(b);
  if (i < 0 || j < 0) throw std::invalid_argument("not a root");
  if (!rs_.is_root(a + b)) return 0;
  return n_[N_index(i, j)];
}

Chevalley::AdVector Chevalley::ad(const Root& a, const AdVector& v) const {
  const auto& roots = rs_.roots();
  int l = rs_.rank();
  int ia = rs_.index_of(a);
  AdVector out = AdVector::Zero(v.size());
  for (int k = 0; k < nroots_; ++k) {
    if (v(k) == 0) continue;
    if (k == (ia < nroots_ / 2 ? ia + nroots_ / 2 : ia - nroots_ / 2)) {
      Eigen::VectorXi h = rs_.coroot(a);
      for (int i = 0; i < l; ++i) out(nroots_ + i) += v(k) * h(i);
      continue;
    }
    int c = rs_.index_of(a + roots[k]);
    if (c >= 0) out(c) += v(k) * n_[N_index(ia, k)];
  }
  // [e_a, h_i] = -<a, a_i^vee> e_a
  for (int i = 0; i < l; ++i) {
    if (v(nroots_ + i) == 0) continue;
    long long pa = a.dot(rs_.cartan().row(i).transpose());
    out(ia) -= v(nroots_ + i) * pa;
  }
  return out;
}

Chevalley::AdVector Chevalley::exp_ad(const Root& a, long long t, const AdVector& v) const {
  AdVector sum = v;
  AdVector w = v;
  long long tk = 1;
  for (int k = 1; k <= 6; ++k) {
    w = ad(a, w);
    if (w.isZero()) break;
    for (int i = 0; i < w.size(); ++i) {
      if (w(i) % k != 0) throw std::logic_error("divided power not integral");
      w(i) /= k;
    }
    tk *= t;
    sum += tk * w;
  }
  return sum;
}

std::vector<CommutatorTerm> Chevalley::finite_commutator(const Root& a, const Root& b) const {
  int ia = rs_.index_of(a), ib = rs_.index_of(b);
  if (ia < 0 || ib < 0) throw std::invalid_argument("not a root");
  if (parallel(a, b)) throw std::invalid_argument("parallel roots have no commutator formula");
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find({ia, ib});
    if (it != cache_.end()) return it->second;
  }
  auto targets = root_string(rs_, a, b);
  int dim = adjoint_dim();
  AdVector h0 = AdVector::Zero(dim);
  for (const auto& c : rs_.positive_roots()) {
    Eigen::VectorXi cv = rs_.coroot(c);
    for (int i = 0; i < rs_.rank(); ++i) h0(nroots_ + i) += cv(i);
  }
  // c(h0) = 2 height(c), never zero.
  auto solve = [&](long long x, long long y) {
    AdVector v = h0;
    v = exp_ad(b, y, v);
    v = exp_ad(a, x, v);
    v = exp_ad(b, -y, v);
    v = exp_ad(a, -x, v);
    std::vector<long long> params;
    for (auto [i, j] : targets) {
      Root c = i * a + j * b;
      long long ch = 2LL * rs_.height(c);
      long long coef = v(rs_.index_of(c));
      if (coef % ch != 0) throw std::logic_error("commutator peel not integral");
      long long t = -coef / ch;
      params.push_back(t);
      v = exp_ad(c, -t, v);
    }
    if (v != h0) throw std::logic_error("commutator expansion does not close");
    return params;
  };
  std::vector<CommutatorTerm> out;
  auto unit = solve(1, 1);
  auto check = solve(2, 3);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    auto [i, j] = targets[k];
    long long mono = 1;
    for (int e = 0; e < i; ++e) mono *= 2;
    for (int e = 0; e < j; ++e) mono *= 3;
    if (check[k] != unit[k] * mono) throw std::logic_error("commutator is not monomial");
    out.push_back({i, j, int(unit[k])});
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(std::make_pair(ia, ib), out);
  return out;
}

int Chevalley::reflection_sign(const Root& r, const Root& b) const {
  int ib = rs_.index_of(b);
  if (rs_.index_of(r) < 0 || ib < 0) throw std::invalid_argument("not a root");
  AdVector v = AdVector::Zero(adjoint_dim());
  v(ib) = 1;
  v = exp_ad(r, 1, v);
  v = exp_ad(-r, -1, v);
  v = exp_ad(r, 1, v);
  int target = rs_.index_of(rs_.reflect(r, b));
  long long s = v(target);
  v(target) = 0;
  if (!v.isZero() || (s != 1 && s != -1))
    throw std::logic_error("reflection lift does not permute root vectors");
  return int(s);
}

std::vector<ExpansionTerm> commutator_expansion(const Chevalley& ch, const AffineRoot& a,
                                                const AffineRoot& b) {
  if (parallel(a.gradient, b.gradient))
    throw std::invalid_argument(
        "parallel gradients: commutator trivial or torus-valued, out of scope");
  std::vector<ExpansionTerm> out;
  for (const auto& t : ch.finite_commutator(a.gradient, b.gradient))
    out.push_back({t.i * a + t.j * b, t});
  return out;
}

std::vector<ExpansionTerm> shallow_commutator_expansion(const Chevalley& ch,
                                                        const AffineRoot& a,
                                                        const AffineRoot& b,
                                                        const Point& lambda) {
  std::vector<ExpansionTerm> out;
  for (auto& t : commutator_expansion(ch, a, b))
    if (is_shallow(t.root, lambda)) out.push_back(std::move(t));
  return out;
}

int letter_sign(const Chevalley& ch, int letter, const AffineRoot& a) {
  const RootSystem& rs = ch.root_system();
  // The lift of s_0 is n_{-theta}(w), a torus element times n_{-theta}(1);
  // the torus part only moves the level.
  Root r = letter == 0 ? Root(-rs.highest_root()) : rs.simple_root(letter - 1);
  return ch.reflection_sign(r, a.gradient);
}

Conjugate weyl_conjugation(const Chevalley& ch, const AffineWeylElement& w,
                           const AffineRoot& a) {
  const RootSystem& rs = ch.root_system();
  Conjugate c{a, 1};
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    c.sign *= letter_sign(ch, *it, c.root);
    c.root = AffineWeylElement::simple(rs, *it).act(c.root);
  }
  return c;
}

}  // namespace shallow
