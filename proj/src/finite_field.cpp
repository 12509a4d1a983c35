#include "shallow/finite_field.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace shallow {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Product of a and b reduced modulo the monic f, all over F_p.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& f, int p) {
  int m = int(f.size()) - 1;
  std::vector<int> r(2 * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * m - 1; d >= m; --d) {
    int c = r[d];
    if (c == 0) continue;
    for (int k = 0; k <= m; ++k) r[d - m + k] = ((r[d - m + k] - c * f[k]) % p + p) % p;
  }
  r.resize(m);
  return r;
}

}  // namespace

FiniteField::FiniteField(int q, int max_q) : q_(q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  if (q > max_q)
    throw std::invalid_argument("field order " + std::to_string(q) + " exceeds the bound " +
                                std::to_string(max_q));
  p_ = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p_ = d;
      break;
    }
  m_ = 0;
  for (int r = q; r > 1; r /= p_) {
    if (r % p_ != 0) throw std::invalid_argument("field order must be a prime power");
    ++m_;
  }
  if (!is_prime(p_)) throw std::invalid_argument("field order must be a prime power");

  auto to_vec = [&](int a) {
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i, a /= p_) c[i] = a % p_;
    return c;
  };
  auto to_int = [&](const std::vector<int>& c) {
    int a = 0;
    for (int i = m_ - 1; i >= 0; --i) a = a * p_ + c[i];
    return a;
  };

  // Smallest monic f whose quotient ring has no zero divisors.
  for (int lower = 0; lower < q_; ++lower) {
    std::vector<int> f = to_vec(lower);
    f.push_back(1);
    bool ok = true;
    for (int a = 1; a < q_ && ok; ++a)
      for (int b = 1; b < q_ && ok; ++b)
        if (to_int(poly_mulmod(to_vec(a), to_vec(b), f, p_)) == 0) ok = false;
    if (ok) {
      modulus_ = f;
      break;
    }
  }
  if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto va = to_vec(a);
    std::vector<int> na(m_);
    for (int i = 0; i < m_; ++i) na[i] = (p_ - va[i]) % p_;
    neg_[a] = to_int(na);
    for (int b = 0; b < q_; ++b) {
      auto vb = to_vec(b);
      std::vector<int> s(m_);
      for (int i = 0; i < m_; ++i) s[i] = (va[i] + vb[i]) % p_;
      add_[a * q_ + b] = to_int(s);
      mul_[a * q_ + b] = to_int(poly_mulmod(va, vb, modulus_, p_));
    }
  }
  trace_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    Elem t = 0, x = a;
    for (int k = 0; k < m_; ++k) {
      t = add(t, x);
      x = pow(x, p_);
    }
    if (t >= p_) throw std::logic_error("trace left the prime field");
    trace_[a] = t;
  }
}

std::string FiniteField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = m_; k >= 0; --k) {
    int c = modulus_[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c != 1) os << c;
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, q_ - 2);
}

Elem FiniteField::pow(Elem a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem FiniteField::frob(Elem a, int k) const {
  k = ((k % m_) + m_) % m_;
  for (int s = 0; s < k; ++s) a = pow(a, p_);
  return a;
}

Elem FiniteField::from_int(long long k) const { return int(((k % p_) + p_) % p_); }

Elem FiniteField::partial_trace(Elem a, int s) const {
  if (s <= 0 || m_ % s != 0) throw std::invalid_argument("subfield degree must divide m");
  Elem t = 0;
  for (int k = 0; k < m_; k += s) t = add(t, frob(a, k));
  return t;
}

std::vector<int> FiniteField::coeffs(Elem a) const {
  std::vector<int> c(m_);
  for (int i = 0; i < m_; ++i, a /= p_) c[i] = a % p_;
  return c;
}

Elem FiniteField::from_coeffs(const std::vector<int>& c) const {
  if (int(c.size()) != m_) throw std::invalid_argument("field element needs m coefficients");
  int a = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    if (c[i] < 0 || c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    a = a * p_ + c[i];
  }
  return a;
}

std::string FiniteField::format(Elem a) const {
  if (m_ == 1) return std::to_string(a);
  std::ostringstream os;
  auto c = coeffs(a);
  os << "[";
  for (int i = 0; i < m_; ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

int char_eval(const FiniteField& F, Elem c, Elem x) { return F.trace(F.mul(c, x)); }

bool char_product_trivial(const FiniteField& F, const std::vector<RelationTerm>& terms) {
  for (Elem x = 0; x < F.q(); ++x)
    for (Elem y = 0; y < F.q(); ++y) {
      int e = 0;
      for (const auto& t : terms) {
        Elem v = F.mul(F.mul(t.c, F.from_int(t.constant)),
                       F.mul(F.pow(x, t.i), F.pow(y, t.j)));
        e = (e + F.trace(v)) % F.p();
      }
      if (e != 0) return false;
    }
  return true;
}

bool char_product_trivial_symbolic(const FiniteField& F,
                                   const std::vector<RelationTerm>& terms) {
  // Tr(c x^i y^j) = sum_k c^{p^k} x^{i p^k} y^{j p^k}; collect coefficients of
  // the reduced monomials, which are linearly independent functions.
  std::map<std::pair<int, int>, Elem> coef;
  for (const auto& t : terms) {
    Elem c = F.mul(t.c, F.from_int(t.constant));
    long long i = t.i, j = t.j;
    for (int k = 0; k < F.m(); ++k) {
      auto key = std::make_pair(F.reduce_exponent(i), F.reduce_exponent(j));
      coef[key] = F.add(coef[key], c);
      c = F.frob(c);
      i = F.reduce_exponent(i * F.p());
      j = F.reduce_exponent(j * F.p());
    }
  }
  for (const auto& [_, c] : coef)
    if (c != 0) return false;
  return true;
}

MonomialOrbits::MonomialOrbits(const FiniteField& F) : q_(F.q()) {
  int n = q_ - 1;
  where_.assign(n * n, OrbitPosition{-1, 0});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (where_[(i - 1) * n + (j - 1)].orbit >= 0) continue;
      MonomialOrbit o{i, j, 0};
      int k = int(orbits_.size());
      int a = i, b = j;
      for (int s = 0;; ++s) {
        auto& slot = where_[(a - 1) * n + (b - 1)];
        if (slot.orbit >= 0) break;
        slot = {k, s};
        ++o.size;
        a = F.reduce_exponent(1LL * a * F.p());
        b = F.reduce_exponent(1LL * b * F.p());
      }
      orbits_.push_back(o);
    }
}

OrbitPosition MonomialOrbits::locate(int i, int j) const {
  int n = q_ - 1;
  int a = int((i - 1) % n) + 1, b = int((j - 1) % n) + 1;
  return where_[(a - 1) * n + (b - 1)];
}

}  // namespace shallow
