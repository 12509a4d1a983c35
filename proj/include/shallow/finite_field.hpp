// Small finite fields F_q = F_p[t]/(f) and the trace pairing.
#pragma once

#include <string>
#include <vector>

namespace shallow {

inline constexpr int kDefaultMaxQ = 16;

// Elements are integers 0..q-1 encoding sum c_i p^i, i.e. the coefficient
// vector of a polynomial in t of degree < m. Arithmetic is table driven.
class FiniteField {
 public:
  using Elem = int;

  explicit FiniteField(int q, int max_q = kDefaultMaxQ);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  // Monic modulus, coefficients from t^0 to t^m. Smallest irreducible by
  // the encoding sum c_i p^i.
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long e) const;
  // x -> x^{p^k}, k may be negative.
  Elem frob(Elem a, int k = 1) const;
  // Image of an integer under Z -> F_p.
  Elem from_int(long long k) const;

  // Tr to F_p, returned as 0..p-1.
  int trace(Elem a) const { return trace_[a]; }
  // Tr to the subfield F_{p^s}; s must divide m.
  Elem partial_trace(Elem a, int s) const;

  std::vector<int> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<int>& c) const;
  std::string format(Elem a) const;

  // x^e as a function on F_q equals x^{reduce_exponent(e)} for e >= 1.
  int reduce_exponent(long long e) const { return int((e - 1) % (q_ - 1)) + 1; }

 private:
  int p_, m_, q_;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_;
  std::vector<int> trace_;
};

using Elem = FiniteField::Elem;

// chi_c(x) = exp(2 pi i e / p) with e = Tr(c x); returns e.
int char_eval(const FiniteField& F, Elem c, Elem x);

// One factor chi_{c}(C x^i y^j) of a relation.
struct RelationTerm {
  Elem c = 0;
  int i = 0;
  int j = 0;
  int constant = 0;
};

// True iff sum_k Tr(c_k C_k x^{i_k} y^{j_k}) = 0 for all x, y in F_q.
// Exhaustive over F_q^2.
bool char_product_trivial(const FiniteField& F, const std::vector<RelationTerm>& terms);

// Same verdict from the coefficients of each reduced monomial x^i y^j.
bool char_product_trivial_symbolic(const FiniteField& F,
                                   const std::vector<RelationTerm>& terms);

// Frobenius orbits of reduced exponent pairs. Each relation collapses to one
// condition Tr_{F_q/F_{p^s}}(D) = 0 per orbit, D summed over the terms.
struct MonomialOrbit {
  int i = 0, j = 0;  // representative
  int size = 0;
};
struct OrbitPosition {
  int orbit = 0;
  int shift = 0;  // monomial = representative * p^shift
};
class MonomialOrbits {
 public:
  explicit MonomialOrbits(const FiniteField& F);
  OrbitPosition locate(int i, int j) const;
  const MonomialOrbit& orbit(int k) const { return orbits_[k]; }
  int size() const { return int(orbits_.size()); }

 private:
  int q_;
  std::vector<MonomialOrbit> orbits_;
  std::vector<OrbitPosition> where_;  // indexed by (i-1)*(q-1)+(j-1)
};

}  // namespace shallow
