#include "shallow/characters.hpp"

#include <algorithm>
#include <tuple>
#include <stdexcept>

#include "shallow/parallel.hpp"

namespace shallow {

Context::Context(const RootSystem& rs, const Point& lambda, int q, const std::string& pinning,
                 int max_q)
    : chevalley_(std::make_unique<Chevalley>(rs, Pinning::parse(rs, pinning))),
      field_(q, max_q),
      lambda_(lambda) {
  facet_ = facet_of(rs, lambda_);
  shallow_ = shallow_roots(rs, lambda_);
  for (std::size_t k = 0; k < shallow_.size(); ++k) {
    depths_.push_back(shallow::depth(shallow_[k], lambda_));
    index_.emplace(shallow_[k], int(k));
  }
  for (int a = 0; a < int(shallow_.size()); ++a)
    for (int b = a + 1; b < int(shallow_.size()); ++b) {
      if (parallel(shallow_[a].gradient, shallow_[b].gradient)) continue;
      Relation rel{a, b, {}};
      for (const auto& t :
           shallow_commutator_expansion(*chevalley_, shallow_[a], shallow_[b], lambda_))
        rel.terms.push_back({index_of(t.root), t.term.i, t.term.j, t.term.constant});
      if (!rel.terms.empty()) relations_.push_back(std::move(rel));
    }
}

std::shared_ptr<const Context> Context::make(char type, int rank, const Point& lambda, int q,
                                             const std::string& pinning, int max_q) {
  return std::make_shared<const Context>(RootSystem(type, rank), lambda, q, pinning, max_q);
}

std::shared_ptr<const Context> Context::barycentric(char type, int rank, int q,
                                                    const std::string& pinning) {
  RootSystem rs(type, rank);
  return std::make_shared<const Context>(rs, barycenter(rs), q, pinning);
}

int Context::index_of(const AffineRoot& a) const {
  auto it = index_.find(a);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Rational> Context::depth_levels() const {
  std::vector<Rational> out;
  for (const auto& d : depths_)
    if (out.empty() || out.back() != d) out.push_back(d);
  return out;
}

bool ShallowCharacter::is_trivial() const {
  return std::all_of(params.begin(), params.end(), [](Elem c) { return c == 0; });
}

ShallowCharacter trivial_character(const ContextPtr& ctx) {
  return {ctx, std::vector<Elem>(ctx->size(), 0)};
}

ShallowCharacter make_character(const ContextPtr& ctx,
                                const std::map<AffineRoot, Elem, AffineRootLess>& params) {
  ShallowCharacter chi = trivial_character(ctx);
  if (params.size() != ctx->size())
    throw std::invalid_argument("character domain must be exactly the shallow roots");
  for (const auto& [root, c] : params) {
    int k = ctx->index_of(root);
    if (k < 0)
      throw std::invalid_argument("parameter on a non-shallow root " +
                                  format_root(ctx->root_system(), root));
    if (c < 0 || c >= ctx->field().q()) throw std::invalid_argument("parameter not in F_q");
    chi.params[k] = c;
  }
  return chi;
}

std::vector<RelationTerm> relation_terms(const ShallowCharacter& chi,
                                         const Context::Relation& rel) {
  std::vector<RelationTerm> out;
  for (const auto& t : rel.terms) out.push_back({chi.params[t.root], t.i, t.j, t.constant});
  return out;
}

ValidationResult validate(const ShallowCharacter& chi) {
  if (chi.params.size() != chi.ctx->size())
    throw std::invalid_argument("character domain must be exactly the shallow roots");
  ValidationResult res;
  const Context& ctx = *chi.ctx;
  for (const auto& rel : ctx.relations())
    if (!char_product_trivial(ctx.field(), relation_terms(chi, rel))) {
      res.valid = false;
      res.violated.emplace_back(ctx.shallow()[rel.a], ctx.shallow()[rel.b]);
    }
  return res;
}

ShallowCharacter indecomposable_extension(
    const ContextPtr& ctx, const std::map<AffineRoot, Elem, AffineRootLess>& partial) {
  const RootSystem& rs = ctx->root_system();
  ShallowCharacter chi = trivial_character(ctx);
  for (const auto& [a, c] : partial) {
    int k = ctx->index_of(a);
    if (k < 0 || !is_indecomposable(rs, a, ctx->lambda()))
      throw std::invalid_argument("parameters must be given on indecomposable roots only");
    if (c < 0 || c >= ctx->field().q()) throw std::invalid_argument("field element out of range");
    chi.params[k] = c;
  }
  if (!validate(chi).valid)
    throw std::logic_error("extension by zero of indecomposable parameters is invalid");
  return chi;
}

Rational char_depth(const ShallowCharacter& chi) {
  Rational r(0);
  for (std::size_t k = 0; k < chi.params.size(); ++k)
    if (chi.params[k] != 0) r = std::max(r, chi.ctx->depth(int(k)));
  return r;
}

bool is_epipelagic(const ShallowCharacter& chi) {
  auto levels = chi.ctx->depth_levels();
  return !chi.is_trivial() && !levels.empty() && char_depth(chi) == levels.front();
}

ShallowCharacter scalar_act(Elem z, const ShallowCharacter& chi) {
  const FiniteField& F = chi.ctx->field();
  if (z == 0) throw std::invalid_argument("scalar must be nonzero");
  ShallowCharacter out = chi;
  Elem zi = F.inv(z);
  for (auto& c : out.params) c = F.mul(zi, c);
  if (!validate(out).valid)
    throw std::domain_error("scaled parameters violate the commutator relations");
  return out;
}

FpVector to_coordinates(const Context& ctx, const std::vector<Elem>& params) {
  const FiniteField& F = ctx.field();
  int m = F.m();
  FpVector v(int(params.size()) * m);
  for (std::size_t k = 0; k < params.size(); ++k) {
    auto c = F.coeffs(params[k]);
    for (int i = 0; i < m; ++i) v(int(k) * m + i) = c[i];
  }
  return v;
}

std::vector<Elem> from_coordinates(const Context& ctx, const FpVector& v) {
  const FiniteField& F = ctx.field();
  int m = F.m();
  std::vector<Elem> out(ctx.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) c[i] = ((v(int(k) * m + i) % F.p()) + F.p()) % F.p();
    out[k] = F.from_coeffs(c);
  }
  return out;
}

namespace {

struct OrbitConstraint {
  int orbit_size;
  // (root, shift, constant): contributes Frob^{-shift}(C c_root).
  std::vector<std::tuple<int, int, int>> parts;
};

std::vector<OrbitConstraint> orbit_constraints(const Context& ctx) {
  const FiniteField& F = ctx.field();
  MonomialOrbits orbits(F);
  std::vector<OrbitConstraint> out;
  for (const auto& rel : ctx.relations()) {
    std::map<int, OrbitConstraint> by_orbit;
    for (const auto& t : rel.terms) {
      if (F.from_int(t.constant) == 0) continue;
      OrbitPosition pos = orbits.locate(t.i, t.j);
      auto& oc = by_orbit[pos.orbit];
      oc.orbit_size = orbits.orbit(pos.orbit).size;
      oc.parts.emplace_back(t.root, pos.shift, t.constant);
    }
    for (auto& [_, oc] : by_orbit) out.push_back(std::move(oc));
  }
  return out;
}

Elem eval_constraint(const FiniteField& F, const OrbitConstraint& oc,
                     const std::vector<Elem>& params) {
  Elem d = 0;
  for (const auto& [root, shift, constant] : oc.parts)
    d = F.add(d, F.frob(F.mul(F.from_int(constant), params[root]), -shift));
  return F.partial_trace(d, oc.orbit_size);
}

bool in_kernel(const FpMatrix& A, const FpVector& v, int p) {
  if (A.rows() == 0) return true;
  FpMatrix r = A * v;
  for (int i = 0; i < r.size(); ++i)
    if (r(i) % p != 0) return false;
  return true;
}

}  // namespace

FpMatrix constraint_matrix(const Context& ctx) {
  const FiniteField& F = ctx.field();
  int m = F.m();
  auto cons = orbit_constraints(ctx);
  int nvars = int(ctx.size()) * m;
  FpMatrix A = FpMatrix::Zero(int(cons.size()) * m, nvars);
  for (int k = 0; k < int(ctx.size()); ++k)
    for (int i = 0; i < m; ++i) {
      Elem unit = 1;
      for (int s = 0; s < i; ++s) unit *= F.p();
      std::vector<Elem> params(ctx.size(), 0);
      params[k] = unit;
      for (int c = 0; c < int(cons.size()); ++c) {
        auto coords = F.coeffs(eval_constraint(F, cons[c], params));
        for (int r = 0; r < m; ++r) A(c * m + r, k * m + i) = coords[r];
      }
    }
  return A;
}

CharacterSpace solve_space(const ContextPtr& ctxp, const SolveOptions& opts) {
  const Context& ctx = *ctxp;
  const FiniteField& F = ctx.field();
  int p = F.p(), m = F.m();
  int n = int(ctx.size());
  CharacterSpace sp;
  FpMatrix A = constraint_matrix(ctx);
  sp.basis = nullspace(A, p);
  sp.fp_dimension = int(sp.basis.cols());

  Rref r = rref(A, p);
  for (int i = 0; i < r.matrix.rows(); ++i) {
    ForcedRelation fr;
    for (int c = 0; c < r.matrix.cols(); ++c)
      if (r.matrix(i, c) != 0) fr.terms.emplace_back(c, r.matrix(i, c));
    sp.forced.push_back(std::move(fr));
  }

  if (m > 1) {
    // Closed under multiplication by the generator t of F_q over F_p?
    Elem t = p;
    for (int c = 0; c < sp.basis.cols() && sp.field_stable; ++c) {
      auto params = from_coordinates(ctx, sp.basis.col(c));
      for (auto& e : params) e = F.mul(t, e);
      if (!in_kernel(A, to_coordinates(ctx, params), p)) sp.field_stable = false;
    }
  }
  sp.dimension = sp.field_stable ? sp.fp_dimension / m : -1;

  auto levels = ctx.depth_levels();
  for (const auto& level : levels) {
    std::vector<int> killed;
    for (int k = 0; k < n; ++k)
      if (ctx.depth(k) > level)
        for (int i = 0; i < m; ++i) killed.push_back(k * m + i);
    FpMatrix B(A.rows() + int(killed.size()), A.cols());
    B.topRows(A.rows()) = A;
    B.bottomRows(killed.size()).setZero();
    for (std::size_t k = 0; k < killed.size(); ++k) B(A.rows() + int(k), killed[k]) = 1;
    FiltrationLevel fl{level, 0, nullspace(B, p)};
    fl.fp_dimension = int(fl.basis.cols());
    sp.filtration.push_back(std::move(fl));
  }
  if (!levels.empty()) {
    for (int k = 0; k < n; ++k)
      if (ctx.depth(k) == levels.front()) ++sp.epipelagic_roots;
    sp.epipelagic_dimension = sp.filtration.front().fp_dimension / m;
  }

  long long total = 1;
  bool small = true;
  for (int k = 0; k < n && small; ++k) {
    total *= F.q();
    if (total > opts.exhaustive_limit) small = false;
  }
  if (opts.exhaustive && small) {
    sp.exhaustive_ran = true;
    sp.exhaustive_total = total;
    const int blocks = 64;
    std::vector<long long> valid(blocks, 0);
    std::vector<char> agree(blocks, 1);
    parallel_blocks(total, blocks, [&](int b, long long lo, long long hi) {
      ShallowCharacter chi = trivial_character(ctxp);
      for (long long code = lo; code < hi; ++code) {
        long long c = code;
        for (int k = 0; k < n; ++k, c /= F.q()) chi.params[k] = Elem(c % F.q());
        bool v = validate(chi).valid;
        if (v) ++valid[b];
        if (v != in_kernel(A, to_coordinates(ctx, chi.params), p)) agree[b] = 0;
      }
    });
    sp.exhaustive_agrees = true;
    for (int b = 0; b < blocks; ++b) {
      sp.exhaustive_valid += valid[b];
      if (!agree[b]) sp.exhaustive_agrees = false;
    }
  }
  return sp;
}

}  // namespace shallow
