// Shallow characters of P_+/P_1 as parameter maps on shallow root groups.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shallow/affine_roots.hpp"
#include "shallow/chevalley.hpp"
#include "shallow/finite_field.hpp"
#include "shallow/fp_linalg.hpp"
#include "shallow/root_system.hpp"

namespace shallow {

// Everything a character depends on: root system, point, field, pinning,
// and the shallow enumeration with its commutator relations.
class Context {
 public:
  struct Target {
    int root;  // index into shallow()
    int i, j;
    int constant;
  };
  // Shallow part of [u_a(x), u_b(y)] for shallow a before b.
  struct Relation {
    int a, b;
    std::vector<Target> terms;
  };

  Context(const RootSystem& rs, const Point& lambda, int q, const std::string& pinning,
          int max_q = kDefaultMaxQ);

  static std::shared_ptr<const Context> make(char type, int rank, const Point& lambda,
                                             int q, const std::string& pinning = "default",
                                             int max_q = kDefaultMaxQ);
  // Point at the barycenter of the fundamental alcove.
  static std::shared_ptr<const Context> barycentric(char type, int rank, int q,
                                                    const std::string& pinning = "default");

  const RootSystem& root_system() const { return chevalley_->root_system(); }
  const Chevalley& chevalley() const { return *chevalley_; }
  const FiniteField& field() const { return field_; }
  const Point& lambda() const { return lambda_; }
  const Facet& facet() const { return facet_; }
  const std::vector<AffineRoot>& shallow() const { return shallow_; }
  std::size_t size() const { return shallow_.size(); }
  int index_of(const AffineRoot& a) const;
  const Rational& depth(int k) const { return depths_[k]; }
  // Distinct shallow depths in increasing order.
  std::vector<Rational> depth_levels() const;
  // Every pair with non-parallel gradients and a nonempty shallow expansion.
  const std::vector<Relation>& relations() const { return relations_; }
  std::string label(int k) const { return format_root(root_system(), shallow_[k]); }

 private:
  std::unique_ptr<Chevalley> chevalley_;
  FiniteField field_;
  Point lambda_;
  Facet facet_;
  std::vector<AffineRoot> shallow_;
  std::vector<Rational> depths_;
  std::map<AffineRoot, int, AffineRootLess> index_;
  std::vector<Relation> relations_;
};

using ContextPtr = std::shared_ptr<const Context>;

struct ShallowCharacter {
  ContextPtr ctx;
  std::vector<Elem> params;  // one per shallow root, in enumeration order

  bool is_trivial() const;
};

ShallowCharacter trivial_character(const ContextPtr& ctx);
// Builds from a map keyed by affine root; the keys must be exactly the
// shallow roots.
ShallowCharacter make_character(const ContextPtr& ctx,
                                const std::map<AffineRoot, Elem, AffineRootLess>& params);

struct ValidationResult {
  bool valid = true;
  std::vector<std::pair<AffineRoot, AffineRoot>> violated;
};

// Relation factors of one pair for the given parameters.
std::vector<RelationTerm> relation_terms(const ShallowCharacter& chi,
                                         const Context::Relation& rel);
ValidationResult validate(const ShallowCharacter& chi);

// Extends parameters on the indecomposable shallow roots by zero. Roots
// missing from partial get 0; any other key is rejected.
ShallowCharacter indecomposable_extension(
    const ContextPtr& ctx, const std::map<AffineRoot, Elem, AffineRootLess>& partial);

// Largest depth with a nontrivial parameter; 0 for the trivial character.
Rational char_depth(const ShallowCharacter& chi);
bool is_epipelagic(const ShallowCharacter& chi);

// [z.chi](g) = chi(z^{-1} g), so c -> z^{-1} c. Throws if z = 0 or if the
// result fails validation.
ShallowCharacter scalar_act(Elem z, const ShallowCharacter& chi);

struct ForcedRelation {
  // sum coeff * (F_p coordinate) = 0; coordinate = root * m + position.
  std::vector<std::pair<int, int>> terms;
};

struct FiltrationLevel {
  Rational r;
  int fp_dimension = 0;
  FpMatrix basis;
};

struct CharacterSpace {
  int fp_dimension = 0;
  // Dimension over F_q; -1 when the solution set is not F_q-stable.
  int dimension = 0;
  bool field_stable = true;
  FpMatrix basis;  // columns over the F_p coordinates
  std::vector<ForcedRelation> forced;
  std::vector<FiltrationLevel> filtration;
  int epipelagic_dimension = 0;
  int epipelagic_roots = 0;
  // Exhaustive cross-check over all parameter maps.
  bool exhaustive_ran = false;
  bool exhaustive_agrees = false;
  long long exhaustive_valid = 0;
  long long exhaustive_total = 0;
};

struct SolveOptions {
  bool exhaustive = true;
  long long exhaustive_limit = 1LL << 20;
};

// F_p-linear constraint matrix on the coordinates of the parameters, one
// block of m rows per (pair, monomial orbit).
FpMatrix constraint_matrix(const Context& ctx);
CharacterSpace solve_space(const ContextPtr& ctx, const SolveOptions& opts = {});

// F_p coordinates of a parameter vector and back.
FpVector to_coordinates(const Context& ctx, const std::vector<Elem>& params);
std::vector<Elem> from_coordinates(const Context& ctx, const FpVector& v);

}  // namespace shallow
