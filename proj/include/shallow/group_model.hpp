// The finite group P_+/P_1 in normal form prod_i u_{alpha_i}(x_i), with the
// product computed by commutator collection.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shallow/characters.hpp"

namespace shallow {

using CosetWord = std::vector<Elem>;

class GroupModel {
 public:
  explicit GroupModel(ContextPtr ctx);

  const Context& context() const { return *ctx_; }
  CosetWord identity() const { return CosetWord(ctx_->size(), 0); }
  CosetWord generator(int k, Elem x) const;
  CosetWord multiply(const CosetWord& a, const CosetWord& b) const;
  CosetWord inverse(const CosetWord& w) const;

  // Number of elements q^n, and a bijection with 0..order()-1.
  std::uint64_t order() const { return order_; }
  CosetWord decode(std::uint64_t code) const;
  std::uint64_t encode(const CosetWord& w) const;

 private:
  struct Term {
    int target;
    int i, j;
    Elem constant;
  };
  // Right-multiplies w by u_{alpha_j}(x).
  void append(CosetWord& w, int j, Elem x) const;
  const std::vector<Term>& terms(int later, int earlier) const {
    return comm_[std::size_t(later) * ctx_->size() + earlier];
  }

  ContextPtr ctx_;
  std::uint64_t order_ = 1;
  // comm_[i*n+j], i > j: shallow part of [u_i(a), u_j(b)] = prod u_t(C a^i b^j).
  std::vector<std::vector<Term>> comm_;
};

// Exponent e with chi(w) = exp(2 pi i e / p).
int evaluate(const ShallowCharacter& chi, const CosetWord& w);

// Products of all pairs, indexed [a * order + b] by encoded words.
class ProductTable {
 public:
  explicit ProductTable(const GroupModel& g);
  std::uint64_t product(std::uint64_t a, std::uint64_t b) const {
    return table_[a * order_ + b];
  }
  std::uint64_t order() const { return order_; }

 private:
  std::uint64_t order_;
  std::vector<std::uint32_t> table_;
};

struct HomomorphismOptions {
  // Exhaustive when order^2 is at most this; otherwise sampled.
  std::uint64_t exhaustive_limit = 1ULL << 22;
  std::uint64_t samples = 200000;
  // Seed for sampling; SHALLOW_CHARS_SEED overrides when set.
  std::uint64_t seed = 20240607;
  const ProductTable* table = nullptr;
};

struct HomomorphismResult {
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t checked = 0;
  std::uint64_t seed = 0;
  std::optional<std::pair<CosetWord, CosetWord>> witness;
};

HomomorphismResult verify_homomorphism(const ShallowCharacter& chi, const GroupModel& g,
                                       const HomomorphismOptions& opts = {});

}  // namespace shallow
