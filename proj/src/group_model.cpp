#include "shallow/group_model.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "shallow/parallel.hpp"

namespace shallow {

GroupModel::GroupModel(ContextPtr ctx) : ctx_(std::move(ctx)) {
  const Context& c = *ctx_;
  const FiniteField& F = c.field();
  int n = int(c.size());
  for (int k = 0; k < n; ++k) {
    if (order_ > (std::uint64_t(1) << 40) / std::uint64_t(F.q()))
      order_ = 0;  // too large to enumerate
    else
      order_ *= F.q();
  }
  comm_.resize(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      const auto& a = c.shallow()[i];
      const auto& b = c.shallow()[j];
      if (parallel(a.gradient, b.gradient)) continue;  // trivial modulo P_1
      for (const auto& t : shallow_commutator_expansion(c.chevalley(), a, b, c.lambda())) {
        int target = c.index_of(t.root);
        if (target <= i) throw std::logic_error("commutator term does not lie deeper");
        comm_[std::size_t(i) * n + j].push_back(
            {target, t.term.i, t.term.j, F.from_int(t.term.constant)});
      }
    }
}

CosetWord GroupModel::generator(int k, Elem x) const {
  CosetWord w = identity();
  w[k] = x;
  return w;
}

void GroupModel::append(CosetWord& w, int j, Elem x) const {
  if (x == 0) return;
  const FiniteField& F = ctx_->field();
  int n = int(w.size());
  bool tail = false;
  for (int i = j + 1; i < n && !tail; ++i) tail = w[i] != 0;
  if (!tail) {
    w[j] = F.add(w[j], x);
    return;
  }
  // S u_j(x) = u_j(x) prod_{i>j} u_i(s_i) [u_i(s_i), u_j(x)].
  CosetWord saved(w.begin() + j + 1, w.end());
  std::fill(w.begin() + j + 1, w.end(), 0);
  w[j] = F.add(w[j], x);
  for (int i = j + 1; i < n; ++i) {
    Elem s = saved[i - j - 1];
    if (s == 0) continue;
    append(w, i, s);
    for (const auto& t : terms(i, j)) {
      Elem v = F.mul(t.constant, F.mul(F.pow(s, t.i), F.pow(x, t.j)));
      append(w, t.target, v);
    }
  }
}

CosetWord GroupModel::multiply(const CosetWord& a, const CosetWord& b) const {
  CosetWord w = a;
  for (int k = 0; k < int(b.size()); ++k) append(w, k, b[k]);
  return w;
}

CosetWord GroupModel::inverse(const CosetWord& w) const {
  const FiniteField& F = ctx_->field();
  CosetWord out = identity();
  for (int k = int(w.size()) - 1; k >= 0; --k) append(out, k, F.neg(w[k]));
  return out;
}

CosetWord GroupModel::decode(std::uint64_t code) const {
  CosetWord w = identity();
  std::uint64_t q = ctx_->field().q();
  for (auto& e : w) {
    e = Elem(code % q);
    code /= q;
  }
  return w;
}

std::uint64_t GroupModel::encode(const CosetWord& w) const {
  std::uint64_t code = 0;
  std::uint64_t q = ctx_->field().q();
  for (int k = int(w.size()) - 1; k >= 0; --k) code = code * q + std::uint64_t(w[k]);
  return code;
}

int evaluate(const ShallowCharacter& chi, const CosetWord& w) {
  const FiniteField& F = chi.ctx->field();
  int e = 0;
  for (std::size_t k = 0; k < w.size(); ++k) e = (e + char_eval(F, chi.params[k], w[k])) % F.p();
  return e;
}

ProductTable::ProductTable(const GroupModel& g) : order_(g.order()) {
  if (order_ == 0 || order_ > (1u << 12))
    throw std::invalid_argument("group too large for a product table");
  table_.resize(order_ * order_);
  parallel_blocks(std::int64_t(order_), 64, [&](int, long long lo, long long hi) {
    for (long long a = lo; a < hi; ++a) {
      CosetWord wa = g.decode(std::uint64_t(a));
      for (std::uint64_t b = 0; b < order_; ++b)
        table_[std::uint64_t(a) * order_ + b] =
            std::uint32_t(g.encode(g.multiply(wa, g.decode(b))));
    }
  });
}

HomomorphismResult verify_homomorphism(const ShallowCharacter& chi, const GroupModel& g,
                                       const HomomorphismOptions& opts) {
  HomomorphismResult res;
  const int p = chi.ctx->field().p();
  std::uint64_t N = g.order();
  bool exhaustive = N != 0 && N <= (1u << 16) && N * N <= opts.exhaustive_limit;
  res.exhaustive = exhaustive;
  if (exhaustive) {
    std::vector<int> value(N);
    for (std::uint64_t a = 0; a < N; ++a) value[a] = evaluate(chi, g.decode(a));
    const int blocks = 64;
    std::vector<std::optional<std::pair<std::uint64_t, std::uint64_t>>> found(blocks);
    parallel_blocks(std::int64_t(N), blocks, [&](int blk, long long lo, long long hi) {
      for (long long a = lo; a < hi && !found[blk]; ++a) {
        CosetWord wa = g.decode(std::uint64_t(a));
        for (std::uint64_t b = 0; b < N; ++b) {
          std::uint64_t ab = opts.table ? opts.table->product(std::uint64_t(a), b)
                                        : g.encode(g.multiply(wa, g.decode(b)));
          if (value[ab] != (value[a] + value[b]) % p) {
            found[blk] = std::make_pair(std::uint64_t(a), b);
            break;
          }
        }
      }
    });
    res.checked = N * N;
    for (const auto& f : found)
      if (f) {
        res.holds = false;
        res.witness = std::make_pair(g.decode(f->first), g.decode(f->second));
        break;
      }
    return res;
  }
  std::uint64_t seed = opts.seed;
  if (const char* env = std::getenv("SHALLOW_CHARS_SEED")) seed = std::strtoull(env, nullptr, 10);
  res.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> elem(0, chi.ctx->field().q() - 1);
  auto random_word = [&] {
    CosetWord w = g.identity();
    for (auto& e : w) e = elem(rng);
    return w;
  };
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    CosetWord a = random_word(), b = random_word();
    ++res.checked;
    if (evaluate(chi, g.multiply(a, b)) != (evaluate(chi, a) + evaluate(chi, b)) % p) {
      res.holds = false;
      res.witness = std::make_pair(a, b);
      break;
    }
  }
  return res;
}

}  // namespace shallow
