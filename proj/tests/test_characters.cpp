#include <doctest.h>

#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "shallow/characters.hpp"
#include "shallow/sp4_reference.hpp"

using namespace shallow;

namespace {

AffineRoot delta(const RootSystem& rs, int a0, int a1, int a2) {
  return from_delta_coords(rs, Eigen::Vector3i(a0, a1, a2));
}

// All q^n parameter vectors, as a counter.
bool next_params(std::vector<Elem>& v, int q) {
  for (auto& x : v) {
    if (++x < q) return true;
    x = 0;
  }
  return false;
}

}  // namespace

TEST_CASE("the printed Sp4 table validates") {
  auto ctx = sp4_context(2);
  auto chi = sp4_example_character(ctx);
  CHECK(validate(chi).valid);
  CHECK(validate(trivial_character(ctx)).valid);
  CHECK(char_depth(chi) == Rational(3, 4));
  CHECK(char_depth(trivial_character(ctx)) == Rational(0));
  CHECK_FALSE(is_epipelagic(chi));
}

TEST_CASE("a mismatched long root breaks the (a1, a2) relation") {
  auto ctx = sp4_context(2);
  const auto& rs = ctx->root_system();
  auto chi = sp4_example_character(ctx);
  chi.params[ctx->index_of(delta(rs, 0, 2, 1))] = 0;
  auto v = validate(chi);
  CHECK_FALSE(v.valid);
  REQUIRE(v.violated.size() == 1);
  std::set<std::string> pair{format_root(rs, v.violated[0].first),
                             format_root(rs, v.violated[0].second)};
  CHECK(pair == std::set<std::string>{"a1", "a2"});

  auto lone = trivial_character(ctx);
  lone.params[ctx->index_of(delta(rs, 0, 1, 1))] = 1;
  v = validate(lone);
  CHECK_FALSE(v.valid);
  REQUIRE(v.violated.size() == 1);
}

TEST_CASE("make_character requires the exact shallow domain") {
  auto ctx = sp4_context(2);
  std::map<AffineRoot, Elem, AffineRootLess> m;
  for (const auto& a : ctx->shallow()) m[a] = 0;
  CHECK(make_character(ctx, m).is_trivial());
  auto missing = m;
  missing.erase(missing.begin());
  CHECK_THROWS_AS(make_character(ctx, missing), std::invalid_argument);
  auto extra = m;
  extra[delta(ctx->root_system(), 1, 2, 1)] = 1;
  CHECK_THROWS_AS(make_character(ctx, extra), std::invalid_argument);
}

TEST_CASE("indecomposable extension") {
  auto ctx = sp4_context(2);
  const auto& rs = ctx->root_system();
  std::map<AffineRoot, Elem, AffineRootLess> partial;
  for (int i = 0; i <= 2; ++i) partial[simple_affine_root(rs, i)] = 1;
  auto chi = indecomposable_extension(ctx, partial);
  CHECK(validate(chi).valid);
  CHECK(char_depth(chi) == Rational(1, 4));
  CHECK(is_epipelagic(chi));
  CHECK(indecomposable_extension(ctx, {}).is_trivial());

  // On the face J = {1, 2} the root a0+a1 has n_J = 1.
  Point mu = facet_barycenter(rs, facet_from_indices(rs, {1, 2}));
  auto face = Context::make('C', 2, mu, 2);
  AffineRoot r = delta(rs, 1, 1, 0);
  REQUIRE(face->index_of(r) >= 0);
  CHECK(is_indecomposable(rs, r, mu));
  auto ext = indecomposable_extension(face, {{r, 1}});
  CHECK(validate(ext).valid);
  CHECK(ext.params[face->index_of(r)] == 1);
}

TEST_CASE("every partial assignment on indecomposables extends") {
  RootSystem rs('C', 2);
  for (std::vector<int> J : {std::vector<int>{0, 1, 2}, {1, 2}, {0, 1}, {0, 2}, {0}, {1}, {2}}) {
    CAPTURE(J.size());
    Point mu = facet_barycenter(rs, facet_from_indices(rs, J));
    auto ctx = Context::make('C', 2, mu, 2);
    std::vector<AffineRoot> ind;
    for (const auto& a : ctx->shallow())
      if (is_indecomposable(rs, a, mu)) ind.push_back(a);
    for (int mask = 0; mask < (1 << ind.size()); ++mask) {
      std::map<AffineRoot, Elem, AffineRootLess> partial;
      for (std::size_t k = 0; k < ind.size(); ++k) partial[ind[k]] = (mask >> k) & 1;
      auto chi = indecomposable_extension(ctx, partial);
      CHECK(validate(chi).valid);
      for (std::size_t k = 0; k < ctx->size(); ++k)
        if (!is_indecomposable(rs, ctx->shallow()[k], mu)) CHECK(chi.params[k] == 0);
    }
  }
}

TEST_CASE("C2 barycenter over F_2: the space of characters") {
  auto ctx = sp4_context(2);
  const auto& rs = ctx->root_system();
  auto space = solve_space(ctx);
  CHECK(space.dimension == 5);
  CHECK(space.exhaustive_ran);
  CHECK(space.exhaustive_agrees);
  CHECK(space.exhaustive_valid == 32);
  CHECK(space.exhaustive_total == 256);
  CHECK(space.epipelagic_roots == 3);
  CHECK(space.epipelagic_dimension == 3);

  std::set<std::set<std::string>> forced;
  for (const auto& f : space.forced) {
    std::set<std::string> s;
    for (auto [col, coeff] : f.terms) s.insert(ctx->label(col));
    forced.insert(s);
  }
  CHECK(forced == std::set<std::set<std::string>>{
                      {"a1+a2", "2a1+a2"}, {"a0+a1", "a0+2a1"}, {"a0+a1+a2"}});

  // The same constraints by brute force.
  int i12 = ctx->index_of(delta(rs, 0, 1, 1)), i122 = ctx->index_of(delta(rs, 0, 2, 1));
  int i01 = ctx->index_of(delta(rs, 1, 1, 0)), i011 = ctx->index_of(delta(rs, 1, 2, 0));
  int i012 = ctx->index_of(delta(rs, 1, 1, 1));
  auto chi = trivial_character(ctx);
  int valid = 0;
  do {
    bool want = chi.params[i12] == chi.params[i122] && chi.params[i01] == chi.params[i011] &&
                chi.params[i012] == 0;
    CHECK(validate(chi).valid == want);
    valid += want;
  } while (next_params(chi.params, 2));
  CHECK(valid == 32);
}

TEST_CASE("C2 barycenter over F_3 kills both long-root pairs") {
  auto ctx = sp4_context(3);
  const auto& rs = ctx->root_system();
  auto space = solve_space(ctx);
  CHECK(space.dimension == 3);
  CHECK(space.exhaustive_agrees);
  int checked = 0;
  auto chi = trivial_character(ctx);
  do {
    if (!validate(chi).valid) continue;
    ++checked;
    CHECK(chi.params[ctx->index_of(delta(rs, 0, 1, 1))] == 0);
    CHECK(chi.params[ctx->index_of(delta(rs, 0, 2, 1))] == 0);
  } while (next_params(chi.params, 3));
  CHECK(checked == 27);
  CHECK_FALSE(validate(sp4_example_character(ctx)).valid);
}

TEST_CASE("the depth filtration is nested and matches char_depth") {
  for (int q : {2, 3}) {
    auto ctx = sp4_context(q);
    auto space = solve_space(ctx);
    REQUIRE(!space.filtration.empty());
    for (std::size_t k = 1; k < space.filtration.size(); ++k) {
      CHECK(space.filtration[k - 1].r < space.filtration[k].r);
      CHECK(space.filtration[k - 1].fp_dimension <= space.filtration[k].fp_dimension);
    }
    CHECK(space.filtration.back().fp_dimension == space.fp_dimension);
    CHECK(space.filtration.front().fp_dimension == space.epipelagic_dimension);
    std::vector<long long> count(space.filtration.size(), 0);
    auto chi = trivial_character(ctx);
    do {
      if (!validate(chi).valid) continue;
      for (std::size_t k = 0; k < count.size(); ++k)
        if (char_depth(chi) <= space.filtration[k].r) ++count[k];
    } while (next_params(chi.params, q));
    for (std::size_t k = 0; k < count.size(); ++k) {
      long long want = 1;
      for (int d = 0; d < space.filtration[k].fp_dimension; ++d) want *= q;
      CHECK(count[k] == want);
    }
  }
}

TEST_CASE("epipelagic dimension equals the number of epipelagic roots") {
  for (const auto& site : fixtures::property_sites())
    for (int q : {2, 3}) {
      auto ctx = Context::make(site.type, site.rank, site.lambda, q);
      auto space = solve_space(ctx, {.exhaustive = false});
      CAPTURE(site.type);
      CAPTURE(site.rank);
      CHECK(space.epipelagic_dimension == space.epipelagic_roots);
      CHECK(space.epipelagic_roots > 0);
    }
}

TEST_CASE("valid characters form a subspace") {
  auto ctx = sp4_context(3);
  std::vector<ShallowCharacter> valid;
  auto chi = trivial_character(ctx);
  do {
    if (validate(chi).valid) valid.push_back(chi);
  } while (next_params(chi.params, 3));
  const auto& F = ctx->field();
  for (const auto& a : valid)
    for (const auto& b : valid) {
      auto s = a;
      for (std::size_t k = 0; k < s.params.size(); ++k)
        s.params[k] = F.add(a.params[k], b.params[k]);
      CHECK(validate(s).valid);
    }
  for (const auto& a : valid) {
    auto d = scalar_act(2, a);
    for (std::size_t k = 0; k < d.params.size(); ++k) CHECK(d.params[k] == F.mul(2, a.params[k]));
    CHECK(scalar_act(1, a).params == a.params);
  }
  CHECK_THROWS(scalar_act(0, valid.back()));
}

TEST_CASE("scalar action on the simple supercuspidal character") {
  auto ctx = sp4_context(3);
  const auto& rs = ctx->root_system();
  std::map<AffineRoot, Elem, AffineRootLess> partial;
  for (int i = 0; i <= 2; ++i) partial[simple_affine_root(rs, i)] = 1;
  auto chi = indecomposable_extension(ctx, partial);
  auto twisted = scalar_act(2, chi);
  CHECK(validate(twisted).valid);
  for (int i = 0; i <= 2; ++i)
    CHECK(twisted.params[ctx->index_of(simple_affine_root(rs, i))] == 2);
  auto ctx2 = sp4_context(2);
  auto chi2 = sp4_example_character(ctx2);
  CHECK(scalar_act(1, chi2).params == chi2.params);
}

TEST_CASE("validation over F_2 ignores the pinning") {
  std::vector<ContextPtr> ctxs;
  for (std::string pin : {"++", "+-", "-+", "--"}) ctxs.push_back(sp4_context(2, pin));
  std::vector<Elem> params(ctxs[0]->size(), 0);
  do {
    bool first = true, verdict = false;
    for (const auto& ctx : ctxs) {
      ShallowCharacter chi{ctx, params};
      bool v = validate(chi).valid;
      if (first) verdict = v;
      CHECK(v == verdict);
      first = false;
    }
  } while (next_params(params, 2));
}

TEST_CASE("the F_p-linear solver agrees with brute force on small contexts") {
  for (const auto& site : fixtures::property_sites()) {
    for (int q : {2, 3, 4}) {
      auto ctx = Context::make(site.type, site.rank, site.lambda, q);
      double maps = std::pow(double(q), double(ctx->size()));
      if (maps > 70000) continue;
      auto space = solve_space(ctx);
      CAPTURE(site.type);
      CAPTURE(q);
      CHECK(space.exhaustive_ran);
      CHECK(space.exhaustive_agrees);
      long long want = 1;
      for (int d = 0; d < space.fp_dimension; ++d) want *= ctx->field().p();
      CHECK(space.exhaustive_valid == want);
    }
  }
}
