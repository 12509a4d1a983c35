// Acceptance gate. One line per criterion: "PASS cN ..." or "FAIL cN ...".
// Every comparison is exact; only wall-clock budgets carry a limit.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run one
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "shallow/group_model.hpp"
#include "shallow/sp4_reference.hpp"
#include "shallow/weyl.hpp"
#include "support/matrix_models.hpp"

using namespace shallow;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

AffineRoot delta(const RootSystem& rs, int a0, int a1, int a2) {
  return from_delta_coords(rs, Eigen::Vector3i(a0, a1, a2));
}

AffineRoot delta(const RootSystem& rs, const Delta3& d) { return delta(rs, d[0], d[1], d[2]); }

std::string label(const RootSystem& rs, const AffineRoot& a) { return format_root(rs, a); }

bool matches_line(const Chevalley& ch, const PublishedCommutator& c) {
  const RootSystem& rs = ch.root_system();
  auto terms = commutator_expansion(ch, delta(rs, c.outer), delta(rs, c.inner));
  if (terms.size() != c.terms.size()) return false;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& want = c.terms[t];
    if (terms[t].term.i != want.i || terms[t].term.j != want.j ||
        terms[t].term.constant != want.constant || !(terms[t].root == delta(rs, want.target)))
      return false;
  }
  return true;
}

Outcome commutator_table() {
  auto ctx = sp4_context(2);
  const auto& rs = ctx->root_system();
  const auto& pub = published_commutators();
  int matched = 0;
  std::string diff;
  for (std::size_t k = 0; k < pub.size(); ++k) {
    if (matches_line(ctx->chevalley(), pub[k]))
      ++matched;
    else
      diff += " line " + std::to_string(k + 1);
  }
  // Best agreement over every pinning, for the record.
  int best = 0;
  for (std::string pin : {"++", "+-", "-+", "--"}) {
    Chevalley ch(rs, Pinning::parse(rs, pin));
    int m = 0;
    for (const auto& c : pub) m += matches_line(ch, c);
    best = std::max(best, m);
  }
  std::ostringstream os;
  os << matched << "/12 formulas match";
  if (!diff.empty()) os << ", differing:" << diff;
  os << "; best over all pinnings " << best << "/12";
  return {matched == 12, os.str()};
}

Outcome census() {
  auto ctx = sp4_context(2);
  const auto& rs = ctx->root_system();
  const std::vector<std::pair<std::array<int, 3>, Rational>> want = {
      {{1, 0, 0}, Rational(1, 4)}, {{0, 1, 0}, Rational(1, 4)}, {{0, 0, 1}, Rational(1, 4)},
      {{1, 1, 0}, Rational(1, 2)}, {{0, 1, 1}, Rational(1, 2)}, {{1, 2, 0}, Rational(3, 4)},
      {{1, 1, 1}, Rational(3, 4)}, {{0, 2, 1}, Rational(3, 4)}};
  auto roots = shallow_roots(rs, ctx->lambda());
  bool ok = roots.size() == want.size();
  std::set<std::string> ind;
  for (std::size_t k = 0; ok && k < roots.size(); ++k) {
    auto [d, r] = want[k];
    ok = roots[k] == delta(rs, d[0], d[1], d[2]) && depth(roots[k], ctx->lambda()) == r;
  }
  for (const auto& a : roots) {
    bool i = is_indecomposable(rs, a, ctx->lambda());
    if (i) ind.insert(label(rs, a));
    ok = ok && (i == (n_J(rs, a, ctx->facet()) == 1));
  }
  ok = ok && ind == std::set<std::string>{"a0", "a1", "a2"};
  std::string text = std::to_string(roots.size()) + " shallow roots, indecomposable {";
  for (const auto& s : ind) text += " " + s;
  return {ok, text + " }"};
}

Outcome validator() {
  auto ctx = sp4_context(2);
  const auto& rs = ctx->root_system();
  auto chi = sp4_example_character(ctx);
  bool table_ok = validate(chi).valid;
  chi.params[ctx->index_of(delta(rs, 0, 2, 1))] = 0;
  auto v = validate(chi);
  bool flip_ok = !v.valid && v.violated.size() == 1 &&
                 std::set<std::string>{label(rs, v.violated[0].first),
                                       label(rs, v.violated[0].second)} ==
                     std::set<std::string>{"a1", "a2"};
  return {table_ok && flip_ok, std::string("table valid ") + (table_ok ? "yes" : "no") +
                                   ", flipped 2a1+a2 rejected at (a1, a2) " +
                                   (flip_ok ? "yes" : "no")};
}

Outcome round_trip() {
  struct Case {
    char type;
    int q;
  };
  std::string detail;
  bool ok = true;
  for (Case c : {Case{'C', 2}, Case{'A', 2}, Case{'A', 3}}) {
    RootSystem rs(c.type, 2);
    auto ctx = Context::make(c.type, 2, barycenter(rs), c.q);
    GroupModel g(ctx);
    ProductTable table(g);
    HomomorphismOptions opts;
    opts.table = &table;
    std::uint64_t maps = g.order(), agree = 0, valid = 0;
    for (std::uint64_t code = 0; code < maps; ++code) {
      ShallowCharacter chi{ctx, g.decode(code)};
      bool v = validate(chi).valid;
      auto h = verify_homomorphism(chi, g, opts);
      valid += v;
      agree += h.exhaustive && h.holds == v;
    }
    ok = ok && agree == maps;
    detail += rs.name() + "/q" + std::to_string(c.q) + " " + std::to_string(agree) + "/" +
              std::to_string(maps) + " agree (" + std::to_string(valid) + " valid)" + (c.q == 3 ? "" : "; ");
  }
  return {ok, detail};
}

Outcome character_space() {
  auto ctx = sp4_context(2);
  auto s = solve_space(ctx);
  std::set<std::set<std::string>> forced;
  for (const auto& f : s.forced) {
    std::set<std::string> roots;
    for (auto [col, coeff] : f.terms) roots.insert(ctx->label(col));
    forced.insert(roots);
  }
  bool ok = s.dimension == 5 &&
            forced == std::set<std::set<std::string>>{
                          {"a1+a2", "2a1+a2"}, {"a0+a1", "a0+2a1"}, {"a0+a1+a2"}} &&
            s.exhaustive_ran && s.exhaustive_agrees && s.exhaustive_total == 256 &&
            s.exhaustive_valid == 32 && s.epipelagic_dimension == 3 && s.epipelagic_roots == 3;
  std::ostringstream os;
  os << "dim " << s.dimension << ", " << s.forced.size() << " forced relations, exhaustive "
     << s.exhaustive_valid << "/" << s.exhaustive_total
     << (s.exhaustive_agrees ? " agrees" : " disagrees") << ", dim V_+ "
     << s.epipelagic_dimension << " vs " << s.epipelagic_roots << " epipelagic roots";
  return {ok, os.str()};
}

Outcome condition_star_example() {
  auto ctx = sp4_context(2);
  const auto& rs = ctx->root_system();
  auto chi = sp4_example_character(ctx);
  auto v = condition_star(chi);
  bool star_ok = v.status == StarVerdict::Status::Fails && v.witness &&
                 v.witness->word() == std::vector<int>{1};
  // support(mu, s) only shrinks as s grows, and changes at the values a(mu).
  Point mu = AffineWeylElement::simple(rs, 1).act(ctx->lambda());
  std::set<Rational> cuts;
  for (const auto& a : ctx->shallow())
    if (depth(a, mu) > Rational(3, 4)) cuts.insert(depth(a, mu));
  bool sup_ok = !cuts.empty();
  for (const Rational& s : cuts)
    for (const auto& a : support(rs, mu, s, ctx->lambda()))
      sup_ok = sup_ok && a == delta(rs, 1, 1, 1);
  return {star_ok && sup_ok,
          "condition (*) " + to_string(v.status) +
              (v.witness ? " witness " + format_word(v.witness->word()) : "") +
              ", support beyond 3/4 inside {a0+a1+a2} " + (sup_ok ? "yes" : "no")};
}

Outcome scan() {
  auto ctx = sp4_context(2);
  auto chi = sp4_example_character(ctx);
  const int radius = 8;
  auto r = intertwining_scan(chi, radius);
  auto value = [&](const AffineRoot& a) {
    int k = ctx->index_of(a);
    return k < 0 ? 0 : char_eval(ctx->field(), chi.params[k], 1);
  };
  std::size_t moved = 0, violated = 0;
  for (const auto& w : weyl_ball(ctx->root_system(), radius)) {
    if (w.act(ctx->lambda()) == ctx->lambda()) continue;
    ++moved;
    auto red = intertwining_reduction(chi, w);
    if (!red.compatible && red.violated && red.image &&
        depth(*red.violated, ctx->lambda()) > Rational(0) &&
        *red.image == w.act(*red.violated) && value(*red.violated) != value(*red.image))
      ++violated;
  }
  bool ok = r.verdict == ScanResult::Verdict::CollapsesToPChi && moved == violated &&
            r.moved == moved && r.stabilizer.size() == 1 && r.stabilizer[0].is_identity();
  std::ostringstream os;
  os << to_string(r.verdict) << ", " << violated << "/" << moved
     << " moving elements violated, stabilizer size " << r.stabilizer.size();
  return {ok, os.str()};
}

Outcome barycenter_equivalence() {
  auto ctx = sp4_context(2);
  const auto& rs = ctx->root_system();
  int agree = 0;
  for (int mask = 0; mask < 8; ++mask) {
    std::map<AffineRoot, Elem, AffineRootLess> partial;
    for (int i = 0; i <= 2; ++i) partial[simple_affine_root(rs, i)] = (mask >> i) & 1;
    auto chi = indecomposable_extension(ctx, partial);
    auto b = barycenter_criterion(chi);
    bool holds = mask == 0 ? false
                           : condition_star(chi).status == StarVerdict::Status::Holds;
    agree += b.criterion == holds && b.agrees;
  }
  return {agree == 8, std::to_string(agree) + "/8 parameter choices agree"};
}

Outcome properties() {
  long pairs = 0, bad = 0;
  for (const auto& site : fixtures::property_sites()) {
    RootSystem rs(site.type, site.rank);
    const Point& l = site.lambda;
    auto roots = shallow_roots(rs, l);
    for (const auto& a : roots)
      for (const auto& b : roots) {
        AffineRoot c = a + b;
        if (!rs.is_root(c.gradient)) continue;
        ++pairs;
        if (depth(c, l) < Rational(1)) {
          if (!is_shallow(c, l)) ++bad;
          if (!(depth(a, l) < depth(c, l) && depth(b, l) < depth(c, l))) ++bad;
        }
      }
  }
  long parabolic = 0, parabolic_bad = 0;
  for (char type : {'A', 'C'}) {
    RootSystem rs(type, 2);
    Point lam = barycenter(rs);
    for (int mask = 1; mask < 7; ++mask) {
      std::vector<int> I;
      for (int i = 0; i <= 2; ++i)
        if (mask >> i & 1) I.push_back(i);
      ++parabolic;
      Point mu = long_element(rs, I).act(lam);
      for (int i : I)
        if (!(depth(simple_affine_root(rs, i), mu) < Rational(0))) {
          ++parabolic_bad;
          break;
        }
    }
  }
  auto ctx = sp4_context(2);
  GroupModel g(ctx);
  auto m = oracle::sp4_model();
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<std::uint64_t> pick(0, g.order() - 1);
  int mismatches = 0;
  const long long N = 4;
  for (int t = 0; t < 1000; ++t) {
    auto a = g.decode(pick(rng)), b = g.decode(pick(rng)), c = g.decode(pick(rng));
    auto left = g.multiply(g.multiply(a, b), c), right = g.multiply(a, g.multiply(b, c));
    oracle::IMat prod = oracle::reduce(oracle::word_matrix(m, *ctx, a, N) *
                                           oracle::word_matrix(m, *ctx, b, N),
                                       N);
    prod = oracle::reduce(prod * oracle::word_matrix(m, *ctx, c, N), N);
    oracle::IMat r = oracle::reduce(oracle::word_inverse_matrix(m, *ctx, left, N) * prod, N);
    if (left != right || !oracle::in_P1(m, ctx->lambda(), r, 2, N)) ++mismatches;
  }
  std::ostringstream os;
  os << pairs << " root pairs with " << bad << " failures, " << parabolic
     << " parabolic long elements with " << parabolic_bad << " failures, " << mismatches
     << "/1000 associativity mismatches";
  return {bad == 0 && parabolic_bad == 0 && mismatches == 0 && pairs > 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "commutator table", 1.0, commutator_table},
      {2, "shallow census", 1.0, census},
      {3, "relation validator", 1.0, validator},
      {4, "validate vs homomorphism", 300.0, round_trip},
      {5, "character space", 10.0, character_space},
      {6, "condition (*)", 10.0, condition_star_example},
      {7, "intertwining scan", 120.0, scan},
      {8, "barycenter equivalence", 60.0, barycenter_equivalence},
      {9, "property suites", 300.0, properties},
  };
  int only = 0;
  for (int k = 1; k < argc; ++k)
    if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc) only = std::atoi(argv[++k]);
  int failed = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass && secs < c.budget_seconds;
    std::printf("%s c%d %s: %s [%.2fs, limit %.0fs]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_seconds);
    failed += !pass;
  }
  return failed ? 1 : 0;
}
