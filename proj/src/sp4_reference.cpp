#include "shallow/sp4_reference.hpp"

#include <algorithm>
#include <sstream>

#include "shallow/group_model.hpp"
#include "shallow/weyl.hpp"

namespace shallow {

const std::vector<PublishedCommutator>& published_commutators() {
  static const std::vector<PublishedCommutator> table = {
      {{0, 1, 0}, {0, 0, 1}, {{1, 1, +1, {0, 1, 1}}, {2, 1, -1, {0, 2, 1}}}},
      {{0, 1, 0}, {1, 0, 0}, {{1, 1, -1, {1, 1, 0}}, {2, 1, -1, {1, 2, 0}}}},
      {{0, 1, 0}, {0, 1, 1}, {{1, 1, +2, {0, 2, 1}}}},
      {{0, 1, 0}, {1, 1, 0}, {{1, 1, -2, {1, 2, 0}}}},
      {{0, 0, 1}, {1, 1, 0}, {{1, 1, -1, {1, 1, 1}}, {1, 2, -1, {2, 2, 1}}}},
      {{1, 0, 0}, {0, 1, 1}, {{1, 1, -1, {1, 1, 1}}, {1, 2, -1, {1, 2, 2}}}},
      {{0, 1, 1}, {1, 2, 0}, {{1, 1, +1, {1, 3, 1}}, {2, 1, +1, {1, 4, 2}}}},
      {{1, 1, 0}, {0, 2, 1}, {{1, 1, -1, {1, 3, 1}}, {2, 1, +1, {2, 4, 1}}}},
      {{0, 1, 1}, {1, 1, 1}, {{1, 1, -2, {1, 2, 2}}}},
      {{1, 1, 0}, {1, 1, 1}, {{1, 1, +2, {2, 2, 1}}}},
      {{0, 2, 1}, {1, 1, 1}, {{1, 1, -1, {1, 3, 2}}, {1, 2, +1, {2, 4, 3}}}},
      {{1, 2, 0}, {1, 1, 1}, {{1, 1, +1, {2, 3, 1}}, {1, 2, +1, {3, 4, 2}}}},
  };
  return table;
}

const std::vector<PublishedRelation>& published_relations() {
  static const std::vector<PublishedRelation> table = {
      {{0, 1, 0}, {0, 0, 1}, {{{0, 1, 1}, {1, 1}}, {{0, 2, 1}, {2, 1}}}},
      {{0, 1, 0}, {1, 0, 0}, {{{1, 1, 0}, {1, 1}}, {{1, 2, 0}, {2, 1}}}},
      {{0, 0, 1}, {1, 1, 0}, {{{1, 1, 1}, {1, 1}}}},
      {{1, 0, 0}, {0, 1, 1}, {{{1, 1, 1}, {1, 1}}}},
  };
  return table;
}

const std::vector<std::pair<Delta3, int>>& published_character() {
  static const std::vector<std::pair<Delta3, int>> table = {
      {{1, 0, 0}, 1}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}, {{1, 1, 0}, 1},
      {{0, 1, 1}, 1}, {{1, 2, 0}, 1}, {{1, 1, 1}, 0}, {{0, 2, 1}, 1},
  };
  return table;
}

namespace {

AffineRoot from_delta(const RootSystem& rs, const Delta3& d) {
  return from_delta_coords(rs, Eigen::Vector3i(d[0], d[1], d[2]));
}

Delta3 to_delta(const RootSystem& rs, const AffineRoot& a) {
  Eigen::VectorXi c = delta_coords(rs, a);
  return {c(0), c(1), c(2)};
}

std::string monomial(int constant, int xpow, int ypow) {
  std::string s = constant < 0 ? "-" : "+";
  if (std::abs(constant) != 1) s += std::to_string(std::abs(constant));
  auto var = [](const char* v, int e) {
    if (e == 0) return std::string();
    return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
  };
  return s + var("x", xpow) + var("y", ypow);
}

PublishedCommutator computed(const Chevalley& ch, const Delta3& outer, const Delta3& inner) {
  const RootSystem& rs = ch.root_system();
  PublishedCommutator c{outer, inner, {}};
  for (const auto& t : commutator_expansion(ch, from_delta(rs, outer), from_delta(rs, inner)))
    c.terms.push_back({t.term.i, t.term.j, t.term.constant, to_delta(rs, t.root)});
  return c;
}

bool same_terms(const PublishedCommutator& a, const PublishedCommutator& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t k = 0; k < a.terms.size(); ++k) {
    const auto& s = a.terms[k];
    const auto& t = b.terms[k];
    if (s.i != t.i || s.j != t.j || s.constant != t.constant || s.target != t.target)
      return false;
  }
  return true;
}

std::string format_relation(const RootSystem& rs, const PublishedRelation& r) {
  std::string s = "(" + format_root(rs, from_delta(rs, r.first)) + ", " +
                  format_root(rs, from_delta(rs, r.second)) + "): 1 =";
  for (const auto& [target, e] : r.terms)
    s += " chi_{" + format_root(rs, from_delta(rs, target)) + "}(" +
         monomial(1, e.second, e.first).substr(1) + ")";
  return s;
}

// Shallow relations with a constant nonzero in F_q, as families.
std::vector<PublishedRelation> computed_relations(const Context& ctx) {
  const RootSystem& rs = ctx.root_system();
  std::vector<PublishedRelation> out;
  for (const auto& rel : ctx.relations()) {
    PublishedRelation r{to_delta(rs, ctx.shallow()[rel.a]), to_delta(rs, ctx.shallow()[rel.b]),
                        {}};
    for (const auto& t : rel.terms)
      if (ctx.field().from_int(t.constant) != 0)
        r.terms.push_back({to_delta(rs, ctx.shallow()[t.root]), {t.i, t.j}});
    if (!r.terms.empty()) out.push_back(std::move(r));
  }
  return out;
}

std::string chi_at_one(const FiniteField& F, Elem c) {
  int e = char_eval(F, c, 1);
  if (F.p() == 2) return e ? "-1" : "+1";
  return e ? "z^" + std::to_string(e) : "+1";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

}  // namespace

std::string format_published(const RootSystem& rs, const PublishedCommutator& c) {
  std::string s = "[u_{" + format_root(rs, from_delta(rs, c.outer)) + "}(y), u_{" +
                  format_root(rs, from_delta(rs, c.inner)) + "}(x)] =";
  for (const auto& t : c.terms)
    s += " u_{" + format_root(rs, from_delta(rs, t.target)) + "}(" +
         monomial(t.constant, t.j, t.i) + ")";
  return s;
}

ContextPtr sp4_context(int q, const std::string& pinning) {
  return Context::barycentric('C', 2, q, pinning);
}

ShallowCharacter sp4_example_character(const ContextPtr& ctx) {
  ShallowCharacter chi = trivial_character(ctx);
  for (const auto& [d, c] : published_character())
    chi.params[ctx->index_of(from_delta(ctx->root_system(), d))] = Elem(c);
  return chi;
}

bool ReproReport::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const ReproItem& it) { return it.pass || it.informational; });
}

ReproReport reproduce_sp4(const ReproOptions& opts) {
  ReproReport rep;
  ContextPtr ctx = sp4_context(opts.q, opts.pinning);
  const RootSystem& rs = ctx->root_system();
  const bool override_chi = opts.character.has_value();
  auto add = [&](std::string name, std::string expected, std::string actual, bool info = false) {
    bool pass = expected == actual;
    rep.items.push_back({std::move(name), std::move(expected), std::move(actual), pass, info});
  };

  const auto& pub = published_commutators();
  for (std::size_t k = 0; k < pub.size(); ++k) {
    PublishedCommutator c = computed(ctx->chevalley(), pub[k].outer, pub[k].inner);
    rep.items.push_back({"commutator " + std::to_string(k + 1), format_published(rs, pub[k]),
                         format_published(rs, c), same_terms(pub[k], c), false});
  }

  std::vector<std::string> census;
  for (std::size_t k = 0; k < ctx->size(); ++k)
    census.push_back(ctx->label(int(k)) + "@" + ctx->depth(int(k)).str());
  add("shallow roots",
      "a0@1/4 a1@1/4 a2@1/4 a0+a1@1/2 a1+a2@1/2 a0+2a1@3/4 a0+a1+a2@3/4 2a1+a2@3/4",
      join(census, " "));

  auto rels = computed_relations(*ctx);
  for (std::size_t k = 0; k < published_relations().size(); ++k) {
    PublishedRelation want = published_relations()[k];
    std::string actual = "missing";
    for (auto r : rels) {
      if (r.first == want.second && r.second == want.first) {
        std::swap(r.first, r.second);
        for (auto& t : r.terms) std::swap(t.second.first, t.second.second);
      }
      if (r.first == want.first && r.second == want.second) actual = format_relation(rs, r);
    }
    add("relation family " + std::to_string(k + 1), format_relation(rs, want), actual);
  }
  add("relation family count", std::to_string(published_relations().size()),
      std::to_string(rels.size()));

  ShallowCharacter chi = override_chi ? *opts.character : sp4_example_character(ctx);
  const FiniteField& G = chi.ctx->field();

  std::vector<std::string> want_table, have_table;
  for (const auto& [d, c] : published_character()) {
    AffineRoot a = from_delta(rs, d);
    want_table.push_back(format_root(rs, a) + ":" + (c ? "-1" : "+1"));
    have_table.push_back(format_root(rs, a) + ":" +
                         chi_at_one(G, chi.params[chi.ctx->index_of(a)]));
  }
  add("character table", join(want_table, " "), join(have_table, " "), override_chi);

  ValidationResult val = validate(chi);
  std::string vtext = val.valid ? "true" : "false";
  for (const auto& [a, b] : val.violated)
    vtext += " (" + format_root(rs, a) + ", " + format_root(rs, b) + ")";
  add("validate", "true", vtext, override_chi);

  GroupModel g(chi.ctx);
  HomomorphismResult hom = verify_homomorphism(chi, g);
  add("homomorphism", "true", hom.holds ? "true" : "false", override_chi);

  const std::string skipped = "skipped: character invalid";
  add("depth", "3/4", char_depth(chi).str(), override_chi);

  if (val.valid && !chi.is_trivial()) {
    StarVerdict star = condition_star(chi);
    std::string s = to_string(star.status);
    if (star.witness) s += " witness " + format_word(star.witness->word());
    add("condition (*)", "fails witness s1", s, override_chi);
  } else {
    add("condition (*)", "fails witness s1", val.valid ? "trivial character" : skipped,
        override_chi);
  }

  // Union over s > 3/4 of the supports at n_1 lambda.
  Point mu = AffineWeylElement::simple(rs, 1).act(chi.ctx->lambda());
  std::vector<std::string> deep;
  for (const auto& a : support(rs, mu, Rational(3, 4), chi.ctx->lambda()))
    if (depth(a, mu) > Rational(3, 4)) deep.push_back(format_root(rs, a));
  add("support at n1 lambda beyond 3/4", "{a0+a1+a2}", "{" + join(deep, ", ") + "}");

  if (val.valid) {
    ScanResult scan = intertwining_scan(chi, opts.radius);
    std::string s = to_string(scan.verdict);
    if (scan.counterexample) s += " at " + format_word(scan.counterexample->word());
    std::vector<std::string> stab;
    for (const auto& w : scan.stabilizer) stab.push_back(format_word(w.word()));
    s += " stabilizer {" + join(stab, ", ") + "}";
    add("intertwining scan radius " + std::to_string(opts.radius),
        "collapses_to_P_chi stabilizer {e}", s, override_chi);
  } else {
    add("intertwining scan radius " + std::to_string(opts.radius),
        "collapses_to_P_chi stabilizer {e}", skipped, override_chi);
  }
  return rep;
}

}  // namespace shallow
