#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shallow/characters.hpp"
#include "shallow/group_model.hpp"
#include "shallow/json_io.hpp"
#include "shallow/parallel.hpp"
#include "shallow/sp4_reference.hpp"
#include "shallow/weyl.hpp"

namespace shallow::cli {

namespace {

struct Config {
  std::string type = "C";
  int rank = 2;
  std::string point;
  std::string facet;
  int q = 2;
  std::string pinning = "default";
  int radius = -1;
  bool json = false;
  int threads = 1;
  std::string character;
  std::string params;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

char type_letter(const Config& c) {
  if (c.type.size() != 1) throw std::invalid_argument("--type must be one of A B C D E F G");
  return char(std::toupper(static_cast<unsigned char>(c.type[0])));
}

Point resolve_point(const RootSystem& rs, const Config& c) {
  if (!c.point.empty() && !c.facet.empty())
    throw std::invalid_argument("--point and --facet are exclusive");
  if (!c.facet.empty()) {
    std::vector<int> J;
    for (const auto& s : split(c.facet, ',')) J.push_back(std::stoi(s));
    return facet_barycenter(rs, facet_from_indices(rs, J));
  }
  if (c.point.empty() || c.point == "barycenter") return barycenter(rs);
  auto parts = split(c.point, ',');
  if (int(parts.size()) != rs.rank())
    throw std::invalid_argument("--point needs " + std::to_string(rs.rank()) + " coordinates");
  Point mu(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) mu(i) = Rational::parse(parts[i]);
  return mu;
}

ContextPtr make_context(const Config& c) {
  RootSystem rs(type_letter(c), c.rank);
  return Context::make(rs.type(), rs.rank(), resolve_point(rs, c), c.q, c.pinning);
}

// "a0+2a1" over the simple affine roots.
AffineRoot parse_label(const RootSystem& rs, const std::string& label) {
  Eigen::VectorXi d = Eigen::VectorXi::Zero(rs.rank() + 1);
  for (const auto& term : split(label, '+')) {
    auto pos = term.find('a');
    if (pos == std::string::npos || pos + 1 >= term.size())
      throw std::invalid_argument("bad root label '" + label + "'");
    int coeff = pos == 0 ? 1 : std::stoi(term.substr(0, pos));
    int i = std::stoi(term.substr(pos + 1));
    if (i < 0 || i > rs.rank()) throw std::invalid_argument("bad root label '" + label + "'");
    d(i) += coeff;
  }
  return from_delta_coords(rs, d);
}

ShallowCharacter load_character(const Config& c) {
  if (!c.character.empty() && !c.params.empty())
    throw std::invalid_argument("--character and --params are exclusive");
  if (!c.character.empty()) {
    std::ifstream in(c.character);
    if (!in) throw std::invalid_argument("cannot read " + c.character);
    Json j = Json::parse(in);
    return character_from_json(j, c.pinning == "default" ? "" : c.pinning);
  }
  if (c.params.empty()) throw std::invalid_argument("a character needs --character or --params");
  ContextPtr ctx = make_context(c);
  ShallowCharacter chi = trivial_character(ctx);
  for (const auto& kv : split(c.params, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--params entries are root=value");
    AffineRoot a = parse_label(ctx->root_system(), kv.substr(0, eq));
    int k = ctx->index_of(a);
    if (k < 0) throw std::invalid_argument(kv.substr(0, eq) + " is not shallow here");
    chi.params[k] = field_element_from_json(ctx->field(), Json(std::stoi(kv.substr(eq + 1))));
  }
  return chi;
}

std::string word_or_null(const std::optional<AffineWeylElement>& w) {
  return w ? format_word(w->word()) : "-";
}

int cmd_roots(const Config& c, std::ostream& out) {
  RootSystem rs(type_letter(c), c.rank);
  if (c.json) {
    out << root_system_json(rs).dump(2) << "\n";
    return kOk;
  }
  out << rs.name() << "  h = " << rs.coxeter_number() << "  marks";
  for (int m : rs.marks()) out << " " << m;
  out << "\n";
  for (const auto& r : rs.positive_roots()) {
    out << "  ";
    for (int i = 0; i < r.size(); ++i) out << r(i) << (i + 1 < r.size() ? " " : "");
    out << "   |a|^2 = " << rs.norm2(r) << "\n";
  }
  return kOk;
}

int cmd_constants(const Config& c, std::ostream& out) {
  RootSystem rs(type_letter(c), c.rank);
  Chevalley ch(rs, Pinning::parse(rs, c.pinning));
  Json rows = Json::array();
  const auto& pos = rs.positive_roots();
  for (std::size_t ia = 0; ia < pos.size(); ++ia)
    for (std::size_t ib = ia + 1; ib < pos.size(); ++ib) {
      const Root& a = pos[ia];
      const Root& b = pos[ib];
      auto terms = ch.finite_commutator(a, b);
      if (terms.empty()) continue;
      Json row;
      row["a"] = std::vector<int>(a.data(), a.data() + a.size());
      row["b"] = std::vector<int>(b.data(), b.data() + b.size());
      Json ts = Json::array();
      for (const auto& t : terms) ts.push_back({{"i", t.i}, {"j", t.j}, {"C", t.constant}});
      row["terms"] = ts;
      rows.push_back(row);
    }
  if (c.json) {
    out << Json{{"type", rs.name()}, {"pinning", ch.pinning().id()}, {"commutators", rows}}.dump(2)
        << "\n";
    return kOk;
  }
  out << rs.name() << " pinning " << ch.pinning().id() << "\n";
  for (const auto& row : rows) {
    out << "  [u" << row["a"].dump() << "(x), u" << row["b"].dump() << "(y)] =";
    for (const auto& t : row["terms"])
      out << " (" << t["i"] << "," << t["j"] << "):" << t["C"];
    out << "\n";
  }
  return kOk;
}

int cmd_shallow(const Config& c, std::ostream& out) {
  ContextPtr ctx = make_context(c);
  const RootSystem& rs = ctx->root_system();
  Json rows = Json::array();
  for (std::size_t k = 0; k < ctx->size(); ++k) {
    const AffineRoot& a = ctx->shallow()[k];
    Json row = affine_root_json(rs, a);
    row["depth"] = ctx->depth(int(k)).str();
    row["n_J"] = n_J(rs, a, ctx->facet());
    row["indecomposable"] = is_indecomposable(rs, a, ctx->lambda());
    rows.push_back(row);
  }
  if (c.json) {
    out << Json{{"type", rs.name()}, {"lambda", point_json(ctx->lambda())}, {"roots", rows}}.dump(2)
        << "\n";
    return kOk;
  }
  out << rs.name() << " at (" << point_json(ctx->lambda()).dump() << "), " << rows.size()
      << " shallow roots\n";
  out << std::left << std::setw(20) << "  root" << std::setw(8) << "depth" << std::setw(5)
      << "n_J"
      << "indecomposable\n";
  for (const auto& row : rows)
    out << "  " << std::setw(18) << row["label"].get<std::string>() << std::setw(8)
        << row["depth"].get<std::string>() << std::setw(5) << row["n_J"].get<int>()
        << (row["indecomposable"].get<bool>() ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_classify(const Config& c, std::ostream& out) {
  ShallowCharacter chi = load_character(c);
  const Context& ctx = *chi.ctx;
  ValidationResult v = validate(chi);
  Json j;
  j["valid"] = v.valid;
  Json bad = Json::array();
  for (const auto& [a, b] : v.violated)
    bad.push_back({format_root(ctx.root_system(), a), format_root(ctx.root_system(), b)});
  j["violated"] = bad;
  j["depth"] = char_depth(chi).str();
  j["trivial"] = chi.is_trivial();
  j["epipelagic"] = v.valid && is_epipelagic(chi);
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "valid       " << (v.valid ? "yes" : "no") << "\n";
    for (const auto& p : bad) out << "  violated  (" << p[0].get<std::string>() << ", "
                                  << p[1].get<std::string>() << ")\n";
    out << "depth       " << j["depth"].get<std::string>() << "\n";
    out << "epipelagic  " << (j["epipelagic"].get<bool>() ? "yes" : "no") << "\n";
  }
  return v.valid ? kOk : kFails;
}

int cmd_solve(const Config& c, std::ostream& out) {
  ContextPtr ctx = make_context(c);
  CharacterSpace sp = solve_space(ctx);
  Json j = space_json(*ctx, sp);
  j["exhaustive_check"] = sp.exhaustive_ran ? (sp.exhaustive_agrees ? "agrees" : "disagrees")
                                            : "inconclusive";
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << j["type"].get<std::string>() << " q=" << ctx->field().q() << " shallow roots "
        << ctx->size() << "\n";
    out << "dimension over F_q  "
        << (sp.dimension < 0 ? std::string("not F_q-stable") : std::to_string(sp.dimension))
        << "  (over F_p " << sp.fp_dimension << ")\n";
    out << "epipelagic          " << sp.epipelagic_dimension << " (roots "
        << sp.epipelagic_roots << ")\n";
    for (const auto& f : j["forced"]) out << "  forced  " << f.get<std::string>() << "\n";
    out << "exhaustive check    " << j["exhaustive_check"].get<std::string>() << "\n";
  }
  return sp.exhaustive_ran && !sp.exhaustive_agrees ? kFails : kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  ShallowCharacter chi = load_character(c);
  GroupModel g(chi.ctx);
  HomomorphismResult r = verify_homomorphism(chi, g);
  Json j;
  j["homomorphism"] = r.holds;
  j["exhaustive"] = r.exhaustive;
  j["checked"] = r.checked;
  if (!r.exhaustive) j["seed"] = r.seed;
  if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "homomorphism  " << (r.holds ? "yes" : "no") << "  ("
        << (r.exhaustive ? "exhaustive, " : "sampled, seed " + std::to_string(r.seed) + ", ")
        << r.checked << " pairs)\n";
    if (r.witness) out << "witness       " << j["witness"].dump() << "\n";
  }
  return r.holds ? kOk : kFails;
}

int star_exit(StarVerdict::Status s) {
  switch (s) {
    case StarVerdict::Status::Holds: return kOk;
    case StarVerdict::Status::Fails: return kFails;
    case StarVerdict::Status::Inconclusive: return kInconclusive;
  }
  return kInternal;
}

int cmd_check_star(const Config& c, std::ostream& out) {
  ShallowCharacter chi = load_character(c);
  if (!validate(chi).valid) throw std::invalid_argument("character fails validation");
  if (chi.is_trivial()) throw std::invalid_argument("condition (*) is degenerate for the trivial character");
  StarOptions opts;
  if (c.radius >= 0) opts.translation_radius = c.radius;
  StarVerdict v = condition_star(chi, opts);
  Json j = star_json(v);
  const Context& ctx = *chi.ctx;
  bool at_barycenter = true;
  Point b = barycenter(ctx.root_system());
  for (int i = 0; i < b.size(); ++i) at_barycenter = at_barycenter && b(i) == ctx.lambda()(i);
  if (at_barycenter && char_depth(chi) <= Rational(1, ctx.root_system().coxeter_number())) {
    BarycenterReport br = barycenter_criterion(chi);
    j["barycenter_criterion"] = br.criterion;
    j["agrees"] = br.agrees;
  }
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "condition (*)  " << to_string(v.status) << "\n";
    out << "witness        " << word_or_null(v.witness) << "\n";
    out << "polytope       " << (v.bounded ? "bounded" : "unbounded, radius " + std::to_string(v.radius))
        << "\n";
    if (j.contains("barycenter_criterion"))
      out << "simple params  " << (j["barycenter_criterion"].get<bool>() ? "all nontrivial" : "some trivial")
          << "\n";
  }
  return star_exit(v.status);
}

int cmd_intertwine(const Config& c, std::ostream& out) {
  ShallowCharacter chi = load_character(c);
  if (!validate(chi).valid) throw std::invalid_argument("character fails validation");
  ScanResult s = intertwining_scan(chi, c.radius >= 0 ? c.radius : 8);
  Json j;
  if (chi.is_trivial()) {
    j["condition_star"] = "degenerate";
    j["witness"] = nullptr;
  } else {
    StarVerdict v = condition_star(chi);
    j["condition_star"] = to_string(v.status);
    j["witness"] = v.witness ? Json(format_word(v.witness->word())) : Json(nullptr);
  }
  j.update(scan_json(s));
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "intertwining   " << to_string(s.verdict) << " (radius " << s.radius << ", "
        << s.scanned << " elements, " << s.moved << " move lambda)\n";
    if (s.counterexample) out << "compatible     " << format_word(s.counterexample->word()) << "\n";
    out << "stabilizer     " << j["stabilizer"].dump() << "\n";
    out << "condition (*)  " << j["condition_star"].get<std::string>() << "\n";
  }
  switch (s.verdict) {
    case ScanResult::Verdict::CollapsesToPChi: return kOk;
    case ScanResult::Verdict::Counterexample: return kFails;
    case ScanResult::Verdict::Inconclusive: return kInconclusive;
  }
  return kInternal;
}

int cmd_reproduce(const Config& c, std::ostream& out) {
  ReproOptions opts;
  opts.q = c.q;
  opts.pinning = c.pinning;
  if (c.radius >= 0) opts.radius = c.radius;
  if (!c.character.empty()) {
    ShallowCharacter chi = load_character(c);
    if (chi.ctx->root_system().type() != 'C' || chi.ctx->root_system().rank() != 2)
      throw std::invalid_argument("reproduce-sp4 needs a C2 character");
    opts.character = chi;
  }
  ReproReport rep = reproduce_sp4(opts);
  if (c.json) {
    Json items = Json::array();
    for (const auto& it : rep.items)
      items.push_back({{"name", it.name},
                       {"expected", it.expected},
                       {"actual", it.actual},
                       {"pass", it.pass},
                       {"informational", it.informational}});
    out << Json{{"items", items}, {"all_pass", rep.all_pass()}}.dump(2) << "\n";
  } else {
    for (const auto& it : rep.items) {
      out << (it.pass ? "ok    " : it.informational ? "note  " : "DIFF  ") << it.name << "\n";
      out << "      " << it.actual << "\n";
      if (!it.pass) out << "      expected: " << it.expected << "\n";
    }
    out << (rep.all_pass() ? "all items match\n" : "divergent items listed above\n");
  }
  return rep.all_pass() ? kOk : kFails;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shallow characters of parahoric subgroups of split groups"};
  app.require_subcommand(1);
  Config c;
  auto ctx_opts = [&](CLI::App* s) {
    s->add_option("--type", c.type, "Cartan type letter")->capture_default_str();
    s->add_option("--rank", c.rank, "rank")->capture_default_str();
    s->add_option("--point", c.point, "coweight coordinates a_i(lambda), e.g. 1/4,1/4");
    s->add_option("--facet", c.facet, "barycenter of the facet J, e.g. 0,1");
    s->add_option("--q", c.q, "residue field order")->capture_default_str();
    s->add_option("--pinning", c.pinning, "default or a +/- sign string")->capture_default_str();
  };
  auto char_opts = [&](CLI::App* s) {
    s->add_option("--character", c.character, "character JSON file");
    s->add_option("--params", c.params, "root=value list, e.g. a0=1,a0+a1=1");
  };
  app.add_flag("--json", c.json, "JSON output");
  app.add_option("--threads", c.threads, "worker threads")->capture_default_str();

  struct Sub {
    CLI::App* app;
    int (*fn)(const Config&, std::ostream&);
  };
  std::vector<Sub> subs;
  auto add = [&](const char* name, const char* help, int (*fn)(const Config&, std::ostream&),
                 bool context, bool character, bool radius) {
    CLI::App* s = app.add_subcommand(name, help);
    if (context) ctx_opts(s);
    if (character) char_opts(s);
    if (radius) s->add_option("--radius", c.radius, "search radius");
    s->add_flag("--json", c.json, "JSON output");
    s->add_option("--threads", c.threads, "worker threads");
    subs.push_back({s, fn});
  };
  add("roots", "positive roots, marks and Coxeter number", cmd_roots, true, false, false);
  add("constants", "finite commutator constants", cmd_constants, true, false, false);
  add("shallow", "shallow roots with depth, n_J and indecomposability", cmd_shallow, true, false,
      false);
  add("classify", "validate a character and report its depth", cmd_classify, true, true, false);
  add("solve", "solve for the space of shallow characters", cmd_solve, true, false, false);
  add("verify-hom", "check the character is a homomorphism on P+/P1", cmd_verify, true, true,
      false);
  add("check-star", "decide condition (*)", cmd_check_star, true, true, true);
  add("intertwine", "bounded intertwining scan", cmd_intertwine, true, true, true);
  add("reproduce-sp4", "compare against the published Sp4 walkthrough", cmd_reproduce, true,
      true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  set_thread_count(c.threads);
  try {
    for (const auto& s : subs)
      if (s.app->parsed()) return s.fn(c, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace shallow::cli
