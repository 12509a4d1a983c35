#include "shallow/json_io.hpp"

#include <stdexcept>

namespace shallow {

Json root_system_json(const RootSystem& rs) {
  Json j;
  j["type"] = std::string(1, rs.type());
  j["rank"] = rs.rank();
  j["coxeter_number"] = rs.coxeter_number();
  j["marks"] = rs.marks();
  Json pos = Json::array();
  for (const auto& r : rs.positive_roots())
    pos.push_back(std::vector<int>(r.data(), r.data() + r.size()));
  j["positive_roots"] = pos;
  return j;
}

Json affine_root_json(const RootSystem& rs, const AffineRoot& a) {
  Json j;
  j["gradient"] = std::vector<int>(a.gradient.data(), a.gradient.data() + a.gradient.size());
  j["level"] = a.level;
  j["label"] = format_root(rs, a);
  return j;
}

AffineRoot affine_root_from_json(const RootSystem& rs, const Json& j) {
  auto g = j.at("gradient").get<std::vector<int>>();
  if (int(g.size()) != rs.rank()) throw std::invalid_argument("gradient has the wrong rank");
  AffineRoot a{Root::Map(g.data(), rs.rank()), j.at("level").get<int>()};
  if (!rs.is_root(a.gradient)) throw std::invalid_argument("gradient is not a root");
  return a;
}

Json point_json(const Point& mu) {
  Json j = Json::array();
  for (int i = 0; i < mu.size(); ++i) j.push_back(mu(i).str());
  return j;
}

Point point_from_json(const Json& j) {
  Point mu(int(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    mu(int(i)) = j[i].is_string() ? Rational::parse(j[i].get<std::string>())
                                  : Rational(j[i].get<long long>());
  return mu;
}

Json field_element_json(const FiniteField& F, Elem x) { return F.coeffs(x); }

Elem field_element_from_json(const FiniteField& F, const Json& j) {
  if (j.is_array()) return F.from_coeffs(j.get<std::vector<int>>());
  int x = j.get<int>();
  if (x < 0 || x >= F.q()) throw std::invalid_argument("field element out of range");
  return x;
}

Json character_json(const ShallowCharacter& chi) {
  const Context& ctx = *chi.ctx;
  const RootSystem& rs = ctx.root_system();
  Json j;
  j["type"] = std::string(1, rs.type());
  j["rank"] = rs.rank();
  j["lambda"] = point_json(ctx.lambda());
  j["q"] = ctx.field().q();
  j["pinning"] = ctx.chevalley().pinning().str();
  Json params = Json::array();
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    Json e;
    e["root"] = affine_root_json(rs, ctx.shallow()[k]);
    e["c"] = field_element_json(ctx.field(), chi.params[k]);
    params.push_back(e);
  }
  j["params"] = params;
  return j;
}

ShallowCharacter character_from_json(const Json& j, const std::string& pinning) {
  std::string type = j.at("type").get<std::string>();
  if (type.size() != 1) throw std::invalid_argument("type must be one letter");
  int rank = j.at("rank").get<int>();
  std::string pin = pinning.empty() ? j.value("pinning", std::string("default")) : pinning;
  RootSystem rs(type[0], rank);
  Point lambda = j.at("lambda").is_string() && j.at("lambda").get<std::string>() == "barycenter"
                     ? barycenter(rs)
                     : point_from_json(j.at("lambda"));
  auto ctx = Context::make(type[0], rank, lambda, j.at("q").get<int>(), pin);
  ShallowCharacter chi = trivial_character(ctx);
  for (const auto& e : j.at("params")) {
    AffineRoot a = affine_root_from_json(rs, e.at("root"));
    int k = ctx->index_of(a);
    if (k < 0) throw std::invalid_argument("parameter on a root that is not shallow");
    chi.params[k] = field_element_from_json(ctx->field(), e.at("c"));
  }
  return chi;
}

namespace {

std::string coordinate_name(const Context& ctx, int col) {
  int m = ctx.field().m();
  std::string s = "c[" + ctx.label(col / m) + "]";
  if (m > 1) s += "." + std::to_string(col % m);
  return s;
}

Json basis_json(const Context& ctx, const FpMatrix& basis) {
  Json out = Json::array();
  for (int c = 0; c < basis.cols(); ++c) {
    auto params = from_coordinates(ctx, basis.col(c));
    Json v = Json::object();
    for (std::size_t k = 0; k < params.size(); ++k)
      if (params[k] != 0) v[ctx.label(int(k))] = field_element_json(ctx.field(), params[k]);
    out.push_back(v);
  }
  return out;
}

}  // namespace

Json space_json(const Context& ctx, const CharacterSpace& space) {
  const int p = ctx.field().p();
  Json j;
  j["type"] = ctx.root_system().name();
  j["lambda"] = point_json(ctx.lambda());
  j["q"] = ctx.field().q();
  j["shallow_roots"] = int(ctx.size());
  j["dimension"] = space.dimension;
  j["fp_dimension"] = space.fp_dimension;
  j["field_stable"] = space.field_stable;
  j["basis"] = basis_json(ctx, space.basis);
  Json forced = Json::array();
  for (const auto& f : space.forced) {
    std::string text;
    for (const auto& [col, coeff] : f.terms) {
      if (!text.empty()) text += " + ";
      if (coeff != 1) text += std::to_string(coeff) + "*";
      text += coordinate_name(ctx, col);
    }
    forced.push_back(text + " = 0 (mod " + std::to_string(p) + ")");
  }
  j["forced"] = forced;
  Json filt = Json::array();
  for (const auto& level : space.filtration)
    filt.push_back({{"depth", level.r.str()}, {"fp_dimension", level.fp_dimension}});
  j["filtration"] = filt;
  j["epipelagic_dimension"] = space.epipelagic_dimension;
  j["epipelagic_roots"] = space.epipelagic_roots;
  if (space.exhaustive_ran)
    j["exhaustive"] = {{"total", space.exhaustive_total},
                       {"valid", space.exhaustive_valid},
                       {"agrees", space.exhaustive_agrees}};
  return j;
}

Json star_json(const StarVerdict& v) {
  Json j;
  j["condition_star"] = to_string(v.status);
  j["witness"] = v.witness ? Json(format_word(v.witness->word())) : Json(nullptr);
  j["bounded"] = v.bounded;
  j["radius"] = v.radius;
  j["candidates"] = v.candidates;
  return j;
}

Json scan_json(const ScanResult& s) {
  Json j;
  j["intertwining"] = to_string(s.verdict);
  j["radius"] = s.radius;
  j["scanned"] = s.scanned;
  j["moved"] = s.moved;
  j["counterexample"] =
      s.counterexample ? Json(format_word(s.counterexample->word())) : Json(nullptr);
  Json stab = Json::array();
  for (const auto& w : s.stabilizer) stab.push_back(format_word(w.word()));
  j["stabilizer"] = stab;
  return j;
}

}  // namespace shallow
