// JSON encodings for roots, points, characters and reports.
#pragma once

#include <string>

#include <json.hpp>

#include "shallow/characters.hpp"
#include "shallow/weyl.hpp"

namespace shallow {

using Json = nlohmann::ordered_json;

Json root_system_json(const RootSystem& rs);

// {"gradient": [...], "level": n, "label": "a0+a1"}; label is ignored on read.
Json affine_root_json(const RootSystem& rs, const AffineRoot& a);
AffineRoot affine_root_from_json(const RootSystem& rs, const Json& j);

// Coordinates as strings "p/q".
Json point_json(const Point& mu);
Point point_from_json(const Json& j);

// Field elements as coefficient vectors over F_p, constant term first. The
// reader also accepts the integer encoding sum c_i p^i.
Json field_element_json(const FiniteField& F, Elem x);
Elem field_element_from_json(const FiniteField& F, const Json& j);

// {"type", "rank", "lambda", "q", "pinning", "params": [{"root", "c"}]}.
// Shallow roots missing from params get c = 0.
Json character_json(const ShallowCharacter& chi);
// The pinning argument overrides the file unless empty.
ShallowCharacter character_from_json(const Json& j, const std::string& pinning = "");

Json space_json(const Context& ctx, const CharacterSpace& space);
Json star_json(const StarVerdict& v);
Json scan_json(const ScanResult& s);

}  // namespace shallow
