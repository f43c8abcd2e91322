#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "geoloop/invariants.hpp"
#include "geoloop/realization.hpp"

// JSON wire formats:
//   manifold  {"kind":"sphere","dim":2,"radius":1.0}
//             {"kind":"flat_torus","dim":2}
//             {"kind":"euclidean","dim":3}
//             {"kind":"hyperbolic_disk"}
//             {"kind":"projective_plane"}
//             {"kind":"chart","dim":2,"metric":"polar_sphere","rho_u":0.5}
//             optional "eq_tolerance" on every kind
//   point     array of numbers
//   word      {"species":"G","basepoint":[...],"points":[[...],[...],...]}
//             with points listed head first
//   tuple     {"genus":1,"basepoint":[...],"elements":[[[...],...],...]}
//             each element given by its head-first point list

namespace geoloop {

ManifoldPtr manifold_from_json(const nlohmann::json& j,
                               std::optional<double> eps_eq_override = std::nullopt);
nlohmann::json manifold_to_json(const ManifoldSpec& m);

Point point_from_json(const nlohmann::json& j);
nlohmann::json point_to_json(const Point& p);

Word word_from_json(const nlohmann::json& j, ManifoldPtr m);
nlohmann::json word_to_json(const Word& w);
nlohmann::json word_to_json(const ReducedWord& w);

SurfaceTuple tuple_from_json(const nlohmann::json& j, ManifoldPtr m);

/// Deck classes serialize to their bare value: a winding array for tori,
/// +1/-1 for the projective plane, null for trivial groups.
nlohmann::json deck_to_json(const DeckElement& d);

/// Parse a JSON document, mapping syntax errors to std::invalid_argument so
/// callers can distinguish input problems from geometry errors.
nlohmann::json parse_json_text(const std::string& text, const std::string& what);

}  // namespace geoloop
