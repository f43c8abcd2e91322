#include "geoloop/json_io.hpp"

#include <nlohmann/json.hpp>

namespace geoloop {

using nlohmann::json;

namespace {

[[noreturn]] void bad_input(const std::string& what) { throw std::invalid_argument(what); }

double require_number(const json& j, const char* key, double fallback, bool has_fallback) {
    if (!j.contains(key)) {
        if (has_fallback) return fallback;
        bad_input(std::string("missing field \"") + key + "\"");
    }
    if (!j[key].is_number()) bad_input(std::string("field \"") + key + "\" must be a number");
    return j[key].get<double>();
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        bad_input(std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<int>();
}

}  // namespace

ManifoldPtr manifold_from_json(const json& j, std::optional<double> eps_eq_override) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        bad_input("manifold JSON needs a string \"kind\" field");
    const std::string kind = j["kind"].get<std::string>();
    const double eps =
        eps_eq_override.value_or(require_number(j, "eq_tolerance", kDefaultEpsEq, true));

    ManifoldSpec m = [&] {
        if (kind == "euclidean") return ManifoldSpec::euclidean(require_int(j, "dim"), eps);
        if (kind == "sphere")
            return ManifoldSpec::sphere(require_int(j, "dim"),
                                        require_number(j, "radius", 1.0, true), eps);
        if (kind == "flat_torus") return ManifoldSpec::flat_torus(require_int(j, "dim"), eps);
        if (kind == "hyperbolic_disk") return ManifoldSpec::hyperbolic_disk(eps);
        if (kind == "projective_plane") return ManifoldSpec::projective_plane(eps);
        if (kind == "chart") {
            if (!j.contains("metric") || !j["metric"].is_string())
                bad_input("chart manifold needs a string \"metric\" field");
            return ManifoldSpec::chart(require_int(j, "dim"), j["metric"].get<std::string>(),
                                       require_number(j, "rho_u", 0.0, false), eps);
        }
        bad_input("unknown manifold kind: " + kind);
    }();
    return std::make_shared<const ManifoldSpec>(std::move(m));
}

json manifold_to_json(const ManifoldSpec& m) {
    json j;
    j["kind"] = kind_name(m.kind());
    switch (m.kind()) {
        case ManifoldKind::Euclidean:
        case ManifoldKind::FlatTorus: j["dim"] = m.dim(); break;
        case ManifoldKind::Sphere:
            j["dim"] = m.dim();
            j["radius"] = m.radius();
            break;
        case ManifoldKind::HyperbolicDisk:
        case ManifoldKind::ProjectivePlane: break;
        case ManifoldKind::Chart:
            j["dim"] = m.dim();
            j["metric"] = m.metric_name();
            j["rho_u"] = m.uniqueness_radius();
            break;
    }
    if (m.eps_eq() != kDefaultEpsEq) j["eq_tolerance"] = m.eps_eq();
    return j;
}

Point point_from_json(const json& j) {
    if (!j.is_array()) bad_input("a point must be a JSON array of numbers");
    std::vector<double> c;
    c.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number()) bad_input("a point must be a JSON array of numbers");
        c.push_back(x.get<double>());
    }
    return Point(std::move(c));
}

json point_to_json(const Point& p) { return json(p.coords); }

Word word_from_json(const json& j, ManifoldPtr m) {
    if (!j.is_object() || !j.contains("species") || !j["species"].is_string())
        bad_input("word JSON needs a string \"species\" field");
    const Species species = species_from_name(j["species"].get<std::string>());
    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
        bad_input("word JSON needs a non-empty \"points\" array");

    std::vector<Point> pts;
    pts.reserve(j["points"].size());
    for (const auto& p : j["points"]) pts.push_back(normalize_point(*m, point_from_json(p)));

    std::optional<Point> basepoint;
    if (j.contains("basepoint")) basepoint = normalize_point(*m, point_from_json(j["basepoint"]));
    if (species_needs_basepoint(species) && !basepoint)
        bad_input("word species requires a \"basepoint\" field");
    return Word(std::move(m), std::move(pts), species, std::move(basepoint));
}

json word_to_json(const Word& w) {
    json j;
    j["species"] = species_name(w.species());
    if (w.has_basepoint()) j["basepoint"] = point_to_json(w.basepoint());
    json pts = json::array();
    for (const auto& p : w.points()) pts.push_back(point_to_json(p));
    j["points"] = std::move(pts);
    return j;
}

json word_to_json(const ReducedWord& w) { return word_to_json(w.word()); }

SurfaceTuple tuple_from_json(const json& j, ManifoldPtr m) {
    if (!j.is_object()) bad_input("tuple JSON must be an object");
    const int genus = require_int(j, "genus");
    if (!j.contains("basepoint")) bad_input("tuple JSON needs a \"basepoint\" field");
    const Point v0 = normalize_point(*m, point_from_json(j["basepoint"]));
    if (!j.contains("elements") || !j["elements"].is_array())
        bad_input("tuple JSON needs an \"elements\" array");

    std::vector<GroupElement> elements;
    elements.reserve(j["elements"].size());
    for (const auto& e : j["elements"]) {
        if (!e.is_array() || e.empty()) bad_input("each tuple element is a non-empty point array");
        std::vector<Point> pts;
        pts.reserve(e.size());
        for (const auto& p : e) pts.push_back(normalize_point(*m, point_from_json(p)));
        elements.push_back(group_element_from_word(Word(m, std::move(pts), Species::G, v0)));
    }
    return make_surface_tuple(genus, std::move(elements));
}

json deck_to_json(const DeckElement& d) {
    switch (d.kind()) {
        case DeckElement::Kind::Trivial: return json(nullptr);
        case DeckElement::Kind::Sign: return json(d.sign());
        case DeckElement::Kind::Translation: return json(d.translation_vector());
    }
    return json(nullptr);
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad_input("failed to parse " + what + ": " + e.what());
    }
}

}  // namespace geoloop
