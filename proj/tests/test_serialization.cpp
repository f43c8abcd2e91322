#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "geoloop/corpus.hpp"
#include "geoloop/json_io.hpp"
#include "support.hpp"

using namespace geoloop;
using namespace testsupport;
using nlohmann::json;

TEST_CASE("manifold JSON round trips") {
    const char* samples[] = {
        R"({"kind":"sphere","dim":2,"radius":1.0})",
        R"({"kind":"flat_torus","dim":2})",
        R"({"kind":"euclidean","dim":3})",
        R"({"kind":"hyperbolic_disk"})",
        R"({"kind":"projective_plane"})",
        R"({"kind":"chart","dim":2,"metric":"polar_sphere","rho_u":0.5})",
    };
    for (const char* text : samples) {
        const auto m = manifold_from_json(parse_json_text(text, "test"));
        const auto m2 = manifold_from_json(manifold_to_json(*m));
        CHECK(m->same_as(*m2));
        // serialize -> parse -> serialize is byte-identical
        CHECK(manifold_to_json(*m).dump() == manifold_to_json(*m2).dump());
    }
    CHECK_THROWS_AS(manifold_from_json(parse_json_text(R"({"kind":"mobius"})", "test")),
                    std::invalid_argument);
    CHECK_THROWS_AS(manifold_from_json(parse_json_text(R"({"kind":"chart","dim":2})", "test")),
                    std::invalid_argument);
}

TEST_CASE("word JSON round trips byte-identically") {
    auto s2 = sphere2();
    const Point v0{0, 0, 1};
    const auto corpus = random_group_elements(s2, v0, 20, 8, 616);
    for (const auto& g : corpus) {
        const std::string first = word_to_json(g.reduced()).dump();
        const Word parsed = word_from_json(parse_json_text(first, "word"), s2);
        CHECK(parsed.points() == g.word().points());
        CHECK(parsed.species() == Species::G);
        CHECK(word_to_json(parsed).dump() == first);
    }
}

TEST_CASE("every species parses with its constraints") {
    auto s2 = sphere2();
    const json j = parse_json_text(
        R"({"species":"Z_based","basepoint":[0,0,1],"points":[[1,0,0],[0,0,1]]})", "word");
    const Word w = word_from_json(j, s2);
    CHECK(w.species() == Species::ZBased);
    CHECK(w.basepoint() == Point{0, 0, 1});

    CHECK_THROWS_AS(
        word_from_json(parse_json_text(R"({"species":"G","points":[[1,0,0]]})", "word"), s2),
        std::invalid_argument);
    CHECK_THROWS_AS(
        word_from_json(parse_json_text(R"({"species":"W","points":[[1,0,0]]})", "word"), s2),
        ValidityError);
    CHECK_THROWS_AS(
        word_from_json(parse_json_text(R"({"species":"Z","points":[]})", "word"), s2),
        std::invalid_argument);
}

TEST_CASE("points are normalized on input") {
    auto rp2 = projective();
    const json j = parse_json_text(
        R"({"species":"Z","points":[[-2,0,0],[0,-3,0]]})", "word");
    const Word w = word_from_json(j, rp2);
    CHECK(w.points()[0] == Point{1, 0, 0});
    CHECK(w.points()[1] == Point{0, 1, 0});
}

TEST_CASE("tuple JSON parses into group elements") {
    auto t2 = torus(2);
    const json j = parse_json_text(R"({
        "genus": 1,
        "basepoint": [0, 0],
        "elements": [
            [[0,0],[0.35,0.1],[0.1,0.3],[0,0]],
            [[0,0],[0.1,0.35],[0.3,0.1],[0,0]]
        ]
    })", "tuple");
    const auto tuple = tuple_from_json(j, t2);
    CHECK(tuple.genus == 1);
    CHECK(tuple.elements.size() == 2);
    CHECK(tuple.elements[0].length() == 3);
}

TEST_CASE("deck classes serialize to bare values") {
    CHECK(deck_to_json(DeckElement::translation({1, 0})).dump() == "[1,0]");
    CHECK(deck_to_json(DeckElement::sign_element(-1)).dump() == "-1");
    CHECK(deck_to_json(DeckElement::trivial()).dump() == "null");
}

TEST_CASE("parse errors carry context") {
    CHECK_THROWS_AS(parse_json_text("{not json", "stdin"), std::invalid_argument);
}
