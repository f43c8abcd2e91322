#include <doctest.h>

#include <nlohmann/json.hpp>

#include "geoloop/corpus.hpp"
#include "geoloop/json_io.hpp"
#include "support.hpp"

using namespace geoloop;
using namespace testsupport;

TEST_CASE("zero count yields an empty corpus") {
    auto s2 = sphere2();
    CHECK(random_group_elements(s2, Point{0, 0, 1}, 0, 8, 1).empty());
    CHECK_THROWS_AS(random_group_elements(s2, Point{0, 0, 1}, 1, 1, 1), Error);
}

TEST_CASE("corpora are deterministic per seed") {
    auto t2 = torus(2);
    const Point v0{0, 0};
    const auto a = random_group_elements(t2, v0, 25, 8, 99);
    const auto b = random_group_elements(t2, v0, 25, 8, 99);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].word().points() == b[i].word().points());

    const auto c = random_group_elements(t2, v0, 25, 8, 100);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        any_diff = any_diff || !(a[i].word().points() == c[i].word().points());
    CHECK(any_diff);
}

TEST_CASE("every generated word validates, ten thousand draws") {
    auto t2 = torus(2);
    const Point v0{0.25, 0.75};
    const auto corpus = random_group_elements(t2, v0, 10000, 8, 7);
    for (const auto& g : corpus) {
        const auto r = validate(g.word());
        REQUIRE(r.ok);
    }
}

TEST_CASE("corpora serialize identically across runs") {
    auto s2 = sphere2();
    const Point v0{0, 0, 1};
    const auto a = random_group_elements(s2, v0, 10, 8, 4242);
    const auto b = random_group_elements(s2, v0, 10, 8, 4242);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(word_to_json(a[i].reduced()).dump() == word_to_json(b[i].reduced()).dump());
}
