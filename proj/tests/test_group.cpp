#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "geoloop/corpus.hpp"
#include "geoloop/group.hpp"
#include "support.hpp"

using namespace geoloop;
using namespace testsupport;

namespace {

constexpr double kPi = std::numbers::pi;

Point basepoint_of(const ManifoldSpec& m) {
    switch (m.kind()) {
        case ManifoldKind::Sphere: return Point{0, 0, 1};
        case ManifoldKind::FlatTorus: return Point(std::vector<double>(m.dim(), 0.0));
        case ManifoldKind::HyperbolicDisk: return Point{0, 0};
        case ManifoldKind::Euclidean: return Point(std::vector<double>(m.dim(), 0.0));
        case ManifoldKind::ProjectivePlane: return Point{0, 0, 1};
        default: throw Error("no default basepoint");
    }
}

}  // namespace

TEST_CASE("identity element") {
    auto s2 = sphere2();
    const Point v0 = basepoint_of(*s2);
    const auto e = identity_element(s2, v0);
    CHECK(e.length() == 0);
    CHECK(project_pi(e.reduced()) == v0);

    const auto doubled = reduce(Word(s2, {v0, v0}, Species::G, v0));
    CHECK(class_equal(doubled, e.reduced()));

    const auto corpus = random_group_elements(s2, v0, 50, 8, 101);
    for (const auto& g : corpus) {
        CHECK(class_equal(mul(e, g).reduced(), g.reduced()));
        CHECK(class_equal(mul(g, e).reduced(), g.reduced()));
    }
}

TEST_CASE("group axioms on three manifolds") {
    for (const auto& m : {sphere2(), torus(2), hyper()}) {
        const Point v0 = basepoint_of(*m);
        const auto e = identity_element(m, v0);
        const auto corpus = random_group_elements(m, v0, 60, 8, 202);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& g = corpus[i];
            const auto& h = corpus[(i * 7 + 3) % corpus.size()];
            const auto& k = corpus[(i * 13 + 5) % corpus.size()];
            CHECK(class_equal(mul(g, inverse(g)).reduced(), e.reduced()));
            CHECK(class_equal(mul(inverse(g), g).reduced(), e.reduced()));
            CHECK(class_equal(mul(mul(g, h), k).reduced(), mul(g, mul(h, k)).reduced()));
        }
    }
}

TEST_CASE("inverse properties") {
    auto s2 = sphere2();
    const Point v0 = basepoint_of(*s2);
    const auto e = identity_element(s2, v0);
    CHECK(class_equal(inverse(e).reduced(), e.reduced()));

    const auto corpus = random_group_elements(s2, v0, 1000, 8, 303);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& g = corpus[i];
        const auto& h = corpus[(i + 37) % corpus.size()];
        CHECK(class_equal(inverse(inverse(g)).reduced(), g.reduced()));
        CHECK(class_equal(inverse(mul(g, h)).reduced(), mul(inverse(h), inverse(g)).reduced()));
    }
}

TEST_CASE("action cancellation agrees with exhaustive reduction orders") {
    // Dual route on the index alphabet: appending g then its reversal must
    // land in the class of the original based word, for every deletion order.
    auto s2 = sphere2();
    const auto alphabet = generic_sphere_points();
    std::map<IndexWord, std::set<IndexWord>> memo;
    std::mt19937_64 rng(314);

    for (int trial = 0; trial < 200; ++trial) {
        IndexWord z(1 + rng() % 3);
        for (auto& x : z) x = static_cast<int>(rng() % 4);
        z.push_back(0);  // based at alphabet[0]
        IndexWord g{0};
        const std::size_t interior = 1 + rng() % 2;
        for (std::size_t i = 0; i < interior; ++i) g.push_back(static_cast<int>(1 + rng() % 3));
        g.push_back(0);

        IndexWord zgginv = z;
        zgginv.insert(zgginv.end(), g.begin(), g.end());
        zgginv.insert(zgginv.end(), g.rbegin(), g.rend());

        const auto& forms = all_normal_forms(zgginv, memo);
        REQUIRE(forms.size() == 1);
        CHECK(*forms.begin() == *all_normal_forms(z, memo).begin());

        // And the library route computes the same class.
        const auto zw = reduce(word_from_indices(s2, alphabet, z, Species::ZBased));
        const auto gw = group_element_from_word(
            word_from_indices(s2, alphabet, g, Species::G));
        CHECK(class_equal(act(act(zw, gw), inverse(gw)), zw));
    }
}

TEST_CASE("action on based words") {
    auto t2 = torus(2);
    const Point v0 = basepoint_of(*t2);
    const auto e = identity_element(t2, v0);
    const auto corpus = random_group_elements(t2, v0, 40, 8, 404);
    std::mt19937_64 rng(405);

    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto z = chain_word(t2, v0, random_point(*t2, rng));
        const auto& g = corpus[i];
        const auto& h = corpus[(i + 11) % corpus.size()];

        CHECK(class_equal(act(z, e), z));
        CHECK(project_pi(act(z, g)) == project_pi(z));
        CHECK(class_equal(act(act(z, g), h), act(z, mul(g, h))));
        CHECK(class_equal(act(act(z, g), inverse(g)), z));
    }
}

TEST_CASE("chain_word reaches sampled targets") {
    auto s2 = sphere2();
    const Point v0{1, 0, 0};

    // Trivial target.
    const auto at_base = chain_word(s2, v0, v0);
    CHECK(at_base.length() == 0);

    // Antipodal target requires at least two hops, each one valid.
    const Point anti{-1, 0, 0};
    const auto w = chain_word(s2, v0, anti);
    CHECK(w.length() >= 2);
    CHECK(validate(w.word()).ok);
    CHECK(project_pi(w) == anti);

    auto t2 = torus(2);
    const Point t0{0, 0};
    const auto wt = chain_word(t2, t0, Point{0.49, 0.49});
    CHECK(validate(wt.word()).ok);
    CHECK(project_pi(wt) == Point{0.49, 0.49});
    const auto& pts = wt.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        for (std::size_t c = 0; c < 2; ++c) {
            double d = std::abs(pts[i][c] - pts[i + 1][c]);
            d = std::min(d, 1.0 - d);
            CHECK(d < 0.5);
        }
    }

    // Surjectivity of the projection onto sampled targets.
    std::mt19937_64 rng(55);
    for (const auto& m : {sphere2(), torus(2), hyper(), projective()}) {
        const Point base = basepoint_of(*m);
        for (int i = 0; i < 50; ++i) {
            const Point target = random_point(*m, rng);
            const auto cw = chain_word(m, base, target);
            CHECK(validate(cw.word()).ok);
            CHECK(points_equal(*m, project_pi(cw), target));
        }
    }
}

TEST_CASE("trivialization round trips") {
    for (const auto& m : {sphere2(), torus(2), hyper()}) {
        const Point v0 = basepoint_of(*m);
        std::mt19937_64 rng(606);

        // Two overlapping bundle charts.
        const Point p = exp_map(*m, v0, random_tangent(*m, v0, 0.3 * walk_step_scale(*m), rng));
        const Point q = exp_map(*m, p, random_tangent(*m, p, 0.2 * walk_step_scale(*m), rng));
        const auto cp = make_chart(m, v0, p);
        const auto cq = make_chart(m, v0, q);

        CHECK(class_equal(to_fiber_coordinate(cp, cp.fiber_basepoint).reduced(),
                          identity_element(m, v0).reduced()));
        CHECK(class_equal(from_fiber_coordinate(cp, p, identity_element(m, v0)),
                          cp.fiber_basepoint));

        const auto corpus = random_group_elements(m, v0, 30, 7, 707);
        for (const auto& g : corpus) {
            const Point x = exp_map(*m, p, random_tangent(*m, p, 0.1 * walk_step_scale(*m), rng));
            REQUIRE(distance(*m, x, cp.center) < cp.radius);
            REQUIRE(distance(*m, x, cq.center) < cq.radius);

            const auto fiber = from_fiber_coordinate(cp, x, g);
            CHECK(points_equal(*m, project_pi(fiber), x));
            CHECK(class_equal(to_fiber_coordinate(cp, fiber).reduced(), g.reduced()));
            CHECK(class_equal(from_fiber_coordinate(cp, project_pi(fiber),
                                                    to_fiber_coordinate(cp, fiber)),
                              fiber));

            // Crossing charts multiplies by the transition element.
            const auto via_q = from_fiber_coordinate(cq, x, g);
            CHECK(class_equal(to_fiber_coordinate(cp, via_q).reduced(),
                              mul(transition(cp, cq, x), g).reduced()));
        }
    }
}

TEST_CASE("transition elements form a cocycle") {
    auto s2 = sphere2();
    const Point v0 = basepoint_of(*s2);
    std::mt19937_64 rng(808);
    const Point p = exp_map(*s2, v0, random_tangent(*s2, v0, 0.4, rng));
    const Point q = exp_map(*s2, p, random_tangent(*s2, p, 0.3, rng));
    const Point r = exp_map(*s2, p, random_tangent(*s2, p, 0.3, rng));
    const auto cp = make_chart(s2, v0, p);
    const auto cq = make_chart(s2, v0, q);
    const auto cr = make_chart(s2, v0, r);

    for (int i = 0; i < 50; ++i) {
        const Point x = exp_map(*s2, p, random_tangent(*s2, p, 0.2, rng));
        CHECK(class_equal(transition(cp, cp, x).reduced(),
                          identity_element(s2, v0).reduced()));
        CHECK(class_equal(mul(transition(cp, cq, x), transition(cq, cr, x)).reduced(),
                          transition(cp, cr, x).reduced()));
    }

    const Point far = exp_map(*s2, p, random_tangent(*s2, p, 0.2, rng));
    auto tiny = cp;
    tiny.radius = 1e-6;
    CHECK_THROWS_AS(transition(tiny, cq, far), ChartDomainError);
}

TEST_CASE("fiber transitivity within one chart") {
    auto t2 = torus(2);
    const Point v0 = basepoint_of(*t2);
    std::mt19937_64 rng(909);
    const Point p{0.3, 0.4};
    const auto cp = make_chart(t2, v0, p);
    const auto corpus = random_group_elements(t2, v0, 20, 7, 910);

    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Point x = exp_map(*t2, p, random_tangent(*t2, p, 0.05, rng));
        const auto e1 = from_fiber_coordinate(cp, x, corpus[i]);
        const auto e2 = from_fiber_coordinate(cp, x, corpus[(i + 7) % corpus.size()]);
        const auto g = mul(inverse(to_fiber_coordinate(cp, e1)), to_fiber_coordinate(cp, e2));
        CHECK(class_equal(act(e1, g), e2));
    }
}

TEST_CASE("contraction steps") {
    auto s2 = sphere2();
    const Point v0 = basepoint_of(*s2);
    const auto corpus = random_group_elements(s2, v0, 50, 10, 111);

    for (const auto& g : corpus) {
        const auto& w = g.reduced();
        // t = 0 leaves the word unchanged.
        CHECK(contract_step(0.0, w).points() == w.points());
        if (w.length() == 0) continue;
        // t = 1 collapses exactly one segment.
        const auto stepped = reduce(contract_step(1.0, w));
        CHECK(stepped.length() == w.length() - 1);
    }

    // Full contraction reaches the basepoint class in exactly length steps.
    for (const auto& g : corpus) {
        ReducedWord w = reduce(contract_step(0.0, g.reduced()));  // as a based word
        std::size_t steps = 0;
        const std::size_t initial = w.length();
        while (w.length() > 0) {
            w = reduce(contract_step(1.0, w));
            ++steps;
            REQUIRE(steps <= initial);
        }
        CHECK(steps == initial);
        CHECK(points_equal(*s2, w.tail(), v0));
    }

    CHECK_THROWS_AS(contract_step(1.5, corpus.front().reduced()), Error);
}

TEST_CASE("operand compatibility is enforced") {
    auto s2 = sphere2();
    auto t2 = torus(2);
    const auto gs = identity_element(s2, Point{0, 0, 1});
    const auto gt = identity_element(t2, Point{0, 0});
    CHECK_THROWS_AS(mul(gs, gt), MismatchError);

    const auto other = identity_element(s2, Point{1, 0, 0});
    CHECK_THROWS_AS(mul(gs, other), MismatchError);

    const auto z = chain_word(t2, Point{0, 0}, Point{0.2, 0.1});
    CHECK_THROWS_AS(act(z, gs), MismatchError);
}
