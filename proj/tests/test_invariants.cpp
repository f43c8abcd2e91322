#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "geoloop/corpus.hpp"
#include "geoloop/invariants.hpp"
#include "geoloop/realization.hpp"
#include "support.hpp"

using namespace geoloop;
using namespace testsupport;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent lift oracle for torus words: accumulate the minimal
// displacement of each traversal segment.
std::vector<double> lift_displacement(const Word& w) {
    const auto& pts = w.points();
    std::vector<double> acc(pts.front().size(), 0.0);
    for (std::size_t s = pts.size(); s-- > 1;) {
        for (std::size_t c = 0; c < acc.size(); ++c) {
            double d = pts[s - 1][c] - pts[s][c];
            d -= std::round(d);
            if (d >= 0.5) d -= 1.0;
            if (d < -0.5) d += 1.0;
            acc[c] += d;
        }
    }
    return acc;
}

}  // namespace

TEST_CASE("deck element arithmetic") {
    const auto a = DeckElement::translation({1, -2});
    const auto b = DeckElement::translation({3, 5});
    CHECK(a.compose(b) == DeckElement::translation({4, 3}));
    CHECK(a.compose(a.inverted()).is_identity());
    CHECK(DeckElement::sign_element(-1).compose(DeckElement::sign_element(-1)) ==
          DeckElement::sign_element(1));
    CHECK(DeckElement::trivial().is_identity());
    CHECK_THROWS_AS(a.compose(DeckElement::sign_element(1)), MismatchError);
}

TEST_CASE("torus winding classes") {
    auto t1 = torus(1);
    const Point v0{0.0};
    // Traversal 0 -> 0.35 -> 0.7 -> 0 wraps once.
    Word w(t1, {v0, Point{0.7}, Point{0.35}, v0}, Species::G, v0);
    const auto g = group_element_from_word(w);
    const auto cls = pi1_class(g);
    CHECK(cls == DeckElement::translation({1}));

    // The oracle agrees.
    const auto disp = lift_displacement(w);
    CHECK(disp[0] == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(pi1_class(identity_element(t1, v0)).is_identity());

    auto t2 = torus(2);
    const Point z{0, 0};
    for (long long u = -2; u <= 2; ++u) {
        for (long long v = -2; v <= 2; ++v) {
            const auto e = torus_winding_element(t2, z, {u, v});
            CHECK(pi1_class(e) == DeckElement::translation({u, v}));
        }
    }
}

TEST_CASE("projective sign classes") {
    auto rp2 = projective();
    const Point v0 = normalize_point(*rp2, Point{1, 0, 0});

    // Three hops of 60 degrees along a common great circle: the lift ends at
    // the antipode, so the class is -1.
    auto rep = [&](double deg) {
        const double r = deg * kPi / 180.0;
        return normalize_point(*rp2, Point{std::cos(r), std::sin(r), 0.0});
    };
    Word w(rp2, {rep(180), rep(120), rep(60), v0}, Species::G, v0);
    const auto g = group_element_from_word(w);
    CHECK(pi1_class(g) == DeckElement::sign_element(-1));

    CHECK(pi1_class(identity_element(rp2, v0)) == DeckElement::sign_element(1));

    // Squares are trivial in a Z/2 fundamental group.
    CHECK(pi1_class(mul(g, g)) == DeckElement::sign_element(1));
}

TEST_CASE("simply-connected manifolds have trivial classes; others are unsupported") {
    auto s2 = sphere2();
    CHECK(pi1_class(identity_element(s2, Point{0, 0, 1})).kind() ==
          DeckElement::Kind::Trivial);
    auto h = hyper();
    CHECK(pi1_class(identity_element(h, Point{0, 0})).kind() == DeckElement::Kind::Trivial);
    auto e2 = euclid(2);
    CHECK(pi1_class(identity_element(e2, Point{0, 0})).kind() == DeckElement::Kind::Trivial);

    auto c = chart("flat", 2, 10.0);
    CHECK_THROWS_AS(pi1_class(identity_element(c, Point{0, 0})), UnsupportedError);
    auto s1 = std::make_shared<const ManifoldSpec>(ManifoldSpec::sphere(1, 1.0));
    CHECK_THROWS_AS(pi1_class(identity_element(s1, Point{1, 0})), UnsupportedError);
}

TEST_CASE("pi1 is a homomorphism and reduction-invariant") {
    auto t2 = torus(2);
    const Point v0{0, 0};
    const auto corpus = random_group_elements(t2, v0, 200, 9, 515);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& a = corpus[i];
        const auto& b = corpus[(i * 3 + 1) % corpus.size()];
        CHECK(pi1_class(mul(a, b)) == pi1_class(a).compose(pi1_class(b)));
        CHECK(pi1_class(inverse(a)) == pi1_class(a).inverted());
    }

    auto rp2 = projective();
    const Point p0 = normalize_point(*rp2, Point{0, 0, 1});
    const auto pc = random_group_elements(rp2, p0, 100, 8, 525);
    for (std::size_t i = 0; i < pc.size(); ++i) {
        const auto& a = pc[i];
        const auto& b = pc[(i * 7 + 2) % pc.size()];
        CHECK(pi1_class(mul(a, b)).sign() == pi1_class(a).sign() * pi1_class(b).sign());
    }

    // Unreduced closed words classify like their reductions.
    const auto w1 = torus_winding_element(t2, v0, {1, -1});
    std::vector<Point> padded = w1.word().points();
    padded.insert(padded.begin() + 1, padded[1]);  // duplicate
    Word unreduced(t2, padded, Species::G, v0);
    CHECK(deck_element_of_path(reduce(unreduced)) == pi1_class(w1));
    CHECK(pi1_class(group_element_from_word(unreduced)) == pi1_class(w1));
}

TEST_CASE("deck elements of open-chain compositions") {
    auto t2 = torus(2);
    const Point v0{0, 0};

    // A closed chain through (0.4, 0), (0.8, 0) with a final wrap winds once.
    Word loop(t2, {v0, Point{0.8, 0}, Point{0.4, 0}, v0}, Species::G, v0);
    CHECK(deck_element_of_path(reduce(loop)) == DeckElement::translation({1, 0}));

    // Zero net displacement: the identity deck element.
    Word flat(t2, {v0, Point{0.2, 0.1}, v0}, Species::G, v0);
    CHECK(deck_element_of_path(reduce(flat)).is_identity());

    // deck(z . g) = deck(z) o pi1(g) for closed z.
    const auto corpus = random_group_elements(t2, v0, 100, 8, 535);
    for (std::size_t i = 0; i < 1000; ++i) {
        const auto z = reduce(contract_step(0.0, corpus[i % corpus.size()].reduced()));
        const auto& g = corpus[(i * 13 + 7) % corpus.size()];
        CHECK(deck_element_of_path(act(z, g)) ==
              deck_element_of_path(z).compose(pi1_class(g)));
    }

    // Open words have no deck element.
    const auto open_chain = chain_word(t2, v0, Point{0.3, 0.3});
    CHECK_THROWS_AS(deck_element_of_path(open_chain), ValidityError);
}

TEST_CASE("realized polyline lift matches pi1") {
    auto t2 = torus(2);
    const Point v0{0, 0};
    const auto corpus = random_group_elements(t2, v0, 25, 8, 545);
    const int samples = 1 << 12;
    for (const auto& g : corpus) {
        const auto loop = realize(g.reduced());
        std::vector<double> acc(2, 0.0);
        Point prev = loop.at(0.0);
        for (int i = 1; i <= samples; ++i) {
            const Point cur = loop.at(static_cast<double>(i) / samples);
            for (std::size_t c = 0; c < 2; ++c) {
                double d = cur[c] - prev[c];
                d -= std::round(d);
                if (d >= 0.5) d -= 1.0;
                if (d < -0.5) d += 1.0;
                acc[c] += d;
            }
            prev = cur;
        }
        const auto cls = pi1_class(g).translation_vector();
        for (std::size_t c = 0; c < 2; ++c)
            CHECK(acc[c] == doctest::Approx(static_cast<double>(cls[c])).epsilon(1e-6));
    }
}

TEST_CASE("winding separation") {
    auto t2 = torus(2);
    const Point v0{0, 0};
    std::vector<GroupElement> winds;
    for (long long u = -1; u <= 1; ++u)
        for (long long v = -1; v <= 1; ++v) winds.push_back(torus_winding_element(t2, v0, {u, v}));
    for (std::size_t i = 0; i < winds.size(); ++i) {
        for (std::size_t j = i + 1; j < winds.size(); ++j) {
            CHECK_FALSE(class_equal(winds[i].reduced(), winds[j].reduced()));
            CHECK_FALSE(pi1_class(winds[i]) == pi1_class(winds[j]));
        }
    }
}

TEST_CASE("conjugation") {
    auto t2 = torus(2);
    const Point v0{0, 0};
    const auto e = identity_element(t2, v0);
    const auto corpus = random_group_elements(t2, v0, 100, 8, 555);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& g = corpus[i];
        const auto& a = corpus[(i + 19) % corpus.size()];
        CHECK(class_equal(conjugate(g, e).reduced(), g.reduced()));
        CHECK(class_equal(conjugate(e, a).reduced(), e.reduced()));
        CHECK(pi1_class(conjugate(g, a)) == pi1_class(g));
    }
}

TEST_CASE("commutator products and the relator obstruction") {
    auto t2 = torus(2);
    const Point v0{0, 0};
    const auto e = identity_element(t2, v0);

    auto s_id = make_surface_tuple(1, {e, e});
    CHECK(class_equal(commutator_product(s_id).reduced(), e.reduced()));

    const auto corpus = random_group_elements(t2, v0, 40, 7, 565);
    const auto& x = corpus[0];
    auto s_same = make_surface_tuple(1, {x, x});
    CHECK(class_equal(commutator_product(s_same).reduced(), e.reduced()));

    for (std::size_t i = 0; i + 3 < corpus.size(); i += 4) {
        auto s = make_surface_tuple(2, {corpus[i], corpus[i + 1], corpus[i + 2], corpus[i + 3]});
        CHECK(pi1_class(commutator_product(s)).is_identity());
        CHECK(is_surface_relator(s));
    }

    auto s2m = sphere2();
    const Point sv0{0, 0, 1};
    const auto sc = random_group_elements(s2m, sv0, 20, 7, 575);
    for (std::size_t i = 0; i + 1 < sc.size(); i += 2) {
        auto s = make_surface_tuple(1, {sc[i], sc[i + 1]});
        CHECK(is_surface_relator(s));
    }

    auto rp2 = projective();
    const Point pv0 = normalize_point(*rp2, Point{0, 0, 1});
    const auto pc = random_group_elements(rp2, pv0, 10, 6, 585);
    auto sp = make_surface_tuple(1, {pc[0], pc[1]});
    CHECK(is_surface_relator(sp));  // Z/2 is abelian, so the obstruction vanishes

    CHECK_THROWS_AS(make_surface_tuple(1, {e}), ValidityError);
}
