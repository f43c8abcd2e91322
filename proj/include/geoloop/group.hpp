#pragma once

#include "geoloop/words.hpp"

namespace geoloop {

/// An element of the loop-word group: a reduced closed word based at v0.
/// Multiplication is concatenate-then-reduce; the identity is the length-0
/// word (v0).
class GroupElement {
public:
    explicit GroupElement(ReducedWord w);

    const ReducedWord& reduced() const { return word_; }
    const Word& word() const { return word_.word(); }
    const ManifoldPtr& manifold_ptr() const { return word_.manifold_ptr(); }
    const ManifoldSpec& manifold() const { return word_.manifold(); }
    const Point& basepoint() const { return word_.basepoint(); }
    std::size_t length() const { return word_.length(); }

private:
    ReducedWord word_;
};

GroupElement identity_element(ManifoldPtr m, Point v0);

/// Validate + reduce a closed based word into a group element.
GroupElement group_element_from_word(const Word& w);

GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// Right action of the group on based words: append g at the tail end and
/// reduce. Preserves the head (the projection to the manifold).
ReducedWord act(const ReducedWord& z, const GroupElement& g);

/// Build a valid based word from v0 to target by subdividing a connecting
/// curve until every hop admits a unique minimal geodesic. Deterministic.
/// The hop count doubles per round; exceeding max_hops raises
/// ConvergenceError.
ReducedWord chain_word(ManifoldPtr m, const Point& v0, const Point& target, int max_hops = 4096);

/// A bundle chart around center: points within radius of the center have a
/// unique minimal geodesic to it, and fiber_basepoint is a fixed based word
/// projecting to the center.
struct LocalChart {
    Point center;
    double radius;
    ReducedWord fiber_basepoint;
};

/// Half the manifold's global uniqueness scale (pi r / 2 for spheres, 1/4 for
/// unit tori, pi/4 for the projective plane, rho_u for charts, unbounded for
/// Euclidean space and the hyperbolic disk).
double chart_radius(const ManifoldSpec& m);

/// Chart with deterministic fiber basepoint chain_word(m, v0, p).
LocalChart make_chart(ManifoldPtr m, const Point& v0, const Point& p);

/// Inverse local trivialization: the based word [x, p] . e_p . g over x.
/// Requires distance(x, center) < radius.
ReducedWord from_fiber_coordinate(const LocalChart& c, const Point& x, const GroupElement& g);

/// Fiber coordinate of a based word over the chart: e_p^-1 . [p, head(e)] . e.
GroupElement to_fiber_coordinate(const LocalChart& c, const ReducedWord& e);

/// Transition element between two charts at a common point:
/// e_p^-1 . [p, x, q] . e_q.
GroupElement transition(const LocalChart& cp, const LocalChart& cq, const Point& x);

/// One contraction step: slide the head along the geodesic toward its
/// neighbor, to parameter t. At t = 0 the word is unchanged; at t = 1 the
/// head duplicates its neighbor, so the reduction is one segment shorter.
/// Accepts based or closed based words; the result is a based word.
Word contract_step(double t, const ReducedWord& w);

}  // namespace geoloop
