#include "geoloop/group.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "geoloop/vec.hpp"

namespace geoloop {

namespace {

constexpr double kPi = std::numbers::pi;

void check_compatible(const GroupElement& g, const GroupElement& h) {
    if (!g.manifold().same_as(h.manifold()))
        throw MismatchError("group elements live on different manifolds");
    if (!points_equal(g.manifold(), g.basepoint(), h.basepoint()))
        throw MismatchError("group elements use different basepoints");
}

// Concatenate head-first point lists (left factor first) and reduce.
ReducedWord concat_reduce(const ManifoldPtr& m, std::initializer_list<const std::vector<Point>*> parts,
                          Species species, const Point& basepoint) {
    std::vector<Point> pts;
    std::size_t total = 0;
    for (const auto* part : parts) total += part->size();
    pts.reserve(total);
    for (const auto* part : parts) pts.insert(pts.end(), part->begin(), part->end());
    return reduce(Word(m, std::move(pts), species, basepoint));
}

std::vector<Point> reversed(const std::vector<Point>& pts) {
    return std::vector<Point>(pts.rbegin(), pts.rend());
}

// Connecting curve from v0 to target used by chain_word, parameterized over
// [0,1]. Straight in the natural coordinates; the sphere detours through a
// deterministic waypoint when the endpoints are antipodal, and the
// projective plane goes through the nearest sphere lift.
std::function<Point(double)> connecting_curve(const ManifoldSpec& m, const Point& v0,
                                              const Point& target) {
    switch (m.kind()) {
        case ManifoldKind::Euclidean:
        case ManifoldKind::HyperbolicDisk:
        case ManifoldKind::Chart: {
            return [v0, target](double t) {
                return Point(vec::add(vec::scale(v0.coords, 1.0 - t),
                                      vec::scale(target.coords, t)));
            };
        }
        case ManifoldKind::FlatTorus: {
            std::vector<double> disp(v0.size());
            for (std::size_t i = 0; i < v0.size(); ++i) {
                double d = (target[i] - v0[i]) - std::round(target[i] - v0[i]);
                if (d >= 0.5) d -= 1.0;
                if (d < -0.5) d += 1.0;
                disp[i] = d;
            }
            return [v0, disp](double t) {
                Point p = v0;
                for (std::size_t i = 0; i < p.size(); ++i) {
                    double c = v0[i] + t * disp[i];
                    c -= std::floor(c);
                    if (c >= 1.0) c = 0.0;
                    p[i] = c;
                }
                return p;
            };
        }
        case ManifoldKind::Sphere: {
            const double r = m.radius();
            auto ua = vec::scale(v0.coords, 1.0 / r);
            auto ub = vec::scale(target.coords, 1.0 / r);
            const double cosang = std::clamp(vec::dot(ua, ub), -1.0, 1.0);
            if (cosang > -1.0 + 1e-9) {
                const double theta = std::acos(cosang);
                return [ua, ub, theta, r](double t) {
                    std::vector<double> p;
                    const double s = std::sin(theta);
                    if (s < 1e-12) {
                        p = vec::add(vec::scale(ua, 1.0 - t), vec::scale(ub, t));
                    } else {
                        p = vec::add(vec::scale(ua, std::sin((1.0 - t) * theta) / s),
                                     vec::scale(ub, std::sin(t * theta) / s));
                    }
                    const double n = vec::norm(p);
                    return Point(vec::scale(p, r / n));
                };
            }
            // Antipodal endpoints: go through a waypoint orthogonal to v0,
            // chosen from the coordinate axis least aligned with it.
            std::size_t axis = 0;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < ua.size(); ++i) {
                if (std::abs(ua[i]) < best) {
                    best = std::abs(ua[i]);
                    axis = i;
                }
            }
            std::vector<double> w(ua.size(), 0.0);
            w[axis] = 1.0;
            w = vec::sub(w, vec::scale(ua, vec::dot(w, ua)));
            w = vec::scale(w, 1.0 / vec::norm(w));
            return [ua, ub, w, r](double t) {
                // Two quarter-ish arcs: v0 -> w on [0, 1/2], w -> target on [1/2, 1].
                const auto arc = [r](const std::vector<double>& from, const std::vector<double>& to,
                                     double s) {
                    const double cosang = std::clamp(vec::dot(from, to), -1.0, 1.0);
                    const double theta = std::acos(cosang);
                    const double sn = std::sin(theta);
                    std::vector<double> p;
                    if (sn < 1e-12) {
                        p = vec::add(vec::scale(from, 1.0 - s), vec::scale(to, s));
                    } else {
                        p = vec::add(vec::scale(from, std::sin((1.0 - s) * theta) / sn),
                                     vec::scale(to, std::sin(s * theta) / sn));
                    }
                    const double n = vec::norm(p);
                    return vec::scale(p, r / n);
                };
                if (t <= 0.5) return Point(arc(ua, w, 2.0 * t));
                return Point(arc(w, ub, 2.0 * (t - 0.5)));
            };
        }
        case ManifoldKind::ProjectivePlane: {
            auto lift = target.coords;
            if (vec::dot(v0.coords, lift) < 0.0) lift = vec::scale(lift, -1.0);
            const auto ua = v0.coords;
            return [ua, lift](double t) {
                const double cosang = std::clamp(vec::dot(ua, lift), -1.0, 1.0);
                const double theta = std::acos(cosang);
                const double sn = std::sin(theta);
                std::vector<double> p;
                if (sn < 1e-12) {
                    p = vec::add(vec::scale(ua, 1.0 - t), vec::scale(lift, t));
                } else {
                    p = vec::add(vec::scale(ua, std::sin((1.0 - t) * theta) / sn),
                                 vec::scale(lift, std::sin(t * theta) / sn));
                }
                return normalize_point(ManifoldSpec::projective_plane(), Point(std::move(p)));
            };
        }
    }
    throw Error("unreachable");
}

}  // namespace

GroupElement::GroupElement(ReducedWord w) : word_(std::move(w)) {
    if (word_.species() != Species::G)
        throw ValidityError("group elements must be closed based words (species G)");
}

GroupElement identity_element(ManifoldPtr m, Point v0) {
    Point bp = v0;
    Word w(std::move(m), {std::move(v0)}, Species::G, std::move(bp));
    return GroupElement(reduce(w));
}

GroupElement group_element_from_word(const Word& w) {
    if (w.species() != Species::G)
        throw ValidityError("group elements must be closed based words (species G)");
    return GroupElement(reduce(w));
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
    check_compatible(g, h);
    return GroupElement(concat_reduce(g.manifold_ptr(), {&g.word().points(), &h.word().points()},
                                      Species::G, g.basepoint()));
}

GroupElement inverse(const GroupElement& g) {
    auto rev = reversed(g.word().points());
    return GroupElement(reduce(Word(g.manifold_ptr(), std::move(rev), Species::G, g.basepoint())));
}

ReducedWord act(const ReducedWord& z, const GroupElement& g) {
    if (z.species() != Species::ZBased)
        throw ValidityError("the group acts on based words (species Z_based)");
    if (!z.manifold().same_as(g.manifold()))
        throw MismatchError("word and group element live on different manifolds");
    if (!points_equal(z.manifold(), z.basepoint(), g.basepoint()))
        throw MismatchError("word and group element use different basepoints");
    return concat_reduce(z.manifold_ptr(), {&z.points(), &g.word().points()}, Species::ZBased,
                         z.basepoint());
}

ReducedWord chain_word(ManifoldPtr m, const Point& v0, const Point& target, int max_hops) {
    check_point(*m, v0);
    check_point(*m, target);
    if (points_equal(*m, v0, target) && v0 == target)
        return reduce(Word(m, {v0}, Species::ZBased, v0));

    auto curve = connecting_curve(*m, v0, target);
    for (int hops = 1; hops <= max_hops; hops *= 2) {
        std::vector<Point> pts;
        pts.reserve(hops + 1);
        pts.push_back(target);
        for (int i = hops - 1; i >= 1; --i) pts.push_back(curve(static_cast<double>(i) / hops));
        pts.push_back(v0);

        bool ok = true;
        for (std::size_t i = 0; i + 1 < pts.size() && ok; ++i)
            ok = unique_minimal(*m, pts[i], pts[i + 1]);
        if (ok) return reduce(Word(m, std::move(pts), Species::ZBased, v0));
    }
    std::ostringstream os;
    os << "chain subdivision budget of " << max_hops << " hops exhausted";
    throw ConvergenceError(os.str());
}

double chart_radius(const ManifoldSpec& m) {
    switch (m.kind()) {
        case ManifoldKind::Euclidean:
        case ManifoldKind::HyperbolicDisk: return std::numeric_limits<double>::infinity();
        case ManifoldKind::Sphere: return 0.5 * kPi * m.radius();
        case ManifoldKind::FlatTorus: return 0.25;
        case ManifoldKind::ProjectivePlane: return 0.25 * kPi;
        case ManifoldKind::Chart: return m.uniqueness_radius();
    }
    throw Error("unreachable");
}

LocalChart make_chart(ManifoldPtr m, const Point& v0, const Point& p) {
    auto e_p = chain_word(std::move(m), v0, p);
    const double radius = chart_radius(e_p.manifold());
    return LocalChart{p, radius, std::move(e_p)};
}

ReducedWord from_fiber_coordinate(const LocalChart& c, const Point& x, const GroupElement& g) {
    const auto& m = c.fiber_basepoint.manifold();
    if (!m.same_as(g.manifold()))
        throw MismatchError("chart and group element live on different manifolds");
    if (!points_equal(m, c.fiber_basepoint.basepoint(), g.basepoint()))
        throw MismatchError("chart and group element use different basepoints");
    if (!(distance(m, x, c.center) < c.radius))
        throw ChartDomainError("point lies outside the chart neighborhood");
    const std::vector<Point> bridge{x, c.center};
    return concat_reduce(c.fiber_basepoint.manifold_ptr(),
                         {&bridge, &c.fiber_basepoint.points(), &g.word().points()},
                         Species::ZBased, c.fiber_basepoint.basepoint());
}

GroupElement to_fiber_coordinate(const LocalChart& c, const ReducedWord& e) {
    const auto& m = c.fiber_basepoint.manifold();
    if (!m.same_as(e.manifold()))
        throw MismatchError("chart and word live on different manifolds");
    if (e.species() != Species::ZBased)
        throw ValidityError("fiber coordinates are defined for based words");
    if (!points_equal(m, c.fiber_basepoint.basepoint(), e.basepoint()))
        throw MismatchError("chart and word use different basepoints");
    const Point& x = project_pi(e);
    if (!(distance(m, x, c.center) < c.radius))
        throw ChartDomainError("word projects outside the chart neighborhood");
    const auto inv = reversed(c.fiber_basepoint.points());
    const std::vector<Point> bridge{c.center, x};
    return GroupElement(concat_reduce(c.fiber_basepoint.manifold_ptr(),
                                      {&inv, &bridge, &e.points()}, Species::G,
                                      c.fiber_basepoint.basepoint()));
}

GroupElement transition(const LocalChart& cp, const LocalChart& cq, const Point& x) {
    const auto& m = cp.fiber_basepoint.manifold();
    if (!m.same_as(cq.fiber_basepoint.manifold()))
        throw MismatchError("charts live on different manifolds");
    if (!(distance(m, x, cp.center) < cp.radius) || !(distance(m, x, cq.center) < cq.radius))
        throw ChartDomainError("point lies outside the chart overlap");
    const auto inv = reversed(cp.fiber_basepoint.points());
    const std::vector<Point> bridge{cp.center, x, cq.center};
    return GroupElement(concat_reduce(cp.fiber_basepoint.manifold_ptr(),
                                      {&inv, &bridge, &cq.fiber_basepoint.points()}, Species::G,
                                      cp.fiber_basepoint.basepoint()));
}

Word contract_step(double t, const ReducedWord& w) {
    if (t < 0.0 || t > 1.0) throw Error("contract_step parameter must lie in [0,1]");
    if (w.species() != Species::ZBased && w.species() != Species::G)
        throw ValidityError("contract_step applies to based words");
    std::vector<Point> pts = w.points();
    if (pts.size() >= 2) {
        auto seg = geodesic(w.manifold(), pts[0], pts[1]);
        pts[0] = seg.at(t);
    }
    return Word(w.manifold_ptr(), std::move(pts), Species::ZBased, w.basepoint());
}

}  // namespace geoloop
