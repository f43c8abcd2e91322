#include "geoloop/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geoloop/vec.hpp"

namespace geoloop {

namespace {

constexpr double kPi = std::numbers::pi;

int tangent_dim(const ManifoldSpec& m) {
    switch (m.kind()) {
        case ManifoldKind::Sphere: return m.dim() + 1;
        case ManifoldKind::ProjectivePlane: return 3;
        default: return m.dim();
    }
}

// Raw direction in the coordinate frame, projected onto the tangent space
// for embedded kinds.
std::vector<double> raw_direction(const ManifoldSpec& m, const Point& at, std::mt19937_64& rng) {
    const int n = tangent_dim(m);
    std::vector<double> v(n);
    for (;;) {
        for (int i = 0; i < n; ++i) v[i] = uniform_in(rng, -1.0, 1.0);
        if (m.kind() == ManifoldKind::Sphere || m.kind() == ManifoldKind::ProjectivePlane) {
            auto u = at.coords;
            if (m.kind() == ManifoldKind::Sphere) u = vec::scale(u, 1.0 / m.radius());
            v = vec::sub(v, vec::scale(u, vec::dot(v, u)));
        }
        const double norm = vec::norm(v);
        if (norm > 1e-3) return vec::scale(v, 1.0 / norm);
    }
}

}  // namespace

double walk_step_scale(const ManifoldSpec& m) {
    switch (m.kind()) {
        case ManifoldKind::Euclidean:
        case ManifoldKind::HyperbolicDisk: return 0.5;
        case ManifoldKind::Sphere: return 0.4 * kPi * m.radius();
        case ManifoldKind::FlatTorus: return 0.2;
        case ManifoldKind::ProjectivePlane: return 0.2 * kPi;
        case ManifoldKind::Chart: return 0.4 * m.uniqueness_radius();
    }
    throw Error("unreachable");
}

Tangent random_tangent(const ManifoldSpec& m, const Point& at, double max_norm,
                       std::mt19937_64& rng) {
    auto dir = raw_direction(m, at, rng);
    const double target = uniform_in(rng, 0.05 * max_norm, max_norm);
    // Direction has unit coordinate norm; rescale so the metric norm hits
    // the target (they differ on the hyperbolic disk and charts).
    const double metric_unit = tangent_norm(m, at, dir);
    return vec::scale(dir, target / metric_unit);
}

Point random_point(const ManifoldSpec& m, std::mt19937_64& rng) {
    switch (m.kind()) {
        case ManifoldKind::Euclidean: {
            std::vector<double> c(m.dim());
            for (auto& x : c) x = uniform_in(rng, -1.0, 1.0);
            return Point(std::move(c));
        }
        case ManifoldKind::FlatTorus: {
            std::vector<double> c(m.dim());
            for (auto& x : c) x = uniform01(rng);
            return Point(std::move(c));
        }
        case ManifoldKind::HyperbolicDisk: {
            const double ang = uniform_in(rng, 0.0, 2.0 * kPi);
            const double r = 0.8 * std::sqrt(uniform01(rng));
            return Point{r * std::cos(ang), r * std::sin(ang)};
        }
        case ManifoldKind::Sphere:
        case ManifoldKind::ProjectivePlane: {
            const int n = tangent_dim(m);
            for (;;) {
                std::vector<double> c(n);
                for (auto& x : c) x = uniform_in(rng, -1.0, 1.0);
                if (vec::norm(c) > 1e-3)
                    return normalize_point(m, Point(std::move(c)));
            }
        }
        case ManifoldKind::Chart: {
            if (m.metric_name() == "polar_sphere")
                return Point{uniform_in(rng, 0.6, kPi - 0.6), uniform_in(rng, -1.0, 1.0)};
            if (m.metric_name() == "poincare_disk") {
                const double ang = uniform_in(rng, 0.0, 2.0 * kPi);
                const double r = 0.7 * std::sqrt(uniform01(rng));
                return Point{r * std::cos(ang), r * std::sin(ang)};
            }
            if (m.metric_name() == "flat" || m.metric_name() == "euclidean") {
                std::vector<double> c(m.dim());
                for (auto& x : c) x = uniform_in(rng, -1.0, 1.0);
                return Point(std::move(c));
            }
            throw UnsupportedError("random_point: no sampler for chart metric " + m.metric_name());
        }
    }
    throw Error("unreachable");
}

std::vector<GroupElement> random_group_elements(ManifoldPtr m, const Point& v0, int count,
                                                int max_length, std::uint64_t seed) {
    if (max_length < 2) throw Error("random_group_elements: max_length must be >= 2");
    check_point(*m, v0);
    std::mt19937_64 rng(seed);
    const double step = walk_step_scale(*m);

    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 100 * std::max(count, 1))
            throw ConvergenceError("random_group_elements could not build a valid corpus");
        const int hops = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                  std::max(1, max_length - 3)));
        std::vector<Point> walk{v0};
        for (int i = 0; i < hops; ++i) {
            const Point& cur = walk.back();
            walk.push_back(exp_map(*m, cur, random_tangent(*m, cur, step, rng)));
        }
        // Close back to the basepoint: traverse the walk outward, then the
        // connecting chain in reverse. Head-first storage therefore starts
        // with the reversed chain and ends with the reversed walk.
        const ReducedWord back = chain_word(m, v0, walk.back());
        std::vector<Point> pts(back.points().rbegin(), back.points().rend());
        for (std::size_t i = walk.size() - 1; i-- > 0;) pts.push_back(walk[i]);
        Word w(m, std::move(pts), Species::G, v0);
        if (!validate(w)) continue;  // step scale makes this unreachable; stay safe
        out.push_back(GroupElement(reduce(w)));
    }
    return out;
}

GroupElement torus_winding_element(ManifoldPtr m, const Point& v0,
                                   const std::vector<long long>& winding) {
    if (m->kind() != ManifoldKind::FlatTorus)
        throw UnsupportedError("winding elements are defined on flat tori");
    if (winding.size() != static_cast<std::size_t>(m->dim()))
        throw MismatchError("winding vector rank does not match the torus dimension");
    check_point(*m, v0);

    double span = 0.0;
    for (long long w : winding) span = std::max(span, std::abs(static_cast<double>(w)));
    const int hops = std::max(1, static_cast<int>(std::ceil(span / 0.4)));

    std::vector<Point> pts;  // head first
    pts.reserve(hops + 1);
    for (int i = hops; i >= 0; --i) {
        Point p = v0;
        for (std::size_t c = 0; c < p.size(); ++c) {
            double x = v0[c] + static_cast<double>(winding[c]) * i / hops;
            x -= std::floor(x);
            if (x >= 1.0) x = 0.0;
            p[c] = x;
        }
        pts.push_back(std::move(p));
    }
    pts.front() = v0;
    pts.back() = v0;
    return GroupElement(reduce(Word(std::move(m), std::move(pts), Species::G, v0)));
}

}  // namespace geoloop
