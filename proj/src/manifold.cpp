#include "geoloop/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "geoloop/geodesic_solver.hpp"
#include "geoloop/vec.hpp"

namespace geoloop {

namespace {

constexpr double kPi = std::numbers::pi;

using cplx = std::complex<double>;

[[noreturn]] void bad_point(const ManifoldSpec& m, const std::string& what) {
    std::ostringstream os;
    os << "invalid " << kind_name(m.kind()) << " point: " << what;
    throw RepresentationError(os.str());
}

double wrap01(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r = 0.0;  // guard against floor(1.0 - eps) rounding
    return r;
}

// Signed displacement from a to b on the unit circle, wrapped into [-1/2, 1/2).
double wrap_half(double d) {
    double r = d - std::round(d);
    if (r >= 0.5) r -= 1.0;
    if (r < -0.5) r += 1.0;
    return r;
}

std::vector<double> unit(const ManifoldSpec& m, const Point& p) {
    return vec::scale(p.coords, 1.0 / m.radius());
}

// Angle between two sphere points via the chord, stable near 0 and pi.
double sphere_angle(const ManifoldSpec& m, const Point& a, const Point& b) {
    const double chord = vec::dist(a.coords, b.coords) / m.radius();
    return 2.0 * std::asin(std::clamp(0.5 * chord, 0.0, 1.0));
}

Point sphere_rescale(const ManifoldSpec& m, std::vector<double> v) {
    const double n = vec::norm(v);
    return Point(vec::scale(v, m.radius() / n));
}

// Pick the projective representative of b nearest to the representative a.
std::vector<double> nearest_lift(const std::vector<double>& a, const std::vector<double>& b) {
    return vec::dot(a, b) < 0.0 ? vec::scale(b, -1.0) : b;
}

Point projective_canonical(std::vector<double> v) {
    const double n = vec::norm(v);
    if (n == 0.0) throw RepresentationError("projective representative is the zero vector");
    v = vec::scale(v, 1.0 / n);
    for (double c : v) {
        if (std::abs(c) > 1e-12) {
            if (c < 0.0)
                for (double& x : v) x = -x;
            break;
        }
    }
    return Point(std::move(v));
}

cplx to_cplx(const Point& p) { return {p[0], p[1]}; }
Point from_cplx(cplx z) { return Point{z.real(), z.imag()}; }

// Disk automorphism sending a to the origin and its inverse.
cplx mobius_to_origin(cplx a, cplx z) { return (z - a) / (1.0 - std::conj(a) * z); }
cplx mobius_from_origin(cplx a, cplx w) { return (w + a) / (1.0 + std::conj(a) * w); }

double hyperbolic_distance(const Point& a, const Point& b) {
    const cplx w = mobius_to_origin(to_cplx(a), to_cplx(b));
    return 2.0 * std::atanh(std::min(std::abs(w), 1.0 - 1e-16));
}

}  // namespace

const char* kind_name(ManifoldKind k) {
    switch (k) {
        case ManifoldKind::Euclidean: return "euclidean";
        case ManifoldKind::Sphere: return "sphere";
        case ManifoldKind::FlatTorus: return "flat_torus";
        case ManifoldKind::HyperbolicDisk: return "hyperbolic_disk";
        case ManifoldKind::ProjectivePlane: return "projective_plane";
        case ManifoldKind::Chart: return "chart";
    }
    return "?";
}

ManifoldSpec ManifoldSpec::euclidean(int dim, double eps_eq) {
    if (dim < 1) throw Error("euclidean: dim must be >= 1");
    ManifoldSpec m;
    m.kind_ = ManifoldKind::Euclidean;
    m.dim_ = dim;
    m.eps_eq_ = eps_eq;
    return m;
}

ManifoldSpec ManifoldSpec::sphere(int dim, double radius, double eps_eq) {
    if (dim < 1) throw Error("sphere: dim must be >= 1");
    if (radius <= 0.0) throw Error("sphere: radius must be positive");
    ManifoldSpec m;
    m.kind_ = ManifoldKind::Sphere;
    m.dim_ = dim;
    m.radius_ = radius;
    m.eps_eq_ = eps_eq;
    return m;
}

ManifoldSpec ManifoldSpec::flat_torus(int dim, double eps_eq) {
    if (dim < 1) throw Error("flat_torus: dim must be >= 1");
    ManifoldSpec m;
    m.kind_ = ManifoldKind::FlatTorus;
    m.dim_ = dim;
    m.eps_eq_ = eps_eq;
    return m;
}

ManifoldSpec ManifoldSpec::hyperbolic_disk(double eps_eq) {
    ManifoldSpec m;
    m.kind_ = ManifoldKind::HyperbolicDisk;
    m.dim_ = 2;
    m.eps_eq_ = eps_eq;
    return m;
}

ManifoldSpec ManifoldSpec::projective_plane(double eps_eq) {
    ManifoldSpec m;
    m.kind_ = ManifoldKind::ProjectivePlane;
    m.dim_ = 2;
    m.eps_eq_ = eps_eq;
    return m;
}

ManifoldSpec ManifoldSpec::chart(int dim, const std::string& metric_name, double rho_u,
                                 double eps_eq) {
    return chart(dim, metric_name, builtin_chart_metric(metric_name, dim),
                 builtin_chart_domain(metric_name, dim), rho_u, eps_eq);
}

ManifoldSpec ManifoldSpec::chart(int dim, std::string label, MetricFn metric, DomainFn domain,
                                 double rho_u, double eps_eq) {
    if (dim < 1) throw Error("chart: dim must be >= 1");
    if (rho_u <= 0.0) throw Error("chart: uniqueness radius must be positive");
    if (!metric) throw Error("chart: metric callback required");
    ManifoldSpec m;
    m.kind_ = ManifoldKind::Chart;
    m.dim_ = dim;
    m.rho_u_ = rho_u;
    m.eps_eq_ = eps_eq;
    m.metric_name_ = std::move(label);
    m.metric_ = std::move(metric);
    m.domain_ = std::move(domain);
    return m;
}

int ManifoldSpec::point_size() const {
    switch (kind_) {
        case ManifoldKind::Sphere: return dim_ + 1;
        case ManifoldKind::ProjectivePlane: return 3;
        default: return dim_;
    }
}

Eigen::MatrixXd ManifoldSpec::metric_at(const Eigen::VectorXd& x) const {
    if (kind_ != ManifoldKind::Chart) throw Error("metric_at: not a chart manifold");
    Eigen::MatrixXd g = metric_(x);
    if (g.rows() != dim_ || g.cols() != dim_)
        throw GeometryError("metric callback returned a tensor of the wrong size");
    if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-8 * (1.0 + g.cwiseAbs().maxCoeff()))
        throw GeometryError("metric tensor is not symmetric");
    return g;
}

bool ManifoldSpec::in_chart_domain(const Eigen::VectorXd& x) const {
    if (kind_ != ManifoldKind::Chart) return true;
    return domain_ ? domain_(x) : true;
}

bool ManifoldSpec::same_as(const ManifoldSpec& o) const {
    if (kind_ != o.kind_ || dim_ != o.dim_) return false;
    switch (kind_) {
        case ManifoldKind::Sphere: return radius_ == o.radius_;
        case ManifoldKind::Chart: return metric_name_ == o.metric_name_ && rho_u_ == o.rho_u_;
        default: return true;
    }
}

void check_point(const ManifoldSpec& m, const Point& p) {
    if (static_cast<int>(p.size()) != m.point_size()) bad_point(m, "wrong coordinate count");
    for (double c : p.coords)
        if (!std::isfinite(c)) bad_point(m, "non-finite coordinate");
    switch (m.kind()) {
        case ManifoldKind::Sphere: {
            const double n = vec::norm(p.coords);
            if (std::abs(n - m.radius()) > 1e-12 * m.radius())
                bad_point(m, "coordinates do not lie on the sphere");
            break;
        }
        case ManifoldKind::FlatTorus:
            for (double c : p.coords)
                if (c < 0.0 || c >= 1.0) bad_point(m, "coordinate outside [0,1)");
            break;
        case ManifoldKind::HyperbolicDisk:
            if (vec::norm(p.coords) >= 1.0) bad_point(m, "coordinates outside the open disk");
            break;
        case ManifoldKind::ProjectivePlane: {
            const double n = vec::norm(p.coords);
            if (std::abs(n - 1.0) > 1e-9) bad_point(m, "representative is not a unit vector");
            for (double c : p.coords) {
                if (std::abs(c) > 1e-12) {
                    if (c < 0.0) bad_point(m, "representative is not sign-normalized");
                    break;
                }
            }
            break;
        }
        case ManifoldKind::Chart: {
            Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(p.coords.data(), p.size());
            if (!m.in_chart_domain(x)) bad_point(m, "coordinates outside the chart domain");
            break;
        }
        case ManifoldKind::Euclidean: break;
    }
}

Point normalize_point(const ManifoldSpec& m, Point p) {
    if (static_cast<int>(p.size()) != m.point_size()) bad_point(m, "wrong coordinate count");
    // Canonical representations pass through untouched, so parsing is
    // idempotent and round trips stay byte-identical.
    try {
        check_point(m, p);
        return p;
    } catch (const RepresentationError&) {
    }
    switch (m.kind()) {
        case ManifoldKind::Sphere: {
            const double n = vec::norm(p.coords);
            if (n == 0.0) bad_point(m, "zero vector cannot be projected to the sphere");
            p = Point(vec::scale(p.coords, m.radius() / n));
            break;
        }
        case ManifoldKind::FlatTorus:
            for (double& c : p.coords) c = wrap01(c);
            break;
        case ManifoldKind::ProjectivePlane: p = projective_canonical(std::move(p.coords)); break;
        default: break;
    }
    check_point(m, p);
    return p;
}

bool points_equal(const ManifoldSpec& m, const Point& a, const Point& b) {
    if (a == b) return true;
    if (m.kind() == ManifoldKind::Chart) {
        // At coincidence scale the straight-chord length agrees with the
        // geodesic distance to third order; no boundary-value solve needed.
        return chart_length_estimate(m, a, b) <= m.eps_eq();
    }
    return distance(m, a, b) <= m.eps_eq();
}

double distance(const ManifoldSpec& m, const Point& a, const Point& b) {
    check_point(m, a);
    check_point(m, b);
    switch (m.kind()) {
        case ManifoldKind::Euclidean: return vec::dist(a.coords, b.coords);
        case ManifoldKind::Sphere: return m.radius() * sphere_angle(m, a, b);
        case ManifoldKind::FlatTorus: {
            double s = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double d = wrap_half(b[i] - a[i]);
                s += d * d;
            }
            return std::sqrt(s);
        }
        case ManifoldKind::HyperbolicDisk: return hyperbolic_distance(a, b);
        case ManifoldKind::ProjectivePlane: {
            const auto lift = nearest_lift(a.coords, b.coords);
            const double chord = vec::dist(a.coords, lift);
            return 2.0 * std::asin(std::clamp(0.5 * chord, 0.0, 1.0));
        }
        case ManifoldKind::Chart: {
            if (a == b) return 0.0;
            return solve_bvp(m, a, b).length();
        }
    }
    throw Error("unreachable");
}

bool unique_minimal(const ManifoldSpec& m, const Point& a, const Point& b) {
    check_point(m, a);
    check_point(m, b);
    switch (m.kind()) {
        case ManifoldKind::Euclidean:
        case ManifoldKind::HyperbolicDisk: return true;
        case ManifoldKind::Sphere: return distance(m, a, b) < kPi * m.radius();
        case ManifoldKind::FlatTorus: {
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double d = std::abs(wrap_half(b[i] - a[i]));
                if (std::abs(d - 0.5) <= m.eps_eq()) return false;
            }
            return true;
        }
        case ManifoldKind::ProjectivePlane: return distance(m, a, b) < 0.5 * kPi;
        case ManifoldKind::Chart: {
            // The chord estimate bounds the geodesic distance from above, so
            // accepting estimate < rho_u never over-claims uniqueness.
            try {
                return chart_length_estimate(m, a, b) < m.uniqueness_radius();
            } catch (const Error&) {
                return false;
            }
        }
    }
    throw Error("unreachable");
}

GeodesicPath geodesic(const ManifoldSpec& m, const Point& a, const Point& b) {
    if (!unique_minimal(m, a, b)) {
        std::ostringstream os;
        os << "no unique minimal geodesic between the given " << kind_name(m.kind()) << " points";
        throw UniquenessError(os.str());
    }
    if (points_equal(m, a, b) && a == b)
        return GeodesicPath(a, b, 0.0, [a](double) { return a; });

    switch (m.kind()) {
        case ManifoldKind::Euclidean: {
            const double len = vec::dist(a.coords, b.coords);
            auto eval = [a, b](double t) {
                return Point(vec::add(vec::scale(a.coords, 1.0 - t), vec::scale(b.coords, t)));
            };
            return GeodesicPath(a, b, len, eval);
        }
        case ManifoldKind::Sphere: {
            const double theta = sphere_angle(m, a, b);
            const double len = m.radius() * theta;
            const auto ua = unit(m, a), ub = unit(m, b);
            ManifoldSpec ms = m;
            auto eval = [ms, ua, ub, theta](double t) {
                const double s = std::sin(theta);
                if (s < 1e-12) {
                    return sphere_rescale(ms, vec::add(vec::scale(ua, 1.0 - t), vec::scale(ub, t)));
                }
                auto p = vec::add(vec::scale(ua, std::sin((1.0 - t) * theta) / s),
                                  vec::scale(ub, std::sin(t * theta) / s));
                return sphere_rescale(ms, std::move(p));
            };
            return GeodesicPath(a, b, len, eval);
        }
        case ManifoldKind::FlatTorus: {
            std::vector<double> disp(a.size());
            double s = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                disp[i] = wrap_half(b[i] - a[i]);
                s += disp[i] * disp[i];
            }
            auto eval = [a, disp](double t) {
                Point p = a;
                for (std::size_t i = 0; i < p.size(); ++i) p[i] = wrap01(a[i] + t * disp[i]);
                return p;
            };
            return GeodesicPath(a, b, std::sqrt(s), eval);
        }
        case ManifoldKind::HyperbolicDisk: {
            const cplx za = to_cplx(a);
            const cplx w = mobius_to_origin(za, to_cplx(b));
            const double rho = std::abs(w);
            const double len = 2.0 * std::atanh(std::min(rho, 1.0 - 1e-16));
            const cplx dir = rho > 0.0 ? w / rho : cplx(1.0, 0.0);
            auto eval = [za, dir, len](double t) {
                const cplx u = dir * std::tanh(0.5 * t * len);
                return from_cplx(mobius_from_origin(za, u));
            };
            return GeodesicPath(a, b, len, eval);
        }
        case ManifoldKind::ProjectivePlane: {
            const auto lift = nearest_lift(a.coords, b.coords);
            const double chord = vec::dist(a.coords, lift);
            const double theta = 2.0 * std::asin(std::clamp(0.5 * chord, 0.0, 1.0));
            const auto ua = a.coords;
            auto eval = [ua, lift, theta](double t) {
                const double s = std::sin(theta);
                std::vector<double> p;
                if (s < 1e-12) {
                    p = vec::add(vec::scale(ua, 1.0 - t), vec::scale(lift, t));
                } else {
                    p = vec::add(vec::scale(ua, std::sin((1.0 - t) * theta) / s),
                                 vec::scale(lift, std::sin(t * theta) / s));
                }
                return projective_canonical(std::move(p));
            };
            return GeodesicPath(a, b, theta, eval);
        }
        case ManifoldKind::Chart: return solve_bvp(m, a, b);
    }
    throw Error("unreachable");
}

Tangent log_map(const ManifoldSpec& m, const Point& a, const Point& b) {
    if (!unique_minimal(m, a, b))
        throw UniquenessError("log_map requires a unique minimal geodesic");
    switch (m.kind()) {
        case ManifoldKind::Euclidean: return vec::sub(b.coords, a.coords);
        case ManifoldKind::Sphere: {
            const double theta = sphere_angle(m, a, b);
            if (theta < 1e-15) return Tangent(a.size(), 0.0);
            const auto ua = unit(m, a), ub = unit(m, b);
            auto tang = vec::sub(ub, vec::scale(ua, vec::dot(ua, ub)));
            const double n = vec::norm(tang);
            if (n < 1e-15) return Tangent(a.size(), 0.0);
            return vec::scale(tang, m.radius() * theta / n);
        }
        case ManifoldKind::FlatTorus: {
            Tangent v(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) v[i] = wrap_half(b[i] - a[i]);
            return v;
        }
        case ManifoldKind::HyperbolicDisk: {
            const cplx za = to_cplx(a);
            const cplx w = mobius_to_origin(za, to_cplx(b));
            const double rho = std::abs(w);
            if (rho < 1e-15) return Tangent{0.0, 0.0};
            const double d = 2.0 * std::atanh(std::min(rho, 1.0 - 1e-16));
            // gamma'(0) in disk coordinates; metric norm at a equals d.
            const cplx v = (w / rho) * (0.5 * d * (1.0 - std::norm(za)));
            return Tangent{v.real(), v.imag()};
        }
        case ManifoldKind::ProjectivePlane: {
            const auto lift = nearest_lift(a.coords, b.coords);
            const double chord = vec::dist(a.coords, lift);
            const double theta = 2.0 * std::asin(std::clamp(0.5 * chord, 0.0, 1.0));
            if (theta < 1e-15) return Tangent(3, 0.0);
            auto tang = vec::sub(lift, vec::scale(a.coords, vec::dot(a.coords, lift)));
            const double n = vec::norm(tang);
            if (n < 1e-15) return Tangent(3, 0.0);
            return vec::scale(tang, theta / n);
        }
        case ManifoldKind::Chart: {
            if (a == b) return Tangent(a.size(), 0.0);
            return shoot(m, a, b).initial_velocity;
        }
    }
    throw Error("unreachable");
}

Point exp_map(const ManifoldSpec& m, const Point& a, const Tangent& v) {
    check_point(m, a);
    if (v.size() != a.size()) throw RepresentationError("tangent has wrong coordinate count");
    const double n = vec::norm(v);
    if (n == 0.0) return a;
    switch (m.kind()) {
        case ManifoldKind::Euclidean: return Point(vec::add(a.coords, v));
        case ManifoldKind::Sphere: {
            const double theta = n / m.radius();
            const auto ua = unit(m, a);
            const auto uv = vec::scale(v, 1.0 / n);
            auto p = vec::add(vec::scale(ua, std::cos(theta)), vec::scale(uv, std::sin(theta)));
            return sphere_rescale(m, std::move(p));
        }
        case ManifoldKind::FlatTorus: {
            Point p = a;
            for (std::size_t i = 0; i < p.size(); ++i) p[i] = wrap01(a[i] + v[i]);
            return p;
        }
        case ManifoldKind::HyperbolicDisk: {
            const cplx za = to_cplx(a);
            const double s = tangent_norm(m, a, v);
            const cplx dir = cplx(v[0], v[1]) / n;
            const cplx u = dir * std::tanh(0.5 * s);
            return from_cplx(mobius_from_origin(za, u));
        }
        case ManifoldKind::ProjectivePlane: {
            const auto uv = vec::scale(v, 1.0 / n);
            auto p = vec::add(vec::scale(a.coords, std::cos(n)), vec::scale(uv, std::sin(n)));
            return projective_canonical(std::move(p));
        }
        case ManifoldKind::Chart: return integrate_geodesic(m, a, v).end();
    }
    throw Error("unreachable");
}

double tangent_norm(const ManifoldSpec& m, const Point& a, const Tangent& v) {
    switch (m.kind()) {
        case ManifoldKind::HyperbolicDisk: {
            const double lam = 2.0 / (1.0 - vec::dot(a.coords, a.coords));
            return lam * vec::norm(v);
        }
        case ManifoldKind::Chart: {
            Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(a.coords.data(), a.size());
            Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(v.data(), v.size());
            return std::sqrt(w.dot(m.metric_at(x) * w));
        }
        default: return vec::norm(v);
    }
}

MetricFn builtin_chart_metric(const std::string& name, int dim) {
    if (name == "flat" || name == "euclidean") {
        return [dim](const Eigen::VectorXd&) {
            return Eigen::MatrixXd(Eigen::MatrixXd::Identity(dim, dim));
        };
    }
    if (name == "polar_sphere") {
        if (dim != 2) throw Error("polar_sphere metric requires dim 2");
        return [](const Eigen::VectorXd& x) {
            Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2, 2);
            g(0, 0) = 1.0;
            const double s = std::sin(x[0]);
            g(1, 1) = s * s;
            return g;
        };
    }
    if (name == "poincare_disk") {
        if (dim != 2) throw Error("poincare_disk metric requires dim 2");
        return [](const Eigen::VectorXd& x) {
            const double r2 = x.squaredNorm();
            const double lam = 2.0 / (1.0 - r2);
            return Eigen::MatrixXd(lam * lam * Eigen::MatrixXd::Identity(2, 2));
        };
    }
    throw Error("unknown builtin chart metric: " + name);
}

DomainFn builtin_chart_domain(const std::string& name, int /*dim*/) {
    if (name == "polar_sphere")
        return [](const Eigen::VectorXd& x) { return x[0] > 0.0 && x[0] < kPi; };
    if (name == "poincare_disk")
        return [](const Eigen::VectorXd& x) { return x.squaredNorm() < 1.0; };
    return {};
}

}  // namespace geoloop
