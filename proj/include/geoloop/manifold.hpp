#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "geoloop/errors.hpp"

namespace geoloop {

/// A point on a manifold. The interpretation of the coordinates depends on
/// the manifold kind:
///   euclidean(n)       n ambient coordinates
///   sphere(n, r)       n+1 embedding coordinates with |coords| = r
///   flat_torus(n)      n fundamental-domain coordinates in [0,1)
///   hyperbolic_disk    2 disk coordinates with |u| < 1
///   projective_plane   3 unit representative coordinates, first nonzero
///                      coordinate positive
///   chart(n)           n chart coordinates
struct Point {
    std::vector<double> coords;

    Point() = default;
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}
    Point(std::initializer_list<double> c) : coords(c) {}

    std::size_t size() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }

    friend bool operator==(const Point&, const Point&) = default;
};

using Tangent = std::vector<double>;

enum class ManifoldKind {
    Euclidean,
    Sphere,
    FlatTorus,
    HyperbolicDisk,
    ProjectivePlane,
    Chart,
};

const char* kind_name(ManifoldKind k);

/// Metric callback for chart manifolds: chart coordinates -> metric tensor.
using MetricFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;
/// Coordinate-domain predicate for chart manifolds.
using DomainFn = std::function<bool(const Eigen::VectorXd&)>;

inline constexpr double kDefaultEpsEq = 1e-9;

/// Immutable description of a concrete manifold. Shared by words and group
/// elements via ManifoldPtr; two specs are interchangeable when same_as()
/// holds (structural comparison, charts compared by metric name).
class ManifoldSpec {
public:
    static ManifoldSpec euclidean(int dim, double eps_eq = kDefaultEpsEq);
    static ManifoldSpec sphere(int dim, double radius = 1.0, double eps_eq = kDefaultEpsEq);
    static ManifoldSpec flat_torus(int dim, double eps_eq = kDefaultEpsEq);
    static ManifoldSpec hyperbolic_disk(double eps_eq = kDefaultEpsEq);
    static ManifoldSpec projective_plane(double eps_eq = kDefaultEpsEq);
    /// Chart manifold backed by a named builtin metric ("flat", "polar_sphere",
    /// "poincare_disk"). rho_u is the caller-declared uniqueness radius.
    static ManifoldSpec chart(int dim, const std::string& metric_name, double rho_u,
                              double eps_eq = kDefaultEpsEq);
    /// Chart manifold with a custom metric callback. The label identifies the
    /// metric for structural comparison and serialization.
    static ManifoldSpec chart(int dim, std::string label, MetricFn metric, DomainFn domain,
                              double rho_u, double eps_eq = kDefaultEpsEq);

    ManifoldKind kind() const { return kind_; }
    int dim() const { return dim_; }
    double radius() const { return radius_; }
    double uniqueness_radius() const { return rho_u_; }
    double eps_eq() const { return eps_eq_; }
    void set_eps_eq(double eps) { eps_eq_ = eps; }
    const std::string& metric_name() const { return metric_name_; }

    /// Number of coordinates a point of this manifold carries.
    int point_size() const;

    /// Chart manifolds only: evaluate the metric tensor, checking symmetry.
    Eigen::MatrixXd metric_at(const Eigen::VectorXd& x) const;
    bool in_chart_domain(const Eigen::VectorXd& x) const;

    bool same_as(const ManifoldSpec& other) const;

private:
    ManifoldSpec() = default;

    ManifoldKind kind_ = ManifoldKind::Euclidean;
    int dim_ = 1;
    double radius_ = 1.0;
    double rho_u_ = 0.0;
    double eps_eq_ = kDefaultEpsEq;
    std::string metric_name_;
    MetricFn metric_;
    DomainFn domain_;
};

using ManifoldPtr = std::shared_ptr<const ManifoldSpec>;

/// A constant-speed minimal geodesic segment, parameterized over [0,1].
class GeodesicPath {
public:
    GeodesicPath(Point a, Point b, double length, std::function<Point(double)> eval)
        : a_(std::move(a)), b_(std::move(b)), length_(length), eval_(std::move(eval)) {}

    const Point& start() const { return a_; }
    const Point& end() const { return b_; }
    double length() const { return length_; }

    /// Evaluate at parameter t (clamped to [0,1]). Endpoints are returned
    /// verbatim so that at(0) == start() and at(1) == end() bitwise.
    Point at(double t) const {
        if (t <= 0.0) return a_;
        if (t >= 1.0) return b_;
        return eval_(t);
    }

private:
    Point a_, b_;
    double length_;
    std::function<Point(double)> eval_;
};

/// Throws RepresentationError unless p satisfies the point contract of m.
void check_point(const ManifoldSpec& m, const Point& p);

/// Coerce raw coordinates into the canonical representation (renormalize
/// sphere/projective representatives, wrap torus coordinates). Throws
/// RepresentationError when no canonical form exists (zero vector, |u| >= 1).
Point normalize_point(const ManifoldSpec& m, Point p);

/// Intrinsic point coincidence: distance(m, a, b) <= m.eps_eq().
bool points_equal(const ManifoldSpec& m, const Point& a, const Point& b);

/// Intrinsic (minimal-geodesic) distance.
double distance(const ManifoldSpec& m, const Point& a, const Point& b);

/// True iff exactly one minimal geodesic joins a and b. Equal points count
/// as joined by the constant geodesic. Symmetric in a, b.
bool unique_minimal(const ManifoldSpec& m, const Point& a, const Point& b);

/// The unique minimal geodesic from a to b. Throws UniquenessError when
/// unique_minimal(m, a, b) is false.
GeodesicPath geodesic(const ManifoldSpec& m, const Point& a, const Point& b);

/// Initial velocity of the unit-interval geodesic from a to b, expressed in
/// the coordinate frame at a. Its metric norm (tangent_norm) equals
/// distance(m, a, b).
Tangent log_map(const ManifoldSpec& m, const Point& a, const Point& b);

/// Endpoint of the geodesic with initial position a and initial velocity v,
/// integrated over unit time. Inverse to log_map where the latter is defined.
Point exp_map(const ManifoldSpec& m, const Point& a, const Tangent& v);

/// Metric norm of a tangent vector at a.
double tangent_norm(const ManifoldSpec& m, const Point& a, const Tangent& v);

/// Named builtin chart metrics: "flat" (identity, any dim), "polar_sphere"
/// (dim 2, diag(1, sin^2 x0)), "poincare_disk" (dim 2, conformal disk).
MetricFn builtin_chart_metric(const std::string& name, int dim);
DomainFn builtin_chart_domain(const std::string& name, int dim);

}  // namespace geoloop
