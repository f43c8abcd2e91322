#pragma once

#include <Eigen/Dense>
#include <vector>

#include "geoloop/manifold.hpp"

namespace geoloop {

/// Parameters of the chart-manifold geodesic kernel.
struct ShootingConfig {
    int rk4_steps = 256;
    int newton_max_iters = 50;
    double bvp_tolerance = 1e-8;  // chart-coordinate endpoint error
    double fd_step = 1e-6;        // finite-difference step for the shooting Jacobian

    void check() const;
};

/// Dense output of one geodesic integration: positions and velocities at the
/// uniform time nodes i / rk4_steps.
struct Trajectory {
    std::vector<Eigen::VectorXd> positions;
    std::vector<Eigen::VectorXd> velocities;
    double speed = 0.0;  // metric norm of the initial velocity == arc length
};

/// Result of the two-point boundary-value solve.
struct ShootingResult {
    Tangent initial_velocity;
    GeodesicPath path;
    int newton_iterations = 0;
    double residual = 0.0;
};

/// Integrate the geodesic equation x'' = -Gamma(x)(x', x') from a with
/// initial velocity v0 over unit time. Christoffel symbols come from central
/// finite differences of the metric callback. Throws GeometryError when the
/// metric fails the SPD check and ChartExitError when the trajectory leaves
/// the chart domain.
Trajectory integrate_geodesic_dense(const ManifoldSpec& m, const Point& a, const Tangent& v0,
                                    const ShootingConfig& cfg = {});

/// Same integration wrapped as a GeodesicPath with a cubic-Hermite evaluator.
GeodesicPath integrate_geodesic(const ManifoldSpec& m, const Point& a, const Tangent& v0,
                                const ShootingConfig& cfg = {});

/// Damped-Newton shooting for the geodesic from a to b, initialized from the
/// chart straight-line displacement. Throws ConvergenceError when the
/// residual cannot be driven below cfg.bvp_tolerance.
ShootingResult shoot(const ManifoldSpec& m, const Point& a, const Point& b,
                     const ShootingConfig& cfg = {});

GeodesicPath solve_bvp(const ManifoldSpec& m, const Point& a, const Point& b,
                       const ShootingConfig& cfg = {});

/// Length of the chart straight-line segment from a to b under the metric;
/// an upper bound for the geodesic distance.
double chart_length_estimate(const ManifoldSpec& m, const Point& a, const Point& b);

}  // namespace geoloop
