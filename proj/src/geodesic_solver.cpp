#include "geoloop/geodesic_solver.hpp"

#include <cmath>
#include <sstream>

namespace geoloop {

namespace {

// Step used for the central-difference metric derivatives inside the
// Christoffel assembly (distinct from cfg.fd_step, which drives the shooting
// Jacobian).
constexpr double kChristoffelStep = 1e-5;

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

void require_in_domain(const ManifoldSpec& m, const Eigen::VectorXd& x) {
    if (!m.in_chart_domain(x)) {
        std::ostringstream os;
        os << "geodesic trajectory left the chart domain at (";
        for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
        os << ")";
        throw ChartExitError(os.str());
    }
}

Eigen::LLT<Eigen::MatrixXd> spd_factor(const ManifoldSpec& m, const Eigen::VectorXd& x) {
    Eigen::LLT<Eigen::MatrixXd> llt(m.metric_at(x));
    if (llt.info() != Eigen::Success)
        throw GeometryError("metric tensor is not positive definite at a queried point");
    return llt;
}

// Geodesic acceleration a^k = -Gamma^k_ij v^i v^j, with
// Gamma^k_ij v^i v^j = g^{kl} (d_i g_{lj} v^i v^j - 1/2 d_l g_{ij} v^i v^j).
Eigen::VectorXd acceleration(const ManifoldSpec& m, const Eigen::VectorXd& x,
                             const Eigen::VectorXd& v) {
    const int n = static_cast<int>(x.size());
    require_in_domain(m, x);
    auto llt = spd_factor(m, x);

    std::vector<Eigen::MatrixXd> dg(n);
    for (int c = 0; c < n; ++c) {
        Eigen::VectorXd xp = x, xm = x;
        xp[c] += kChristoffelStep;
        xm[c] -= kChristoffelStep;
        require_in_domain(m, xp);
        require_in_domain(m, xm);
        dg[c] = (m.metric_at(xp) - m.metric_at(xm)) / (2.0 * kChristoffelStep);
    }

    Eigen::VectorXd rhs(n);
    for (int l = 0; l < n; ++l) {
        double s1 = 0.0;
        for (int i = 0; i < n; ++i) s1 += v[i] * dg[i].row(l).dot(v);
        const double s2 = v.dot(dg[l] * v);
        rhs[l] = -(s1 - 0.5 * s2);
    }
    return llt.solve(rhs);
}

struct RawTrajectory {
    std::vector<Eigen::VectorXd> q;
    std::vector<Eigen::VectorXd> p;
};

RawTrajectory rk4_integrate(const ManifoldSpec& m, const Eigen::VectorXd& x0,
                            const Eigen::VectorXd& v0, int steps, bool store_nodes) {
    const double h = 1.0 / steps;
    Eigen::VectorXd x = x0, v = v0;
    RawTrajectory out;
    if (store_nodes) {
        out.q.reserve(steps + 1);
        out.p.reserve(steps + 1);
        out.q.push_back(x);
        out.p.push_back(v);
    }
    for (int i = 0; i < steps; ++i) {
        const Eigen::VectorXd k1x = v;
        const Eigen::VectorXd k1v = acceleration(m, x, v);
        const Eigen::VectorXd k2x = v + 0.5 * h * k1v;
        const Eigen::VectorXd k2v = acceleration(m, x + 0.5 * h * k1x, v + 0.5 * h * k1v);
        const Eigen::VectorXd k3x = v + 0.5 * h * k2v;
        const Eigen::VectorXd k3v = acceleration(m, x + 0.5 * h * k2x, v + 0.5 * h * k2v);
        const Eigen::VectorXd k4x = v + h * k3v;
        const Eigen::VectorXd k4v = acceleration(m, x + h * k3x, v + h * k3v);
        x += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        require_in_domain(m, x);
        if (store_nodes) {
            out.q.push_back(x);
            out.p.push_back(v);
        }
    }
    if (!store_nodes) {
        out.q.push_back(x);
        out.p.push_back(v);
    }
    return out;
}

Eigen::VectorXd shoot_endpoint(const ManifoldSpec& m, const Eigen::VectorXd& x0,
                               const Eigen::VectorXd& v0, int steps) {
    return rk4_integrate(m, x0, v0, steps, false).q.back();
}

// Cubic-Hermite dense output over the stored nodes; the optional endpoint
// correction pins at(1) to the requested target after a boundary-value solve.
GeodesicPath make_path(const ManifoldSpec& m, Point a, Point b, double length, RawTrajectory traj,
                       bool pin_endpoint) {
    const int steps = static_cast<int>(traj.q.size()) - 1;
    Eigen::VectorXd correction = Eigen::VectorXd::Zero(traj.q.back().size());
    if (pin_endpoint) correction = to_eigen(b.coords) - traj.q.back();
    auto nodes = std::make_shared<RawTrajectory>(std::move(traj));
    auto eval = [nodes, steps, correction](double t) {
        const double u = t * steps;
        int i = static_cast<int>(std::floor(u));
        i = std::clamp(i, 0, steps - 1);
        const double tau = u - i;
        const double h = 1.0 / steps;
        const double h00 = (1.0 + 2.0 * tau) * (1.0 - tau) * (1.0 - tau);
        const double h10 = tau * (1.0 - tau) * (1.0 - tau);
        const double h01 = tau * tau * (3.0 - 2.0 * tau);
        const double h11 = tau * tau * (tau - 1.0);
        Eigen::VectorXd p = h00 * nodes->q[i] + h10 * h * nodes->p[i] + h01 * nodes->q[i + 1] +
                            h11 * h * nodes->p[i + 1] + t * correction;
        return Point(to_std(p));
    };
    (void)m;
    return GeodesicPath(std::move(a), std::move(b), length, std::move(eval));
}

void require_chart(const ManifoldSpec& m, const char* what) {
    if (m.kind() != ManifoldKind::Chart) {
        std::ostringstream os;
        os << what << " requires a chart manifold, got " << kind_name(m.kind());
        throw Error(os.str());
    }
}

}  // namespace

void ShootingConfig::check() const {
    if (rk4_steps <= 0 || newton_max_iters <= 0 || bvp_tolerance <= 0.0 || fd_step <= 0.0)
        throw Error("ShootingConfig fields must be strictly positive");
}

Trajectory integrate_geodesic_dense(const ManifoldSpec& m, const Point& a, const Tangent& v0,
                                    const ShootingConfig& cfg) {
    require_chart(m, "integrate_geodesic");
    cfg.check();
    check_point(m, a);
    if (v0.size() != a.size()) throw RepresentationError("tangent has wrong coordinate count");
    const Eigen::VectorXd x0 = to_eigen(a.coords);
    const Eigen::VectorXd w0 = to_eigen(v0);
    auto raw = rk4_integrate(m, x0, w0, cfg.rk4_steps, true);
    Trajectory out;
    out.speed = std::sqrt(w0.dot(m.metric_at(x0) * w0));
    out.positions = std::move(raw.q);
    out.velocities = std::move(raw.p);
    return out;
}

GeodesicPath integrate_geodesic(const ManifoldSpec& m, const Point& a, const Tangent& v0,
                                const ShootingConfig& cfg) {
    require_chart(m, "integrate_geodesic");
    cfg.check();
    check_point(m, a);
    if (v0.size() != a.size()) throw RepresentationError("tangent has wrong coordinate count");
    const Eigen::VectorXd x0 = to_eigen(a.coords);
    const Eigen::VectorXd w0 = to_eigen(v0);
    const double speed = std::sqrt(w0.dot(m.metric_at(x0) * w0));
    auto raw = rk4_integrate(m, x0, w0, cfg.rk4_steps, true);
    Point b(to_std(raw.q.back()));
    return make_path(m, a, std::move(b), speed, std::move(raw), false);
}

ShootingResult shoot(const ManifoldSpec& m, const Point& a, const Point& b,
                     const ShootingConfig& cfg) {
    require_chart(m, "solve_bvp");
    cfg.check();
    check_point(m, a);
    check_point(m, b);
    const Eigen::VectorXd x0 = to_eigen(a.coords);
    const Eigen::VectorXd target = to_eigen(b.coords);
    const int n = static_cast<int>(x0.size());

    Eigen::VectorXd v = target - x0;  // chart straight-line initialization
    Eigen::VectorXd endpoint = shoot_endpoint(m, x0, v, cfg.rk4_steps);
    double residual = (endpoint - target).norm();
    int iters = 0;

    while (residual > cfg.bvp_tolerance) {
        if (iters >= cfg.newton_max_iters) {
            std::ostringstream os;
            os << "shooting Newton did not converge in " << cfg.newton_max_iters
               << " iterations (residual " << residual << ")";
            throw ConvergenceError(os.str());
        }
        Eigen::MatrixXd jac(n, n);
        for (int j = 0; j < n; ++j) {
            Eigen::VectorXd vj = v;
            vj[j] += cfg.fd_step;
            jac.col(j) = (shoot_endpoint(m, x0, vj, cfg.rk4_steps) - endpoint) / cfg.fd_step;
        }
        const Eigen::VectorXd delta = jac.partialPivLu().solve(target - endpoint);

        double lambda = 1.0;
        bool accepted = false;
        for (int halving = 0; halving < 20; ++halving) {
            const Eigen::VectorXd v_try = v + lambda * delta;
            Eigen::VectorXd end_try;
            try {
                end_try = shoot_endpoint(m, x0, v_try, cfg.rk4_steps);
            } catch (const ChartExitError&) {
                lambda *= 0.5;
                continue;
            }
            const double r_try = (end_try - target).norm();
            if (r_try < residual) {
                v = v_try;
                endpoint = end_try;
                residual = r_try;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted)
            throw ConvergenceError("shooting Newton stalled: damping produced no residual decrease");
        ++iters;
    }

    auto raw = rk4_integrate(m, x0, v, cfg.rk4_steps, true);
    const double length = std::sqrt(v.dot(m.metric_at(x0) * v));
    GeodesicPath path = make_path(m, a, b, length, std::move(raw), true);
    return ShootingResult{to_std(v), std::move(path), iters, residual};
}

GeodesicPath solve_bvp(const ManifoldSpec& m, const Point& a, const Point& b,
                       const ShootingConfig& cfg) {
    return shoot(m, a, b, cfg).path;
}

double chart_length_estimate(const ManifoldSpec& m, const Point& a, const Point& b) {
    require_chart(m, "chart_length_estimate");
    const Eigen::VectorXd x0 = to_eigen(a.coords);
    const Eigen::VectorXd x1 = to_eigen(b.coords);
    const Eigen::VectorXd d = x1 - x0;
    if (d.norm() == 0.0) return 0.0;
    // Composite Simpson over the chord.
    const int intervals = 32;
    double sum = 0.0;
    auto speed = [&](double t) {
        const Eigen::VectorXd x = x0 + t * d;
        require_in_domain(m, x);
        return std::sqrt(d.dot(m.metric_at(x) * d));
    };
    const double h = 1.0 / intervals;
    for (int i = 0; i < intervals; ++i) {
        const double t0 = i * h;
        sum += (h / 6.0) * (speed(t0) + 4.0 * speed(t0 + 0.5 * h) + speed(t0 + h));
    }
    return sum;
}

}  // namespace geoloop
