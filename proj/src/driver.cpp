#include "helmscatter/driver.hpp"

#include <cmath>
#include <numeric>

namespace helm {

bool is_polygon(const std::string& shape) {
    return shape == "square" || shape == "lshape";
}

int resolution_for(const ProblemSpec& ps) {
    if (ps.n_override > 0) return ps.n_override;
    const double ks = ps.omega / std::sqrt(ps.mu);
    int n = static_cast<int>(std::lround(ps.ppw * ks));
    if (n % 2) ++n;
    n = std::max(n, 64) * ps.refine;
    if (is_polygon(ps.shape)) {
        // Multiple of the side count for graded_nodes, and of 8 so the
        // half-offset grid cannot land a node exactly on a corner (corner
        // positions are multiples of an eighth of the perimeter).
        const int sides =
            static_cast<int>(polygon_vertices(ps.shape).size());
        const int unit = std::lcm(sides, 8);
        n = ((n + unit - 1) / unit) * unit;
    }
    return n;
}

Curve curve_for(const ProblemSpec& ps, int N) {
    if (is_polygon(ps.shape)) return graded_nodes(ps.shape, ps.grading_p, N);
    return sample_curve(make_shape(ps.shape), N);
}

ElasticMedium medium_for(const ProblemSpec& ps, const Curve& c) {
    return make_medium(ps.lambda, ps.mu, ps.omega, c.max_curvature());
}

bool point_inside(const Curve& c, const Vec2& x) {
    // winding of the node polygon around x
    double total = 0.0;
    for (int j = 0; j < c.n(); ++j) {
        const Vec2 a = c.x.col(j) - x;
        const Vec2 b = c.x.col((j + 1) % c.n()) - x;
        total += std::atan2(a.x() * b.y() - a.y() * b.x(), a.dot(b));
    }
    return std::abs(total) > M_PI;
}

IncidentField incident_for(const ProblemSpec& ps, const ElasticMedium& m,
                           const Curve& c) {
    if (ps.incident == "plane") {
        const double th = ps.direction_deg * M_PI / 180.0;
        const double ph = ps.polarization_deg * M_PI / 180.0;
        return plane_wave(m, Vec2(std::cos(th), std::sin(th)),
                          Vec2(std::cos(ph), std::sin(ph)));
    }
    if (ps.incident == "point") {
        if (!point_inside(c, ps.source))
            throw DomainError("point source must lie inside the scatterer");
        double dist = 1e30;
        for (int j = 0; j < c.n(); ++j)
            dist = std::min(dist, (c.x.col(j) - ps.source).norm());
        if (dist < 0.1)
            throw DomainError("point source too close to the boundary");
        return point_source(m, ps.source);
    }
    throw ConfigError("unknown incident field kind: " + ps.incident);
}

SolveOutput solve_problem(const ProblemSpec& ps) {
    SolveOutput so;
    so.spec = ps;
    so.N = resolution_for(ps);
    so.curve = curve_for(ps, so.N);
    const ElasticMedium m = medium_for(ps, so.curve);
    so.assembly = assemble_formulation(ps.formulation, m, so.curve);
    const IncidentField inc = incident_for(ps, m, so.curve);
    so.rhs = assemble_rhs(so.assembly.id.bc, inc, m, so.curve);
    const auto& op = so.assembly.op;
    so.krylov =
        gmres([&op](const CVec& v) { return op.apply(v); }, so.rhs, ps.tol,
              ps.maxit);
    so.phi = op.apply_regularizer(so.krylov.x);
    return so;
}

Eigen::Matrix2Xcd scattered_field(const SolveOutput& so,
                                  const std::vector<Vec2>& pts) {
    const int N = so.N;
    const ElasticMedium& m = so.assembly.medium;
    const Complex kp(m.kp(), 0.0), ks(m.ks(), 0.0);
    const CVec phip = so.phi.head(N), phis = so.phi.tail(N);
    const CVec slp = so.assembly.cp * phip;
    const CVec sls = so.assembly.cs * phis;

    Eigen::Matrix2Xcd gp =
        eval_potential_grad(Layer::DL, kp, so.curve, phip, pts);
    gp += eval_potential_grad(Layer::SL, kp, so.curve, slp, pts);
    Eigen::Matrix2Xcd gs =
        eval_potential_grad(Layer::DL, ks, so.curve, phis, pts);
    gs += eval_potential_grad(Layer::SL, ks, so.curve, sls, pts);

    const Eigen::Matrix2cd q = rot_q().cast<Complex>();
    return gp + q * gs;
}

std::pair<CVec, CVec> far_field_ps(const SolveOutput& so,
                                   const std::vector<double>& angles) {
    const int N = so.N;
    const ElasticMedium& m = so.assembly.medium;
    const CVec phip = so.phi.head(N), phis = so.phi.tail(N);
    CVec up = far_field(Layer::DL, m.kp(), so.curve, phip, angles);
    up += far_field(Layer::SL, m.kp(), so.curve,
                    CVec(so.assembly.cp * phip), angles);
    CVec us = far_field(Layer::DL, m.ks(), so.curve, phis, angles);
    us += far_field(Layer::SL, m.ks(), so.curve,
                    CVec(so.assembly.cs * phis), angles);
    return {up, us};
}

CVec spectrum_of(const SolveOutput& so) {
    return spectrum(so.assembly.op.flatten());
}

} // namespace helm
