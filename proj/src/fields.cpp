#include "helmscatter/fields.hpp"

#include <cmath>

#include "helmscatter/specfun.hpp"

namespace helm {

namespace {

// gradient and Hessian of the Helmholtz fundamental solution
// phi_k(x) = (i/4) H0(k |x|)
CVec2 phi_grad(double k, const Vec2& d) {
    const double r = d.norm();
    const Vec2 rh = d / r;
    const Complex h1 = hankel1_1(Complex(k * r, 0.0));
    return (-I * 0.25 * k * h1) * rh.cast<Complex>();
}

Eigen::Matrix2cd phi_hess(double k, const Vec2& d) {
    const double r = d.norm();
    const Vec2 rh = d / r;
    const Complex z(k * r, 0.0);
    const Complex h0 = hankel1_0(z), h1 = hankel1_1(z);
    const Complex h1p = h0 - h1 / z;
    const Eigen::Matrix2d pr = rh * rh.transpose();
    const Eigen::Matrix2d pt = Eigen::Matrix2d::Identity() - pr;
    return -I * 0.25 * k *
           (k * h1p * pr.cast<Complex>() + (h1 / r) * pt.cast<Complex>());
}

} // namespace

CVec2 traction(const IncidentField& f, const ElasticMedium& m, const Vec2& x,
               const Vec2& n) {
    const Eigen::Matrix2cd g = f.grad(x);
    const Complex div = g(0, 0) + g(1, 1);
    const Eigen::Matrix2cd sigma =
        m.lambda * div * Eigen::Matrix2cd::Identity() +
        m.mu * (g + g.transpose());
    return sigma * n.cast<Complex>();
}

IncidentField plane_wave(const ElasticMedium& m, const Vec2& d, const Vec2& p) {
    if (std::abs(d.norm() - 1.0) > 1e-12)
        throw ConfigError("plane_wave: direction must be a unit vector");
    const double kp = m.kp(), ks = m.ks();
    const Vec2 qd = rot_q() * d;
    const Complex as = (d.dot(rot_q() * p)) / m.mu;
    const Complex ap = d.dot(p) / (m.lambda + 2.0 * m.mu);
    IncidentField f;
    f.u = [=](const Vec2& x) -> CVec2 {
        const Complex es = std::exp(I * ks * x.dot(d));
        const Complex ep = std::exp(I * kp * x.dot(d));
        return as * es * qd.cast<Complex>() + ap * ep * d.cast<Complex>();
    };
    f.grad = [=](const Vec2& x) -> Eigen::Matrix2cd {
        const Complex es = std::exp(I * ks * x.dot(d));
        const Complex ep = std::exp(I * kp * x.dot(d));
        return (as * es * I * ks) * (qd.cast<Complex>() * d.cast<Complex>().transpose()) +
               (ap * ep * I * kp) * (d.cast<Complex>() * d.cast<Complex>().transpose());
    };
    return f;
}

IncidentField point_source(const ElasticMedium& m, const Vec2& z) {
    const double kp = m.kp(), ks = m.ks();
    const Eigen::Matrix2cd q = rot_q().cast<Complex>();
    IncidentField f;
    f.u = [=](const Vec2& x) -> CVec2 {
        const Vec2 d = x - z;
        return phi_grad(kp, d) + q * phi_grad(ks, d);
    };
    f.grad = [=](const Vec2& x) -> Eigen::Matrix2cd {
        const Vec2 d = x - z;
        return phi_hess(kp, d) + q * phi_hess(ks, d);
    };
    return f;
}

CVec2 farfield_p_dir(Complex up_inf, double kp, const Vec2& xhat) {
    return (I * kp * up_inf) * xhat.cast<Complex>();
}

CVec2 farfield_s_dir(Complex us_inf, double ks, const Vec2& xhat) {
    return (I * ks * us_inf) * (rot_q() * xhat).cast<Complex>();
}

double navier_residual(const IncidentField& f, const ElasticMedium& m,
                       const Vec2& x, double h) {
    // mu lap u + (lambda + mu) grad div u + omega^2 u
    const Vec2 e1(1, 0), e2(0, 1);
    auto lap = [&](const Vec2& y) -> CVec2 {
        return (f.u(y + h * e1) + f.u(y - h * e1) + f.u(y + h * e2) +
                f.u(y - h * e2) - 4.0 * f.u(y)) /
               (h * h);
    };
    auto divu = [&](const Vec2& y) -> Complex {
        const Eigen::Matrix2cd g = f.grad(y);
        return g(0, 0) + g(1, 1);
    };
    CVec2 gd;
    gd[0] = (divu(x + h * e1) - divu(x - h * e1)) / (2 * h);
    gd[1] = (divu(x + h * e2) - divu(x - h * e2)) / (2 * h);
    const CVec2 res = m.mu * lap(x) + (m.lambda + m.mu) * gd +
                      m.omega * m.omega * f.u(x);
    const double scale = m.omega * m.omega * f.u(x).norm() + 1e-30;
    return res.norm() / scale;
}

} // namespace helm
