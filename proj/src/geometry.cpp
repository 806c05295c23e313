#include "helmscatter/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace helm {

namespace {

struct RawShape {
    std::function<Vec2(double)> pos, d1, d2;
};

RawShape raw_shape(const std::string& name, const std::vector<double>& params) {
    if (name == "circle") {
        double r = params.empty() ? 1.0 : params[0];
        if (r <= 0.0) throw ConfigError("circle: radius must be positive");
        return {
            [r](double t) { return Vec2(r * std::cos(t), r * std::sin(t)); },
            [r](double t) { return Vec2(-r * std::sin(t), r * std::cos(t)); },
            [r](double t) { return Vec2(-r * std::cos(t), -r * std::sin(t)); },
        };
    }
    if (name == "kite") {
        return {
            [](double t) {
                return Vec2(std::cos(t) + 0.65 * std::cos(2 * t) - 0.65,
                            1.5 * std::sin(t));
            },
            [](double t) {
                return Vec2(-std::sin(t) - 1.3 * std::sin(2 * t),
                            1.5 * std::cos(t));
            },
            [](double t) {
                return Vec2(-std::cos(t) - 2.6 * std::cos(2 * t),
                            -1.5 * std::sin(t));
            },
        };
    }
    if (name == "cavity") {
        return {
            [](double t) {
                return Vec2(12 * std::cos(t) + 24 * std::cos(2 * t),
                            28 * std::sin(t) + 17 * std::sin(2 * t) +
                                18 * std::sin(3 * t) - 2 * std::sin(4 * t));
            },
            [](double t) {
                return Vec2(-12 * std::sin(t) - 48 * std::sin(2 * t),
                            28 * std::cos(t) + 34 * std::cos(2 * t) +
                                54 * std::cos(3 * t) - 8 * std::cos(4 * t));
            },
            [](double t) {
                return Vec2(-12 * std::cos(t) - 96 * std::cos(2 * t),
                            -28 * std::sin(t) - 68 * std::sin(2 * t) -
                                162 * std::sin(3 * t) + 32 * std::sin(4 * t));
            },
        };
    }
    throw ConfigError("unknown smooth shape: " + name);
}

double raw_length(const RawShape& rs) {
    const int m = 4096;
    double len = 0.0;
    for (int i = 0; i < m; ++i) len += rs.d1(2.0 * M_PI * i / m).norm();
    return len * 2.0 * M_PI / m;
}

// periodic cumulative arc length, evaluated from the Fourier series of the
// speed sampled on a fine grid
struct ArcLength {
    double c0 = 0.0;
    std::vector<int> modes;
    std::vector<Complex> coef; // nonzero Fourier coefficients of the speed

    explicit ArcLength(const std::function<double(double)>& speed) {
        const int m = 1024;
        std::vector<double> g(m);
        for (int i = 0; i < m; ++i) g[i] = speed(2.0 * M_PI * i / m);
        for (int n = -m / 2 + 1; n < m / 2; ++n) {
            Complex c = 0.0;
            for (int i = 0; i < m; ++i)
                c += g[i] * std::exp(Complex(0.0, -n * 2.0 * M_PI * i / m));
            c /= double(m);
            if (n == 0) {
                c0 = c.real();
            } else if (std::abs(c) > 1e-17) {
                modes.push_back(n);
                coef.push_back(c);
            }
        }
    }

    double operator()(double t) const {
        Complex acc = 0.0;
        for (size_t j = 0; j < modes.size(); ++j) {
            const double n = modes[j];
            acc += coef[j] * (std::exp(Complex(0.0, n * t)) - 1.0) /
                   Complex(0.0, n);
        }
        return c0 * t + acc.real();
    }
};

} // namespace

double shape_scale(const std::string& name, const std::vector<double>& params) {
    return raw_length(raw_shape(name, params)) / (2.0 * M_PI);
}

ParametricCurve make_shape(const std::string& name,
                           const std::vector<double>& params) {
    RawShape rs = raw_shape(name, params);
    const double inv = 1.0 / shape_scale(name, params);
    ParametricCurve pc;
    pc.pos = [rs, inv](double t) { return Vec2(inv * rs.pos(t)); };
    pc.d1 = [rs, inv](double t) { return Vec2(inv * rs.d1(t)); };
    pc.d2 = [rs, inv](double t) { return Vec2(inv * rs.d2(t)); };
    return pc;
}

Curve sample_curve(const ParametricCurve& pc, int N) {
    if (N < 4 || N % 2 != 0)
        throw ConfigError("sample_curve: N must be even and >= 4");
    Curve c;
    c.s.resize(N);
    c.s_arc.resize(N);
    c.x.resize(2, N);
    c.tang.resize(2, N);
    c.nrm.resize(2, N);
    c.jac.resize(N);
    c.kappa.resize(N);
    const ArcLength arc([&](double t) { return pc.d1(t).norm(); });
    const Eigen::Matrix2d q = rot_q();
    for (int j = 0; j < N; ++j) {
        const double t = 2.0 * M_PI * j / N;
        const Vec2 d1 = pc.d1(t);
        const Vec2 d2 = pc.d2(t);
        const double sp = d1.norm();
        if (sp <= 0.0) throw DomainError("sample_curve: vanishing speed");
        c.s[j] = t;
        c.s_arc[j] = arc(t);
        c.x.col(j) = pc.pos(t);
        c.tang.col(j) = d1 / sp;
        c.nrm.col(j) = q * c.tang.col(j);
        c.jac[j] = sp;
        c.kappa[j] = (d1.x() * d2.y() - d1.y() * d2.x()) / (sp * sp * sp);
    }
    return c;
}

Curve reparametrize_arclength(const ParametricCurve& pc, int N) {
    if (N < 4 || N % 2 != 0)
        throw ConfigError("reparametrize_arclength: N must be even and >= 4");
    ArcLength arc([&](double t) { return pc.d1(t).norm(); });
    if (std::abs(arc.c0 - 1.0) > 1e-8)
        throw ConfigError("curve is not normalized to length 2pi");

    Curve c;
    c.s.resize(N);
    c.x.resize(2, N);
    c.tang.resize(2, N);
    c.nrm.resize(2, N);
    c.jac = RVec::Ones(N);
    c.kappa.resize(N);
    c.s_arc = RVec::LinSpaced(N, 0.0, 2.0 * M_PI * (N - 1) / N);

    const Eigen::Matrix2d q = rot_q();
    for (int j = 0; j < N; ++j) {
        const double target = 2.0 * M_PI * j / N;
        double lo = 0.0, hi = 2.0 * M_PI, t = target;
        for (int it = 0; it < 100; ++it) {
            const double f = arc(t) - target;
            if (f > 0)
                hi = t;
            else
                lo = t;
            const double g = pc.d1(t).norm();
            double tn = t - f / g;
            if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
            if (std::abs(tn - t) < 1e-14) {
                t = tn;
                break;
            }
            t = tn;
        }
        const Vec2 d1 = pc.d1(t);
        const Vec2 d2 = pc.d2(t);
        const double sp = d1.norm();
        c.s[j] = target;
        c.x.col(j) = pc.pos(t);
        c.tang.col(j) = d1 / sp;
        c.nrm.col(j) = q * c.tang.col(j);
        c.kappa[j] = (d1.x() * d2.y() - d1.y() * d2.x()) / (sp * sp * sp);
    }
    return c;
}

std::vector<Vec2> polygon_vertices(const std::string& shape) {
    const double a = M_PI / 4.0;
    if (shape == "square")
        return {Vec2(-a, -a), Vec2(a, -a), Vec2(a, a), Vec2(-a, a)};
    if (shape == "lshape")
        return {Vec2(-a, -a), Vec2(a, -a), Vec2(a, 0), Vec2(0, 0), Vec2(0, a), Vec2(-a, a)};
    throw ConfigError("unknown polygonal shape: " + shape);
}

double GradedMesh::warp(double u) const {
    u = std::fmod(u, 2.0 * M_PI);
    if (u < 0) u += 2.0 * M_PI;
    size_t e = 0;
    while (e + 1 < corners.size() && corners[e + 1] <= u) ++e;
    const double a = corners[e];
    const double b = (e + 1 < corners.size()) ? corners[e + 1] : 2.0 * M_PI;
    const double xi = (u - a) / (b - a);
    const double num = std::pow(xi, p);
    const double den = num + std::pow(1.0 - xi, p);
    return a + (b - a) * num / den;
}

double GradedMesh::warp_deriv(double u) const {
    u = std::fmod(u, 2.0 * M_PI);
    if (u < 0) u += 2.0 * M_PI;
    size_t e = 0;
    while (e + 1 < corners.size() && corners[e + 1] <= u) ++e;
    const double a = corners[e];
    const double b = (e + 1 < corners.size()) ? corners[e + 1] : 2.0 * M_PI;
    const double xi = (u - a) / (b - a);
    const double den = std::pow(xi, p) + std::pow(1.0 - xi, p);
    return p * std::pow(xi, p - 1) * std::pow(1.0 - xi, p - 1) / (den * den);
}

GradedMesh graded_mesh_for(const std::string& shape, int p) {
    if (p < 2) throw ConfigError("grading degree must be >= 2");
    const std::vector<Vec2> v = polygon_vertices(shape);
    GradedMesh gm;
    gm.p = p;
    gm.corners.push_back(0.0);
    for (size_t i = 0; i + 1 < v.size(); ++i)
        gm.corners.push_back(gm.corners.back() + (v[i + 1] - v[i]).norm());
    const double total =
        gm.corners.back() + (v.front() - v.back()).norm();
    if (std::abs(total - 2.0 * M_PI) > 1e-12)
        throw ConfigError("polygon perimeter is not 2pi");
    return gm;
}

Curve graded_nodes(const std::string& shape, int p, int N) {
    const std::vector<Vec2> v = polygon_vertices(shape);
    const int ns = static_cast<int>(v.size());
    if (N <= 0 || N % 2 != 0 || N % ns != 0)
        throw ConfigError("graded_nodes: N must be even and a multiple of the side count");
    GradedMesh gm = graded_mesh_for(shape, p);

    Curve c;
    c.offset_grid = true;
    c.s.resize(N);
    c.s_arc.resize(N);
    c.x.resize(2, N);
    c.tang.resize(2, N);
    c.nrm.resize(2, N);
    c.jac.resize(N);
    c.kappa = RVec::Zero(N);

    const Eigen::Matrix2d q = rot_q();
    for (int j = 0; j < N; ++j) {
        const double u = 2.0 * M_PI * (j + 0.5) / N;
        const double s = gm.warp(u);
        size_t e = 0;
        while (e + 1 < gm.corners.size() && gm.corners[e + 1] <= s) ++e;
        const Vec2 p0 = v[e];
        const Vec2 p1 = v[(e + 1) % v.size()];
        const Vec2 dir = (p1 - p0).normalized();
        c.s[j] = u;
        c.s_arc[j] = s;
        c.x.col(j) = p0 + (s - gm.corners[e]) * dir;
        c.tang.col(j) = dir;
        c.nrm.col(j) = q * dir;
        c.jac[j] = gm.warp_deriv(u);
        if (!(c.jac[j] > 0.0))
            throw ConfigError(
                "graded_nodes: node fell on a corner; choose N so that no "
                "(j + 1/2)/N equals a corner fraction of the perimeter");
    }
    return c;
}

double Curve::max_curvature() const {
    return kappa.size() ? kappa.cwiseAbs().maxCoeff() : 0.0;
}

void Curve::write_csv(std::ostream& os) const {
    os << "# helmscatter-v1\n";
    os << "s,x1,x2,t1,t2,n1,n2,kappa\n";
    char buf[256];
    for (int j = 0; j < n(); ++j) {
        std::snprintf(buf, sizeof(buf),
                      "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                      s[j], x(0, j), x(1, j), tang(0, j), tang(1, j),
                      nrm(0, j), nrm(1, j), kappa[j]);
        os << buf;
    }
}

} // namespace helm
