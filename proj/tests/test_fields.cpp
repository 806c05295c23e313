#include <doctest.h>

#include "helmscatter/fields.hpp"

using namespace helm;

TEST_CASE("plane wave solves the Navier equation") {
    const ElasticMedium m = make_medium(2.0, 1.0, 3.0, 1.0);
    const IncidentField f =
        plane_wave(m, Vec2(0.0, -1.0), Vec2(1.0, 0.0));
    for (const Vec2& x : {Vec2(0.3, 0.1), Vec2(-1.2, 2.0), Vec2(5.0, -4.0)})
        CHECK(navier_residual(f, m, x) < 1e-6);
}

TEST_CASE("plane wave value and carriers at the origin") {
    const ElasticMedium m = make_medium(2.0, 1.0, 3.0, 1.0);
    const Vec2 d(0.0, -1.0), p(1.0, 0.0);
    const IncidentField f = plane_wave(m, d, p);
    // d.p = 0 so the P part vanishes; S part rides on Qd = (-1, 0)
    const CVec2 u0 = f.u(Vec2(0.0, 0.0));
    CHECK(std::abs(u0[0] - Complex(-1.0 / m.mu, 0.0)) < 1e-14);
    CHECK(std::abs(u0[1]) < 1e-14);

    // gradient consistency by finite differences
    const double h = 1e-6;
    const Vec2 x(0.4, -0.7);
    const Eigen::Matrix2cd g = f.grad(x);
    for (int j = 0; j < 2; ++j) {
        Vec2 e = Vec2::Zero();
        e[j] = h;
        const CVec2 fd = (f.u(x + e) - f.u(x - e)) / (2.0 * h);
        CHECK(std::abs(g(0, j) - fd[0]) < 1e-7);
        CHECK(std::abs(g(1, j) - fd[1]) < 1e-7);
    }
}

TEST_CASE("plane wave rejects non-unit direction") {
    const ElasticMedium m = make_medium(2.0, 1.0, 3.0, 1.0);
    CHECK_THROWS_AS(plane_wave(m, Vec2(0.0, -2.0), Vec2(1.0, 0.0)),
                    ConfigError);
}

TEST_CASE("traction of a linear displacement field") {
    const ElasticMedium m = make_medium(2.0, 1.0, 1.0, 1.0);
    IncidentField f;
    f.u = [](const Vec2& x) { return CVec2(Complex(x[0], 0.0), 0.0); };
    f.grad = [](const Vec2&) {
        Eigen::Matrix2cd g = Eigen::Matrix2cd::Zero();
        g(0, 0) = 1.0;
        return g;
    };
    // sigma = diag(lambda + 2 mu, lambda)
    const CVec2 t1 = traction(f, m, Vec2(0.0, 0.0), Vec2(1.0, 0.0));
    CHECK(std::abs(t1[0] - Complex(m.lambda + 2.0 * m.mu, 0.0)) < 1e-14);
    CHECK(std::abs(t1[1]) < 1e-14);
    const CVec2 t2 = traction(f, m, Vec2(0.0, 0.0), Vec2(0.0, 1.0));
    CHECK(std::abs(t2[0]) < 1e-14);
    CHECK(std::abs(t2[1] - Complex(m.lambda, 0.0)) < 1e-14);
}

TEST_CASE("point source solves the Navier equation away from the source") {
    const ElasticMedium m = make_medium(2.0, 1.0, 10.0, 1.0);
    const IncidentField f = point_source(m, Vec2(0.1, 0.0));
    for (const Vec2& x : {Vec2(1.5, 0.3), Vec2(-2.0, 1.0), Vec2(0.5, -3.0)})
        CHECK(navier_residual(f, m, x) < 1e-5);
}

TEST_CASE("far field direction carriers are orthogonal") {
    const Vec2 xhat(std::cos(0.7), std::sin(0.7));
    const CVec2 up = farfield_p_dir(Complex(1.0, 2.0), 3.0, xhat);
    const CVec2 us = farfield_s_dir(Complex(1.0, 2.0), 3.0, xhat);
    // P rides on xhat, S on Q xhat
    CHECK(std::abs(up[0] * xhat[1] - up[1] * xhat[0]) < 1e-14);
    CHECK(std::abs(us[0] * xhat[0] + us[1] * xhat[1]) < 1e-14);
}
