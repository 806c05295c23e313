#include <doctest.h>

#include <cmath>
#include <sstream>

#include "helmscatter/geometry.hpp"
#include "helmscatter/spectral.hpp"

using namespace helm;

namespace {

// spectral derivative of curve node data along the parameter
Eigen::Matrix2Xd param_deriv(const Eigen::Matrix2Xd& v) {
    const int N = static_cast<int>(v.cols());
    Eigen::Matrix2Xd out(2, N);
    for (int c = 0; c < 2; ++c) {
        CVec row = v.row(c).transpose().cast<Complex>();
        out.row(c) = mult_deriv(1).apply(row).real().transpose();
    }
    return out;
}

} // namespace

TEST_CASE("unit circle nodes, curvature convention kappa = +1") {
    const Curve c = reparametrize_arclength(make_shape("circle"), 64);
    const Eigen::Matrix2d q = rot_q();
    for (int j = 0; j < c.n(); ++j) {
        CHECK(c.x.col(j).norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.kappa[j] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(c.x.col(j).dot(c.nrm.col(j)) == doctest::Approx(1.0).epsilon(1e-12));
        // t = -Q n
        CHECK((c.tang.col(j) + q * c.nrm.col(j)).norm() < 1e-12);
        CHECK(c.jac[j] == doctest::Approx(1.0));
    }
}

TEST_CASE("orientation flip negates the curvature") {
    ParametricCurve cw;
    cw.pos = [](double t) { return Vec2(std::cos(-t), std::sin(-t)); };
    cw.d1 = [](double t) { return Vec2(std::sin(-t), -std::cos(-t)); };
    cw.d2 = [](double t) { return Vec2(-std::cos(-t), -std::sin(-t)); };
    const Curve c = reparametrize_arclength(cw, 32);
    for (int j = 0; j < c.n(); ++j)
        CHECK(c.kappa[j] == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("shape normalization constants") {
    // the kite speed integrates to 2 pi times this factor
    CHECK(shape_scale("kite") == doctest::Approx(1.48396).epsilon(2e-5));
    CHECK(shape_scale("cavity") == doctest::Approx(56.2295).epsilon(2e-5));
    CHECK_THROWS_AS(make_shape("pentagon"), ConfigError);
}

TEST_CASE("kite arc-length parametrization is unit speed") {
    // N large enough that the spectral derivative resolves the kite
    const int N = 512;
    const Curve c = reparametrize_arclength(make_shape("kite"), N);
    // the arc-length map is resolved to ~1e-5 here; the inversion tolerance
    // limits the node accuracy, so the checks are loose
    const Eigen::Matrix2Xd xp = param_deriv(c.x);
    for (int j = 0; j < N; ++j) {
        CHECK(xp.col(j).norm() == doctest::Approx(1.0).epsilon(1e-4));
        CHECK((xp.col(j) - c.tang.col(j)).norm() < 1e-3);
    }
    // dt/ds = -kappa n
    const Eigen::Matrix2Xd tp = param_deriv(c.tang);
    for (int j = 0; j < N; ++j)
        CHECK(-c.nrm.col(j).dot(tp.col(j)) ==
              doctest::Approx(c.kappa[j]).epsilon(1e-2));
}

TEST_CASE("graded polygon meshes") {
    const int N = 96;
    for (const std::string shape : {"square", "lshape"}) {
        const Curve c = graded_nodes(shape, 3, N);
        REQUIRE(c.n() == N);
        // nodes avoid the corners and the jacobian stays positive
        for (int j = 0; j < N; ++j) CHECK(c.jac[j] > 0.0);
        // cubic clustering of the spacing at corners
        double minsp = 1e9;
        for (int j = 0; j < N; ++j) {
            const int jn = (j + 1) % N;
            minsp = std::min(minsp, (c.x.col(jn) - c.x.col(j)).norm());
        }
        const double h = 2.0 * M_PI / N;
        CHECK(minsp < 10.0 * h * h * h);
        CHECK(minsp > 0.0);
    }
    CHECK_THROWS_AS(graded_nodes("lshape", 3, 100), ConfigError);
    CHECK_THROWS_AS(graded_nodes("square", 1, 96), ConfigError);
}

TEST_CASE("warp derivative vanishes to order p-1 at the re-entrant corner") {
    const GradedMesh gm = graded_mesh_for("lshape", 3);
    // the re-entrant corner (0, 0) sits at cumulative arc length 4a = pi
    const double corner = gm.corners[3];
    CHECK(corner == doctest::Approx(M_PI));
    CHECK(gm.warp(corner) == doctest::Approx(corner).epsilon(1e-14));
    for (double h : {1e-2, 1e-3}) {
        const double fd = (gm.warp(corner + h) - gm.warp(corner - h)) / (2 * h);
        CHECK(std::abs(fd) < 40.0 * h * h); // w' ~ h^2 near the corner
    }
}

TEST_CASE("curve csv export") {
    const Curve c = reparametrize_arclength(make_shape("circle"), 8);
    std::ostringstream os;
    c.write_csv(os);
    const std::string s = os.str();
    CHECK(s.rfind("# helmscatter-v1\n", 0) == 0);
    CHECK(s.find("s,x1,x2,t1,t2,n1,n2,kappa") != std::string::npos);
}
