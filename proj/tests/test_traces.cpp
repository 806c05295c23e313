#include <doctest.h>

#include <random>

#include "helmscatter/specfun.hpp"
#include "helmscatter/spectral.hpp"
#include "helmscatter/traces.hpp"

using namespace helm;

namespace {

CVec random_density(int N, std::mt19937& rng) {
    std::normal_distribution<double> g;
    CVec v(N);
    for (int j = 0; j < N; ++j) v[j] = Complex(g(rng), g(rng));
    return v;
}

} // namespace

TEST_CASE("hessian traces satisfy the Laplacian and symmetry identities") {
    const int N = 128;
    const double k = 2.0;
    for (const std::string shape : {"circle", "kite"}) {
        CAPTURE(shape);
        const Curve c = sample_curve(make_shape(shape), N);
        const BioSet b = assemble_bios(Complex(k, 0.0), c);
        const HessTraces hs = hess_traces_sl(b, c);
        const HessTraces hd = hess_traces_dl(b, c);

        // nn + tt is the full Laplacian trace, so it must reproduce
        // -k^2 times the boundary trace of the potential
        const CMat sl_id = hs.nn + hs.tt + k * k * b.v;
        const CMat dl_id = hd.nn + hd.tt +
                           k * k * (0.5 * CMat::Identity(N, N) + b.kop);

        std::mt19937 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            const CVec phi = random_density(N, rng);
            const double scale = phi.norm();
            CHECK((sl_id * phi).norm() / scale < 1e-8);
            CHECK((dl_id * phi).norm() / scale < 1e-8);
            CHECK(((hs.nt - hs.tn) * phi).norm() / scale < 1e-8);
            CHECK(((hd.nt - hd.tn) * phi).norm() / scale < 1e-8);
        }
    }
}

TEST_CASE("hessian traces on the circle against separation of variables") {
    const int N = 128;
    const double k = 2.0;
    const Complex z(k, 0.0);
    const Curve c = sample_curve(make_shape("circle"), N);
    const BioSet b = assemble_bios(z, c);
    const HessTraces hs = hess_traces_sl(b, c);
    const HessTraces hd = hess_traces_dl(b, c);

    for (int n : {0, 1, 3, -4}) {
        CAPTURE(n);
        // a mode density e^{ins} radiates a_n H_n(kr) e^{in theta}; the
        // second derivatives at r = 1 give the block references below
        const Complex h = hankel1_n(n, z);
        const Complex hd1 = 0.5 * (hankel1_n(n - 1, z) - hankel1_n(n + 1, z));
        const Complex hd2 = 0.25 * (hankel1_n(n - 2, z) - 2.0 * h +
                                    hankel1_n(n + 2, z));
        const Complex a_sl = I * (M_PI / 2.0) * bessel_jn(n, k);
        const Complex a_dl = I * (M_PI * k / 2.0) * 0.5 *
                             (bessel_jn(n - 1, k) - bessel_jn(n + 1, k));
        const Complex ref_nn = k * k * hd2;
        const Complex ref_tt = -double(n * n) * h + k * hd1;
        const Complex ref_nt = I * double(n) * (k * hd1 - h);

        const CVec e = mode_vector(n, N);
        const double rt = std::sqrt(double(N));
        CHECK((hs.nn * e - a_sl * ref_nn * e).norm() / rt < 1e-10);
        CHECK((hs.tt * e - a_sl * ref_tt * e).norm() / rt < 1e-10);
        CHECK((hs.nt * e - a_sl * ref_nt * e).norm() / rt < 1e-10);
        CHECK((hd.nn * e - a_dl * ref_nn * e).norm() / rt < 1e-10);
        CHECK((hd.tt * e - a_dl * ref_tt * e).norm() / rt < 1e-10);
        CHECK((hd.nt * e - a_dl * ref_nt * e).norm() / rt < 1e-10);
    }
}

TEST_CASE("gradient traces on the circle against separation of variables") {
    const int N = 128;
    const double k = 2.0;
    const Curve c = sample_curve(make_shape("circle"), N);
    const BioSet b = assemble_bios(Complex(k, 0.0), c);
    const GradTraces g = grad_traces(b, c);

    // exterior traces: dn SL = -1/2 + Kt, dn DL = W,
    // dt SL = d/dt V, dt DL = d/dt (1/2 + K)
    const CMat ref_dn_sl = -0.5 * CMat::Identity(N, N) + b.kt;
    CHECK((g.dn_sl - ref_dn_sl).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((g.dn_dl - b.w).cwiseAbs().maxCoeff() < 1e-9);

    for (int n : {-5, 1, 4}) {
        const CVec e = mode_vector(n, N);
        const Complex in = I * double(n);
        CHECK((g.dt_sl * e - in * (b.v * e)).norm() / std::sqrt(N) < 1e-9);
        const CVec dl_trace = 0.5 * e + b.kop * e;
        CHECK((g.dt_dl * e - in * dl_trace).norm() / std::sqrt(N) < 1e-9);
    }
}

TEST_CASE("spectral arc-length derivative differentiates a smooth function") {
    const int N = 64;
    const Curve c = sample_curve(make_shape("kite"), N);
    const CMat d = deriv_matrix(c);
    CVec f(N), df(N);
    for (int j = 0; j < N; ++j) {
        f[j] = std::sin(3.0 * c.s[j]);
        // deriv_matrix differentiates along arc length, so the parameter
        // derivative picks up the jacobian
        df[j] = 3.0 * std::cos(3.0 * c.s[j]) / c.jac[j];
    }
    CHECK((d * f - df).cwiseAbs().maxCoeff() < 1e-10);
}
