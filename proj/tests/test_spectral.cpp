#include <doctest.h>

#include "helmscatter/spectral.hpp"

using namespace helm;

TEST_CASE("basic multiplier actions on pure modes") {
    const int N = 64;
    const CVec e3 = mode_vector(3, N);
    const CVec em2 = mode_vector(-2, N);
    const CVec e0 = mode_vector(0, N);

    CHECK((mult_deriv(1).apply(e3) - Complex(0, 3) * e3).norm() < 1e-12);
    CHECK((mult_deriv(-1).apply(em2) - em2 / Complex(0, -2)).norm() < 1e-12);
    CHECK((mult_hilbert().apply(e0) - I * e0).norm() < 1e-12);
    CHECK((mult_hilbert().apply(em2) + I * em2).norm() < 1e-12);
    CHECK((mult_lambda().apply(em2) - 0.5 * em2).norm() < 1e-12);
    CHECK((mult_mean().apply(e3)).norm() < 1e-12);
    CHECK((mult_mean().apply(e0) - e0).norm() < 1e-12);
}

TEST_CASE("D1 D-1 = I - J") {
    const int N = 32;
    CVec v(N);
    for (int j = 0; j < N; ++j)
        v[j] = Complex(std::sin(1.7 * j + 0.3), std::cos(0.9 * j));
    const CVec lhs = mult_deriv(1).apply(mult_deriv(-1).apply(v));
    const CVec rhs = v - mult_mean().apply(v);
    CHECK((lhs - rhs).norm() < 1e-12);
}

TEST_CASE("offset grids see the same multiplier action") {
    const int N = 32;
    const CVec e5 = mode_vector(5, N, true);
    CHECK((mult_deriv(1).apply(e5) - Complex(0, 5) * e5).norm() < 1e-12);
}

TEST_CASE("dense multiplier matrix and right multiplication agree") {
    const int N = 24;
    const CMat d1 = multiplier_matrix(mult_deriv(1), N);
    CMat a = CMat::Random(N, N);
    const CMat prod = a * d1;
    const CMat fast = mult_right(a, mult_deriv(1));
    CHECK((prod - fast).norm() < 1e-10);
    const CMat lhs = d1 * a;
    CHECK((lhs - mult_left(mult_deriv(1), a)).norm() < 1e-10);
}

TEST_CASE("ps_w symbol branch") {
    const Complex kt(4.0, 1.0);
    const auto m = mult_ps_w(kt);
    // -(1/2) sqrt(n^2 - k~^2) with positive imaginary part for Im k~ > 0
    for (int n : {0, 2, 5, 40}) {
        const Complex s = m.sym(n);
        CHECK(s.imag() > 0.0);
        const Complex sq = -2.0 * s;
        CHECK(std::abs(sq * sq - (double(n) * double(n) - kt * kt)) < 1e-12);
    }
}

TEST_CASE("regularizer symbols") {
    ElasticMedium m = make_medium(2.0, 1.0, 10.0, 1.0);
    const auto rd = make_regularizer(Reg::RD, m);
    CHECK((rd.sym(0) - Eigen::Matrix2cd::Identity()).norm() < 1e-14);
    const auto rn1 = make_regularizer(Reg::RN1, m);
    Eigen::Matrix2cd d;
    d << 1, 0, 0, -1;
    CHECK((rn1.sym(0) - d).norm() < 1e-14);

    // RN is the stated 2x2 inverse
    const auto rn = make_regularizer(Reg::RN, m);
    const Complex kp2 = m.kp_c * m.kp_c, ks2 = m.ks_c * m.ks_c;
    for (int n : {0, 1, 7, 33}) {
        const double n2 = double(n) * double(n);
        const Complex a = n2 - 0.5 * m.ks() * m.ks();
        Eigen::Matrix2cd fwd;
        fwd << a, -I * double(n) * std::sqrt(n2 - ks2),
            -I * double(n) * std::sqrt(n2 - kp2), -a;
        CHECK((2.0 * m.mu * fwd * rn.sym(n) - Eigen::Matrix2cd::Identity())
                  .norm() < 1e-11);
    }

    // RD tends to the H0-based symbol at large n (difference O(1/n))
    const auto rdh = make_rd_h0(m);
    CHECK((rd.sym(200) - rdh.sym(200)).norm() < 0.2);
}

TEST_CASE("residual order fit recovers a planted decay rate") {
    const int N = 512;
    GridOp op = [](const CVec& v) -> CVec {
        return mult_lambda().apply(v) + mult_deriv(-3).apply(v);
    };
    GridOp model = [](const CVec& v) { return mult_lambda().apply(v); };
    const double slope = residual_order(op, model, N, 8, 64);
    CHECK(slope == doctest::Approx(-3.0).epsilon(0.03));
}

TEST_CASE("matrix multiplier acts blockwise") {
    const int N = 16;
    MatrixMultiplier mm{[](int n) -> Eigen::Matrix2cd {
        Eigen::Matrix2cd m;
        m << Complex(n, 0), 0, 0, 1;
        return m;
    }};
    CVec v(2 * N);
    v.head(N) = mode_vector(3, N);
    v.tail(N) = mode_vector(-2, N);
    const CVec out = mm.apply(v);
    CHECK((out.head(N) - 3.0 * v.head(N)).norm() < 1e-12);
    CHECK((out.tail(N) - v.tail(N)).norm() < 1e-12);
}
