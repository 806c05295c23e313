#include "helmscatter/spectral.hpp"

#include <algorithm>

#include <cmath>
#include <fftw3.h>

namespace helm {

namespace {

void run_fft(const Complex* in, Complex* out, int n, int sign) {
    fftw_complex* buf = fftw_alloc_complex(n);
    for (int i = 0; i < n; ++i) {
        buf[i][0] = in[i].real();
        buf[i][1] = in[i].imag();
    }
    fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    for (int i = 0; i < n; ++i) out[i] = Complex(buf[i][0], buf[i][1]);
    fftw_free(buf);
}

Complex sqz(Complex z) { return std::sqrt(z); }

} // namespace

CVec fft(const CVec& v) {
    CVec out(v.size());
    run_fft(v.data(), out.data(), static_cast<int>(v.size()), FFTW_FORWARD);
    return out;
}

CVec ifft(const CVec& v) {
    CVec out(v.size());
    run_fft(v.data(), out.data(), static_cast<int>(v.size()), FFTW_BACKWARD);
    out /= double(v.size());
    return out;
}

CVec fourier_coeffs(const CVec& v) { return fft(v) / double(v.size()); }

CVec mode_vector(int n, int N, bool offset_grid) {
    CVec out(N);
    const double shift = offset_grid ? 0.5 : 0.0;
    for (int j = 0; j < N; ++j)
        out[j] = std::exp(Complex(0.0, n * 2.0 * M_PI * (j + shift) / N));
    return out;
}

CVec ScalarMultiplier::apply(const CVec& v) const {
    const int N = static_cast<int>(v.size());
    CVec c = fft(v);
    for (int k = 0; k < N; ++k) c[k] *= sym(mode_of(k, N));
    return ifft(c);
}

ScalarMultiplier ScalarMultiplier::transposed() const {
    auto s = sym;
    return {[s](double n) { return s(-n); }};
}

CVec MatrixMultiplier::apply(const CVec& v) const {
    const int N = static_cast<int>(v.size()) / 2;
    CVec a = fft(v.head(N)), b = fft(v.tail(N));
    for (int k = 0; k < N; ++k) {
        const Eigen::Matrix2cd m = sym(mode_of(k, N));
        const Complex ca = a[k], cb = b[k];
        a[k] = m(0, 0) * ca + m(0, 1) * cb;
        b[k] = m(1, 0) * ca + m(1, 1) * cb;
    }
    CVec out(2 * N);
    out.head(N) = ifft(a);
    out.tail(N) = ifft(b);
    return out;
}

ScalarMultiplier mult_deriv(int r) {
    return {[r](double n) -> Complex {
        if (n == 0.0) return 0.0;
        return std::pow(Complex(0.0, n), r);
    }};
}

ScalarMultiplier mult_hilbert() {
    return {[](double n) -> Complex { return (n >= 0.0) ? I : -I; }};
}

ScalarMultiplier mult_lambda() {
    return {[](double n) -> Complex {
        return (n == 0.0) ? 1.0 : 1.0 / std::abs(n);
    }};
}

ScalarMultiplier mult_mean() {
    return {[](double n) -> Complex { return (n == 0.0) ? 1.0 : 0.0; }};
}

ScalarMultiplier mult_ps_w(Complex kt) {
    return {[kt](double n) -> Complex { return -0.5 * sqz(n * n - kt * kt); }};
}

ScalarMultiplier mult_const(Complex c) {
    return {[c](double) { return c; }};
}

MatrixMultiplier make_regularizer(Reg kind, const ElasticMedium& m) {
    const Complex kp2 = m.kp_c * m.kp_c, ks2 = m.ks_c * m.ks_c;
    const double ks = m.ks(), mu = m.mu;
    switch (kind) {
    case Reg::RD:
        return {[kp2, ks2](double n) -> Eigen::Matrix2cd {
            Eigen::Matrix2cd r;
            if (n == 0.0) return Eigen::Matrix2cd::Identity();
            const double n2 = n * n;
            const Complex bp = sqz(n2 - kp2), bs = sqz(n2 - ks2);
            const Complex del = 1.0 / (n2 - bp * bs);
            r << del * bs, -I * n * del,
                 -I * n * del, -del * bp;
            return r;
        }};
    case Reg::RD1:
        return {[kp2, ks2](double n) -> Eigen::Matrix2cd {
            const double n2 = n * n;
            const Complex c = 2.0 / (kp2 + ks2);
            Eigen::Matrix2cd r;
            r << c * sqz(n2 - ks2), -c * I * n,
                 -c * I * n, -c * sqz(n2 - kp2);
            return r;
        }};
    case Reg::RN:
        return {[kp2, ks2, ks, mu](double n) -> Eigen::Matrix2cd {
            const double n2 = n * n;
            const Complex a = n2 - 0.5 * ks * ks;
            const Complex bp = sqz(n2 - kp2), bs = sqz(n2 - ks2);
            const Complex det = -a * a + n2 * bp * bs;
            const Complex c = 1.0 / (2.0 * mu * det);
            Eigen::Matrix2cd r;
            r << -c * a, c * I * n * bs,
                 c * I * n * bp, c * a;
            return r;
        }};
    case Reg::RN1:
        return {[kp2, ks2](double n) -> Eigen::Matrix2cd {
            Eigen::Matrix2cd r;
            if (n == 0.0) {
                r << 1.0, 0.0, 0.0, -1.0;
                return r;
            }
            const double n2 = n * n;
            r << 1.0, -I * n / sqz(n2 - ks2),
                 -I * n / sqz(n2 - kp2), -1.0;
            return r;
        }};
    }
    throw ConfigError("make_regularizer: bad kind");
}

MatrixMultiplier make_rd_h0(const ElasticMedium& m) {
    const Complex kp2 = m.kp_c * m.kp_c, ks2 = m.ks_c * m.ks_c;
    return {[kp2, ks2](double n) -> Eigen::Matrix2cd {
        if (n == 0.0) return Eigen::Matrix2cd::Identity();
        const double an = std::abs(n);
        const Complex c = 2.0 / (kp2 + ks2);
        Eigen::Matrix2cd r;
        r << c * (an + ks2 / (2.0 * an)), -c * I * n,
             -c * I * n, -c * (an + kp2 / (2.0 * an));
        return r;
    }};
}

CMat multiplier_matrix(const ScalarMultiplier& m, int N) {
    // F^-1 diag(sym) F, built column by column
    CMat out(N, N);
    CVec e = CVec::Zero(N);
    for (int j = 0; j < N; ++j) {
        e[j] = 1.0;
        out.col(j) = m.apply(e);
        e[j] = 0.0;
    }
    return out;
}

CMat band_projector(int N, int cut) {
    ScalarMultiplier m{[cut](double n) {
        return (std::abs(n) <= cut) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    }};
    return multiplier_matrix(m, N);
}

CVec warped_mode(int n, const RVec& s_arc) {
    CVec out(s_arc.size());
    for (int j = 0; j < s_arc.size(); ++j)
        out[j] = std::exp(Complex(0.0, n * s_arc[j]));
    return out;
}

namespace {

// analysis(q, col) = exp(-i n_q u_col) / N; the grid offset drops out of
// the synthesis/analysis product, so plain phases are exact either way
CMat dft_analysis(int N) {
    CMat a(N, N);
    for (int q = 0; q < N; ++q)
        for (int col = 0; col < N; ++col)
            a(q, col) = std::exp(Complex(0.0, -2.0 * M_PI * q * col / N)) /
                        double(N);
    return a;
}

} // namespace

CMat kn_matrix(const ScalarMultiplier& m, const RVec& jac) {
    const int N = static_cast<int>(jac.size());
    CMat synth(N, N);
    for (int j = 0; j < N; ++j)
        for (int q = 0; q < N; ++q) {
            const int n = mode_of(q, N);
            synth(j, q) = m.sym(n / jac[j]) *
                          std::exp(Complex(0.0, 2.0 * M_PI * n * j / double(N)));
        }
    return synth * dft_analysis(N);
}

std::array<CMat, 4> kn_blocks(const MatrixMultiplier& m, const RVec& jac) {
    const int N = static_cast<int>(jac.size());
    std::array<CMat, 4> synth;
    for (auto& s : synth) s.resize(N, N);
    for (int j = 0; j < N; ++j)
        for (int q = 0; q < N; ++q) {
            const int n = mode_of(q, N);
            const Eigen::Matrix2cd v = m.sym(n / jac[j]);
            const Complex ph =
                std::exp(Complex(0.0, 2.0 * M_PI * n * j / double(N)));
            synth[0](j, q) = v(0, 0) * ph;
            synth[1](j, q) = v(0, 1) * ph;
            synth[2](j, q) = v(1, 0) * ph;
            synth[3](j, q) = v(1, 1) * ph;
        }
    const CMat a = dft_analysis(N);
    return {CMat(synth[0] * a), CMat(synth[1] * a), CMat(synth[2] * a),
            CMat(synth[3] * a)};
}

CMat mult_left(const ScalarMultiplier& m, const CMat& a) {
    CMat out(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) out.col(j) = m.apply(a.col(j));
    return out;
}

CMat mult_right(const CMat& a, const ScalarMultiplier& m) {
    // a M = (M^T a^T)^T. With M = F^-1 diag(d) F the transpose is
    // M^T = F diag(d) F^-1, which differs from the multiplier with the
    // reflected symbol at the Nyquist mode, so apply it exactly.
    const int N = static_cast<int>(a.cols());
    CMat at = a.transpose();
    for (int j = 0; j < at.cols(); ++j) {
        CVec w = ifft(at.col(j));
        for (int k = 0; k < N; ++k) w[k] *= m.sym(mode_of(k, N));
        at.col(j) = fft(w);
    }
    return at.transpose();
}

CMat deriv_left(const RVec& jac, const CMat& a) {
    CMat out = mult_left(mult_deriv(1), a);
    out.array().colwise() *= (1.0 / jac.array()).cast<Complex>();
    return out;
}

CMat deriv_right(const CMat& a, const RVec& jac) {
    CMat scaled = a;
    scaled.array().rowwise() *= (1.0 / jac.array()).transpose().cast<Complex>();
    return mult_right(scaled, mult_deriv(1));
}

CVec deriv_apply(const RVec& jac, const CVec& v) {
    CVec out = mult_deriv(1).apply(v);
    out.array() /= jac.array();
    return out;
}

double fit_slope(const std::vector<double>& logx, const std::vector<double>& logy) {
    const size_t m = logx.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < m; ++i) {
        sx += logx[i];
        sy += logy[i];
        sxx += logx[i] * logx[i];
        sxy += logx[i] * logy[i];
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

namespace {

std::vector<int> log_modes(int nmin, int nmax) {
    std::vector<int> out;
    const int count = 9;
    for (int i = 0; i < count; ++i) {
        const double x = nmin * std::pow(double(nmax) / nmin, i / double(count - 1));
        const int n = static_cast<int>(std::lround(x));
        if (out.empty() || out.back() != n) out.push_back(n);
    }
    return out;
}

double order_impl(const GridOp& op, const GridOp& model, int N, int nmin,
                  int nmax, double floor_tol, bool pair) {
    std::vector<double> lx, ly;
    for (int n : log_modes(nmin, nmax)) {
        const CVec e = mode_vector(n, N);
        double r;
        if (!pair) {
            r = (op(e) - model(e)).norm() / std::sqrt(double(N));
        } else {
            CVec u = CVec::Zero(2 * N), v = CVec::Zero(2 * N);
            u.head(N) = e;
            v.tail(N) = e;
            const double ru = (op(u) - model(u)).norm();
            const double rv = (op(v) - model(v)).norm();
            r = std::max(ru, rv) / std::sqrt(double(N));
        }
        lx.push_back(std::log(double(n)));
        ly.push_back(std::log(std::max(r, floor_tol)));
    }
    return fit_slope(lx, ly);
}

} // namespace

double residual_order(const GridOp& op, const GridOp& model, int N, int nmin,
                      int nmax, double floor_tol) {
    return order_impl(op, model, N, nmin, nmax, floor_tol, false);
}

double residual_order_pair(const GridOp& op, const GridOp& model, int N,
                           int nmin, int nmax, double floor_tol) {
    return order_impl(op, model, N, nmin, nmax, floor_tol, true);
}

} // namespace helm
