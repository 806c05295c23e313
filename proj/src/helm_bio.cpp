#include "helmscatter/helm_bio.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <thread>
#include <vector>

#include "helmscatter/specfun.hpp"
#include "helmscatter/spectral.hpp"
#include "helmscatter/util.hpp"

namespace helm {

namespace {

int g_threads = 1;

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// quadrature weights for the ln(4 sin^2((t-tau)/2)) factor, indexed by the
// node difference
std::vector<double> log_weights(int N) {
    std::vector<double> r(N);
    const int half = N / 2;
    for (int d = 0; d < N; ++d) {
        const double s = 2.0 * M_PI * d / N;
        double acc = 0.0;
        for (int m = 1; m < half; ++m) acc += std::cos(m * s) / m;
        acc += std::cos(half * s) / N;
        r[d] = -(4.0 * M_PI / N) * acc;
    }
    return r;
}

struct Kernels {
    Complex k;
    bool real_k;
    Complex h0(double r) const {
        return real_k ? Complex(bessel_j0(k.real() * r), bessel_y0(k.real() * r))
                      : hankel1_0(k * r);
    }
    Complex h1(double r) const {
        return real_k ? Complex(bessel_j1(k.real() * r), bessel_y1(k.real() * r))
                      : hankel1_1(k * r);
    }
    Complex j0(double r) const {
        return real_k ? Complex(bessel_j0(k.real() * r)) : besselj_c0(k * r);
    }
    Complex j1(double r) const {
        return real_k ? Complex(bessel_j1(k.real() * r)) : besselj_c1(k * r);
    }
};

double log4sin2(double dt) {
    const double s = 2.0 * std::sin(0.5 * dt);
    return std::log(s * s);
}

CMat diag_sandwich(const RVec& left, const CMat& a, const RVec& right) {
    return left.cast<Complex>().asDiagonal() * a *
           right.cast<Complex>().asDiagonal();
}

CMat maue_w(Complex k, const Curve& c, const CMat& v) {
    CMat w = deriv_left(c.jac, deriv_right(v, c.jac));
    for (int comp = 0; comp < 2; ++comp) {
        const RVec nc = c.nrm.row(comp).transpose();
        w += (k * k) * diag_sandwich(nc, v, nc);
    }
    return w;
}

CMat assemble_v(Complex k, const Curve& c) {
    const int N = c.n();
    const std::vector<double> rw = log_weights(N);
    const double h = 2.0 * M_PI / N;
    const Kernels ker{k, k.imag() == 0.0};
    CMat a(N, N);
    parallel_for(N, [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            for (int j = 0; j < N; ++j) {
                if (i == j) {
                    const Complex diag =
                        I * 0.25 - kEulerGamma / (2.0 * M_PI) -
                        std::log(k * c.jac[i] / 2.0) / (2.0 * M_PI);
                    a(i, j) = h * diag * c.jac[i] +
                              rw[0] * (-1.0 / (4.0 * M_PI)) * c.jac[i];
                    continue;
                }
                const double r = (c.x.col(i) - c.x.col(j)).norm();
                const Complex full = I * 0.25 * ker.h0(r) * c.jac[j];
                const Complex m1 = -ker.j0(r) / (4.0 * M_PI) * c.jac[j];
                const Complex m2 = full - m1 * log4sin2(c.s[i] - c.s[j]);
                a(i, j) = rw[(i - j + N) % N] * m1 + h * m2;
            }
        }
    });
    return a;
}

// kind = Bio::K uses n(y).(x - y); Bio::Kt uses n(x).(y - x)
CMat assemble_k(Bio kind, Complex k, const Curve& c) {
    const int N = c.n();
    const std::vector<double> rw = log_weights(N);
    const double h = 2.0 * M_PI / N;
    const Kernels ker{k, k.imag() == 0.0};
    CMat a(N, N);
    parallel_for(N, [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            for (int j = 0; j < N; ++j) {
                if (i == j) {
                    a(i, j) = -h * c.kappa[i] * c.jac[i] / (4.0 * M_PI);
                    continue;
                }
                const Vec2 d = c.x.col(i) - c.x.col(j);
                const double r = d.norm();
                const double dot = (kind == Bio::K) ? c.nrm.col(j).dot(d)
                                                    : -c.nrm.col(i).dot(d);
                const Complex full =
                    I * 0.25 * k * ker.h1(r) * (dot / r) * c.jac[j];
                const Complex l1 =
                    -k / (4.0 * M_PI) * ker.j1(r) * (dot / r) * c.jac[j];
                const Complex l2 = full - l1 * log4sin2(c.s[i] - c.s[j]);
                a(i, j) = rw[(i - j + N) % N] * l1 + h * l2;
            }
        }
    });
    return a;
}

} // namespace

void set_threads(int n) { g_threads = n < 1 ? 1 : n; }
int threads() { return g_threads; }

void parallel_for(int n, const std::function<void(int, int)>& body) {
    const int nt = std::min(g_threads, n);
    if (nt <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
        const int lo = n * t / nt, hi = n * (t + 1) / nt;
        pool.emplace_back(body, lo, hi);
    }
    for (auto& th : pool) th.join();
}

CMat assemble_bio(Bio op, Complex k, const Curve& c) {
    if (k == 0.0) throw DomainError("assemble_bio: wavenumber must be nonzero");
    switch (op) {
    case Bio::V:
        return assemble_v(k, c);
    case Bio::K:
    case Bio::Kt:
        return assemble_k(op, k, c);
    case Bio::W:
        return maue_w(k, c, assemble_v(k, c));
    }
    throw ConfigError("assemble_bio: bad operator");
}

BioSet assemble_bios(Complex k, const Curve& c) {
    BioSet b;
    b.k = k;
    b.v = assemble_v(k, c);
    b.kop = assemble_k(Bio::K, k, c);
    b.kt = assemble_k(Bio::Kt, k, c);
    b.w = maue_w(k, c, b.v);
    return b;
}

CVec eval_potential(Layer l, Complex k, const Curve& c, const CVec& density,
                    const std::vector<Vec2>& pts) {
    const int N = c.n();
    const double h = 2.0 * M_PI / N;
    const Kernels ker{k, k.imag() == 0.0};
    CVec out(static_cast<Eigen::Index>(pts.size()));
    for (size_t p = 0; p < pts.size(); ++p) {
        Complex acc = 0.0;
        for (int j = 0; j < N; ++j) {
            const Vec2 d = pts[p] - c.x.col(j);
            const double r = d.norm();
            if (r == 0.0)
                throw DomainError("eval_potential: point on the boundary");
            Complex kerval;
            if (l == Layer::SL)
                kerval = I * 0.25 * ker.h0(r);
            else
                kerval = I * 0.25 * k * ker.h1(r) * (c.nrm.col(j).dot(d) / r);
            acc += kerval * density[j] * c.jac[j];
        }
        out[p] = h * acc;
    }
    return out;
}

Eigen::Matrix2Xcd eval_potential_grad(Layer l, Complex k, const Curve& c,
                                      const CVec& density,
                                      const std::vector<Vec2>& pts) {
    const int N = c.n();
    const double h = 2.0 * M_PI / N;
    const Kernels ker{k, k.imag() == 0.0};
    Eigen::Matrix2Xcd out(2, static_cast<Eigen::Index>(pts.size()));
    for (size_t p = 0; p < pts.size(); ++p) {
        Eigen::Vector2cd acc = Eigen::Vector2cd::Zero();
        for (int j = 0; j < N; ++j) {
            const Vec2 d = pts[p] - c.x.col(j);
            const double r = d.norm();
            if (r == 0.0)
                throw DomainError("eval_potential_grad: point on the boundary");
            const Vec2 rh = d / r;
            const Complex h1 = ker.h1(r);
            Eigen::Vector2cd g;
            if (l == Layer::SL) {
                g = (-I * 0.25 * k * h1) * rh.cast<Complex>();
            } else {
                const Complex h0 = ker.h0(r);
                const Complex h1p = h0 - h1 / (k * r);
                const Vec2 nj = c.nrm.col(j);
                const double ndot = nj.dot(d);
                g = I * 0.25 * k *
                    (k * h1p * (ndot / r) * rh.cast<Complex>() +
                     h1 * (nj.cast<Complex>() / r -
                           (ndot / (r * r * r)) * d.cast<Complex>()));
            }
            acc += g * density[j] * c.jac[j];
        }
        out.col(p) = h * acc;
    }
    return out;
}

CVec far_field(Layer l, double k, const Curve& c, const CVec& density,
               const std::vector<double>& angles) {
    const int N = c.n();
    const double h = 2.0 * M_PI / N;
    const Complex pref =
        std::exp(I * (M_PI / 4.0)) / std::sqrt(8.0 * M_PI * k);
    CVec out(static_cast<Eigen::Index>(angles.size()));
    for (size_t p = 0; p < angles.size(); ++p) {
        const Vec2 xhat(std::cos(angles[p]), std::sin(angles[p]));
        Complex acc = 0.0;
        for (int j = 0; j < N; ++j) {
            const Complex ph = std::exp(-I * k * xhat.dot(c.x.col(j)));
            Complex amp = ph;
            if (l == Layer::DL) amp *= -I * k * xhat.dot(c.nrm.col(j));
            acc += amp * density[j] * c.jac[j];
        }
        out[p] = pref * h * acc;
    }
    return out;
}

void write_operator(std::ostream& os, const CMat& a) {
    const char magic[8] = {'H', 'S', 'O', 'P', '1', 0, 0, 0};
    os.write(magic, 8);
    const uint64_t rows = a.rows(), cols = a.cols();
    os.write(reinterpret_cast<const char*>(&rows), 8);
    os.write(reinterpret_cast<const char*>(&cols), 8);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const double re = a(i, j).real(), im = a(i, j).imag();
            os.write(reinterpret_cast<const char*>(&re), 8);
            os.write(reinterpret_cast<const char*>(&im), 8);
        }
}

CMat read_operator(std::istream& is) {
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, "HSOP1\0\0\0", 8) != 0)
        throw DomainError("read_operator: bad magic");
    uint64_t rows = 0, cols = 0;
    is.read(reinterpret_cast<char*>(&rows), 8);
    is.read(reinterpret_cast<char*>(&cols), 8);
    CMat a(rows, cols);
    for (uint64_t i = 0; i < rows; ++i)
        for (uint64_t j = 0; j < cols; ++j) {
            double re, im;
            is.read(reinterpret_cast<char*>(&re), 8);
            is.read(reinterpret_cast<char*>(&im), 8);
            a(i, j) = Complex(re, im);
        }
    if (!is) throw DomainError("read_operator: truncated stream");
    return a;
}

} // namespace helm
