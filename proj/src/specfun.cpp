#include "helmscatter/specfun.hpp"

#include <cmath>
#include <gsl/gsl_sf_bessel.h>

namespace helm {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
// series/asymptotic crossover for the complex-argument routines
constexpr double kCross = 13.5;

// ascending series for J0, J1, Y0, Y1 at complex z, |z| <= kCross
struct SmallZ {
    Complex j0, j1, y0, y1;
};

SmallZ series_small(Complex z) {
    const Complex q = 0.25 * z * z; // (z/2)^2
    Complex term0 = 1.0;            // (-1)^m q^m / (m!)^2
    Complex term1 = 1.0;            // (-1)^m q^m / (m! (m+1)!)
    Complex j0 = 1.0, j1s = 1.0;
    Complex y0s = 0.0;  // sum h_m (-1)^(m+1) q^m/(m!)^2, m>=1
    Complex y1s = 1.0;  // sum (-1)^m (h_m + h_{m+1}) q^m/(m!(m+1)!), m>=0
    double hm = 0.0;
    for (int m = 1; m <= 60; ++m) {
        term0 *= -q / double(m * m);
        term1 *= -q / double(m * (m + 1));
        hm += 1.0 / m;
        j0 += term0;
        j1s += term1;
        y0s -= hm * term0;
        y1s += (hm + hm + 1.0 / (m + 1.0)) * term1;
        if (std::abs(term0) < 1e-18 && std::abs(term1) < 1e-18) break;
    }
    const Complex j1 = 0.5 * z * j1s;
    const Complex lg = std::log(0.5 * z) + kEulerGamma;
    SmallZ out;
    out.j0 = j0;
    out.j1 = j1;
    out.y0 = (2.0 / M_PI) * (lg * j0 + y0s);
    out.y1 = (2.0 / M_PI) * (lg * j1) - 2.0 / (M_PI * z) - (z / (2.0 * M_PI)) * y1s;
    return out;
}

// large-argument expansion, DLMF 10.17.5/10.17.6, truncated at the
// smallest term. kind=+1 gives H^1, kind=-1 gives H^2.
Complex hankel_asym(double nu, Complex z, int kind) {
    const double mu = 4.0 * nu * nu;
    const Complex iz = Complex(0.0, kind) / z;
    Complex term = 1.0, sum = 1.0;
    double prev = 1e300;
    for (int k = 1; k <= 40; ++k) {
        const double num = mu - double(2 * k - 1) * double(2 * k - 1);
        term *= iz * (num / (8.0 * k));
        const double mag = std::abs(term);
        if (mag > prev) break;
        sum += term;
        prev = mag;
        if (mag < 1e-18) break;
    }
    const Complex omega = z - nu * 0.5 * M_PI - 0.25 * M_PI;
    const Complex pref = std::sqrt(2.0 / (M_PI * z)) *
                         std::exp(Complex(0.0, kind) * omega);
    return pref * sum;
}

} // namespace

double bessel_j0(double x) { return gsl_sf_bessel_J0(x); }
double bessel_j1(double x) { return gsl_sf_bessel_J1(x); }

double bessel_y0(double x) {
    if (x <= 0.0) throw DomainError("bessel_y0: argument must be positive");
    return gsl_sf_bessel_Y0(x);
}

double bessel_y1(double x) {
    if (x <= 0.0) throw DomainError("bessel_y1: argument must be positive");
    return gsl_sf_bessel_Y1(x);
}

double bessel_jn(int n, double x) { return gsl_sf_bessel_Jn(n, x); }

double bessel_yn(int n, double x) {
    if (x <= 0.0) throw DomainError("bessel_yn: argument must be positive");
    return gsl_sf_bessel_Yn(n, x);
}

Complex hankel1_0(Complex z) {
    if (z == 0.0) throw DomainError("hankel1_0: singular at z = 0");
    if (std::abs(z) <= kCross) {
        const SmallZ s = series_small(z);
        return s.j0 + I * s.y0;
    }
    return hankel_asym(0.0, z, +1);
}

Complex hankel1_1(Complex z) {
    if (z == 0.0) throw DomainError("hankel1_1: singular at z = 0");
    if (std::abs(z) <= kCross) {
        const SmallZ s = series_small(z);
        return s.j1 + I * s.y1;
    }
    return hankel_asym(1.0, z, +1);
}

Complex besselj_c0(Complex z) {
    if (std::abs(z) <= kCross) return series_small(z).j0;
    return 0.5 * (hankel_asym(0.0, z, +1) + hankel_asym(0.0, z, -1));
}

Complex besselj_c1(Complex z) {
    if (std::abs(z) <= kCross) return series_small(z).j1;
    return 0.5 * (hankel_asym(1.0, z, +1) + hankel_asym(1.0, z, -1));
}

Complex hankel1_n(int n, Complex z) {
    if (z == 0.0) throw DomainError("hankel1_n: singular at z = 0");
    const int m = std::abs(n);
    const double sgn = (n < 0 && (m % 2)) ? -1.0 : 1.0;
    if (z.imag() == 0.0 && z.real() > 0.0) {
        const double x = z.real();
        return sgn * Complex(bessel_jn(m, x), bessel_yn(m, x));
    }
    Complex hm1 = hankel1_0(z);
    if (m == 0) return hm1;
    Complex h = hankel1_1(z);
    for (int j = 1; j < m; ++j) {
        const Complex next = (2.0 * j / z) * h - hm1;
        hm1 = h;
        h = next;
    }
    return sgn * h;
}

} // namespace helm
