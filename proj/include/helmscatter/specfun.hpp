#pragma once

#include "types.hpp"

namespace helm {

// Real-axis Bessel functions. y0/y1 throw DomainError for x <= 0.
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_y0(double x);
double bessel_y1(double x);
double bessel_jn(int n, double x);
double bessel_yn(int n, double x);

// Hankel function of the first kind, orders 0 and 1, for complex z with
// Im z >= 0. Ascending series for small |z|, large-argument expansion
// otherwise. Throws DomainError at z = 0.
Complex hankel1_0(Complex z);
Complex hankel1_1(Complex z);

// Bessel J at complex argument, orders 0 and 1 (entire functions).
Complex besselj_c0(Complex z);
Complex besselj_c1(Complex z);

// H^1_n by forward recurrence from orders 0 and 1; uses the real-axis
// routines when Im z == 0. Negative orders via H_{-n} = (-1)^n H_n.
Complex hankel1_n(int n, Complex z);

} // namespace helm
