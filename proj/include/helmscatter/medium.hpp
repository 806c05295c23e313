#pragma once

#include "types.hpp"

namespace helm {

// Lame constants and frequency, plus the complexified wavenumbers used by
// the regularized formulations: k~ = k + 0.4i K^(2/3) k^(1/3), K the maximum
// boundary curvature (floored at 1 so flat-sided shapes still damp).
struct ElasticMedium {
    double lambda = 2.0;
    double mu = 1.0;
    double omega = 1.0;
    Complex kp_c;
    Complex ks_c;

    double kp() const { return omega / std::sqrt(lambda + 2.0 * mu); }
    double ks() const { return omega / std::sqrt(mu); }
};

ElasticMedium make_medium(double lambda, double mu, double omega,
                          double max_curvature);

} // namespace helm
