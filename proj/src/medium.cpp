#include "helmscatter/medium.hpp"

#include <cmath>

namespace helm {

ElasticMedium make_medium(double lambda, double mu, double omega,
                          double max_curvature) {
    if (mu <= 0.0 || lambda + 2.0 * mu <= 0.0)
        throw ConfigError("make_medium: need mu > 0 and lambda + 2 mu > 0");
    if (omega <= 0.0) throw ConfigError("make_medium: omega must be positive");
    ElasticMedium m;
    m.lambda = lambda;
    m.mu = mu;
    m.omega = omega;
    const double cap = std::max(max_curvature, 1.0);
    const double kp = m.kp(), ks = m.ks();
    m.kp_c = Complex(kp, 0.4 * std::pow(cap, 2.0 / 3.0) * std::cbrt(kp));
    m.ks_c = Complex(ks, 0.4 * std::pow(cap, 2.0 / 3.0) * std::cbrt(ks));
    return m;
}

} // namespace helm
