#pragma once

#include <functional>

#include "geometry.hpp"
#include "medium.hpp"
#include "types.hpp"

namespace helm {

// Time-harmonic displacement field with its Jacobian, G_ij = d u_i / d x_j.
struct IncidentField {
    std::function<CVec2(const Vec2&)> u;
    std::function<Eigen::Matrix2cd(const Vec2&)> grad;
};

// traction T u = sigma(u) n, sigma = lambda (div u) I + mu (G + G^T)
CVec2 traction(const IncidentField& f, const ElasticMedium& m, const Vec2& x,
               const Vec2& n);

// plane wave of direction d (|d| = 1) and polarization p: an S component
// carried on Qd and a P component on d
IncidentField plane_wave(const ElasticMedium& m, const Vec2& d, const Vec2& p);

// radiating solution generated by Helmholtz point sources at z:
// u = grad phi_{kp}(. - z) + Q grad phi_{ks}(. - z)
IncidentField point_source(const ElasticMedium& m, const Vec2& z);

// vector amplitudes of the two radiating far-field phases
CVec2 farfield_p_dir(Complex up_inf, double kp, const Vec2& xhat);
CVec2 farfield_s_dir(Complex us_inf, double ks, const Vec2& xhat);

// relative residual of the Navier equation at x, by centered differences
double navier_residual(const IncidentField& f, const ElasticMedium& m,
                       const Vec2& x, double h = 1e-4);

} // namespace helm
