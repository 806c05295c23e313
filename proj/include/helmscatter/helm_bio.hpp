#pragma once

#include <iosfwd>
#include <vector>

#include "geometry.hpp"
#include "types.hpp"

namespace helm {

enum class Bio { V, K, Kt, W };
enum class Layer { SL, DL };

// Nystrom discretization with log-singularity splitting on the periodic
// trapezoid grid. W is built through the Maue identity
//   W = D V D + k^2 (n .) V (n .)
// with D the arc-length spectral derivative.
CMat assemble_bio(Bio op, Complex k, const Curve& c);

struct BioSet {
    Complex k;
    CMat v, kop, kt, w;
};
BioSet assemble_bios(Complex k, const Curve& c);

// layer potentials at off-boundary points, plain trapezoid rule
CVec eval_potential(Layer l, Complex k, const Curve& c, const CVec& density,
                    const std::vector<Vec2>& pts);

// gradient of the layer potentials at off-boundary points
Eigen::Matrix2Xcd eval_potential_grad(Layer l, Complex k, const Curve& c,
                                      const CVec& density,
                                      const std::vector<Vec2>& pts);

// far-field pattern u_inf(xhat), u ~ u_inf e^{ikr}/sqrt(r)
CVec far_field(Layer l, double k, const Curve& c, const CVec& density,
               const std::vector<double>& angles);

// row-major little-endian binary matrix dump
void write_operator(std::ostream& os, const CMat& a);
CMat read_operator(std::istream& is);

} // namespace helm
