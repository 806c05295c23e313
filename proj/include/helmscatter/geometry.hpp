#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "types.hpp"

namespace helm {

// Smooth closed curve given by 2pi-periodic parametrization with two
// derivatives.
struct ParametricCurve {
    std::function<Vec2(double)> pos;
    std::function<Vec2(double)> d1;
    std::function<Vec2(double)> d2;
};

// Node data for a discretized closed curve of total arc length 2pi.
// Nodes sit on an equispaced parameter grid; for graded (corner) meshes the
// grid is shifted by half a step so no node lands on a corner, and jac holds
// the warp derivative. For smooth curves the parameter is arc length and
// jac == 1.
struct Curve {
    RVec s;                 // parameter nodes
    RVec s_arc;             // cumulative arc length at the nodes
    Eigen::Matrix2Xd x;     // points
    Eigen::Matrix2Xd tang;  // unit tangents
    Eigen::Matrix2Xd nrm;   // outward unit normals, n = Q t
    RVec jac;               // |dx/du|
    RVec kappa;             // signed curvature, dt/ds = -kappa n (+1 on the
                            // counterclockwise unit circle)
    bool offset_grid = false;

    int n() const { return static_cast<int>(s.size()); }
    double max_curvature() const;
    void write_csv(std::ostream& os) const;
};

// "circle" (params: [radius], default 1), "kite", "cavity". Shapes are
// rescaled so the total arc length is exactly 2pi.
ParametricCurve make_shape(const std::string& name,
                           const std::vector<double>& params = {});

// Length of the raw (unscaled) named shape divided by 2pi; exposed so the
// normalization constants can be checked.
double shape_scale(const std::string& name,
                   const std::vector<double>& params = {});

// Samples the curve at N equispaced parameter values, keeping the native
// parametrization (jac = |x'|). Preferred for the analytic shapes, whose
// native parametrization has a much wider strip of analyticity than the
// arc-length one, so spectral quadrature converges at the nominal rate.
Curve sample_curve(const ParametricCurve& pc, int N);

// Resamples the curve at N points equispaced in arc length (jac == 1).
Curve reparametrize_arclength(const ParametricCurve& pc, int N);

// Corner-graded polygonal shapes: "square", "lshape". Polynomial sigmoid
// grading of degree p on each edge; N must be a positive even multiple of the
// side count.
struct GradedMesh {
    std::vector<double> corners; // cumulative arc length, corners[0] = 0
    int p = 3;
    double warp(double u) const;
    double warp_deriv(double u) const;
};

GradedMesh graded_mesh_for(const std::string& shape, int p);
Curve graded_nodes(const std::string& shape, int p, int N);

// Vertex list (positively oriented) for the polygonal shapes.
std::vector<Vec2> polygon_vertices(const std::string& shape);

} // namespace helm
