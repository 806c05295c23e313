#pragma once

#include <string>
#include <utility>
#include <vector>

#include "formulations.hpp"
#include "solver.hpp"

namespace helm {

struct ProblemSpec {
    std::string shape = "kite";
    std::string formulation = "dirichlet.cfie";
    double lambda = 2.0, mu = 1.0, omega = 10.0;
    int ppw = 8, refine = 1, grading_p = 3;
    double tol = 1e-5;
    int maxit = 1000;
    std::string incident = "plane"; // "plane" | "point"
    double direction_deg = -90.0, polarization_deg = 0.0;
    Vec2 source = Vec2(0.1, 0.0);
    int n_override = 0; // force the grid size when nonzero
};

bool is_polygon(const std::string& shape);

// grid size rule: ppw points per shear wavelength, even, floor 64,
// then the refine multiplier; polygons round up to a multiple of the sides
int resolution_for(const ProblemSpec& ps);

Curve curve_for(const ProblemSpec& ps, int N);
ElasticMedium medium_for(const ProblemSpec& ps, const Curve& c);
IncidentField incident_for(const ProblemSpec& ps, const ElasticMedium& m,
                           const Curve& c);

struct SolveOutput {
    ProblemSpec spec;
    int N = 0;
    Curve curve;
    Assembly assembly;
    CVec rhs;
    KrylovResult krylov;
    CVec phi; // physical densities (phi_p; phi_s)
};

SolveOutput solve_problem(const ProblemSpec& ps);

// scattered displacement at exterior points
Eigen::Matrix2Xcd scattered_field(const SolveOutput& so,
                                  const std::vector<Vec2>& pts);

// scalar far-field amplitudes (u_p_inf, u_s_inf) of the two phases
std::pair<CVec, CVec> far_field_ps(const SolveOutput& so,
                                   const std::vector<double>& angles);

CVec spectrum_of(const SolveOutput& so);

// true if x lies inside the closed curve (winding number)
bool point_inside(const Curve& c, const Vec2& x);

} // namespace helm
