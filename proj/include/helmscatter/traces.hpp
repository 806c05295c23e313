#pragma once

#include "helm_bio.hpp"

namespace helm {

// Boundary traces of gradients and Hessians of the layer potentials,
// composed from the four BIOs, the arc-length derivative and pointwise
// geometry factors. All blocks are dense N x N collocation matrices.
struct GradTraces {
    CMat dn_sl, dt_sl, dn_dl, dt_dl;
};

struct HessTraces {
    CMat nn, tt, nt, tn;
};

GradTraces grad_traces(const BioSet& b, const Curve& c);
HessTraces hess_traces_sl(const BioSet& b, const Curve& c);
HessTraces hess_traces_dl(const BioSet& b, const Curve& c);

// dense arc-length derivative on the curve grid
CMat deriv_matrix(const Curve& c);

} // namespace helm
