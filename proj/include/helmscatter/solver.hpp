#pragma once

#include <functional>
#include <vector>

#include "types.hpp"

namespace helm {

struct KrylovResult {
    CVec x;
    int iterations = 0;
    bool converged = false;
    std::vector<double> residuals; // relative, one per iteration
};

// Full (non-restarted) GMRES with x0 = 0 and relative residual stopping.
// maxit is capped at the system dimension.
KrylovResult gmres(const std::function<CVec(const CVec&)>& op, const CVec& rhs,
                   double tol, int maxit);

// dense spectrum, sorted by descending modulus
CVec spectrum(const CMat& a);

} // namespace helm
