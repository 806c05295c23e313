#include "helmscatter/solver.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace helm {

KrylovResult gmres(const std::function<CVec(const CVec&)>& op, const CVec& rhs,
                   double tol, int maxit) {
    const int n = static_cast<int>(rhs.size());
    if (tol <= 0.0) throw ConfigError("gmres: tolerance must be positive");
    const int m = std::min(maxit, n);
    KrylovResult res;
    const double bnorm = rhs.norm();
    if (bnorm == 0.0) {
        res.x = CVec::Zero(n);
        res.converged = true;
        return res;
    }

    std::vector<CVec> basis;
    basis.reserve(m + 1);
    basis.push_back(rhs / bnorm);
    CMat hess = CMat::Zero(m + 1, m);
    // Givens rotations of the running QR factorization
    std::vector<Complex> cs(m), sn(m);
    CVec g = CVec::Zero(m + 1);
    g[0] = bnorm;

    int k = 0;
    for (; k < m; ++k) {
        CVec w = op(basis[k]);
        for (int i = 0; i <= k; ++i) { // modified Gram-Schmidt
            hess(i, k) = basis[i].dot(w);
            w -= hess(i, k) * basis[i];
        }
        hess(k + 1, k) = w.norm();
        const bool breakdown = std::abs(hess(k + 1, k)) < 1e-14 * bnorm;
        if (!breakdown) basis.push_back(w / hess(k + 1, k));

        for (int i = 0; i < k; ++i) {
            const Complex t = std::conj(cs[i]) * hess(i, k) +
                              std::conj(sn[i]) * hess(i + 1, k);
            hess(i + 1, k) = -sn[i] * hess(i, k) + cs[i] * hess(i + 1, k);
            hess(i, k) = t;
        }
        const double denom = std::sqrt(std::norm(hess(k, k)) +
                                       std::norm(hess(k + 1, k)));
        if (denom == 0.0) {
            cs[k] = 1.0;
            sn[k] = 0.0;
        } else {
            cs[k] = hess(k, k) / denom;
            sn[k] = hess(k + 1, k) / denom;
        }
        hess(k, k) = std::conj(cs[k]) * hess(k, k) +
                     std::conj(sn[k]) * hess(k + 1, k);
        hess(k + 1, k) = 0.0;
        g[k + 1] = -sn[k] * g[k];
        g[k] = std::conj(cs[k]) * g[k];

        const double rel = std::abs(g[k + 1]) / bnorm;
        res.residuals.push_back(rel);
        if (rel < tol || breakdown) {
            ++k;
            res.converged = rel < tol || breakdown;
            break;
        }
    }
    res.iterations = k;

    // back substitution on the k x k triangular system
    CVec y = CVec::Zero(k);
    for (int i = k - 1; i >= 0; --i) {
        Complex acc = g[i];
        for (int j = i + 1; j < k; ++j) acc -= hess(i, j) * y[j];
        y[i] = acc / hess(i, i);
    }
    res.x = CVec::Zero(n);
    for (int i = 0; i < k; ++i) res.x += y[i] * basis[i];
    return res;
}

CVec spectrum(const CMat& a) {
    Eigen::ComplexEigenSolver<CMat> es(a, false);
    CVec ev = es.eigenvalues();
    std::sort(ev.begin(), ev.end(), [](const Complex& l, const Complex& r) {
        return std::abs(l) > std::abs(r) ||
               (std::abs(l) == std::abs(r) && l.real() > r.real());
    });
    return ev;
}

} // namespace helm
