#include "helmscatter/traces.hpp"

#include "helmscatter/spectral.hpp"

namespace helm {

namespace {

using M2N = Eigen::Matrix2Xd;

CMat dg(const RVec& v) {
    return CMat(v.cast<Complex>().asDiagonal());
}

// sum_c diag(g_c) B diag(f_c)
CMat comp(const CMat& b, const M2N& g, const M2N& f) {
    CMat out = CMat::Zero(b.rows(), b.cols());
    for (int c = 0; c < 2; ++c)
        out += RVec(g.row(c)).cast<Complex>().asDiagonal() * b *
               RVec(f.row(c)).cast<Complex>().asDiagonal();
    return out;
}

// same with the inner factor scaled pointwise by w
CMat comp_w(const CMat& b, const M2N& g, const RVec& w, const M2N& f) {
    CMat out = CMat::Zero(b.rows(), b.cols());
    for (int c = 0; c < 2; ++c)
        out += RVec(g.row(c)).cast<Complex>().asDiagonal() * b *
               RVec(w.array() * f.row(c).transpose().array())
                   .cast<Complex>()
                   .asDiagonal();
    return out;
}

// g . [ B(phi f1 f2^T) h ]: sum_{a,b} diag(g_a h_b) B diag(f1_a f2_b)
CMat comp4(const CMat& bmat, const M2N& g, const M2N& h, const M2N& f1,
           const M2N& f2) {
    CMat out = CMat::Zero(bmat.rows(), bmat.cols());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            out += RVec(g.row(a).array() * h.row(b).array())
                       .cast<Complex>()
                       .asDiagonal() *
                   bmat *
                   RVec(f1.row(a).array() * f2.row(b).array())
                       .cast<Complex>()
                       .asDiagonal();
    return out;
}

} // namespace

CMat deriv_matrix(const Curve& c) {
    CMat d = multiplier_matrix(mult_deriv(1), c.n());
    d.array().colwise() *= (1.0 / c.jac.array()).cast<Complex>();
    return d;
}

GradTraces grad_traces(const BioSet& b, const Curve& c) {
    const int N = c.n();
    const Complex k2 = b.k * b.k;
    GradTraces g;
    g.dn_sl = -0.5 * CMat::Identity(N, N) + b.kt;
    g.dt_sl = deriv_left(c.jac, b.v);
    g.dn_dl = b.w;
    g.dt_dl = 0.5 * deriv_matrix(c) + k2 * comp(b.v, c.tang, c.nrm) -
              deriv_right(b.kt, c.jac);
    return g;
}

// The nn and tn blocks are assembled from the composed layer operators. The
// tt and nt blocks then follow from the exact relations
//   nn + tt = -k^2 V   and   nt = tn,
// which therefore hold at the matrix level.
HessTraces hess_traces_sl(const BioSet& b, const Curve& c) {
    const Complex k2 = b.k * b.k;
    const CMat dmat = deriv_matrix(c);
    HessTraces h;
    h.nn = 0.5 * dg(c.kappa) + deriv_right(comp(b.kt, c.nrm, c.tang), c.jac) -
           comp_w(b.kt, c.nrm, c.kappa, c.nrm) - comp(b.w, c.nrm, c.nrm);
    h.tn = -0.5 * dmat + deriv_right(comp(b.kt, c.tang, c.tang), c.jac) -
           comp_w(b.kt, c.tang, c.kappa, c.nrm) - comp(b.w, c.tang, c.nrm);
    h.tt = -k2 * b.v - h.nn;
    h.nt = h.tn;
    return h;
}

// The double layer Hessian trace follows from the single layer one through
// Hes DL(phi) = -(k^2/2) phi n n^T + k^2 grad V(phi n^T) + Hes SL(dt phi) Q^T
// with Q^T n = t and Q^T t = -n, so the nn and tn blocks reuse single layer
// blocks applied to the differentiated density. As above, tt and nt are
// completed from the exact relations nn + tt = -k^2 (I/2 + K) and nt = tn.
HessTraces hess_traces_dl(const BioSet& b, const Curve& c) {
    const int N = c.n();
    const Complex k2 = b.k * b.k;
    const CMat dv = deriv_left(c.jac, b.v);
    const CMat dmat = deriv_matrix(c);
    const HessTraces s = hess_traces_sl(b, c);

    HessTraces h;
    h.nn = -0.5 * k2 * CMat::Identity(N, N) + k2 * comp(b.kt, c.nrm, c.nrm) +
           s.nt * dmat;
    h.tn = k2 * comp(dv, c.nrm, c.nrm) + s.tt * dmat;
    h.tt = -k2 * (0.5 * CMat::Identity(N, N) + b.kop) - h.nn;
    h.nt = h.tn;
    return h;
}

} // namespace helm
