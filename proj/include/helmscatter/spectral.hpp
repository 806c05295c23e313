#pragma once

#include <array>
#include <functional>

#include "medium.hpp"
#include "types.hpp"

namespace helm {

// storage index k in [0, N) -> Fourier mode n in [-N/2, N/2)
inline int mode_of(int k, int N) { return (k < N / 2) ? k : k - N; }

// unnormalized complex DFT and its normalized inverse
CVec fft(const CVec& v);
CVec ifft(const CVec& v);

// Fourier coefficients of nodal values (fft / N); index with mode_of
CVec fourier_coeffs(const CVec& v);

// e_n = exp(i n t) sampled on the N-point grid, optionally half-shifted
CVec mode_vector(int n, int N, bool offset_grid = false);

// Periodic Fourier multiplier. The symbol takes a real frequency so the
// same object can be requantized on a curve with nonconstant jacobian,
// where the relevant frequency is n / jac (see kn_matrix); apply() always
// evaluates it at the integer modes.
struct ScalarMultiplier {
    std::function<Complex(double)> sym;
    CVec apply(const CVec& v) const;
    // symbol at -n; as a matrix this is the transpose
    ScalarMultiplier transposed() const;
};

struct MatrixMultiplier {
    std::function<Eigen::Matrix2cd(double)> sym;
    // acts on stacked (a; b) of length 2N
    CVec apply(const CVec& v) const;
};

// basic multipliers (L = 2pi normalization)
ScalarMultiplier mult_deriv(int r);           // D_r: (in)^r, 0 at n = 0
ScalarMultiplier mult_hilbert();              // H: i sign(n), sign(0) = +1
ScalarMultiplier mult_lambda();               // 1/|n|, 1 at n = 0
ScalarMultiplier mult_mean();                 // J: projection onto n = 0
ScalarMultiplier mult_ps_w(Complex ktilde);   // -(1/2) sqrt(n^2 - k~^2)
ScalarMultiplier mult_const(Complex c);

enum class Reg { RD, RD1, RN, RN1 };
MatrixMultiplier make_regularizer(Reg kind, const ElasticMedium& m);
// the H0-based Dirichlet regularizer used with the PS variants
MatrixMultiplier make_rd_h0(const ElasticMedium& m);

// dense N x N matrix of a scalar multiplier
CMat multiplier_matrix(const ScalarMultiplier& m, int N);

// e^{i n s(u_j)}: a pure mode of the arc length variable sampled at the
// curve nodes, given the cumulative arc length at the nodes
CVec warped_mode(int n, const RVec& s_arc);

// Left quantization of a symbol on a curve with jacobian jac = ds/du:
// row j applies the symbol at the local arc length frequency n / jac_j.
// On a curve with constant jacobian 1 this reduces to multiplier_matrix.
CMat kn_matrix(const ScalarMultiplier& m, const RVec& jac);
std::array<CMat, 4> kn_blocks(const MatrixMultiplier& m, const RVec& jac);

// orthogonal projector onto the modes |n| <= cut. Grid operator products are
// only meaningful on modes resolved by a few points per period, so residual
// norms of operator identities are measured through this projector.
CMat band_projector(int N, int cut);

// multiplier times dense matrix and dense matrix times multiplier
CMat mult_left(const ScalarMultiplier& m, const CMat& a);
CMat mult_right(const CMat& a, const ScalarMultiplier& m);

// arc-length derivative on a curve with jacobian jac: diag(1/jac) D_u
CMat deriv_left(const RVec& jac, const CMat& a);
CMat deriv_right(const CMat& a, const RVec& jac);
CVec deriv_apply(const RVec& jac, const CVec& v);

// Least-squares slope of log(res) vs log(n) where res(n) is the normalized
// l2 residual ||op(e_n) - model(e_n)|| on the N-grid, over log-spaced modes
// in [nmin, nmax]. Residuals below `floor_tol` are clipped to it.
using GridOp = std::function<CVec(const CVec&)>;
double residual_order(const GridOp& op, const GridOp& model, int N, int nmin,
                      int nmax, double floor_tol = 1e-14);

// same, for operators acting on stacked pairs; e_n enters in both slots
double residual_order_pair(const GridOp& op, const GridOp& model, int N,
                           int nmin, int nmax, double floor_tol = 1e-14);

double fit_slope(const std::vector<double>& logx, const std::vector<double>& logy);

} // namespace helm
