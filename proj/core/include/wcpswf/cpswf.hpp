#ifndef WCPSWF_CPSWF_HPP
#define WCPSWF_CPSWF_HPP

// Weighted Clifford prolate spheroidal wave functions.  The bandlimited
// ball operator restricted to the even/odd radial chains is a symmetric
// tridiagonal matrix in the normalized Gegenbauer basis; its eigenvectors
// are the expansion coefficients and its eigenvalues the chi spectrum.

#include "wcpswf/cgp.hpp"
#include "wcpswf/cliffalg.hpp"
#include "wcpswf/tridiag.hpp"

#include <vector>

namespace wcpswf {

struct CpswfEigenpair {
    Parity parity = Parity::Even;
    int N = 0; // order within the parity family (ascending chi)
    int k = 0;
    int m = 2;
    double alpha = 0.0;
    double c = 0.0;   // bandwidth
    double chi = 0.0; // eigenvalue
    std::vector<double> coeffs; // unit l2 expansion in normalized CGPs
    int trunc = 0;    // dimension of the matrix section solved

    int degree() const { return parity == Parity::Even ? 2 * N : 2 * N + 1; }
};

// Truncated sections of the doubly-infinite matrices.  Diagonal entries at
// c = 0 reduce to the Gegenbauer ODE eigenvalues; every c-dependent term
// carries 4 pi^2 c^2.
TridiagSym build_matrix_even(int k, int m, double alpha, double c, int size);
TridiagSym build_matrix_odd(int k, int m, double alpha, double c, int size);

// Diagonal shift between the odd and shifted-k even matrices:
// M^o_k = M^e_{k+1} + 4 (alpha+1)(k+m/2) I.
double parity_shift(double alpha, int k, int m);

// First `count` eigenpairs in ascending chi.  The matrix section starts at
// max(24, 2 count + ceil(2 e c) + 16) and doubles until each returned
// pair's tail coefficient is <= tol (cap 4096).  Sign convention: first
// nonzero coefficient positive.
std::vector<CpswfEigenpair> cpswf_solve(Parity parity, int k, int m, double alpha, double c,
                                        int count, double tol = 1e-14);

// Same, at a fixed truncation (no adequacy growth); used for convergence
// studies.
std::vector<CpswfEigenpair> cpswf_solve_at(Parity parity, int k, int m, double alpha,
                                           double c, int count, int size);

// Power-basis radial profile P (even: psi = P(|x|^2) Y_k) or Q (odd:
// psi = Q(|x|^2) x Y_k).  Throws if a coefficient above 1e-13 would need a
// CGP beyond the degree cap.
RadialPoly cpswf_radial(const CpswfEigenpair& pair);

// Stable radial evaluation through the Jacobi representation; preferred
// over cpswf_radial().value() for large truncations.
double cpswf_radial_value(const CpswfEigenpair& pair, double t);
double cpswf_radial_deriv(const CpswfEigenpair& pair, double t, int order);

// Pointwise multivector value in m = 2.
Multivector2 cpswf_eval_2d(const CpswfEigenpair& pair, double r, double theta);

// Radial Sturm-Liouville residual
//   4t(1-t) P'' + 2[m+2k - t(2+m+2k+2 alpha)] P' - 4 pi^2 c^2 t P + chi P
// for even pairs; odd profiles satisfy the same equation with k -> k+1 and
// chi -> chi - parity_shift.
double sl_residual_even(const CpswfEigenpair& pair, double t);
double sl_residual_odd(const CpswfEigenpair& pair, double t);

// Scale of the largest term entering the residual at t (for relative
// residual reporting).
double sl_residual_scale(const CpswfEigenpair& pair, double t);

// Pairwise weighted inner products. Same (parity, k) entries are computed
// by radial quadrature with npts points; cross-parity and cross-k entries
// vanish structurally and are set to exact zero.
std::vector<std::vector<double>> gram_matrix(const std::vector<CpswfEigenpair>& pairs,
                                             int npts);

} // namespace wcpswf

#endif
