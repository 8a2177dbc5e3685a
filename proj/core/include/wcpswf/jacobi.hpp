#ifndef WCPSWF_JACOBI_HPP
#define WCPSWF_JACOBI_HPP

// Jacobi polynomials P_n^(a,b):  stable three-term evaluation, derivatives,
// the explicit-sum representation kept as an independent oracle path, and
// the gamma/Pochhammer helpers shared by the rest of the library.

namespace wcpswf {

struct JacobiIndex {
    int n = 0;        // degree
    double alpha = 0; // must be > -1
    double beta = 0;  // must be > -1
};

// Rising factorial x (x+1) ... (x+j-1);  (x)_0 = 1.
double pochhammer(double x, int j);

// log of the rising factorial, valid when every factor is positive.
double log_pochhammer(double x, int j);

// log of binomial(n, l).
double log_choose(int n, int l);

// P_n^(a,b)(x) by the standard degree recurrence (DLMF 18.9.2).
double jacobi_eval(const JacobiIndex& idx, double x);

// P_n^(a,b)(x) by the explicit hypergeometric sum
//   sum_s (a+s+1)_(n-s) (a+b+n+1)_s / (s! (n-s)!) ((x-1)/2)^s.
// Suffers cancellation for large n; used as an oracle only.
double jacobi_eval_explicit(const JacobiIndex& idx, double x);

// First or second derivative of P_n^(a,b) at x via
// d/dx P_n^(a,b) = (n+a+b+1)/2 P_(n-1)^(a+1,b+1).
double jacobi_deriv(const JacobiIndex& idx, double x, int order);

// Left side of (1-x^2) y'' + [b - a - (a+b+2) x] y' + n(n+a+b+1) y with
// y = P_n^(a,b);  vanishes up to rounding.
double jacobi_ode_residual(const JacobiIndex& idx, double x);

// Closed-form weighted L2 norm:
//   int_-1^1 (1-x)^a (1+x)^b P_n^2 dx
//     = 2^(a+b+1) Gamma(a+n+1) Gamma(b+n+1) / (n! (a+b+2n+1) Gamma(a+b+n+1)).
double jacobi_norm(const JacobiIndex& idx);

} // namespace wcpswf

#endif
