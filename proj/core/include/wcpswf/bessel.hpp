#ifndef WCPSWF_BESSEL_HPP
#define WCPSWF_BESSEL_HPP

// Bessel function of the first kind for real order nu >= 0.  Small
// arguments use the ascending power series; from x >= 10 the series loses
// digits to cancellation, so evaluation switches to Miller's backward
// recurrence normalized by sum_j (nu0+2j) Gamma(nu0+j)/j! J_{nu0+2j}(x)
// = (x/2)^nu0 (DLMF 10.23.3 with Gegenbauer weights).

namespace wcpswf {

// J_nu(x) for nu >= 0, x >= 0.
double bessel_j(double nu, double x);

// lim_{r -> 0} J_nu(2 pi r) / r^nu = pi^nu / Gamma(nu+1).
double bessel_kernel_limit(double nu);

// J_nu(2 pi rho) / rho^nu with the removable singularity at rho = 0.
double bessel_j_over_pow(double nu, double rho);

} // namespace wcpswf

#endif
