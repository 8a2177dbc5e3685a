#ifndef WCPSWF_TRANSFORM_HPP
#define WCPSWF_TRANSFORM_HPP

// Weighted Fourier transform of CGPs restricted to the unit ball, in
// closed Bessel form and by direct 2-D quadrature, and the finite weighted
// Fourier operator
//   (K_c f)(x) = 1_{B(1)}(x) int_{B(1)} e^{2 pi i c <x,y>} f(y) (1-|y|^2)^alpha dy
// whose near-eigenfunction property on the weighted CPSWFs is measured by
// a least-squares fit.
//
// Complex values are carried as (cos-part, sin-part) multivector pairs:
// F = cos_part + i sin_part.  The closed form's unit phase depends only on
// (parity, k); it is validated against the direct path, never assumed.

#include "wcpswf/cgp.hpp"
#include "wcpswf/cliffalg.hpp"
#include "wcpswf/cpswf.hpp"

#include <array>
#include <vector>

namespace wcpswf {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct TransformSample {
    double xi_modulus = 0.0;
    double radial_value = 0.0; // scalar factor multiplying phase * xi^n Y_k(xi)
    double order = 0.0;        // Bessel order alpha + k + m/2 + n
};

struct FourierValue {
    Multivector2 cos_part;
    Multivector2 sin_part;
};

struct EigenQuality {
    double mu_cos = 0.0;      // least-squares fit of K_c psi ~ (mu_cos + i mu_sin) psi
    double mu_sin = 0.0;
    double residual_rel = 0.0;
    double energy_ratio = 0.0; // ||K_c psi||^2 / ||psi||^2 over the weighted grid
    int nrad = 0;
    int nang = 0;
};

// Scalar radial factor of the transform of C_n(Y_k):
//   2^n Gamma(n+alpha+1) J_nu(2 pi |xi|) / (pi^alpha |xi|^nu),
// nu = alpha + k + m/2 + n, finite at xi = 0.
TransformSample ft_cgp_closed(const CgpSpec& spec, double xi_modulus);

// Full multivector transform in m = 2 (closed form):
//   even:  (-i)^k   [S_e(rho) rho^(2N)] Y_k(xi)
//   odd:   (-i)^(k+1) [-S_o(rho) rho^(2N)] e1 Y_(k+1)(xi)
// with S as in ft_cgp_closed.  `normalized` divides by ||C_n||.
FourierValue ft_cgp_multivector(const CgpSpec& spec, Point2 xi, bool normalized = false);

// Direct tensor-quadrature transform over the ball (the oracle path).
FourierValue ft_direct(const CgpSpec& spec, Point2 xi, int nrad = 80, int nang = 256);

// K_c psi at a point inside the ball, via the closed form per expansion
// term using (K_c f)(x) = (F f)(-c x).
FourierValue finite_fourier_closed(const CpswfEigenpair& pair, double c, Point2 x);

// Same by direct quadrature (validation path).
FourierValue finite_fourier_direct(const CpswfEigenpair& pair, double c, Point2 x,
                                   int nrad = 60, int nang = 128);

// Least-squares mu and relative residual of K_c psi ~ mu psi over the
// weighted polar grid.
EigenQuality eigen_quality(const CpswfEigenpair& pair, double c, int nrad = 40, int nang = 64);

} // namespace wcpswf

#endif
